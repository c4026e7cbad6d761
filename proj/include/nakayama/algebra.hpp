#pragma once

#include <optional>
#include <string>

namespace nakayama {

enum class Shape { Linear, Cyclic };

// Descriptor of a Nakayama algebra with homogeneous relations: the linear
// quiver A_n (arrows i -> i-1) or the cyclic quiver on Z/nZ, with all paths
// of length l equal to zero. Everything else in the engine is derived from
// this combinatorial data.
struct AlgebraDesc {
    Shape shape;
    int n;  // number of vertices
    int l;  // relation length, >= 2
    bool hereditary = false;  // Linear with l >= n: no relation ever applies

    bool operator==(const AlgebraDesc&) const = default;
};

AlgebraDesc make_algebra(Shape shape, int n, int l);

// Indecomposable module with support [a,b]: socle S_a, top S_b.
struct Interval {
    int a;
    int b;

    int length() const { return b - a + 1; }
    bool operator==(const Interval&) const = default;
    auto operator<=>(const Interval&) const = default;
};

bool valid_interval(const AlgebraDesc& desc, const Interval& iv);

// P_i, I_i, S_i and friends as intervals (Linear shape only).
Interval projective_interval(const AlgebraDesc& desc, int i);
Interval injective_interval(const AlgebraDesc& desc, int i);
inline Interval simple_interval(int i) { return Interval{i, i}; }

bool is_projective_interval(const AlgebraDesc& desc, const Interval& iv);
bool is_injective_interval(const AlgebraDesc& desc, const Interval& iv);

// Index i with P_i == iv (resp. I_i == iv), if any.
std::optional<int> projective_index(const AlgebraDesc& desc, const Interval& iv);
std::optional<int> injective_index(const AlgebraDesc& desc, const Interval& iv);

enum class NakayamaDir { Nu, NuInverse };

// nu P_i = I_i and nu^- I_i = P_i, as intervals.
Interval nakayama_functor(const AlgebraDesc& desc, int i, NakayamaDir dir);

// The hom space Hom(M_{a,b}, M_{c,d}) is K when a <= c <= b <= d and zero
// otherwise; the canonical generator maps top-to-top with image M_{c,b}.
struct BasisHom {
    Interval source;
    Interval target;
};

std::optional<BasisHom> hom_basis(const AlgebraDesc& desc, const Interval& x, const Interval& y);
inline bool hom_nonzero(const Interval& x, const Interval& y) {
    return x.a <= y.a && y.a <= x.b && x.b <= y.b;
}

// Whether canonical(y -> z) o canonical(x -> y) is the canonical hom x -> z
// (it is zero otherwise). Both input homs are assumed to exist.
inline bool basis_composite_nonzero(const Interval& x, const Interval& /*y*/, const Interval& z) {
    return z.a <= x.b;
}

std::string interval_name(const AlgebraDesc& desc, const Interval& iv);

}  // namespace nakayama
