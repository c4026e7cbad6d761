#include "nakayama/algebra.hpp"

#include <algorithm>

#include "nakayama/errors.hpp"

namespace nakayama {

AlgebraDesc make_algebra(Shape shape, int n, int l) {
    if (l < 2) throw ParameterError("relation length l must be >= 2");
    if (shape == Shape::Linear && n < 2) throw ParameterError("linear shape needs n >= 2");
    if (shape == Shape::Cyclic && n < 1) throw ParameterError("cyclic shape needs n >= 1");
    AlgebraDesc d{shape, n, l, false};
    d.hereditary = (shape == Shape::Linear && l >= n);
    return d;
}

bool valid_interval(const AlgebraDesc& desc, const Interval& iv) {
    if (desc.shape != Shape::Linear) throw ParameterError("interval modules live over the linear shape");
    return 0 <= iv.a && iv.a <= iv.b && iv.b <= desc.n - 1 && iv.length() <= desc.l;
}

Interval projective_interval(const AlgebraDesc& desc, int i) {
    if (i < 0 || i >= desc.n) throw ParameterError("projective index out of range");
    return Interval{std::max(0, i - desc.l + 1), i};
}

Interval injective_interval(const AlgebraDesc& desc, int i) {
    if (i < 0 || i >= desc.n) throw ParameterError("injective index out of range");
    return Interval{i, std::min(desc.n - 1, i + desc.l - 1)};
}

bool is_projective_interval(const AlgebraDesc& desc, const Interval& iv) {
    return iv.a == 0 || iv.length() == desc.l;
}

bool is_injective_interval(const AlgebraDesc& desc, const Interval& iv) {
    return iv.b == desc.n - 1 || iv.length() == desc.l;
}

std::optional<int> projective_index(const AlgebraDesc& desc, const Interval& iv) {
    if (is_projective_interval(desc, iv)) return iv.b;
    return std::nullopt;
}

std::optional<int> injective_index(const AlgebraDesc& desc, const Interval& iv) {
    if (is_injective_interval(desc, iv)) return iv.a;
    return std::nullopt;
}

Interval nakayama_functor(const AlgebraDesc& desc, int i, NakayamaDir dir) {
    return dir == NakayamaDir::Nu ? injective_interval(desc, i) : projective_interval(desc, i);
}

std::optional<BasisHom> hom_basis(const AlgebraDesc& desc, const Interval& x, const Interval& y) {
    if (!valid_interval(desc, x) || !valid_interval(desc, y))
        throw ParameterError("hom_basis: invalid interval");
    if (!hom_nonzero(x, y)) return std::nullopt;
    return BasisHom{x, y};
}

std::string interval_name(const AlgebraDesc& desc, const Interval& iv) {
    if (auto p = projective_index(desc, iv)) return "P" + std::to_string(*p);
    if (auto i = injective_index(desc, iv)) return "I" + std::to_string(*i);
    if (iv.a == iv.b) return "S" + std::to_string(iv.a);
    return "M" + std::to_string(iv.a) + "," + std::to_string(iv.b);
}

}  // namespace nakayama
