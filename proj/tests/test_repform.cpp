#include <doctest.h>

#include <map>

#include "nakayama/errors.hpp"
#include "nakayama/repform.hpp"
#include "nakayama/rng.hpp"

using namespace nakayama;

namespace {

// independent rank-formula oracle for interval multiplicities
std::map<Interval, int, std::less<>> oracle_multiplicities(const RepForm& r) {
    const int n = r.desc.n;
    auto rank_composite = [&](int a, int b) -> int {
        if (a < 0 || b > n - 1) return 0;
        QMatrix comp = QMatrix::identity(r.dims[b]);
        for (int u = b; u > a; --u) comp = r.arrow[u] * comp;
        return (int)comp.rank();
    };
    std::map<Interval, int, std::less<>> mult;
    for (int b = 0; b < n; ++b)
        for (int a = std::max(0, b - r.desc.l + 1); a <= b; ++a) {
            int m = rank_composite(a, b) - rank_composite(a - 1, b) - rank_composite(a, b + 1) +
                    rank_composite(a - 1, b + 1);
            if (m > 0) mult[Interval{a, b}] = m;
        }
    return mult;
}

std::map<Interval, int, std::less<>> as_multiset(const ModuleObject& m) {
    std::map<Interval, int, std::less<>> out;
    for (const auto& iv : m.summands()) ++out[iv];
    return out;
}

ModuleObject random_object(const AlgebraDesc& desc, Rng& rng, int max_summands) {
    std::vector<Interval> ivs;
    int k = rng.uniform(1, max_summands);
    for (int i = 0; i < k; ++i) {
        int b = rng.uniform(0, desc.n - 1);
        int a = rng.uniform(std::max(0, b - desc.l + 1), b);
        ivs.push_back(Interval{a, b});
    }
    return ModuleObject(ivs);
}

// conjugate the standard interval representation by random vertexwise base
// change; the decomposition must recover the original multiset
RepForm scramble(const RepForm& r, Rng& rng) {
    RepForm s = r;
    std::vector<QMatrix> g(r.desc.n), ginv(r.desc.n);
    for (int v = 0; v < r.desc.n; ++v) {
        int d = r.dims[v];
        QMatrix m(d, d);
        do {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) m.at(i, j) = rng.small_scalar();
        } while (!m.is_invertible());
        g[v] = m;
        ginv[v] = m.solve(QMatrix::identity(d));
    }
    for (int v = 1; v < r.desc.n; ++v) s.arrow[v] = ginv[v - 1] * (r.arrow[v] * g[v]);
    return s;
}

ModMorphism random_morphism(const ModuleObject& a, const ModuleObject& b, Rng& rng) {
    ModMorphism f(a, b);
    for (std::size_t t = 0; t < b.count(); ++t)
        for (std::size_t s = 0; s < a.count(); ++s)
            if (hom_nonzero(a.summands()[s], b.summands()[t])) f.entry(t, s) = rng.small_scalar();
    return f;
}

}  // namespace

TEST_CASE("decompose the spec A3 example") {
    AlgebraDesc desc = make_algebra(Shape::Linear, 3, 2);
    RepForm r{desc, {1, 2, 1}, std::vector<QMatrix>(3)};
    r.arrow[1] = QMatrix(1, 2);
    r.arrow[1].at(0, 0) = 1;
    r.arrow[2] = QMatrix(2, 1);
    r.arrow[2].at(1, 0) = 1;
    Decomposition d = decompose(r);
    CHECK(d.object == ModuleObject({Interval{0, 1}, Interval{1, 2}}));
}

TEST_CASE("decompose a single interval and semisimple reps") {
    AlgebraDesc desc = make_algebra(Shape::Linear, 3, 2);
    ModuleObject m = ModuleObject::of(Interval{1, 2});
    CHECK(decompose(to_rep(desc, m)).object == m);

    RepForm ss{desc, {1, 1, 0}, std::vector<QMatrix>(3)};
    ss.arrow[1] = QMatrix(1, 1);
    ss.arrow[2] = QMatrix(1, 0);
    CHECK(decompose(ss).object == ModuleObject({Interval{0, 0}, Interval{1, 1}}));
}

TEST_CASE("decompose rejects broken relations") {
    AlgebraDesc desc = make_algebra(Shape::Linear, 3, 2);
    RepForm r{desc, {1, 1, 1}, std::vector<QMatrix>(3)};
    r.arrow[1] = QMatrix::identity(1);
    r.arrow[2] = QMatrix::identity(1);  // composite of length 2 nonzero
    CHECK_THROWS_AS(decompose(r), ParameterError);
}

TEST_CASE("decompose recovers scrambled interval representations") {
    Rng rng(2024);
    for (auto [n, l] : std::vector<std::pair<int, int>>{{5, 2}, {7, 3}, {6, 4}, {8, 5}}) {
        AlgebraDesc desc = make_algebra(Shape::Linear, n, l);
        for (int trial = 0; trial < 25; ++trial) {
            ModuleObject m = random_object(desc, rng, 5);
            RepForm r = scramble(to_rep(desc, m), rng);
            Decomposition d = decompose(r);
            CHECK(d.object == m);
            CHECK(as_multiset(d.object) == oracle_multiplicities(r));
            // the iso must be an invertible representation morphism
            RepForm c = to_rep(desc, d.object);
            for (int v = 0; v < n; ++v) {
                CHECK(d.iso[v].is_invertible());
                if (v > 0) CHECK(d.iso[v - 1] * c.arrow[v] == r.arrow[v] * d.iso[v]);
            }
        }
    }
}

TEST_CASE("kernel, image, cokernel of a canonical hom") {
    AlgebraDesc desc = make_algebra(Shape::Linear, 3, 2);
    ModMorphism f = ModMorphism::canonical(Interval{0, 1}, Interval{1, 2});
    auto [k, ki] = kernel_cokernel(desc, f, KernelKind::Kernel);
    CHECK(k == ModuleObject::of(Interval{0, 0}));
    CHECK(ki.source() == k);
    auto [im, imi] = kernel_cokernel(desc, f, KernelKind::Image);
    CHECK(im == ModuleObject::of(Interval{1, 1}));
    auto [ck, ckp] = kernel_cokernel(desc, f, KernelKind::Cokernel);
    CHECK(ck == ModuleObject::of(Interval{2, 2}));
    CHECK(ckp.target() == ck);
    CHECK(compose(ckp, f).is_zero());
}

TEST_CASE("kernel of identity and of the canonical cover") {
    AlgebraDesc a32 = make_algebra(Shape::Linear, 3, 2);
    ModuleObject m = ModuleObject::of(Interval{0, 1});
    auto [k, ki] = kernel_cokernel(a32, ModMorphism::identity(m), KernelKind::Kernel);
    CHECK(k.is_zero());

    AlgebraDesc a93 = make_algebra(Shape::Linear, 9, 3);
    auto [cover, epi] = cover_envelope(a93, ModuleObject::of(Interval{4, 5}),
                                       CoverSide::ProjectiveCover);
    auto [syz, syzi] = kernel_cokernel(a93, epi, KernelKind::Kernel);
    CHECK(syz == ModuleObject::of(Interval{3, 3}));
    CHECK(compose(epi, syzi).is_zero());
}

TEST_CASE("rank-nullity bookkeeping on random morphisms") {
    Rng rng(514);
    AlgebraDesc desc = make_algebra(Shape::Linear, 7, 3);
    for (int trial = 0; trial < 40; ++trial) {
        ModuleObject a = random_object(desc, rng, 4);
        ModuleObject b = random_object(desc, rng, 4);
        ModMorphism f = random_morphism(a, b, rng);
        auto [k, ki] = kernel_cokernel(desc, f, KernelKind::Kernel);
        auto [im, imi] = kernel_cokernel(desc, f, KernelKind::Image);
        auto [ck, ckp] = kernel_cokernel(desc, f, KernelKind::Cokernel);
        for (int v = 0; v < desc.n; ++v) {
            CHECK(k.dim_at(v) + im.dim_at(v) == a.dim_at(v));
            CHECK(im.dim_at(v) + ck.dim_at(v) == b.dim_at(v));
        }
        CHECK(compose(f, ki).is_zero());
        CHECK(compose(ckp, f).is_zero());
        // inclusion of the kernel composed into the source stays injective
        auto km = morphism_to_rep(desc, ki);
        for (int v = 0; v < desc.n; ++v)
            CHECK(km[v].rank() == (std::size_t)k.dim_at(v));
    }
}

TEST_CASE("factorizations through inclusions and projections") {
    Rng rng(99);
    AlgebraDesc desc = make_algebra(Shape::Linear, 6, 3);
    for (int trial = 0; trial < 20; ++trial) {
        ModuleObject a = random_object(desc, rng, 3);
        ModuleObject b = random_object(desc, rng, 3);
        ModMorphism f = random_morphism(a, b, rng);
        auto [im, imi] = kernel_cokernel(desc, f, KernelKind::Image);
        ModMorphism g = factor_through_inclusion(desc, imi, f);
        CHECK(compose(imi, g) == f);
        auto [ck, ckp] = kernel_cokernel(desc, f, KernelKind::Cokernel);
        // anything vanishing on the image factors through the cokernel
        ModMorphism h = random_morphism(ck, random_object(desc, rng, 2), rng);
        ModMorphism hp = compose(h, ckp);
        ModMorphism back = factor_through_projection(desc, ckp, hp);
        CHECK(compose(back, ckp) == hp);
    }
}
