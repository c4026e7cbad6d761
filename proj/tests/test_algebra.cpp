#include <doctest.h>

#include "nakayama/errors.hpp"
#include "nakayama/repform.hpp"

using namespace nakayama;

namespace {

// brute-force dimension of the representation hom space between intervals
int brute_hom_dim(const AlgebraDesc& desc, const Interval& x, const Interval& y) {
    return (int)rep_hom_basis(to_rep(desc, ModuleObject::of(x)), to_rep(desc, ModuleObject::of(y)))
        .size();
}

std::vector<Interval> all_intervals(const AlgebraDesc& desc) {
    std::vector<Interval> ivs;
    for (int b = 0; b < desc.n; ++b)
        for (int a = std::max(0, b - desc.l + 1); a <= b; ++a) ivs.push_back(Interval{a, b});
    return ivs;
}

}  // namespace

TEST_CASE("make_algebra validates and flags hereditary") {
    CHECK_THROWS_AS(make_algebra(Shape::Linear, 3, 1), ParameterError);
    CHECK_THROWS_AS(make_algebra(Shape::Linear, 1, 2), ParameterError);
    CHECK_THROWS_AS(make_algebra(Shape::Cyclic, 0, 2), ParameterError);
    CHECK(make_algebra(Shape::Cyclic, 1, 2).n == 1);
    CHECK(make_algebra(Shape::Linear, 3, 3).hereditary);
    CHECK(make_algebra(Shape::Linear, 3, 5).hereditary);
    CHECK_FALSE(make_algebra(Shape::Linear, 9, 3).hereditary);
}

TEST_CASE("projectives and injectives as intervals") {
    AlgebraDesc a32 = make_algebra(Shape::Linear, 3, 2);
    CHECK(projective_interval(a32, 0) == Interval{0, 0});
    CHECK(projective_interval(a32, 1) == Interval{0, 1});
    CHECK(projective_interval(a32, 2) == Interval{1, 2});

    AlgebraDesc a93 = make_algebra(Shape::Linear, 9, 3);
    CHECK(projective_interval(a93, 7) == Interval{5, 7});
    CHECK(injective_interval(a93, 2) == Interval{2, 4});
    CHECK(injective_interval(a93, 8) == Interval{8, 8});
}

TEST_CASE("special modules") {
    AlgebraDesc a93 = make_algebra(Shape::Linear, 9, 3);
    CHECK(special_module(a93, SpecialKind::Injective, 2) ==
          ModuleObject::of(Interval{2, 4}));
    CHECK(special_module(a93, SpecialKind::RadOfProjective, 0).is_zero());
    AlgebraDesc a94 = make_algebra(Shape::Linear, 9, 4);
    CHECK(special_module(a94, SpecialKind::Simple, 3) == ModuleObject::of(Interval{3, 3}));
    CHECK(special_module(a93, SpecialKind::SocQuotOfInjective, 8).is_zero());
    CHECK(special_module(a93, SpecialKind::RadOfProjective, 7) ==
          ModuleObject::of(Interval{5, 6}));
    CHECK_THROWS_AS(special_module(a93, SpecialKind::Simple, 9), ParameterError);
}

TEST_CASE("nakayama functor on indices") {
    AlgebraDesc a93 = make_algebra(Shape::Linear, 9, 3);
    CHECK(nakayama_functor(a93, 2, NakayamaDir::Nu) == Interval{2, 4});
    CHECK(nakayama_functor(a93, 8, NakayamaDir::Nu) == Interval{8, 8});
    for (int i = 0; i < 9; ++i) {
        Interval inj = nakayama_functor(a93, i, NakayamaDir::Nu);
        CHECK(*injective_index(a93, inj) == i);
        CHECK(nakayama_functor(a93, i, NakayamaDir::NuInverse) == projective_interval(a93, i));
    }
}

TEST_CASE("hom criterion matches the vertexwise oracle") {
    for (auto [n, l] : std::vector<std::pair<int, int>>{{9, 3}, {9, 5}, {6, 2}, {5, 5}, {4, 7}}) {
        AlgebraDesc desc = make_algebra(Shape::Linear, n, l);
        for (const auto& x : all_intervals(desc))
            for (const auto& y : all_intervals(desc)) {
                int expect = hom_nonzero(x, y) ? 1 : 0;
                CHECK(brute_hom_dim(desc, x, y) == expect);
                CHECK(hom_basis(desc, x, y).has_value() == (expect == 1));
            }
    }
}

TEST_CASE("hom basis spec examples") {
    AlgebraDesc a32 = make_algebra(Shape::Linear, 3, 2);
    CHECK(hom_basis(a32, Interval{0, 0}, Interval{0, 1}).has_value());
    CHECK_FALSE(hom_basis(a32, Interval{0, 1}, Interval{0, 0}).has_value());
    CHECK(hom_basis(a32, Interval{1, 2}, Interval{1, 2}).has_value());
}

TEST_CASE("composition rule against the vertexwise matrices") {
    AlgebraDesc desc = make_algebra(Shape::Linear, 6, 3);
    auto ivs = all_intervals(desc);
    for (const auto& x : ivs)
        for (const auto& y : ivs) {
            if (!hom_nonzero(x, y)) continue;
            for (const auto& z : ivs) {
                if (!hom_nonzero(y, z)) continue;
                ModMorphism f = ModMorphism::canonical(x, y);
                ModMorphism g = ModMorphism::canonical(y, z);
                ModMorphism gf = compose(g, f);
                // compare with the product of vertexwise matrices
                auto fm = morphism_to_rep(desc, f);
                auto gm = morphism_to_rep(desc, g);
                std::vector<QMatrix> prod(desc.n);
                for (int v = 0; v < desc.n; ++v) prod[v] = gm[v] * fm[v];
                ModMorphism oracle = rep_maps_to_morphism(desc, f.source(), g.target(), prod);
                CHECK(gf == oracle);
            }
        }
}

TEST_CASE("composition is associative on basis homs") {
    AlgebraDesc desc = make_algebra(Shape::Linear, 6, 3);
    auto ivs = all_intervals(desc);
    for (const auto& a : ivs)
        for (const auto& b : ivs) {
            if (!hom_nonzero(a, b)) continue;
            for (const auto& c : ivs) {
                if (!hom_nonzero(b, c)) continue;
                for (const auto& d : ivs) {
                    if (!hom_nonzero(c, d)) continue;
                    ModMorphism f = ModMorphism::canonical(a, b);
                    ModMorphism g = ModMorphism::canonical(b, c);
                    ModMorphism h = ModMorphism::canonical(c, d);
                    CHECK(compose(compose(h, g), f) == compose(h, compose(g, f)));
                }
            }
        }
}

TEST_CASE("composition spec examples") {
    ModMorphism f = ModMorphism::canonical(Interval{0, 0}, Interval{0, 1});
    ModMorphism g = ModMorphism::canonical(Interval{0, 1}, Interval{1, 2});
    CHECK(compose(g, f).is_zero());
    CHECK(compose(f, ModMorphism::identity(f.source())) == f);
    CHECK(compose(ModMorphism::identity(f.target()), f) == f);

    ModMorphism u = ModMorphism::canonical(Interval{0, 2}, Interval{1, 3});
    ModMorphism w = ModMorphism::canonical(Interval{1, 3}, Interval{2, 4});
    CHECK(compose(w, u) == ModMorphism::canonical(Interval{0, 2}, Interval{2, 4}));
}

TEST_CASE("covers and envelopes") {
    AlgebraDesc a93 = make_algebra(Shape::Linear, 9, 3);
    ModuleObject m = ModuleObject::of(Interval{4, 5});
    auto [cover, epi] = cover_envelope(a93, m, CoverSide::ProjectiveCover);
    CHECK(cover == ModuleObject::of(Interval{3, 5}));
    CHECK(epi.source() == cover);
    CHECK(epi.target() == m);
    auto [env, mono] = cover_envelope(a93, m, CoverSide::InjectiveEnvelope);
    CHECK(env == ModuleObject::of(Interval{4, 6}));
    CHECK(mono.source() == m);
    auto [zc, zm] = cover_envelope(a93, ModuleObject::zero(), CoverSide::ProjectiveCover);
    CHECK(zc.is_zero());
    CHECK(zm.is_zero());
}
