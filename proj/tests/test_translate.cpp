#include <doctest.h>

#include "nakayama/errors.hpp"
#include "nakayama/knitting.hpp"
#include "nakayama/literal.hpp"
#include "nakayama/translate.hpp"
#include "test_util.hpp"

using namespace nakayama;
using nakayama::testing::random_mmod_object;

namespace {

Complex stalk_of(const AlgebraDesc& desc, const Interval& iv, int k = 0) {
    return shift(Complex::stalk(desc, ModuleObject::of(iv)), k);
}

Complex proj_chain(const AlgebraDesc& desc, const std::vector<int>& indices, int top_degree = 0) {
    Complex x(desc);
    int lo = top_degree - (int)indices.size() + 1;
    for (std::size_t k = 0; k < indices.size(); ++k)
        x.set_term(lo + (int)k, ModuleObject::of(projective_interval(desc, indices[k])));
    for (std::size_t k = 0; k + 1 < indices.size(); ++k)
        x.set_diff(lo + (int)k,
                   ModMorphism::canonical(projective_interval(desc, indices[k]),
                                          projective_interval(desc, indices[k + 1])));
    x.validate();
    return x;
}

}  // namespace

TEST_CASE("tau vanishes exactly on projective and injective objects") {
    AlgebraDesc a94 = make_algebra(Shape::Linear, 9, 4);
    int m = 2;
    for (int i = 0; i < 9; ++i) {
        Complex p = stalk_of(a94, projective_interval(a94, i));
        CHECK(tau(p, m, TauDir::Backward).is_zero());
        CHECK_FALSE(tau(p, m, TauDir::Forward).is_zero());
        Complex inj = stalk_of(a94, injective_interval(a94, i), m - 1);
        CHECK(tau(inj, m, TauDir::Forward).is_zero());
        CHECK_FALSE(tau(inj, m, TauDir::Backward).is_zero());
    }
}

TEST_CASE("inverse translate of a simple: the two-term presentation") {
    AlgebraDesc a94 = make_algebra(Shape::Linear, 9, 4);
    Complex t = tau(stalk_of(a94, Interval{3, 3}), 2, TauDir::Forward);
    CHECK(is_isomorphic(t, proj_chain(a94, {3, 4})));
}

TEST_CASE("third power of the inverse translate on the simple projective") {
    AlgebraDesc a94 = make_algebra(Shape::Linear, 9, 4);
    Complex cur = stalk_of(a94, projective_interval(a94, 0));
    for (int k = 0; k < 3; ++k) cur = tau(cur, 2, TauDir::Forward);
    CHECK(is_isomorphic(cur, stalk_of(a94, Interval{3, 3})));
}

TEST_CASE("tau squared fixes the periodic witness of 3-mod of Lambda(8,4)") {
    // The periodic partner of [P_3 -> P_5 -> P_7] is M_{3,4}[1]: applying the
    // translate to the two-term-resolution shift M_{4,5}[1] instead runs into
    // an injective, so it cannot be periodic.
    AlgebraDesc a84 = make_algebra(Shape::Linear, 8, 4);
    Complex w = stalk_of(a84, Interval{3, 4}, 1);
    Complex t1 = tau(w, 3, TauDir::Backward);
    CHECK(is_isomorphic(t1, proj_chain(a84, {3, 5, 7})));
    Complex t2 = tau(t1, 3, TauDir::Backward);
    CHECK(is_isomorphic(t2, w));

    OrbitResult other = orbit(stalk_of(a84, Interval{4, 5}, 1), 3, TauDir::Forward, 24);
    CHECK(other.terminal == OrbitResult::Terminal::ReachedInjective);
}

TEST_CASE("tau and its inverse are mutually inverse on non-boundary objects") {
    Rng rng(61);
    AlgebraDesc desc = make_algebra(Shape::Linear, 6, 3);
    int checked = 0;
    for (int m = 2; m <= 3; ++m) {
        for (int trial = 0; trial < 40 && checked < 30; ++trial) {
            Complex x = random_mmod_object(desc, m, rng);
            for (const Complex& z : split(canonical_form(x))) {
                // connectedness is not indecomposability; gate on End dimension
                if (hom_space_dim(z, z) != 1) continue;
                Complex fwd = tau(z, m, TauDir::Forward);
                if (!fwd.is_zero()) {
                    CHECK(is_isomorphic(tau(fwd, m, TauDir::Backward), z));
                    ++checked;
                }
                Complex bwd = tau(z, m, TauDir::Backward);
                if (!bwd.is_zero()) CHECK(is_isomorphic(tau(bwd, m, TauDir::Forward), z));
            }
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("relation-length-two orbits step through shifted projectives") {
    AlgebraDesc a72 = make_algebra(Shape::Linear, 7, 2);
    int m = 4;
    for (int i = 1; i <= 6; ++i)
        for (int j = 0; j + 1 <= m - 1; ++j) {
            Complex x = stalk_of(a72, projective_interval(a72, i), j);
            Complex t = tau(x, m, TauDir::Forward);
            CHECK(is_isomorphic(t, stalk_of(a72, projective_interval(a72, i - 1), j + 1)));
        }
}

TEST_CASE("tau rejects bad inputs") {
    AlgebraDesc a32 = make_algebra(Shape::Linear, 3, 2);
    CHECK_THROWS_AS(tau(Complex::zero(a32), 2, TauDir::Forward), ParameterError);
    Complex dec = direct_sum(stalk_of(a32, Interval{0, 0}), stalk_of(a32, Interval{2, 2}));
    CHECK_THROWS_AS(tau(dec, 2, TauDir::Forward), ParameterError);
    // window violation: S_1[3] is not an object of 2-mod
    CHECK_THROWS_AS(tau(stalk_of(a32, Interval{1, 1}, 3), 2, TauDir::Forward),
                    InvariantViolation);
}

TEST_CASE("orbit of the simple projective in 2-mod of Lambda(9,4)") {
    AlgebraDesc a94 = make_algebra(Shape::Linear, 9, 4);
    Complex p0 = stalk_of(a94, projective_interval(a94, 0));
    OrbitResult orb = orbit(p0, 2, TauDir::Forward, 100);
    CHECK(orb.terminal == OrbitResult::Terminal::ReachedInjective);
    REQUIRE(orb.steps.size() == 21);  // k = 3(9-3)+2 = 20 translates
    CHECK(is_isomorphic(orb.steps[20], stalk_of(a94, injective_interval(a94, 8), 1)));
}

TEST_CASE("periodic orbit detection") {
    AlgebraDesc a96 = make_algebra(Shape::Linear, 9, 6);
    // [I_0 -> P_8] = [P_5 -> P_8] over Lambda(9,6)
    Complex w = proj_chain(a96, {5, 8});
    OrbitResult orb = orbit(w, 2, TauDir::Forward, 50);
    REQUIRE(orb.terminal == OrbitResult::Terminal::Periodic);
    CHECK(orb.period == 3);
    CHECK(orb.entry_index == 0);
}

TEST_CASE("orbit budget semantics") {
    AlgebraDesc a94 = make_algebra(Shape::Linear, 9, 4);
    Complex p0 = stalk_of(a94, projective_interval(a94, 0));
    OrbitResult orb = orbit(p0, 2, TauDir::Forward, 5);
    CHECK(orb.terminal == OrbitResult::Terminal::BudgetExhausted);
    CHECK(orb.steps.size() == 6);
}

TEST_CASE("radical reachability of deep projectives in 2-mod of length-4 algebras") {
    // The relation rad P_{2+2(i+2)} = translate^{-6i} of P_0 carries an index
    // bound that does not hold as stated; report what actually holds rather
    // than asserting it. For n = 11 and i = 1 the relation targets rad P_8.
    AlgebraDesc d = make_algebra(Shape::Linear, 11, 4);
    Complex cur = Complex::stalk(d, ModuleObject::of(projective_interval(d, 0)));
    for (int k = 0; k < 6; ++k) cur = tau(cur, 2, TauDir::Forward);
    Complex rad8 = Complex::stalk(d, special_module(d, SpecialKind::RadOfProjective, 8));
    bool holds = is_isomorphic(cur, rad8);
    MESSAGE("2-mod (11,4): translate^-6 of P0 ",
            std::string(holds ? "equals" : "differs from"), " rad P8; it is ",
            print_complex(cur));
    // the projectives are reachable regardless: every one appears in the knit
    KnitReport r = knit_dimvec(d, 2, 100000, KnitDirection::Forward);
    REQUIRE(r.closed);
    int projs = 0;
    for (const auto& node : r.quiver.nodes) projs += node.is_projective;
    CHECK(projs == 11);
}

TEST_CASE("object classification") {
    AlgebraDesc a93 = make_algebra(Shape::Linear, 9, 3);
    CHECK(classify_object(stalk_of(a93, projective_interval(a93, 5)), 3) ==
          ObjectClass::ProjectiveObject);
    CHECK(classify_object(stalk_of(a93, injective_interval(a93, 2), 2), 3) ==
          ObjectClass::InjectiveObject);
    AlgebraDesc a32 = make_algebra(Shape::Linear, 3, 2);
    Complex x(a32);
    x.set_term(-1, ModuleObject::of(Interval{0, 1}));
    x.set_term(0, ModuleObject::of(Interval{1, 2}));
    x.set_diff(-1, ModMorphism::canonical(Interval{0, 1}, Interval{1, 2}));
    CHECK(classify_object(x, 2) == ObjectClass::Neither);
}
