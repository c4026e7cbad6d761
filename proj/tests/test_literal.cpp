#include <doctest.h>

#include "nakayama/errors.hpp"
#include "nakayama/hom.hpp"
#include "nakayama/literal.hpp"
#include "nakayama/translate.hpp"

using namespace nakayama;

TEST_CASE("parsing stalk literals") {
    AlgebraDesc a93 = make_algebra(Shape::Linear, 9, 3);
    Complex s3 = parse_complex(a93, "S3");
    CHECK(s3 == Complex::stalk(a93, ModuleObject::of(Interval{3, 3})));
    CHECK(parse_complex(a93, "P7") ==
          Complex::stalk(a93, ModuleObject::of(Interval{5, 7})));
    CHECK(parse_complex(a93, "I2") ==
          Complex::stalk(a93, ModuleObject::of(Interval{2, 4})));
    Complex shifted = parse_complex(a93, "M4,5[1]");
    CHECK(shifted.min_degree() == -1);
    CHECK(shifted.term(-1) == ModuleObject::of(Interval{4, 5}));
    CHECK(parse_complex(a93, "0").is_zero());
    CHECK(parse_complex(a93, " M4,5 + S2 ").term(0) ==
          ModuleObject({Interval{4, 5}, Interval{2, 2}}));
}

TEST_CASE("parsing complex literals") {
    AlgebraDesc a93 = make_algebra(Shape::Linear, 9, 3);
    Complex c = parse_complex(a93, "[P0 -> P2 -> P3 -> P5]");
    CHECK(c.min_degree() == -3);
    CHECK(c.max_degree() == 0);
    CHECK(c.term(0) == ModuleObject::of(Interval{3, 5}));
    CHECK(!c.diff(-1).is_zero());
    c.validate();

    AlgebraDesc a96 = make_algebra(Shape::Linear, 9, 6);
    Complex w = parse_complex(a96, "[I0 -> P8]");
    CHECK(w.term(-1) == ModuleObject::of(Interval{0, 5}));  // I_0 = P_5
    CHECK(w.term(0) == ModuleObject::of(Interval{3, 8}));

    Complex sh = parse_complex(a93, "[P1 -> P2][1]");
    CHECK(sh.max_degree() == -1);
}

TEST_CASE("parser rejections") {
    AlgebraDesc a93 = make_algebra(Shape::Linear, 9, 3);
    CHECK_THROWS_AS(parse_complex(a93, "M5,2"), ParameterError);
    CHECK_THROWS_AS(parse_complex(a93, "M0,5"), ParameterError);  // wider than l
    CHECK_THROWS_AS(parse_complex(a93, "S3 extra"), ParameterError);
    CHECK_THROWS_AS(parse_complex(a93, "[P1 -> "), ParameterError);
    CHECK_THROWS_AS(parse_complex(a93, "P9"), ParameterError);
    // nonzero composite violates d^2 = 0 under the all-ones convention
    CHECK_THROWS_AS(parse_complex(a93, "[M0,2 -> M1,3 -> M2,4]"), ParameterError);
    // repeated summands facing a hom are ambiguous
    AlgebraDesc a32 = make_algebra(Shape::Linear, 3, 2);
    CHECK_THROWS_AS(parse_complex(a32, "[P1+P1 -> P2]"), ParameterError);
}

TEST_CASE("printing picks the shortest faithful literal") {
    AlgebraDesc a93 = make_algebra(Shape::Linear, 9, 3);
    CHECK(print_complex(parse_complex(a93, "S3")) == "S3");
    CHECK(print_complex(parse_complex(a93, "P0")) == "P0");
    CHECK(print_complex(parse_complex(a93, "M4,5[2]")) == "M4,5[2]");
    CHECK(print_complex(Complex::zero(a93)) == "0");
    CHECK(print_complex(parse_complex(a93, "I7")) == "I7");
    // a length-l interval is named as a projective
    CHECK(print_complex(parse_complex(a93, "M3,5")) == "P5");
}

TEST_CASE("round trips through print and parse") {
    AlgebraDesc a94 = make_algebra(Shape::Linear, 9, 4);
    for (const char* lit : {"S3", "P0", "M4,5[1]", "[P3 -> P4]", "[P3 -> P5 -> P7]",
                            "[P1 -> P2][1]", "I8[1]"}) {
        Complex x = parse_complex(a94, lit);
        Complex back = parse_complex(a94, print_complex(x));
        CHECK(is_isomorphic(x, back));
    }
}

TEST_CASE("tau powers round trip through literals") {
    AlgebraDesc a94 = make_algebra(Shape::Linear, 9, 4);
    Complex x = parse_complex(a94, "S3");
    Complex fwd = x;
    for (int i = 0; i < 3; ++i) fwd = tau(fwd, 2, TauDir::Forward);
    Complex reparsed = parse_complex(a94, print_complex(fwd));
    Complex back = reparsed;
    for (int i = 0; i < 3; ++i) back = tau(back, 2, TauDir::Backward);
    CHECK(is_isomorphic(back, x));
}
