#pragma once

#include <cstdint>
#include <string>

#include "nakayama/complex.hpp"
#include "nakayama/rng.hpp"

namespace nakayama {

// Grammar: `[T (-> T)*] ([k])?` or a bare `T ([k])?`, where T is a
// `+`-separated list of interval literals M<a>,<b> | P<i> | I<i> | S<i>.
// The right-most term sits in degree 0 and [k] moves content k steps left;
// differentials carry coefficient 1 on every cell where the canonical hom
// exists. Fails when d^2 != 0 or the convention is ambiguous.
Complex parse_complex(const AlgebraDesc& desc, const std::string& text);

Interval parse_interval(const AlgebraDesc& desc, const std::string& text);

// Shortest faithful literal: stalk names with a shift suffix when the object
// is a shifted module, otherwise the minimal projective complex literal.
std::string print_complex(const Complex& x, std::uint64_t seed = kDefaultSeed);

}  // namespace nakayama
