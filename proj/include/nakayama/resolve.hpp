#pragma once

#include "nakayama/complex.hpp"

namespace nakayama {

enum class ResolveSide { Projective, Injective };

// Minimal complex of projectives (resp. injectives) quasi-isomorphic to x.
// Built degreewise from the top by taking a projective cover of the pullback
// of the incoming differential and the cocycles of the partial resolution,
// then minimalized. Termination is enforced with a safety bound of n+2
// degrees below (above) the input.
Complex resolve(const Complex& x, ResolveSide side);

// Termwise Nakayama functor on complexes of projectives (nu) or injectives
// (nu^-): canonical basis entries are carried to the corresponding canonical
// homs with equal scalars. Throws on terms outside the domain.
Complex apply_nakayama(const Complex& x, NakayamaDir dir);

}  // namespace nakayama
