#pragma once

#include <cstdint>

#include "nakayama/complex.hpp"
#include "nakayama/rng.hpp"

namespace nakayama {

// Basis of the space of chain maps x -> y (not modulo homotopy).
std::vector<std::vector<ModMorphism>> chain_map_basis(const Complex& x, const Complex& y);

// dim Hom_{D^b}(x, y): chain maps from a projective resolution of x to y
// modulo null-homotopic ones.
int hom_space_dim(const Complex& x, const Complex& y);

// Isomorphism test in D^b: equal degreewise summand multisets of the minimal
// projective forms, then seeded random sampling of the chain map spaces for
// a pair composing to a degreewise invertible endomorphism.
bool is_isomorphic(const Complex& x, const Complex& y, std::uint64_t seed = kDefaultSeed);

// Whether an endo-shaped morphism between equal objects is an isomorphism:
// per interval type the block between equal occurrences must be invertible.
bool endo_invertible(const ModMorphism& f);

}  // namespace nakayama
