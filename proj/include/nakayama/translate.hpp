#pragma once

#include <cstdint>

#include "nakayama/hom.hpp"
#include "nakayama/resolve.hpp"

namespace nakayama {

enum class TauDir { Forward, Backward };  // Forward = tau^-, Backward = tau

// AR-translate on m-mod: brutally truncated minimal resolution, shift,
// Nakayama functor, soft truncation, then the minimal projective form.
// Returns the zero complex exactly on projective (Backward) resp. injective
// (Forward) objects. Input must be an indecomposable object of m-mod.
Complex tau(const Complex& x, int m, TauDir dir);

struct OrbitResult {
    enum class Terminal { ReachedProjective, ReachedInjective, Periodic, BudgetExhausted };
    std::vector<Complex> steps;  // minimal forms, steps[0] = input
    Terminal terminal;
    int period = 0;       // Periodic only
    int entry_index = 0;  // Periodic only: index of the repeated entry
};

// Iterates tau in the given direction, recording minimal forms, until it
// vanishes, repeats a previous entry, or runs out of steps. A nonzero
// max_summands also exhausts the budget when an orbit entry grows past it
// (periodic orbits stay bounded, rays do not).
OrbitResult orbit(const Complex& x, int m, TauDir dir, int max_steps,
                  std::uint64_t seed = kDefaultSeed, int max_summands = 0);

enum class ObjectClass { ProjectiveObject, InjectiveObject, Neither };

// Projective objects are stalk projectives, injective objects are stalks of
// injectives shifted by m-1.
ObjectClass classify_object(const Complex& x, int m, std::uint64_t seed = kDefaultSeed);

// minimal projective form used as the canonical representative everywhere
Complex canonical_form(const Complex& x);

}  // namespace nakayama
