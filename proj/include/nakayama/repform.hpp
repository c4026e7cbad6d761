#pragma once

#include <vector>

#include "nakayama/module.hpp"

namespace nakayama {

// Quiver representation over the linear shape: one space per vertex, one
// matrix per arrow v -> v-1 (indexed by the source vertex v = 1..n-1), with
// every composite of l consecutive arrows zero.
struct RepForm {
    AlgebraDesc desc;
    std::vector<int> dims;       // size n
    std::vector<QMatrix> arrow;  // arrow[v]: R_v -> R_{v-1}; arrow[0] unused

    bool relations_hold() const;
    void validate() const;  // throws on broken relation invariant
};

// standard interval basis: the occurrences covering each vertex, in order
RepForm to_rep(const AlgebraDesc& desc, const ModuleObject& m);

// occurrence indices of m covering vertex v, ascending
std::vector<std::size_t> occurrences_at(const ModuleObject& m, int v);

// vertexwise matrices of f in the standard bases of source and target
std::vector<QMatrix> morphism_to_rep(const AlgebraDesc& desc, const ModMorphism& f);

// Inverse bridge: a representation morphism rep(src) -> rep(tgt) given by
// vertexwise matrices is a unique combination of canonical basis homs;
// extracts the scalars and checks consistency across the support overlaps.
ModMorphism rep_maps_to_morphism(const AlgebraDesc& desc, const ModuleObject& src,
                                 const ModuleObject& tgt, const std::vector<QMatrix>& maps);

// Basis of the space of representation morphisms R -> S, each element a
// vector of vertexwise matrices.
std::vector<std::vector<QMatrix>> rep_hom_basis(const RepForm& r, const RepForm& s);

struct Decomposition {
    ModuleObject object;       // canonical interval form
    std::vector<QMatrix> iso;  // rep(object) -> R, invertible at every vertex
};

// Interval decomposition via the rank formula, with an explicit basis
// isomorphism found by seeded random sampling of the hom space.
Decomposition decompose(const RepForm& r);

enum class KernelKind { Kernel, Cokernel, Image };

// The requested object in canonical interval form with its canonical
// inclusion (Kernel, Image) or projection (Cokernel).
std::pair<ModuleObject, ModMorphism> kernel_cokernel(const AlgebraDesc& desc, const ModMorphism& f,
                                                     KernelKind kind);

// f = incl o g for the inclusion produced by kernel_cokernel(Kernel/Image);
// returns g. Throws if f does not factor.
ModMorphism factor_through_inclusion(const AlgebraDesc& desc, const ModMorphism& incl,
                                     const ModMorphism& f);

// f = g o proj for the projection produced by kernel_cokernel(Cokernel);
// returns g. Throws if f does not factor.
ModMorphism factor_through_projection(const AlgebraDesc& desc, const ModMorphism& proj,
                                      const ModMorphism& f);

}  // namespace nakayama
