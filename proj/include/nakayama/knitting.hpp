#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nakayama/translate.hpp"

namespace nakayama {

struct KnitNode {
    int id = 0;
    DimVec label;
    std::optional<Complex> object;  // exact knits only
    bool is_projective = false;     // stalk projective object
    bool is_injective = false;      // injective object I[m-1]
    std::optional<int> inj_level;   // j when the node is I[j] for some injective I
    int generation = 0;
};

struct ARQuiver {
    AlgebraDesc desc{Shape::Linear, 2, 2};
    int m = 1;
    std::vector<KnitNode> nodes;
    std::vector<std::pair<int, int>> arrows;
    std::vector<std::pair<int, int>> tau_pairs;  // (C, tau C)

    std::vector<int> arrows_out(int id) const;
    std::vector<int> arrows_in(int id) const;
};

enum class KnitMode { DimVec, Exact };
enum class KnitDirection { Forward, Backward };

struct KnitReport {
    ARQuiver quiver;
    KnitMode mode = KnitMode::DimVec;
    KnitDirection direction = KnitDirection::Forward;
    bool closed = false;
    long nodes_created = 0;
    long budget_used = 0;
};

// One mesh step on cohomological dimension vectors. With inj_level set to j
// (node is I[j], j < m-1) the result is concentrated in row j+1; otherwise
// it is -M + sum of successors. Negative entries throw.
DimVec step_tau_inv_dimvec(const DimVec& m, std::optional<int> inj_level,
                           const std::vector<DimVec>& successors);

// Postprojective (Forward) or preinjective (Backward) component knitted on
// DimVec labels per the mesh arithmetic; Linear shape only.
KnitReport knit_dimvec(const AlgebraDesc& desc, int m, long budget, KnitDirection dir);

// Same traversal with explicit complexes; tau is computed by the translate
// engine and every mesh is cross-checked against the DimVec arithmetic.
KnitReport knit_exact(const AlgebraDesc& desc, int m, long budget, KnitDirection dir,
                      std::uint64_t seed = kDefaultSeed);

// label-preserving isomorphism of knitted quivers (labels, arrows, tau pairs)
bool quiver_isomorphic(const ARQuiver& a, const ARQuiver& b);
bool compare(const KnitReport& a, const KnitReport& b);

std::string to_dot(const ARQuiver& q);
std::string to_json_string(const KnitReport& r);  // schema shared with cyclic quivers

}  // namespace nakayama
