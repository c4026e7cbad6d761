#pragma once

#include <map>

#include "nakayama/classify.hpp"

namespace nakayama {

// Covering data for folding the linear algebra Lambda(d,l) onto the cyclic
// algebra Delta(n,l); the weight W puts the arrow delta_0 in degree 1, so
// the fold is reduction of vertex indices mod n.
struct CoveringDesc {
    int n;  // cyclic vertex count
    int l;  // relation length
    int d;  // linear cover size, must exceed n + 2l
};

CoveringDesc make_covering(int n, int l, int m, std::optional<int> d_override = std::nullopt);

// dimension vector folded columnwise mod n, each row independently
DimVec fold_dimvec(const DimVec& dv, int n);

// image of an interval module under the push-down: start vertex mod n and
// the cyclically distributed dimension vector
struct CyclicLabel {
    int start;
    int length;
    std::vector<int> folded;

    bool operator==(const CyclicLabel&) const = default;
    std::string render() const;  // C<start>:<length>
};

CyclicLabel fold_interval(const Interval& iv, int n);

// Shift-by-n-columns self-matching of a knitted component inside the convex
// window [B+ml, d-B-ml-1], B = m(l-1)+1. Returns the node mapping when it
// is an isomorphism of the windowed translation quiver.
std::optional<std::map<int, int>> find_repetition(const ARQuiver& component, int n);

struct CyclicOptions {
    std::optional<int> d_override;
    long budget = 1000000;
};

struct CyclicAR {
    ARQuiver quiver;  // folded labels over n columns
    std::vector<std::string> node_names;  // CyclicLabel strings for stalk nodes, "" otherwise
    bool stable = false;
    int d_used = 0;
    int d_check = 0;
};

// AR-quiver of m-mod Delta(n,l) for finite parameters: knit two linear
// covers (sizes d and d+n), quotient each by its repetition, require the
// quotients isomorphic. Refuses infinite parameters.
CyclicAR cyclic_ar(int n, int l, int m, const CyclicOptions& opts = {});

std::string cyclic_to_json_string(const CyclicAR& q);
std::string cyclic_to_dot(const CyclicAR& q);

}  // namespace nakayama
