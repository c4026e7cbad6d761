#pragma once

#include <map>
#include <vector>

#include "nakayama/dimvec.hpp"
#include "nakayama/module.hpp"
#include "nakayama/repform.hpp"

namespace nakayama {

// Bounded complex of ModuleObjects. Terms with the zero object are not
// stored; differentials are kept for consecutive stored degrees and are the
// zero morphism otherwise. The convention throughout follows [A -> B]:
// right-most term in degree zero, [k] moves content k steps to the left.
class Complex {
  public:
    explicit Complex(AlgebraDesc desc) : desc_(std::move(desc)) {}

    static Complex zero(const AlgebraDesc& desc) { return Complex(desc); }
    static Complex stalk(const AlgebraDesc& desc, const ModuleObject& m, int degree = 0);

    const AlgebraDesc& desc() const { return desc_; }
    bool is_zero() const { return terms_.empty(); }
    int min_degree() const;  // throws on the zero complex
    int max_degree() const;

    const ModuleObject& term(int p) const;
    ModMorphism diff(int p) const;  // term(p) -> term(p+1)

    void set_term(int p, const ModuleObject& m);
    void set_diff(int p, const ModMorphism& f);
    // drops zero terms and dangling differentials, keeps invariants intact
    void normalize();

    void validate() const;  // shapes and d^2 = 0

    int total_summands() const;
    std::vector<int> degrees() const;  // stored degrees, ascending

    bool operator==(const Complex&) const = default;

  private:
    AlgebraDesc desc_;
    std::map<int, ModuleObject> terms_;
    std::map<int, ModMorphism> diffs_;
};

Complex shift(const Complex& x, int k);  // X[k]^p = X^{p+k}, sign (-1)^k on d
Complex direct_sum(const Complex& x, const Complex& y);

enum class TruncMode { SoftLe, SoftGe, BrutalLe, BrutalGe };

Complex truncate(const Complex& x, TruncMode mode, int p);

ModuleObject cohomology(const Complex& x, int i);
// all nonzero cohomologies
std::map<int, ModuleObject> cohomology_profile(const Complex& x);

// m x n matrix of dim H^{-i}; throws when cohomology leaves [-(m-1), 0]
DimVec dimvec(const Complex& x, int m);
DimVec dimvec_of_module(const AlgebraDesc& desc, const ModuleObject& mod, int m, int shift_level);

// Gaussian elimination of isomorphism entries in the differentials;
// homotopy-equivalent result with no iso entry left.
Complex minimalize(const Complex& x);

// connected components of the summand graph; their direct sum is x
std::vector<Complex> split(const Complex& x);

// degreewise duality combined with the vertex flip, so the result is again
// a complex over the same algebra; (DX)^p = D(X^{-p})
Complex dualize(const Complex& x);

}  // namespace nakayama
