#pragma once

#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/qmatrix.hpp"

namespace nakayama {

// Formal direct sum of interval modules, kept sorted lexicographically by
// (a,b) so that equal objects compare equal. The zero object is the empty
// sum.
class ModuleObject {
  public:
    ModuleObject() = default;
    explicit ModuleObject(std::vector<Interval> summands);
    static ModuleObject zero() { return ModuleObject(); }
    static ModuleObject of(const Interval& iv) { return ModuleObject({iv}); }

    const std::vector<Interval>& summands() const { return summands_; }
    bool is_zero() const { return summands_.empty(); }
    std::size_t count() const { return summands_.size(); }

    // total dimension at vertex v
    int dim_at(int v) const;
    std::vector<int> dim_vector(int n) const;
    int total_dim() const;

    ModuleObject direct_sum(const ModuleObject& o) const;

    bool operator==(const ModuleObject&) const = default;

  private:
    std::vector<Interval> summands_;
};

// A morphism between formal sums, stored as the scalar in front of the
// canonical basis hom for every (target occurrence, source occurrence) pair.
// Entries where no basis hom exists are identically zero.
class ModMorphism {
  public:
    ModMorphism() = default;
    ModMorphism(ModuleObject source, ModuleObject target);
    ModMorphism(ModuleObject source, ModuleObject target, QMatrix entries);

    static ModMorphism zero(ModuleObject source, ModuleObject target);
    static ModMorphism identity(const ModuleObject& m);
    // canonical generator between single intervals, scaled
    static ModMorphism canonical(const Interval& src, const Interval& tgt, Rational scale = 1);

    const ModuleObject& source() const { return source_; }
    const ModuleObject& target() const { return target_; }
    const QMatrix& entries() const { return entries_; }

    Rational& entry(std::size_t t, std::size_t s) { return entries_.at(t, s); }
    const Rational& entry(std::size_t t, std::size_t s) const { return entries_.at(t, s); }

    bool is_zero() const { return entries_.is_zero(); }
    // checks that nonzero entries sit only where a basis hom exists
    void validate() const;

    ModMorphism operator+(const ModMorphism& o) const;
    ModMorphism operator-(const ModMorphism& o) const;
    ModMorphism scaled(const Rational& s) const;

    bool operator==(const ModMorphism&) const = default;

  private:
    ModuleObject source_, target_;
    QMatrix entries_;  // rows: target occurrences, cols: source occurrences
};

// g after f; the basis composition rule is canonical o canonical = canonical
// when the composite criterion holds and zero otherwise.
ModMorphism compose(const ModMorphism& g, const ModMorphism& f);

ModMorphism direct_sum(const ModMorphism& f, const ModMorphism& g);

// canonical injections a -> a (+) b, b -> a (+) b
std::pair<ModMorphism, ModMorphism> dsum_injections(const ModuleObject& a, const ModuleObject& b);
// canonical projections a (+) b -> a, a (+) b -> b
std::pair<ModMorphism, ModMorphism> dsum_projections(const ModuleObject& a, const ModuleObject& b);

enum class SpecialKind { Simple, Projective, Injective, RadOfProjective, SocQuotOfInjective };

ModuleObject special_module(const AlgebraDesc& desc, SpecialKind kind, int i);

enum class CoverSide { ProjectiveCover, InjectiveEnvelope };

// Summandwise projective cover / injective envelope with its canonical
// epi / mono.
std::pair<ModuleObject, ModMorphism> cover_envelope(const AlgebraDesc& desc, const ModuleObject& m,
                                                    CoverSide side);

// vertex flip v -> n-1-v identifying Lambda(n,l)^op with Lambda(n,l)
Interval flip_interval(const AlgebraDesc& desc, const Interval& iv);
ModuleObject flip_module(const AlgebraDesc& desc, const ModuleObject& m);
// dual of f under the flip identification: a morphism flip(target) -> flip(source)
ModMorphism flip_morphism(const AlgebraDesc& desc, const ModMorphism& f);

}  // namespace nakayama
