#include "nakayama/module.hpp"

#include <algorithm>
#include <numeric>

#include "nakayama/errors.hpp"

namespace nakayama {

ModuleObject::ModuleObject(std::vector<Interval> summands) : summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
}

int ModuleObject::dim_at(int v) const {
    int d = 0;
    for (const auto& iv : summands_)
        if (iv.a <= v && v <= iv.b) ++d;
    return d;
}

std::vector<int> ModuleObject::dim_vector(int n) const {
    std::vector<int> d(n, 0);
    for (const auto& iv : summands_)
        for (int v = iv.a; v <= iv.b; ++v) ++d[v];
    return d;
}

int ModuleObject::total_dim() const {
    int d = 0;
    for (const auto& iv : summands_) d += iv.length();
    return d;
}

ModuleObject ModuleObject::direct_sum(const ModuleObject& o) const {
    std::vector<Interval> s = summands_;
    s.insert(s.end(), o.summands_.begin(), o.summands_.end());
    return ModuleObject(std::move(s));
}

ModMorphism::ModMorphism(ModuleObject source, ModuleObject target)
    : source_(std::move(source)),
      target_(std::move(target)),
      entries_(target_.count(), source_.count()) {}

ModMorphism::ModMorphism(ModuleObject source, ModuleObject target, QMatrix entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    if (entries_.rows() != target_.count() || entries_.cols() != source_.count())
        throw InternalError("ModMorphism: entry matrix shape mismatch");
    validate();
}

ModMorphism ModMorphism::zero(ModuleObject source, ModuleObject target) {
    return ModMorphism(std::move(source), std::move(target));
}

ModMorphism ModMorphism::identity(const ModuleObject& m) {
    ModMorphism f(m, m);
    for (std::size_t i = 0; i < m.count(); ++i) f.entry(i, i) = 1;
    return f;
}

ModMorphism ModMorphism::canonical(const Interval& src, const Interval& tgt, Rational scale) {
    if (!hom_nonzero(src, tgt)) throw InternalError("ModMorphism::canonical: hom space is zero");
    ModMorphism f(ModuleObject::of(src), ModuleObject::of(tgt));
    f.entry(0, 0) = std::move(scale);
    return f;
}

void ModMorphism::validate() const {
    for (std::size_t t = 0; t < target_.count(); ++t)
        for (std::size_t s = 0; s < source_.count(); ++s)
            if (sgn(entries_.at(t, s)) != 0 &&
                !hom_nonzero(source_.summands()[s], target_.summands()[t]))
                throw InternalError("ModMorphism: nonzero entry without basis hom");
}

ModMorphism ModMorphism::operator+(const ModMorphism& o) const {
    if (source_ != o.source_ || target_ != o.target_)
        throw InternalError("ModMorphism: sum shape mismatch");
    return ModMorphism(source_, target_, entries_ + o.entries_);
}

ModMorphism ModMorphism::operator-(const ModMorphism& o) const {
    if (source_ != o.source_ || target_ != o.target_)
        throw InternalError("ModMorphism: diff shape mismatch");
    return ModMorphism(source_, target_, entries_ - o.entries_);
}

ModMorphism ModMorphism::scaled(const Rational& s) const {
    return ModMorphism(source_, target_, entries_.scaled(s));
}

ModMorphism compose(const ModMorphism& g, const ModMorphism& f) {
    if (g.source() != f.target()) throw InternalError("compose: source/target mismatch");
    ModMorphism h(f.source(), g.target());
    const auto& mid = g.source().summands();
    const auto& src = f.source().summands();
    const auto& tgt = g.target().summands();
    for (std::size_t t = 0; t < tgt.size(); ++t)
        for (std::size_t s = 0; s < src.size(); ++s) {
            Rational acc(0);
            for (std::size_t k = 0; k < mid.size(); ++k) {
                const Rational& a = g.entry(t, k);
                const Rational& b = f.entry(k, s);
                if (sgn(a) == 0 || sgn(b) == 0) continue;
                if (basis_composite_nonzero(src[s], mid[k], tgt[t])) acc += a * b;
            }
            h.entry(t, s) = acc;
        }
    h.validate();
    return h;
}

namespace {

// positions of a's and b's occurrences inside the sorted sum a (+) b
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> sum_positions(
    const ModuleObject& whole, const ModuleObject& a, const ModuleObject& b) {
    std::vector<std::size_t> pa(a.count()), pb(b.count());
    std::size_t ia = 0, ib = 0;
    for (std::size_t w = 0; w < whole.count(); ++w) {
        const Interval& iv = whole.summands()[w];
        if (ia < a.count() && a.summands()[ia] == iv)
            pa[ia++] = w;
        else if (ib < b.count() && b.summands()[ib] == iv)
            pb[ib++] = w;
        else
            throw InternalError("sum_positions: position map failure");
    }
    return {pa, pb};
}

}  // namespace

ModMorphism direct_sum(const ModMorphism& f, const ModMorphism& g) {
    ModuleObject src = f.source().direct_sum(g.source());
    ModuleObject tgt = f.target().direct_sum(g.target());
    ModMorphism h(src, tgt);
    auto [sa, sb] = sum_positions(src, f.source(), g.source());
    auto [ta, tb] = sum_positions(tgt, f.target(), g.target());
    for (std::size_t t = 0; t < f.target().count(); ++t)
        for (std::size_t s = 0; s < f.source().count(); ++s) h.entry(ta[t], sa[s]) = f.entry(t, s);
    for (std::size_t t = 0; t < g.target().count(); ++t)
        for (std::size_t s = 0; s < g.source().count(); ++s) h.entry(tb[t], sb[s]) = g.entry(t, s);
    return h;
}

std::pair<ModMorphism, ModMorphism> dsum_injections(const ModuleObject& a, const ModuleObject& b) {
    ModuleObject whole = a.direct_sum(b);
    auto [pa, pb] = sum_positions(whole, a, b);
    ModMorphism ia(a, whole), ib(b, whole);
    for (std::size_t k = 0; k < a.count(); ++k) ia.entry(pa[k], k) = 1;
    for (std::size_t k = 0; k < b.count(); ++k) ib.entry(pb[k], k) = 1;
    return {ia, ib};
}

std::pair<ModMorphism, ModMorphism> dsum_projections(const ModuleObject& a, const ModuleObject& b) {
    ModuleObject whole = a.direct_sum(b);
    auto [pa, pb] = sum_positions(whole, a, b);
    ModMorphism qa(whole, a), qb(whole, b);
    for (std::size_t k = 0; k < a.count(); ++k) qa.entry(k, pa[k]) = 1;
    for (std::size_t k = 0; k < b.count(); ++k) qb.entry(k, pb[k]) = 1;
    return {qa, qb};
}

ModuleObject special_module(const AlgebraDesc& desc, SpecialKind kind, int i) {
    if (i < 0 || i >= desc.n) throw ParameterError("special_module: vertex out of range");
    switch (kind) {
        case SpecialKind::Simple:
            return ModuleObject::of(simple_interval(i));
        case SpecialKind::Projective:
            return ModuleObject::of(projective_interval(desc, i));
        case SpecialKind::Injective:
            return ModuleObject::of(injective_interval(desc, i));
        case SpecialKind::RadOfProjective: {
            Interval p = projective_interval(desc, i);
            if (p.a == p.b) return ModuleObject::zero();  // simple projective
            return ModuleObject::of(Interval{p.a, p.b - 1});
        }
        case SpecialKind::SocQuotOfInjective: {
            Interval iv = injective_interval(desc, i);
            if (iv.a == iv.b) return ModuleObject::zero();  // simple injective
            return ModuleObject::of(Interval{iv.a + 1, iv.b});
        }
    }
    throw InternalError("special_module: unknown kind");
}

std::pair<ModuleObject, ModMorphism> cover_envelope(const AlgebraDesc& desc, const ModuleObject& m,
                                                    CoverSide side) {
    std::vector<Interval> covers;
    covers.reserve(m.count());
    for (const auto& iv : m.summands())
        covers.push_back(side == CoverSide::ProjectiveCover ? projective_interval(desc, iv.b)
                                                            : injective_interval(desc, iv.a));
    ModuleObject c{covers};
    // summandwise canonical map; positions survive sorting via a stable walk
    ModMorphism f = side == CoverSide::ProjectiveCover ? ModMorphism(c, m) : ModMorphism(m, c);
    // Match each original summand with its cover occurrence. Sorting may
    // interleave equal intervals; pair equal cover intervals in order.
    std::vector<bool> used(c.count(), false);
    for (std::size_t s = 0; s < m.count(); ++s) {
        Interval want = side == CoverSide::ProjectiveCover
                            ? projective_interval(desc, m.summands()[s].b)
                            : injective_interval(desc, m.summands()[s].a);
        std::size_t pos = c.count();
        for (std::size_t k = 0; k < c.count(); ++k)
            if (!used[k] && c.summands()[k] == want) {
                pos = k;
                break;
            }
        if (pos == c.count()) throw InternalError("cover_envelope: lost occurrence");
        used[pos] = true;
        if (side == CoverSide::ProjectiveCover)
            f.entry(s, pos) = 1;
        else
            f.entry(pos, s) = 1;
    }
    f.validate();
    return {c, f};
}

Interval flip_interval(const AlgebraDesc& desc, const Interval& iv) {
    return Interval{desc.n - 1 - iv.b, desc.n - 1 - iv.a};
}

ModuleObject flip_module(const AlgebraDesc& desc, const ModuleObject& m) {
    std::vector<Interval> s;
    s.reserve(m.count());
    for (const auto& iv : m.summands()) s.push_back(flip_interval(desc, iv));
    return ModuleObject(std::move(s));
}

ModMorphism flip_morphism(const AlgebraDesc& desc, const ModMorphism& f) {
    // Flipping reverses arrows: canonical homs map to canonical homs with the
    // same scalar, sources and targets swap.
    ModuleObject fs = flip_module(desc, f.source());
    ModuleObject ft = flip_module(desc, f.target());
    ModMorphism g(ft, fs);
    // occurrence k of f.source maps to the occurrence of fs holding its flip;
    // flipping reverses the lexicographic order, equal intervals pair up in
    // reverse order, which is consistent on both sides.
    auto flipped_pos = [&](const ModuleObject& orig, const ModuleObject& flipped, std::size_t k) {
        Interval want = flip_interval(desc, orig.summands()[k]);
        std::size_t seen_before = 0;  // equal intervals before k in orig
        std::size_t total_equal = 0;
        for (std::size_t j = 0; j < orig.count(); ++j) {
            if (orig.summands()[j] == orig.summands()[k]) {
                ++total_equal;
                if (j < k) ++seen_before;
            }
        }
        // pick the (total_equal-1-seen_before)-th occurrence of `want`
        std::size_t index = total_equal - 1 - seen_before;
        for (std::size_t j = 0; j < flipped.count(); ++j)
            if (flipped.summands()[j] == want) {
                if (index == 0) return j;
                --index;
            }
        throw InternalError("flip_morphism: occurrence not found");
    };
    for (std::size_t t = 0; t < f.target().count(); ++t)
        for (std::size_t s = 0; s < f.source().count(); ++s) {
            if (sgn(f.entry(t, s)) == 0) continue;
            g.entry(flipped_pos(f.source(), fs, s), flipped_pos(f.target(), ft, t)) =
                f.entry(t, s);
        }
    g.validate();
    return g;
}

}  // namespace nakayama
