#include "nakayama/complex.hpp"

#include <algorithm>
#include <sstream>

#include "nakayama/errors.hpp"

namespace nakayama {

bool DimVec::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

DimVec DimVec::operator+(const DimVec& o) const {
    if (m != o.m || n != o.n) throw InternalError("DimVec: shape mismatch");
    DimVec r(m, n);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

DimVec DimVec::operator-(const DimVec& o) const {
    if (m != o.m || n != o.n) throw InternalError("DimVec: shape mismatch");
    DimVec r(m, n);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

bool DimVec::has_negative() const {
    return std::any_of(e.begin(), e.end(), [](int x) { return x < 0; });
}

std::optional<int> DimVec::concentrated_row() const {
    std::optional<int> row;
    for (int i = 0; i < m; ++i)
        for (int v = 0; v < n; ++v)
            if (at(i, v) != 0) {
                if (row && *row != i) return std::nullopt;
                row = i;
            }
    return row;
}

std::vector<int> DimVec::support_columns() const {
    std::vector<int> cols;
    for (int v = 0; v < n; ++v) {
        bool nz = false;
        for (int i = 0; i < m; ++i) nz |= at(i, v) != 0;
        if (nz) cols.push_back(v);
    }
    return cols;
}

DimVec DimVec::shifted_columns(int k) const {
    DimVec r(m, n);
    for (int i = 0; i < m; ++i)
        for (int v = 0; v < n; ++v) {
            if (at(i, v) == 0) continue;
            int w = v + k;
            if (w < 0 || w >= n) throw InternalError("DimVec: column shift falls off the edge");
            r.at(i, w) = at(i, v);
        }
    return r;
}

std::string DimVec::render() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < m; ++i) {
        if (i) os << " | ";
        for (int v = 0; v < n; ++v) {
            if (v) os << " ";
            os << at(i, v);
        }
    }
    os << ")";
    return os.str();
}

Complex Complex::stalk(const AlgebraDesc& desc, const ModuleObject& m, int degree) {
    Complex c(desc);
    if (!m.is_zero()) c.terms_[degree] = m;
    return c;
}

int Complex::min_degree() const {
    if (terms_.empty()) throw InternalError("min_degree of the zero complex");
    return terms_.begin()->first;
}

int Complex::max_degree() const {
    if (terms_.empty()) throw InternalError("max_degree of the zero complex");
    return terms_.rbegin()->first;
}

const ModuleObject& Complex::term(int p) const {
    static const ModuleObject kZero;
    auto it = terms_.find(p);
    return it == terms_.end() ? kZero : it->second;
}

ModMorphism Complex::diff(int p) const {
    auto it = diffs_.find(p);
    if (it != diffs_.end()) return it->second;
    return ModMorphism::zero(term(p), term(p + 1));
}

void Complex::set_term(int p, const ModuleObject& m) {
    if (m.is_zero())
        terms_.erase(p);
    else
        terms_[p] = m;
}

void Complex::set_diff(int p, const ModMorphism& f) {
    if (f.is_zero())
        diffs_.erase(p);
    else
        diffs_[p] = f;
}

void Complex::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    for (auto it = diffs_.begin(); it != diffs_.end();) {
        int p = it->first;
        if (it->second.is_zero() || !terms_.count(p) || !terms_.count(p + 1))
            it = diffs_.erase(it);
        else
            ++it;
    }
}

void Complex::validate() const {
    for (const auto& [p, f] : diffs_) {
        if (f.source() != term(p) || f.target() != term(p + 1))
            throw InternalError("Complex: differential endpoints mismatch at degree " +
                                std::to_string(p));
        f.validate();
    }
    for (const auto& [p, f] : diffs_) {
        if (!diffs_.count(p + 1)) continue;
        if (!compose(diffs_.at(p + 1), f).is_zero())
            throw InternalError("Complex: d^2 != 0 at degree " + std::to_string(p));
    }
}

int Complex::total_summands() const {
    int c = 0;
    for (const auto& [p, t] : terms_) c += (int)t.count();
    return c;
}

std::vector<int> Complex::degrees() const {
    std::vector<int> d;
    d.reserve(terms_.size());
    for (const auto& [p, t] : terms_) d.push_back(p);
    return d;
}

Complex shift(const Complex& x, int k) {
    Complex r(x.desc());
    for (int p : x.degrees()) r.set_term(p - k, x.term(p));
    for (int p : x.degrees()) {
        ModMorphism d = x.diff(p);
        if (d.is_zero()) continue;
        r.set_diff(p - k, k % 2 == 0 ? d : d.scaled(-1));
    }
    return r;
}

Complex direct_sum(const Complex& x, const Complex& y) {
    Complex r(x.desc());
    int lo = 0, hi = -1;
    if (!x.is_zero() || !y.is_zero()) {
        lo = std::min(x.is_zero() ? y.min_degree() : x.min_degree(),
                      y.is_zero() ? x.min_degree() : y.min_degree());
        hi = std::max(x.is_zero() ? y.max_degree() : x.max_degree(),
                      y.is_zero() ? x.max_degree() : y.max_degree());
    }
    for (int p = lo; p <= hi; ++p) r.set_term(p, x.term(p).direct_sum(y.term(p)));
    for (int p = lo; p < hi; ++p) r.set_diff(p, direct_sum(x.diff(p), y.diff(p)));
    r.normalize();
    return r;
}

Complex truncate(const Complex& x, TruncMode mode, int p) {
    if (x.is_zero()) return x;
    Complex r(x.desc());
    switch (mode) {
        case TruncMode::BrutalLe:
            for (int q : x.degrees())
                if (q <= p) r.set_term(q, x.term(q));
            for (int q : x.degrees())
                if (q + 1 <= p) r.set_diff(q, x.diff(q));
            break;
        case TruncMode::BrutalGe:
            for (int q : x.degrees())
                if (q >= p) r.set_term(q, x.term(q));
            for (int q : x.degrees())
                if (q >= p) r.set_diff(q, x.diff(q));
            break;
        case TruncMode::SoftLe: {
            // ... -> X^{p-1} -> ker d^p -> 0
            auto [ker, incl] = kernel_cokernel(x.desc(), x.diff(p), KernelKind::Kernel);
            for (int q : x.degrees())
                if (q < p) r.set_term(q, x.term(q));
            r.set_term(p, ker);
            for (int q : x.degrees())
                if (q + 1 < p) r.set_diff(q, x.diff(q));
            if (!ker.is_zero() && !x.term(p - 1).is_zero())
                r.set_diff(p - 1, factor_through_inclusion(x.desc(), incl, x.diff(p - 1)));
            break;
        }
        case TruncMode::SoftGe: {
            // 0 -> coker d^{p-1} -> X^{p+1} -> ...
            auto [cok, proj] = kernel_cokernel(x.desc(), x.diff(p - 1), KernelKind::Cokernel);
            for (int q : x.degrees())
                if (q > p) r.set_term(q, x.term(q));
            r.set_term(p, cok);
            for (int q : x.degrees())
                if (q > p) r.set_diff(q, x.diff(q));
            if (!cok.is_zero() && !x.term(p + 1).is_zero())
                r.set_diff(p, factor_through_projection(x.desc(), proj, x.diff(p)));
            break;
        }
    }
    r.normalize();
    return r;
}

ModuleObject cohomology(const Complex& x, int i) {
    if (x.is_zero() || x.term(i).is_zero()) return ModuleObject::zero();
    const AlgebraDesc& desc = x.desc();
    RepForm host = to_rep(desc, x.term(i));
    std::vector<QMatrix> dout = morphism_to_rep(desc, x.diff(i));
    std::vector<QMatrix> din = morphism_to_rep(desc, x.diff(i - 1));
    const int n = desc.n;
    // cocycles as a subrepresentation
    std::vector<QMatrix> z(n);
    RepForm zrep{desc, std::vector<int>(n, 0), std::vector<QMatrix>(n)};
    for (int v = 0; v < n; ++v) {
        z[v] = dout[v].nullspace();
        zrep.dims[v] = (int)z[v].cols();
    }
    for (int v = 1; v < n; ++v) zrep.arrow[v] = z[v - 1].solve(host.arrow[v] * z[v]);
    // boundaries in cocycle coordinates, then the quotient representation
    RepForm h{desc, std::vector<int>(n, 0), std::vector<QMatrix>(n)};
    std::vector<QMatrix> proj(n), sect(n);
    for (int v = 0; v < n; ++v) {
        QMatrix bnd = z[v].solve(din[v]);
        auto ck = bnd.cokernel_data();
        proj[v] = std::move(ck.proj);
        sect[v] = std::move(ck.section);
        h.dims[v] = (int)proj[v].rows();
    }
    for (int v = 1; v < n; ++v) h.arrow[v] = proj[v - 1] * zrep.arrow[v] * sect[v];
    return decompose(h).object;
}

std::map<int, ModuleObject> cohomology_profile(const Complex& x) {
    std::map<int, ModuleObject> prof;
    if (x.is_zero()) return prof;
    for (int p = x.min_degree(); p <= x.max_degree(); ++p) {
        ModuleObject h = cohomology(x, p);
        if (!h.is_zero()) prof[p] = std::move(h);
    }
    return prof;
}

DimVec dimvec(const Complex& x, int m) {
    if (m < 1) throw ParameterError("dimvec: window m must be positive");
    DimVec d(m, x.desc().n);
    for (const auto& [p, h] : cohomology_profile(x)) {
        if (p > 0 || p < -(m - 1))
            throw InvariantViolation("dimvec: cohomology in degree " + std::to_string(p) +
                                     " outside the m-mod window");
        auto dv = h.dim_vector(x.desc().n);
        for (int v = 0; v < x.desc().n; ++v) d.at(-p, v) = dv[v];
    }
    return d;
}

DimVec dimvec_of_module(const AlgebraDesc& desc, const ModuleObject& mod, int m, int shift_level) {
    DimVec d(m, desc.n);
    auto dv = mod.dim_vector(desc.n);
    for (int v = 0; v < desc.n; ++v) d.at(shift_level, v) = dv[v];
    return d;
}

namespace {

// One Gaussian cancellation of the iso entry (t0, s0) of d^p.
Complex cancel_pair(const Complex& x, int p, std::size_t t0, std::size_t s0,
                    const Rational& pivot) {
    const ModuleObject& src = x.term(p);
    const ModuleObject& tgt = x.term(p + 1);
    std::vector<Interval> src_rest, tgt_rest;
    for (std::size_t s = 0; s < src.count(); ++s)
        if (s != s0) src_rest.push_back(src.summands()[s]);
    for (std::size_t t = 0; t < tgt.count(); ++t)
        if (t != t0) tgt_rest.push_back(tgt.summands()[t]);
    ModuleObject nsrc{src_rest}, ntgt{tgt_rest};

    const ModMorphism d = x.diff(p);
    ModMorphism nd(nsrc, ntgt);
    Rational inv = 1 / pivot;
    std::size_t ti = 0;
    for (std::size_t t = 0; t < tgt.count(); ++t) {
        if (t == t0) continue;
        std::size_t si = 0;
        for (std::size_t s = 0; s < src.count(); ++s) {
            if (s == s0) continue;
            Rational val = d.entry(t, s);
            // correction gamma * pivot^{-1} * eps through the cancelled pair,
            // using the basis composition rule
            const Rational& gamma = d.entry(t, s0);
            const Rational& eps = d.entry(t0, s);
            if (sgn(gamma) != 0 && sgn(eps) != 0 &&
                basis_composite_nonzero(src.summands()[s], src.summands()[s0],
                                        tgt.summands()[t]))
                val -= gamma * inv * eps;
            // a cancelled correction must still live in a hom space
            if (sgn(val) != 0 && !hom_nonzero(nsrc.summands()[si], ntgt.summands()[ti]))
                throw InternalError("minimalize: correction escapes the hom space");
            nd.entry(ti, si) = val;
            ++si;
        }
        ++ti;
    }

    Complex r(x.desc());
    for (int q : x.degrees()) {
        if (q == p)
            r.set_term(q, nsrc);
        else if (q == p + 1)
            r.set_term(q, ntgt);
        else
            r.set_term(q, x.term(q));
    }
    for (int q : x.degrees()) {
        if (q == p) {
            r.set_diff(p, nd);
        } else if (q == p - 1) {
            // drop the s0 row of d^{p-1}
            const ModMorphism e = x.diff(p - 1);
            if (e.is_zero()) continue;
            ModMorphism ne(e.source(), nsrc);
            std::size_t si = 0;
            for (std::size_t s = 0; s < src.count(); ++s) {
                if (s == s0) continue;
                for (std::size_t c = 0; c < e.source().count(); ++c)
                    ne.entry(si, c) = e.entry(s, c);
                ++si;
            }
            r.set_diff(q, ne);
        } else if (q == p + 1) {
            // drop the t0 column of d^{p+1}
            const ModMorphism e = x.diff(p + 1);
            if (e.is_zero()) continue;
            ModMorphism ne(ntgt, e.target());
            std::size_t ti2 = 0;
            for (std::size_t t = 0; t < tgt.count(); ++t) {
                if (t == t0) continue;
                for (std::size_t c = 0; c < e.target().count(); ++c)
                    ne.entry(c, ti2) = e.entry(c, t);
                ++ti2;
            }
            r.set_diff(q, ne);
        } else {
            r.set_diff(q, x.diff(q));
        }
    }
    r.normalize();
    return r;
}

}  // namespace

Complex minimalize(const Complex& x) {
    Complex cur = x;
    cur.normalize();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int p : cur.degrees()) {
            const ModMorphism d = cur.diff(p);
            if (d.is_zero()) continue;
            for (std::size_t t = 0; t < d.target().count() && !changed; ++t)
                for (std::size_t s = 0; s < d.source().count() && !changed; ++s) {
                    if (sgn(d.entry(t, s)) == 0) continue;
                    if (d.source().summands()[s] != d.target().summands()[t]) continue;
                    cur = cancel_pair(cur, p, t, s, d.entry(t, s));
                    changed = true;
                }
            if (changed) break;
        }
    }
    return cur;
}

std::vector<Complex> split(const Complex& x) {
    if (x.is_zero()) return {};
    // union-find over summand occurrences joined by nonzero differential entries
    std::vector<std::pair<int, std::size_t>> nodes;  // (degree, occurrence)
    std::map<std::pair<int, std::size_t>, std::size_t> index;
    for (int p : x.degrees())
        for (std::size_t i = 0; i < x.term(p).count(); ++i) {
            index[{p, i}] = nodes.size();
            nodes.emplace_back(p, i);
        }
    std::vector<std::size_t> parent(nodes.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    for (int p : x.degrees()) {
        const ModMorphism d = x.diff(p);
        for (std::size_t t = 0; t < d.target().count(); ++t)
            for (std::size_t s = 0; s < d.source().count(); ++s)
                if (sgn(d.entry(t, s)) != 0) unite(index[{p, s}], index[{p + 1, t}]);
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < nodes.size(); ++i) groups[find(i)].push_back(i);

    std::vector<Complex> out;
    for (const auto& [root, members] : groups) {
        Complex c(x.desc());
        std::map<std::pair<int, std::size_t>, std::size_t> pos;  // old -> new occurrence
        // collect occurrences per degree in canonical order; remap positions
        std::map<int, std::vector<std::size_t>> occ_by_degree;
        for (auto i : members) occ_by_degree[nodes[i].first].push_back(nodes[i].second);
        for (auto& [p, occ] : occ_by_degree) {
            std::sort(occ.begin(), occ.end());  // canonical order inherited from x
            std::vector<Interval> ivs;
            for (std::size_t k = 0; k < occ.size(); ++k) {
                ivs.push_back(x.term(p).summands()[occ[k]]);
                pos[{p, occ[k]}] = k;
            }
            c.set_term(p, ModuleObject(ivs));
        }
        for (auto& [p, occ] : occ_by_degree) {
            if (!occ_by_degree.count(p + 1)) continue;
            const ModMorphism d = x.diff(p);
            ModMorphism nd(c.term(p), c.term(p + 1));
            for (auto s : occ)
                for (auto t : occ_by_degree[p + 1])
                    nd.entry(pos[{p + 1, t}], pos[{p, s}]) = d.entry(t, s);
            c.set_diff(p, nd);
        }
        c.normalize();
        out.push_back(std::move(c));
    }
    return out;
}

Complex dualize(const Complex& x) {
    Complex r(x.desc());
    if (x.is_zero()) return r;
    for (int p : x.degrees()) r.set_term(-p, flip_module(x.desc(), x.term(p)));
    for (int p : x.degrees()) {
        ModMorphism d = x.diff(p);
        if (d.is_zero()) continue;
        // (DX)^{-p-1} -> (DX)^{-p} is the flip of d^p
        r.set_diff(-p - 1, flip_morphism(x.desc(), d));
    }
    r.normalize();
    return r;
}

}  // namespace nakayama
