#include "nakayama/repform.hpp"

#include <algorithm>
#include <map>

#include "nakayama/errors.hpp"

namespace nakayama {

bool RepForm::relations_hold() const {
    const int n = desc.n;
    for (int v = desc.l; v <= n - 1; ++v) {
        // composite of the l arrows from v down to v-l
        QMatrix comp = arrow[v];
        for (int u = v - 1; u > v - desc.l; --u) comp = arrow[u] * comp;
        if (!comp.is_zero()) return false;
    }
    return true;
}

void RepForm::validate() const {
    if ((int)dims.size() != desc.n || (int)arrow.size() != desc.n)
        throw ParameterError("RepForm: wrong number of vertices");
    for (int v = 1; v < desc.n; ++v)
        if (arrow[v].rows() != (std::size_t)dims[v - 1] || arrow[v].cols() != (std::size_t)dims[v])
            throw ParameterError("RepForm: arrow matrix shape mismatch");
    if (!relations_hold()) throw ParameterError("RepForm: homogeneous relation violated");
}

std::vector<std::size_t> occurrences_at(const ModuleObject& m, int v) {
    std::vector<std::size_t> occ;
    for (std::size_t i = 0; i < m.count(); ++i) {
        const Interval& iv = m.summands()[i];
        if (iv.a <= v && v <= iv.b) occ.push_back(i);
    }
    return occ;
}

RepForm to_rep(const AlgebraDesc& desc, const ModuleObject& m) {
    RepForm r{desc, m.dim_vector(desc.n), std::vector<QMatrix>(desc.n)};
    for (int v = 1; v < desc.n; ++v) {
        auto src = occurrences_at(m, v);
        auto tgt = occurrences_at(m, v - 1);
        QMatrix a(tgt.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            auto it = std::find(tgt.begin(), tgt.end(), src[j]);
            if (it != tgt.end()) a.at(it - tgt.begin(), j) = 1;
        }
        r.arrow[v] = std::move(a);
    }
    return r;
}

std::vector<QMatrix> morphism_to_rep(const AlgebraDesc& desc, const ModMorphism& f) {
    std::vector<QMatrix> maps(desc.n);
    for (int v = 0; v < desc.n; ++v) {
        auto src = occurrences_at(f.source(), v);
        auto tgt = occurrences_at(f.target(), v);
        QMatrix g(tgt.size(), src.size());
        // canonical homs act as 1 on the support overlap, so the vertexwise
        // entry is just the scalar whenever both occurrences cover v
        for (std::size_t i = 0; i < tgt.size(); ++i)
            for (std::size_t j = 0; j < src.size(); ++j) g.at(i, j) = f.entry(tgt[i], src[j]);
        maps[v] = std::move(g);
    }
    return maps;
}

ModMorphism rep_maps_to_morphism(const AlgebraDesc&, const ModuleObject& src,
                                 const ModuleObject& tgt, const std::vector<QMatrix>& maps) {
    ModMorphism f(src, tgt);
    for (std::size_t t = 0; t < tgt.count(); ++t)
        for (std::size_t s = 0; s < src.count(); ++s) {
            const Interval& is = src.summands()[s];
            const Interval& it = tgt.summands()[t];
            int lo = std::max(is.a, it.a), hi = std::min(is.b, it.b);
            if (lo > hi) continue;  // supports disjoint: block is zero anyway
            bool nonzero = hom_nonzero(is, it);
            Rational scalar(0);
            for (int v = lo; v <= hi; ++v) {
                auto so = occurrences_at(src, v);
                auto to = occurrences_at(tgt, v);
                std::size_t sp = std::find(so.begin(), so.end(), s) - so.begin();
                std::size_t tp = std::find(to.begin(), to.end(), t) - to.begin();
                const Rational& e = maps[v].at(tp, sp);
                if (!nonzero) {
                    if (sgn(e) != 0)
                        throw InternalError("rep_maps_to_morphism: entry outside a hom space");
                    continue;
                }
                if (v == lo)
                    scalar = e;
                else if (e != scalar)
                    throw InternalError("rep_maps_to_morphism: inconsistent block");
            }
            if (nonzero) f.entry(t, s) = scalar;
        }
    f.validate();
    return f;
}

std::vector<std::vector<QMatrix>> rep_hom_basis(const RepForm& r, const RepForm& s) {
    const int n = r.desc.n;
    // unknowns: vec(H_v) for all v, H_v of shape s.dims[v] x r.dims[v]
    std::vector<std::size_t> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + (std::size_t)s.dims[v] * r.dims[v];
    std::size_t unknowns = offset[n];
    std::size_t rows = 0;
    for (int v = 1; v < n; ++v) rows += (std::size_t)s.dims[v - 1] * r.dims[v];
    QMatrix c(rows, unknowns);
    std::size_t row = 0;
    for (int v = 1; v < n; ++v) {
        // H_{v-1} A^r_v - A^s_v H_v = 0, entry (i,j): i < s.dims[v-1], j < r.dims[v]
        for (int i = 0; i < s.dims[v - 1]; ++i)
            for (int j = 0; j < r.dims[v]; ++j) {
                for (int k = 0; k < r.dims[v - 1]; ++k)
                    c.at(row, offset[v - 1] + (std::size_t)i * r.dims[v - 1] + k) +=
                        r.arrow[v].at(k, j);
                for (int k = 0; k < s.dims[v]; ++k)
                    c.at(row, offset[v] + (std::size_t)k * r.dims[v] + j) -= s.arrow[v].at(i, k);
                ++row;
            }
    }
    QMatrix ns = c.nullspace();
    std::vector<std::vector<QMatrix>> basis;
    for (std::size_t k = 0; k < ns.cols(); ++k) {
        std::vector<QMatrix> maps(n);
        for (int v = 0; v < n; ++v) {
            QMatrix h(s.dims[v], r.dims[v]);
            for (int i = 0; i < s.dims[v]; ++i)
                for (int j = 0; j < r.dims[v]; ++j)
                    h.at(i, j) = ns.at(offset[v] + (std::size_t)i * r.dims[v] + j, k);
            maps[v] = std::move(h);
        }
        basis.push_back(std::move(maps));
    }
    return basis;
}

namespace {

// Incremental span of column vectors via reduced echelon rows.
class SpanTracker {
  public:
    explicit SpanTracker(std::size_t dim) : dim_(dim) {}

    // returns true (and absorbs) if v was independent of the current span
    bool add(const std::vector<Rational>& v) {
        std::vector<Rational> w = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && sgn(w[p]) == 0) ++p;
        if (p == dim_) return false;
        Rational inv = 1 / w[p];
        for (auto& x : w) x *= inv;
        rows_.emplace_back(p, std::move(w));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return true;
    }

    bool contains(const std::vector<Rational>& v) const {
        std::vector<Rational> w = reduce(v);
        for (const auto& x : w)
            if (sgn(x) != 0) return false;
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    std::vector<Rational> reduce(std::vector<Rational> w) const {
        for (const auto& [p, row] : rows_) {
            if (sgn(w[p]) == 0) continue;
            Rational f = w[p];
            for (std::size_t i = p; i < dim_; ++i) w[i] -= f * row[i];
        }
        return w;
    }

    std::size_t dim_;
    std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

std::vector<Rational> column_of(const QMatrix& m, std::size_t c) {
    std::vector<Rational> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, c);
    return v;
}

// multiplicities from composite ranks by inclusion-exclusion
std::map<Interval, int, std::less<>> rank_formula_multiplicities(const RepForm& r) {
    const int n = r.desc.n;
    const int l = r.desc.l;
    // rk[a][b] = rank of the composite R_b -> R_a (zero when out of range or
    // longer than l, which the relations force anyway)
    auto rk = [&](int a, int b) -> int {
        if (a < 0 || b > n - 1) return 0;
        if (b - a >= l) return 0;
        QMatrix comp = QMatrix::identity(r.dims[b]);
        for (int u = b; u > a; --u) comp = r.arrow[u] * comp;
        return (int)comp.rank();
    };
    std::map<Interval, int, std::less<>> mult;
    for (int b = 0; b < n; ++b)
        for (int a = std::max(0, b - l + 1); a <= b; ++a) {
            int m = rk(a, b) - rk(a - 1, b) - rk(a, b + 1) + rk(a - 1, b + 1);
            if (m < 0) throw InternalError("decompose: negative multiplicity");
            if (m > 0) mult[Interval{a, b}] = m;
        }
    return mult;
}

}  // namespace

Decomposition decompose(const RepForm& r) {
    r.validate();
    const int n = r.desc.n;
    const int l = r.desc.l;

    // Right-to-left sweep. An instance is an interval summand in the making:
    // born at its top b with a chosen generator, it survives downwards under
    // the arrow maps until it dies, which fixes its socle a. At each vertex
    // the surviving images together with newborn generators form a basis, by
    // choosing newborns adapted to the flag of composite kernels.
    struct Instance {
        int b;
        int a = -1;                           // fixed when the instance dies
        std::vector<std::vector<Rational>> chain;  // vectors at b, b-1, ..., a
    };
    std::vector<Instance> instances;
    std::vector<std::size_t> alive;  // indices into instances, living at current vertex

    for (int v = n - 1; v >= 0; --v) {
        std::size_t dim = r.dims[v];
        SpanTracker span(dim);
        for (auto idx : alive)
            if (!span.add(instances[idx].chain.back()))
                throw InternalError("decompose: surviving images became dependent");
        // newborns, adapted to the kernel flag of composites out of v
        int maxdeath = std::min(l, v + 1);
        QMatrix comp = QMatrix::identity(dim);
        for (int j = 1; j <= maxdeath && span.rank() < dim; ++j) {
            // composite of j arrows from v (the zero map once we run off the
            // quiver or hit the relation length)
            QMatrix ker;
            if (v - j + 1 > 0 && j < l) {
                comp = r.arrow[v - j + 1] * comp;
                ker = comp.nullspace();
            } else {
                ker = QMatrix::identity(dim);  // everything dies here
            }
            for (std::size_t c = 0; c < ker.cols(); ++c) {
                auto vec = column_of(ker, c);
                if (span.add(vec)) {
                    Instance inst;
                    inst.b = v;
                    inst.a = v - j + 1;
                    inst.chain.push_back(std::move(vec));
                    instances.push_back(std::move(inst));
                    alive.push_back(instances.size() - 1);
                }
            }
        }
        if (span.rank() != dim) throw InternalError("decompose: basis incomplete at a vertex");
        // push all alive instances one vertex down, retiring the dying ones
        if (v > 0) {
            std::vector<std::size_t> next;
            for (auto idx : alive) {
                Instance& inst = instances[idx];
                if (inst.a == v) continue;  // dies entering v-1
                const auto& cur = inst.chain.back();
                std::vector<Rational> down(r.dims[v - 1], Rational(0));
                for (std::size_t i = 0; i < (std::size_t)r.dims[v - 1]; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        down[i] += r.arrow[v].at(i, j) * cur[j];
                inst.chain.push_back(std::move(down));
                next.push_back(idx);
            }
            alive = std::move(next);
        }
    }

    std::vector<Interval> summands;
    summands.reserve(instances.size());
    for (const auto& inst : instances) summands.push_back(Interval{inst.a, inst.b});
    ModuleObject c(summands);

    // cross-check against the rank formula
    auto mult = rank_formula_multiplicities(r);
    std::map<Interval, int, std::less<>> got;
    for (const auto& iv : c.summands()) ++got[iv];
    if (got != mult) throw InternalError("decompose: splitting disagrees with rank formula");

    // assemble the isomorphism rep(c) -> r; instances matched to canonical
    // occurrences in sorted order
    std::vector<std::size_t> order(instances.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return Interval{instances[x].a, instances[x].b} < Interval{instances[y].a, instances[y].b};
    });
    std::vector<QMatrix> iso(n);
    for (int v = 0; v < n; ++v) {
        auto occ = occurrences_at(c, v);
        QMatrix m(r.dims[v], occ.size());
        for (std::size_t k = 0; k < occ.size(); ++k) {
            const Instance& inst = instances[order[occ[k]]];
            const auto& vec = inst.chain[inst.b - v];
            for (std::size_t i = 0; i < vec.size(); ++i) m.at(i, k) = vec[i];
        }
        iso[v] = std::move(m);
    }
    return Decomposition{std::move(c), std::move(iso)};
}

std::pair<ModuleObject, ModMorphism> kernel_cokernel(const AlgebraDesc& desc, const ModMorphism& f,
                                                     KernelKind kind) {
    RepForm rs = to_rep(desc, f.source());
    RepForm rt = to_rep(desc, f.target());
    std::vector<QMatrix> fm = morphism_to_rep(desc, f);
    const int n = desc.n;

    if (kind == KernelKind::Kernel || kind == KernelKind::Image) {
        const RepForm& host = kind == KernelKind::Kernel ? rs : rt;
        const ModuleObject& host_obj = kind == KernelKind::Kernel ? f.source() : f.target();
        std::vector<QMatrix> basis(n);
        RepForm sub{desc, std::vector<int>(n, 0), std::vector<QMatrix>(n)};
        for (int v = 0; v < n; ++v) {
            basis[v] = kind == KernelKind::Kernel ? fm[v].nullspace() : fm[v].column_space();
            sub.dims[v] = (int)basis[v].cols();
        }
        for (int v = 1; v < n; ++v)
            sub.arrow[v] = basis[v - 1].solve(host.arrow[v] * basis[v]);
        Decomposition d = decompose(sub);
        std::vector<QMatrix> incl(n);
        for (int v = 0; v < n; ++v) incl[v] = basis[v] * d.iso[v];
        return {d.object, rep_maps_to_morphism(desc, d.object, host_obj, incl)};
    }

    // cokernel
    RepForm quot{desc, std::vector<int>(n, 0), std::vector<QMatrix>(n)};
    std::vector<QMatrix> proj(n), sect(n);
    for (int v = 0; v < n; ++v) {
        auto ck = fm[v].cokernel_data();
        proj[v] = std::move(ck.proj);
        sect[v] = std::move(ck.section);
        quot.dims[v] = (int)proj[v].rows();
    }
    for (int v = 1; v < n; ++v) quot.arrow[v] = proj[v - 1] * rt.arrow[v] * sect[v];
    Decomposition d = decompose(quot);
    std::vector<QMatrix> pr(n);
    for (int v = 0; v < n; ++v) pr[v] = d.iso[v].solve(proj[v]);
    return {d.object, rep_maps_to_morphism(desc, f.target(), d.object, pr)};
}

ModMorphism factor_through_inclusion(const AlgebraDesc& desc, const ModMorphism& incl,
                                     const ModMorphism& f) {
    if (incl.target() != f.target()) throw InternalError("factor_through_inclusion: targets differ");
    std::vector<QMatrix> im = morphism_to_rep(desc, incl);
    std::vector<QMatrix> fm = morphism_to_rep(desc, f);
    std::vector<QMatrix> g(desc.n);
    for (int v = 0; v < desc.n; ++v) g[v] = im[v].solve(fm[v]);
    return rep_maps_to_morphism(desc, f.source(), incl.source(), g);
}

ModMorphism factor_through_projection(const AlgebraDesc& desc, const ModMorphism& proj,
                                      const ModMorphism& f) {
    if (proj.source() != f.source()) throw InternalError("factor_through_projection: sources differ");
    std::vector<QMatrix> pm = morphism_to_rep(desc, proj);
    std::vector<QMatrix> fm = morphism_to_rep(desc, f);
    std::vector<QMatrix> g(desc.n);
    for (int v = 0; v < desc.n; ++v)
        g[v] = pm[v].transposed().solve(fm[v].transposed()).transposed();
    return rep_maps_to_morphism(desc, proj.target(), f.target(), g);
}

}  // namespace nakayama
