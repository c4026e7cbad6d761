#include "nakayama/hom.hpp"

#include <algorithm>
#include <map>

#include "nakayama/errors.hpp"
#include "nakayama/resolve.hpp"

namespace nakayama {

namespace {

// coordinates for the degreewise hom spaces between two complexes at a
// degree offset: one unknown per (degree p, target occurrence, source
// occurrence) pair admitting a basis hom
struct HomCoords {
    struct Slot {
        int p;
        std::size_t t, s;
    };
    std::vector<Slot> slots;
    std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> index;

    void build(const Complex& x, const Complex& y, int offset) {
        if (x.is_zero() || y.is_zero()) return;
        for (int p : x.degrees()) {
            const ModuleObject xs = x.term(p);
            const ModuleObject yt = y.term(p + offset);
            for (std::size_t t = 0; t < yt.count(); ++t)
                for (std::size_t s = 0; s < xs.count(); ++s)
                    if (hom_nonzero(xs.summands()[s], yt.summands()[t])) {
                        index[{p, t, s}] = slots.size();
                        slots.push_back({p, t, s});
                    }
        }
    }
};

// rows: constraints of d_y o f = f o d_x; columns: unknowns of f
QMatrix chain_map_constraints(const Complex& x, const Complex& y, const HomCoords& f) {
    // constraint slots: (p, u over y.term(p+1), s over x.term(p))
    std::vector<std::tuple<int, std::size_t, std::size_t>> rows;
    for (int p : x.degrees()) {
        const ModuleObject xs = x.term(p);
        const ModuleObject yu = y.term(p + 1);
        for (std::size_t u = 0; u < yu.count(); ++u)
            for (std::size_t s = 0; s < xs.count(); ++s) rows.push_back({p, u, s});
    }
    QMatrix c(rows.size(), f.slots.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto [p, u, s] = rows[r];
        const Interval src = x.term(p).summands()[s];
        const ModMorphism dy = y.diff(p);
        const ModMorphism dx = x.diff(p);
        // d_y^p o f^p: through y.term(p) occurrences t
        for (std::size_t t = 0; t < y.term(p).count(); ++t) {
            auto it = f.index.find({p, t, s});
            if (it == f.index.end()) continue;
            const Rational& d = dy.entry(u, t);
            if (sgn(d) == 0) continue;
            if (basis_composite_nonzero(src, y.term(p).summands()[t],
                                        y.term(p + 1).summands()[u]))
                c.at(r, it->second) += d;
        }
        // f^{p+1} o d_x^p: through x.term(p+1) occurrences s2
        for (std::size_t s2 = 0; s2 < x.term(p + 1).count(); ++s2) {
            auto it = f.index.find({p + 1, u, s2});
            if (it == f.index.end()) continue;
            const Rational& d = dx.entry(s2, s);
            if (sgn(d) == 0) continue;
            if (basis_composite_nonzero(src, x.term(p + 1).summands()[s2],
                                        y.term(p + 1).summands()[u]))
                c.at(r, it->second) -= d;
        }
    }
    return c;
}

std::vector<ModMorphism> coords_to_maps(const Complex& x, const Complex& y, const HomCoords& f,
                                        const std::vector<Rational>& values) {
    std::vector<ModMorphism> maps;
    if (x.is_zero()) return maps;
    for (int p : x.degrees()) {
        ModMorphism g(x.term(p), y.term(p));
        for (std::size_t k = 0; k < f.slots.size(); ++k) {
            if (f.slots[k].p != p) continue;
            g.entry(f.slots[k].t, f.slots[k].s) = values[k];
        }
        maps.push_back(std::move(g));
    }
    return maps;
}

}  // namespace

std::vector<std::vector<ModMorphism>> chain_map_basis(const Complex& x, const Complex& y) {
    std::vector<std::vector<ModMorphism>> basis;
    if (x.is_zero() || y.is_zero()) return basis;
    HomCoords f;
    f.build(x, y, 0);
    if (f.slots.empty()) return basis;
    QMatrix ns = chain_map_constraints(x, y, f).nullspace();
    for (std::size_t k = 0; k < ns.cols(); ++k) {
        std::vector<Rational> vals(f.slots.size());
        for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = ns.at(i, k);
        basis.push_back(coords_to_maps(x, y, f, vals));
    }
    return basis;
}

int hom_space_dim(const Complex& x, const Complex& y) {
    Complex p = resolve(x, ResolveSide::Projective);
    Complex t = y;
    t.normalize();
    if (p.is_zero() || t.is_zero()) return 0;
    HomCoords f;
    f.build(p, t, 0);
    if (f.slots.empty()) return 0;
    std::size_t z = chain_map_constraints(p, t, f).nullspace().cols();
    // null-homotopic maps: image of h -> d_y h + h d_x over degree -1 maps
    HomCoords h;
    h.build(p, t, -1);
    std::size_t b = 0;
    if (!h.slots.empty()) {
        QMatrix phi(f.slots.size(), h.slots.size());
        for (std::size_t col = 0; col < h.slots.size(); ++col) {
            auto [q, t1, s1] = h.slots[col];  // h^q: p.term(q) -> t.term(q-1)
            const Interval src = p.term(q).summands()[s1];
            // d_y^{q-1} o h^q contributes at degree q
            const ModMorphism dy = t.diff(q - 1);
            for (std::size_t u = 0; u < t.term(q).count(); ++u) {
                auto it = f.index.find({q, u, s1});
                if (it == f.index.end()) continue;
                const Rational& d = dy.entry(u, t1);
                if (sgn(d) == 0) continue;
                if (basis_composite_nonzero(src, t.term(q - 1).summands()[t1],
                                            t.term(q).summands()[u]))
                    phi.at(it->second, col) += d;
            }
            // h^{q+1} o d_x^q contributes at degree q... seen from the other
            // side: this column's slot is h^q, it also appears in the degree
            // q-1 constraint as h^q o d_x^{q-1}
            const ModMorphism dx = p.diff(q - 1);
            for (std::size_t s0 = 0; s0 < p.term(q - 1).count(); ++s0) {
                auto it = f.index.find({q - 1, t1, s0});
                if (it == f.index.end()) continue;
                const Rational& d = dx.entry(s1, s0);
                if (sgn(d) == 0) continue;
                if (basis_composite_nonzero(p.term(q - 1).summands()[s0], src,
                                            t.term(q - 1).summands()[t1]))
                    phi.at(it->second, col) += d;
            }
        }
        b = phi.rank();
    }
    return (int)(z - b);
}

bool endo_invertible(const ModMorphism& f) {
    if (f.source() != f.target()) throw InternalError("endo_invertible: not an endo shape");
    const auto& s = f.source().summands();
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        QMatrix block(j - i, j - i);
        for (std::size_t a = i; a < j; ++a)
            for (std::size_t b = i; b < j; ++b) block.at(a - i, b - i) = f.entry(a, b);
        if (!block.is_invertible()) return false;
        i = j;
    }
    return true;
}

namespace {

bool same_degreewise_multisets(const Complex& a, const Complex& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    if (a.min_degree() != b.min_degree() || a.max_degree() != b.max_degree()) return false;
    for (int p = a.min_degree(); p <= a.max_degree(); ++p)
        if (a.term(p) != b.term(p)) return false;
    return true;
}

ModMorphism sample(const std::vector<std::vector<ModMorphism>>& basis, std::size_t deg_index,
                   const std::vector<Rational>& coeff) {
    ModMorphism acc = basis[0][deg_index].scaled(coeff[0]);
    for (std::size_t k = 1; k < basis.size(); ++k)
        acc = acc + basis[k][deg_index].scaled(coeff[k]);
    return acc;
}

}  // namespace

bool is_isomorphic(const Complex& x, const Complex& y, std::uint64_t seed) {
    Complex px = resolve(x, ResolveSide::Projective);
    Complex py = resolve(y, ResolveSide::Projective);
    if (px.is_zero() || py.is_zero()) return px.is_zero() && py.is_zero();
    if (px == py) return true;
    if (!same_degreewise_multisets(px, py)) return false;
    auto fwd = chain_map_basis(px, py);
    if (fwd.empty()) return false;
    auto bwd = chain_map_basis(py, px);
    if (bwd.empty()) return false;

    Rng rng(seed);
    std::vector<int> degs = px.degrees();
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rational> cf(fwd.size()), cg(bwd.size());
        for (auto& c : cf) c = rng.small_scalar();
        for (auto& c : cg) c = rng.small_scalar();
        bool ok = true;
        for (std::size_t d = 0; d < degs.size() && ok; ++d) {
            ModMorphism f = sample(fwd, d, cf);
            ModMorphism g = sample(bwd, d, cg);
            ok = endo_invertible(compose(g, f));
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace nakayama
