#include "nakayama/resolve.hpp"

#include <algorithm>

#include "nakayama/errors.hpp"

namespace nakayama {

namespace {

bool all_terms(const Complex& x, bool (*pred)(const AlgebraDesc&, const Interval&)) {
    for (int p : x.degrees())
        for (const auto& iv : x.term(p).summands())
            if (!pred(x.desc(), iv)) return false;
    return true;
}

Complex resolve_projective(const Complex& input) {
    const AlgebraDesc& desc = input.desc();
    Complex x = input;
    x.normalize();
    if (x.is_zero()) return x;
    // a complex of projectives is its own resolution
    if (all_terms(x, &is_projective_interval)) return minimalize(x);

    const int top = x.max_degree();
    const int floor = x.min_degree() - (desc.n + 2);

    std::map<int, ModuleObject> pterm;
    std::map<int, ModMorphism> pdiff;  // pdiff[p]: P^p -> P^{p+1}
    std::map<int, ModMorphism> eps;    // eps[p]: P^p -> X^p

    for (int p = top;; --p) {
        if (p < floor)
            throw InternalError("resolve: projective resolution exceeded the safety bound");
        // cocycles of the partial resolution one degree up
        ModuleObject pnext = pterm.count(p + 1) ? pterm.at(p + 1) : ModuleObject::zero();
        ModMorphism dnext = pdiff.count(p + 1)
                                ? pdiff.at(p + 1)
                                : ModMorphism::zero(pnext, pterm.count(p + 2) ? pterm.at(p + 2)
                                                                              : ModuleObject::zero());
        auto [kobj, kincl] = kernel_cokernel(desc, dnext, KernelKind::Kernel);
        // pullback of d_X^p and eps restricted to the cocycles
        ModuleObject xp = x.term(p);
        ModMorphism phi = pterm.count(p + 1)
                              ? compose(eps.at(p + 1), kincl)
                              : ModMorphism::zero(kobj, x.term(p + 1));
        auto [prx, prk] = dsum_projections(xp, kobj);
        ModMorphism g = compose(x.diff(p), prx) - compose(phi, prk);
        auto [wobj, wincl] = kernel_cokernel(desc, g, KernelKind::Kernel);
        if (wobj.is_zero()) break;
        auto [cover, epi] = cover_envelope(desc, wobj, CoverSide::ProjectiveCover);
        ModMorphism into_sum = compose(wincl, epi);
        pterm[p] = cover;
        eps[p] = compose(prx, into_sum);
        if (!pnext.is_zero()) pdiff[p] = compose(kincl, compose(prk, into_sum));
    }

    Complex res(desc);
    for (const auto& [p, t] : pterm) res.set_term(p, t);
    for (const auto& [p, d] : pdiff) res.set_diff(p, d);
    res.normalize();
    return minimalize(res);
}

}  // namespace

Complex resolve(const Complex& x, ResolveSide side) {
    if (side == ResolveSide::Projective) return resolve_projective(x);
    return dualize(resolve_projective(dualize(x)));
}

Complex apply_nakayama(const Complex& x, NakayamaDir dir) {
    const AlgebraDesc& desc = x.desc();
    Complex r(desc);
    if (x.is_zero()) return r;
    // per-term interval map and occurrence positions in the mapped object
    std::map<int, std::vector<std::size_t>> posmap;
    for (int p : x.degrees()) {
        std::vector<Interval> mapped;
        for (const auto& iv : x.term(p).summands()) {
            if (dir == NakayamaDir::Nu) {
                if (!is_projective_interval(desc, iv))
                    throw ParameterError("apply_nakayama: nu needs projective terms");
                mapped.push_back(injective_interval(desc, iv.b));
            } else {
                if (!is_injective_interval(desc, iv))
                    throw ParameterError("apply_nakayama: nu^- needs injective terms");
                mapped.push_back(projective_interval(desc, iv.a));
            }
        }
        ModuleObject image((std::vector<Interval>(mapped)));
        std::vector<std::size_t> pos(mapped.size());
        std::vector<bool> used(image.count(), false);
        for (std::size_t k = 0; k < mapped.size(); ++k) {
            for (std::size_t j = 0; j < image.count(); ++j)
                if (!used[j] && image.summands()[j] == mapped[k]) {
                    pos[k] = j;
                    used[j] = true;
                    break;
                }
        }
        posmap[p] = std::move(pos);
        r.set_term(p, image);
    }
    for (int p : x.degrees()) {
        ModMorphism d = x.diff(p);
        if (d.is_zero()) continue;
        ModMorphism nd(r.term(p), r.term(p + 1));
        for (std::size_t t = 0; t < d.target().count(); ++t)
            for (std::size_t s = 0; s < d.source().count(); ++s)
                if (sgn(d.entry(t, s)) != 0)
                    nd.entry(posmap[p + 1][t], posmap[p][s]) = d.entry(t, s);
        nd.validate();
        r.set_diff(p, nd);
    }
    r.normalize();
    return r;
}

}  // namespace nakayama
