#include "nakayama/translate.hpp"

#include "nakayama/errors.hpp"

namespace nakayama {

Complex canonical_form(const Complex& x) { return resolve(x, ResolveSide::Projective); }

Complex tau(const Complex& x, int m, TauDir dir) {
    if (m < 1) throw ParameterError("tau: window m must be positive");
    Complex cx = canonical_form(x);
    if (cx.is_zero()) throw ParameterError("tau: zero object");
    dimvec(cx, m);  // window validation
    if (split(cx).size() != 1) throw ParameterError("tau: decomposable object; split first");

    Complex out(x.desc());
    if (dir == TauDir::Forward) {
        // sigma^{>= -(m-1)} ( nu^- ( i_m(x) [1] ) )
        Complex ires = resolve(cx, ResolveSide::Injective);
        Complex trunc = truncate(ires, TruncMode::BrutalLe, 1);
        Complex shifted = shift(trunc, 1);
        Complex nak = apply_nakayama(shifted, NakayamaDir::NuInverse);
        out = truncate(nak, TruncMode::SoftGe, -(m - 1));
    } else {
        // sigma^{<= 0} ( nu ( p_m(x) [-1] ) )
        Complex trunc = truncate(cx, TruncMode::BrutalGe, -m);
        Complex shifted = shift(trunc, -1);
        Complex nak = apply_nakayama(shifted, NakayamaDir::Nu);
        out = truncate(nak, TruncMode::SoftLe, 0);
    }
    return canonical_form(out);
}

OrbitResult orbit(const Complex& x, int m, TauDir dir, int max_steps, std::uint64_t seed,
                  int max_summands) {
    OrbitResult res;
    res.steps.push_back(canonical_form(x));
    std::vector<DimVec> labels{dimvec(res.steps[0], m)};
    for (int step = 0; step < max_steps; ++step) {
        Complex next = tau(res.steps.back(), m, dir);
        if (next.is_zero()) {
            res.terminal = dir == TauDir::Forward ? OrbitResult::Terminal::ReachedInjective
                                                  : OrbitResult::Terminal::ReachedProjective;
            return res;
        }
        if (max_summands > 0 && next.total_summands() > max_summands) {
            res.terminal = OrbitResult::Terminal::BudgetExhausted;
            return res;
        }
        DimVec label = dimvec(next, m);
        for (std::size_t j = 0; j < res.steps.size(); ++j) {
            if (labels[j] != label) continue;
            if (is_isomorphic(res.steps[j], next, seed)) {
                res.terminal = OrbitResult::Terminal::Periodic;
                res.period = (int)res.steps.size() - (int)j;
                res.entry_index = (int)j;
                return res;
            }
        }
        res.steps.push_back(std::move(next));
        labels.push_back(std::move(label));
    }
    res.terminal = OrbitResult::Terminal::BudgetExhausted;
    return res;
}

ObjectClass classify_object(const Complex& x, int m, std::uint64_t seed) {
    const AlgebraDesc& desc = x.desc();
    Complex cx = canonical_form(x);
    if (cx.is_zero()) throw ParameterError("classify_object: zero object");
    DimVec d = dimvec(cx, m);
    for (int i = 0; i < desc.n; ++i) {
        ModuleObject p = ModuleObject::of(projective_interval(desc, i));
        if (d == dimvec_of_module(desc, p, m, 0) &&
            is_isomorphic(cx, Complex::stalk(desc, p), seed))
            return ObjectClass::ProjectiveObject;
    }
    for (int i = 0; i < desc.n; ++i) {
        ModuleObject inj = ModuleObject::of(injective_interval(desc, i));
        if (d == dimvec_of_module(desc, inj, m, m - 1) &&
            is_isomorphic(cx, shift(Complex::stalk(desc, inj), m - 1), seed))
            return ObjectClass::InjectiveObject;
    }
    return ObjectClass::Neither;
}

}  // namespace nakayama
