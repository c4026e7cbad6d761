#include "nakayama/knitting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nakayama/errors.hpp"
#include "nakayama/literal.hpp"

namespace nakayama {

std::vector<int> ARQuiver::arrows_out(int id) const {
    std::vector<int> t;
    for (const auto& [a, b] : arrows)
        if (a == id) t.push_back(b);
    return t;
}

std::vector<int> ARQuiver::arrows_in(int id) const {
    std::vector<int> s;
    for (const auto& [a, b] : arrows)
        if (b == id) s.push_back(a);
    return s;
}

DimVec step_tau_inv_dimvec(const DimVec& m, std::optional<int> inj_level,
                           const std::vector<DimVec>& successors) {
    DimVec r(m.m, m.n);
    if (inj_level) {
        int j = *inj_level;
        if (j < 0 || j >= m.m - 1)
            throw ParameterError("step_tau_inv_dimvec: inj level must satisfy 0 <= j < m-1");
        for (int v = 0; v < m.n; ++v) {
            int val = m.at(j, v);
            for (const auto& s : successors) val += s.at(j + 1, v) - s.at(j, v);
            r.at(j + 1, v) = val;
        }
    } else {
        for (int i = 0; i < m.m; ++i)
            for (int v = 0; v < m.n; ++v) {
                int val = -m.at(i, v);
                for (const auto& s : successors) val += s.at(i, v);
                r.at(i, v) = val;
            }
    }
    if (r.has_negative())
        throw InvariantViolation("knit step produced a negative cohomology dimension");
    return r;
}

namespace {

struct BudgetStop {};

struct Knitter {
    AlgebraDesc desc;
    int m;
    long budget;
    KnitMode mode;
    std::uint64_t seed;

    std::map<DimVec, std::pair<int, int>> inj_lookup;  // DimVec(I_v[j]) -> (v, j)
    std::map<DimVec, int> rad_lookup;                  // DimVec(rad P_i) -> i, rad nonzero
    ARQuiver q;
    std::vector<std::vector<int>> out;
    std::vector<bool> attached;
    std::set<std::pair<int, int>> queue;  // (generation, id)
    bool budget_hit = false;

    Knitter(const AlgebraDesc& d, int m_, long b, KnitMode mo, std::uint64_t s)
        : desc(d), m(m_), budget(b), mode(mo), seed(s), attached(d.n, false) {
        q.desc = desc;
        q.m = m;
        for (int j = 0; j < m; ++j)
            for (int v = 0; v < desc.n; ++v) {
                ModuleObject inj = ModuleObject::of(injective_interval(desc, v));
                inj_lookup[dimvec_of_module(desc, inj, m, j)] = {v, j};
            }
        for (int i = 0; i < desc.n; ++i) {
            ModuleObject rad = special_module(desc, SpecialKind::RadOfProjective, i);
            if (!rad.is_zero()) rad_lookup[dimvec_of_module(desc, rad, m, 0)] = i;
        }
    }

    int create_node(DimVec label, std::optional<Complex> obj, int gen) {
        if ((long)q.nodes.size() >= budget) {
            budget_hit = true;
            throw BudgetStop{};
        }
        KnitNode node;
        node.id = (int)q.nodes.size();
        node.label = std::move(label);
        node.object = std::move(obj);
        node.generation = gen;
        auto it = inj_lookup.find(node.label);
        if (it != inj_lookup.end()) {
            auto [v, j] = it->second;
            if (mode == KnitMode::Exact) {
                Complex cand = shift(
                    Complex::stalk(desc, ModuleObject::of(injective_interval(desc, v))), j);
                if (!is_isomorphic(*node.object, cand, seed))
                    throw InvariantViolation(
                        "exact knit: node shares a DimVec with I[" + std::to_string(j) +
                        "] but is not isomorphic to it");
            }
            node.inj_level = j;
            if (j == m - 1) node.is_injective = true;
        }
        q.nodes.push_back(std::move(node));
        out.emplace_back();
        queue.insert({gen, q.nodes.back().id});
        return q.nodes.back().id;
    }

    void add_arrow(int a, int b) {
        q.arrows.emplace_back(a, b);
        out[a].push_back(b);
    }

    // attach every projective whose radical just appeared; cascades since
    // rad P may itself be projective
    void attach_cascade(int id) {
        auto it = rad_lookup.find(q.nodes[id].label);
        if (it == rad_lookup.end()) return;
        int i = it->second;
        if (attached[i]) return;
        ModuleObject p = ModuleObject::of(projective_interval(desc, i));
        if (mode == KnitMode::Exact) {
            Complex rad = Complex::stalk(desc, special_module(desc, SpecialKind::RadOfProjective, i));
            if (!is_isomorphic(*q.nodes[id].object, rad, seed))
                throw InvariantViolation("exact knit: radical label collision without isomorphism");
        }
        attached[i] = true;
        std::optional<Complex> obj;
        if (mode == KnitMode::Exact) obj = Complex::stalk(desc, p);
        int pid = create_node(dimvec_of_module(desc, p, m, 0), std::move(obj),
                              q.nodes[id].generation + 1);
        q.nodes[pid].is_projective = true;
        add_arrow(id, pid);
        attach_cascade(pid);
    }

    void seed_component() {
        ModuleObject p0 = ModuleObject::of(projective_interval(desc, 0));
        std::optional<Complex> obj;
        if (mode == KnitMode::Exact) obj = Complex::stalk(desc, p0);
        int id = create_node(dimvec_of_module(desc, p0, m, 0), std::move(obj), 0);
        q.nodes[id].is_projective = true;
        attached[0] = true;
        attach_cascade(id);
    }

    void mesh(int id) {
        const KnitNode& node = q.nodes[id];
        std::vector<int> succ = out[id];
        {
            std::set<int> uniq(succ.begin(), succ.end());
            if (uniq.size() != succ.size())
                throw InvariantViolation("knit: non-trivial arrow valuation demanded");
        }
        std::vector<DimVec> slabels;
        slabels.reserve(succ.size());
        for (int sid : succ) slabels.push_back(q.nodes[sid].label);
        DimVec next = step_tau_inv_dimvec(node.label, node.inj_level, slabels);
        if (next.is_zero())
            throw InvariantViolation("knit: mesh of a non-injective node vanished");

        std::optional<Complex> obj;
        if (mode == KnitMode::Exact) {
            Complex t = tau(*node.object, m, TauDir::Forward);
            if (t.is_zero())
                throw InvariantViolation("exact knit: tau vanished on a non-injective node");
            if (split(t).size() != 1)
                throw InvariantViolation("exact knit: tau produced a decomposable object");
            if (dimvec(t, m) != next)
                throw InvariantViolation("exact knit: mesh arithmetic disagrees with tau");
            obj = std::move(t);
        }
        int cid = create_node(std::move(next), std::move(obj), node.generation + 2);
        for (int sid : succ) add_arrow(sid, cid);
        q.tau_pairs.emplace_back(cid, id);
        attach_cascade(cid);
    }

    KnitReport run() {
        try {
            seed_component();
            while (!queue.empty()) {
                auto [gen, id] = *queue.begin();
                queue.erase(queue.begin());
                if (q.nodes[id].inj_level && *q.nodes[id].inj_level == m - 1) continue;
                mesh(id);
            }
        } catch (const BudgetStop&) {
        }
        KnitReport r;
        r.quiver = std::move(q);
        r.mode = mode;
        r.closed = !budget_hit;
        r.nodes_created = (long)r.quiver.nodes.size();
        r.budget_used = r.nodes_created;
        return r;
    }
};

// Preinjective components arise from postprojective ones of the opposite
// algebra through the duality that flips vertices, reverses arrows and
// trades tau for tau^-.
KnitReport transform_to_backward(KnitReport fwd, const AlgebraDesc& desc, int m,
                                 KnitMode mode, std::uint64_t seed) {
    KnitReport r;
    r.mode = fwd.mode;
    r.direction = KnitDirection::Backward;
    r.closed = fwd.closed;
    r.nodes_created = fwd.nodes_created;
    r.budget_used = fwd.budget_used;
    r.quiver.desc = desc;
    r.quiver.m = m;

    std::map<DimVec, std::pair<int, int>> inj_lookup;
    for (int j = 0; j < m; ++j)
        for (int v = 0; v < desc.n; ++v) {
            ModuleObject inj = ModuleObject::of(injective_interval(desc, v));
            inj_lookup[dimvec_of_module(desc, inj, m, j)] = {v, j};
        }
    std::set<DimVec> proj_labels;
    for (int i = 0; i < desc.n; ++i)
        proj_labels.insert(
            dimvec_of_module(desc, ModuleObject::of(projective_interval(desc, i)), m, 0));

    for (const KnitNode& node : fwd.quiver.nodes) {
        KnitNode nn;
        nn.id = node.id;
        nn.generation = node.generation;
        DimVec d(m, desc.n);
        for (int i = 0; i < m; ++i)
            for (int v = 0; v < desc.n; ++v) d.at(i, v) = node.label.at(m - 1 - i, desc.n - 1 - v);
        nn.label = std::move(d);
        if (node.object) nn.object = canonical_form(shift(dualize(*node.object), m - 1));
        nn.is_projective = node.is_injective || (m == 1 && proj_labels.count(nn.label));
        nn.is_injective = node.is_projective;
        auto it = inj_lookup.find(nn.label);
        if (it != inj_lookup.end()) {
            nn.inj_level = it->second.second;
            if (mode == KnitMode::Exact) {
                Complex cand = shift(Complex::stalk(desc, ModuleObject::of(injective_interval(
                                                              desc, it->second.first))),
                                     it->second.second);
                if (!is_isomorphic(*nn.object, cand, seed))
                    throw InvariantViolation("backward knit: injective label collision");
            }
        }
        r.quiver.nodes.push_back(std::move(nn));
    }
    for (const auto& [a, b] : fwd.quiver.arrows) r.quiver.arrows.emplace_back(b, a);
    for (const auto& [c, a] : fwd.quiver.tau_pairs) r.quiver.tau_pairs.emplace_back(a, c);
    return r;
}

KnitReport knit(const AlgebraDesc& desc, int m, long budget, KnitDirection dir, KnitMode mode,
                std::uint64_t seed) {
    if (desc.shape != Shape::Linear)
        throw ParameterError("knit: only the linear shape has a simple projective to start from");
    if (m < 1) throw ParameterError("knit: m must be positive");
    if (budget < 1) throw ParameterError("knit: budget must be at least 1");
    Knitter k(desc, m, budget, mode, seed);
    KnitReport r = k.run();
    r.direction = dir;
    if (dir == KnitDirection::Backward) r = transform_to_backward(std::move(r), desc, m, mode, seed);
    return r;
}

}  // namespace

KnitReport knit_dimvec(const AlgebraDesc& desc, int m, long budget, KnitDirection dir) {
    return knit(desc, m, budget, dir, KnitMode::DimVec, kDefaultSeed);
}

KnitReport knit_exact(const AlgebraDesc& desc, int m, long budget, KnitDirection dir,
                      std::uint64_t seed) {
    return knit(desc, m, budget, dir, KnitMode::Exact, seed);
}

namespace {

struct Signature {
    DimVec label;
    std::size_t outdeg, indeg;
    bool tau_source, tau_target;

    auto key() const { return std::tuple(label, outdeg, indeg, tau_source, tau_target); }
};

}  // namespace

bool quiver_isomorphic(const ARQuiver& a, const ARQuiver& b) {
    if (a.nodes.size() != b.nodes.size() || a.arrows.size() != b.arrows.size() ||
        a.tau_pairs.size() != b.tau_pairs.size())
        return false;
    const std::size_t n = a.nodes.size();
    if (n == 0) return true;

    auto build = [](const ARQuiver& q) {
        std::vector<std::set<int>> out(q.nodes.size()), in(q.nodes.size());
        std::vector<int> tau_of(q.nodes.size(), -1), tau_inv(q.nodes.size(), -1);
        for (auto& [x, y] : q.arrows) {
            out[x].insert(y);
            in[y].insert(x);
        }
        for (auto& [c, t] : q.tau_pairs) {
            tau_of[c] = t;      // tau(c) = t
            tau_inv[t] = c;
        }
        return std::tuple(out, in, tau_of, tau_inv);
    };
    auto [aout, ain, atau, atauinv] = build(a);
    auto [bout, bin, btau, btauinv] = build(b);

    // iterative refinement of node colors, seeded by labels and local shape;
    // the color dictionary is shared between both quivers so equal colors
    // mean equal refinement classes
    std::vector<std::size_t> ca(n), cb(n);
    {
        std::map<std::tuple<DimVec, std::size_t, std::size_t, int, int>, std::size_t> ids;
        auto seed = [&](const ARQuiver& q, const std::vector<std::set<int>>& out,
                        const std::vector<std::set<int>>& in, const std::vector<int>& tau_of,
                        const std::vector<int>& tau_inv, std::vector<std::size_t>& color) {
            for (std::size_t i = 0; i < q.nodes.size(); ++i) {
                auto key = std::tuple(q.nodes[i].label, out[i].size(), in[i].size(),
                                      tau_of[i] >= 0 ? 1 : 0, tau_inv[i] >= 0 ? 1 : 0);
                color[i] = ids.emplace(key, ids.size()).first->second;
            }
        };
        seed(a, aout, ain, atau, atauinv, ca);
        seed(b, bout, bin, btau, btauinv, cb);
    }
    for (int round = 0; round < 3; ++round) {
        std::map<std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>, long,
                            long>,
                 std::size_t>
            ids;
        auto pass = [&](const std::vector<std::set<int>>& out, const std::vector<std::set<int>>& in,
                        const std::vector<int>& tau_of, const std::vector<int>& tau_inv,
                        const std::vector<std::size_t>& color) {
            std::vector<std::size_t> next(color.size());
            for (std::size_t i = 0; i < color.size(); ++i) {
                std::vector<std::size_t> oc, ic;
                for (int j : out[i]) oc.push_back(color[j]);
                for (int j : in[i]) ic.push_back(color[j]);
                std::sort(oc.begin(), oc.end());
                std::sort(ic.begin(), ic.end());
                long tc = tau_of[i] >= 0 ? (long)color[tau_of[i]] : -1;
                long tic = tau_inv[i] >= 0 ? (long)color[tau_inv[i]] : -1;
                next[i] = ids.emplace(std::tuple(color[i], oc, ic, tc, tic), ids.size())
                              .first->second;
            }
            return next;
        };
        std::vector<std::size_t> na = pass(aout, ain, atau, atauinv, ca);
        std::vector<std::size_t> nb = pass(bout, bin, btau, btauinv, cb);
        ca = std::move(na);
        cb = std::move(nb);
    }

    // colors must match as multisets paired with labels
    std::map<std::pair<std::size_t, DimVec>, int> count;
    for (std::size_t i = 0; i < n; ++i) ++count[{ca[i], a.nodes[i].label}];
    for (std::size_t i = 0; i < n; ++i)
        if (--count[{cb[i], b.nodes[i].label}] < 0) return false;
    for (auto& [k, v] : count)
        if (v != 0) return false;

    // backtracking on the refined classes
    std::map<std::size_t, std::vector<int>> b_by_color;
    for (std::size_t i = 0; i < n; ++i) b_by_color[cb[i]].push_back((int)i);
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        std::size_t sx = b_by_color[ca[x]].size(), sy = b_by_color[ca[y]].size();
        return std::tie(sx, x) < std::tie(sy, y);
    });
    std::vector<int> match(n, -1), rmatch(n, -1), used(n, 0);

    auto consistent = [&](int na, int nb) {
        if (a.nodes[na].label != b.nodes[nb].label || ca[na] != cb[nb]) return false;
        for (int j : aout[na]) {
            if (match[j] < 0) continue;
            if (!bout[nb].count(match[j])) return false;
        }
        for (int j : ain[na]) {
            if (match[j] < 0) continue;
            if (!bin[nb].count(match[j])) return false;
        }
        for (int j : bout[nb]) {
            if (rmatch[j] < 0) continue;
            if (!aout[na].count(rmatch[j])) return false;
        }
        for (int j : bin[nb]) {
            if (rmatch[j] < 0) continue;
            if (!ain[na].count(rmatch[j])) return false;
        }
        if ((atau[na] >= 0) != (btau[nb] >= 0)) return false;
        if (atau[na] >= 0 && match[atau[na]] >= 0 && btau[nb] != match[atau[na]]) return false;
        if ((atauinv[na] >= 0) != (btauinv[nb] >= 0)) return false;
        if (atauinv[na] >= 0 && match[atauinv[na]] >= 0 && btauinv[nb] != match[atauinv[na]])
            return false;
        return true;
    };

    std::vector<std::size_t> cursor(n, 0);
    std::size_t depth = 0;
    while (depth < n) {
        int na = order[depth];
        const auto& cands = b_by_color[ca[na]];
        bool advanced = false;
        for (std::size_t& c = cursor[depth]; c < cands.size(); ++c) {
            int nb = cands[c];
            if (used[nb] || !consistent(na, nb)) continue;
            match[na] = nb;
            rmatch[nb] = na;
            used[nb] = 1;
            ++c;
            ++depth;
            advanced = true;
            break;
        }
        if (!advanced) {
            cursor[depth] = 0;
            if (depth == 0) return false;
            --depth;
            int prev = order[depth];
            used[match[prev]] = 0;
            rmatch[match[prev]] = -1;
            match[prev] = -1;
        }
    }
    return true;
}

bool compare(const KnitReport& a, const KnitReport& b) {
    if (a.quiver.desc != b.quiver.desc || a.quiver.m != b.quiver.m || a.direction != b.direction)
        return false;
    if (a.closed != b.closed) return false;
    return quiver_isomorphic(a.quiver, b.quiver);
}

std::string to_dot(const ARQuiver& q) {
    std::ostringstream os;
    os << "digraph AR {\n";
    os << "  rankdir=LR;\n  node [shape=box,fontsize=10];\n";
    for (const auto& node : q.nodes) {
        os << "  n" << node.id << " [label=\"" << node.label.render() << "\"";
        if (node.is_projective) os << ",color=blue";
        if (node.is_injective) os << ",color=red";
        os << "];\n";
    }
    for (const auto& [a, b] : q.arrows) os << "  n" << a << " -> n" << b << ";\n";
    for (const auto& [c, t] : q.tau_pairs)
        os << "  n" << c << " -> n" << t << " [style=dashed,constraint=false];\n";
    os << "}\n";
    return os.str();
}

std::string to_json_string(const KnitReport& r) {
    nlohmann::ordered_json j;
    j["algebra"] = {{"shape", r.quiver.desc.shape == Shape::Linear ? "linear" : "cyclic"},
                    {"n", r.quiver.desc.n},
                    {"l", r.quiver.desc.l}};
    j["m"] = r.quiver.m;
    j["closed"] = r.closed;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& node : r.quiver.nodes) {
        nlohmann::ordered_json nj;
        nj["id"] = node.id;
        std::vector<std::vector<int>> rows;
        for (int i = 0; i < node.label.m; ++i) {
            std::vector<int> row(node.label.n);
            for (int v = 0; v < node.label.n; ++v) row[v] = node.label.at(i, v);
            rows.push_back(std::move(row));
        }
        nj["dimvec"] = rows;
        if (node.object) nj["object"] = print_complex(*node.object);
        nlohmann::ordered_json flags;
        flags["projective"] = node.is_projective;
        flags["injective"] = node.is_injective;
        if (node.inj_level)
            flags["inj_shift_level"] = *node.inj_level;
        else
            flags["inj_shift_level"] = nullptr;
        nj["flags"] = flags;
        j["nodes"].push_back(std::move(nj));
    }
    j["arrows"] = r.quiver.arrows;
    j["tau_pairs"] = r.quiver.tau_pairs;
    return j.dump(2) + "\n";
}

}  // namespace nakayama
