#include "nakayama/covering.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nakayama/errors.hpp"

namespace nakayama {

CoveringDesc make_covering(int n, int l, int m, std::optional<int> d_override) {
    if (n < 1 || l < 2 || m < 1) throw ParameterError("make_covering: invalid parameters");
    int B = m * (l - 1) + 1;
    int d = d_override ? *d_override : 2 * (B + m * l) + 3 * n + 2 * l;
    if (d <= n + 2 * l) throw ParameterError("make_covering: cover size must exceed n + 2l");
    return CoveringDesc{n, l, d};
}

DimVec fold_dimvec(const DimVec& dv, int n) {
    if (n > dv.n) throw ParameterError("fold_dimvec: cyclic size exceeds the cover");
    DimVec r(dv.m, n);
    for (int i = 0; i < dv.m; ++i)
        for (int v = 0; v < dv.n; ++v) r.at(i, v % n) += dv.at(i, v);
    return r;
}

std::string CyclicLabel::render() const {
    return "C" + std::to_string(start) + ":" + std::to_string(length);
}

CyclicLabel fold_interval(const Interval& iv, int n) {
    if (n < 1) throw ParameterError("fold_interval: n must be positive");
    CyclicLabel c;
    c.start = ((iv.a % n) + n) % n;
    c.length = iv.length();
    c.folded.assign(n, 0);
    for (int v = iv.a; v <= iv.b; ++v) ++c.folded[((v % n) + n) % n];
    return c;
}

namespace {

struct Window {
    int lo, hi;
    bool contains(const std::vector<int>& cols) const {
        return !cols.empty() && cols.front() >= lo && cols.back() <= hi;
    }
};

Window window_of(const ARQuiver& component) {
    int m = component.m;
    int l = component.desc.l;
    int d = component.desc.n;
    int B = m * (l - 1) + 1;
    return Window{B + m * l, d - B - m * l - 1};
}

}  // namespace

namespace {

std::map<DimVec, std::vector<int>> label_index(const ARQuiver& component) {
    std::map<DimVec, std::vector<int>> by_label;
    for (const auto& node : component.nodes) by_label[node.label].push_back(node.id);
    return by_label;
}

int unique_node_with(const std::map<DimVec, std::vector<int>>& by_label, const DimVec& label) {
    auto it = by_label.find(label);
    if (it == by_label.end()) return -1;
    if (it->second.size() != 1)
        throw InvariantViolation("covering: node label is ambiguous inside the component");
    return it->second.front();
}

}  // namespace

std::optional<std::map<int, int>> find_repetition(const ARQuiver& component, int n) {
    Window w = window_of(component);
    if (w.lo > w.hi) throw ParameterError("find_repetition: window is empty; knit deeper");

    auto by_label = label_index(component);

    std::map<int, int> sigma;
    for (const auto& node : component.nodes) {
        auto cols = node.label.support_columns();
        if (!w.contains(cols)) continue;
        if (cols.back() + n > w.hi) continue;  // shift leaves the window
        int target = unique_node_with(by_label, node.label.shifted_columns(n));
        if (target < 0) return std::nullopt;
        sigma[node.id] = target;
    }
    if (sigma.empty()) return std::nullopt;

    // must be an isomorphism of the windowed translation quiver
    for (const auto& [a, b] : component.arrows) {
        auto sa = sigma.find(a), sb = sigma.find(b);
        if (sa == sigma.end() || sb == sigma.end()) continue;
        bool found = false;
        for (const auto& [x, y] : component.arrows)
            found |= x == sa->second && y == sb->second;
        if (!found) return std::nullopt;
    }
    for (const auto& [c, t] : component.tau_pairs) {
        auto sc = sigma.find(c), st = sigma.find(t);
        if (sc == sigma.end() || st == sigma.end()) continue;
        bool found = false;
        for (const auto& [x, y] : component.tau_pairs)
            found |= x == sc->second && y == st->second;
        if (!found) return std::nullopt;
    }
    return sigma;
}

namespace {

// quotient of a closed linear component by the shift-by-n repetition,
// assembled from one n-wide stripe of class representatives
struct Quotient {
    ARQuiver quiver;
    std::vector<std::string> names;
};

Quotient quotient_by_repetition(const ARQuiver& component, int n) {
    Window w = window_of(component);
    if (w.lo > w.hi)
        throw InternalError("cyclic quotient: window is empty despite the chosen cover size");

    auto by_label = label_index(component);

    // stripe of representatives: support minimum in [s0, s0+n)
    int width = w.hi - w.lo + 1;
    if (width < n) throw InternalError("cyclic quotient: window narrower than one period");
    int s0 = w.lo + (width - n) / 2;

    auto min_col = [](const KnitNode& node) {
        auto cols = node.label.support_columns();
        if (cols.empty()) throw InternalError("cyclic quotient: node with empty support");
        return cols.front();
    };

    std::vector<int> stripe;
    for (const auto& node : component.nodes) {
        int c = min_col(node);
        if (c >= s0 && c < s0 + n) stripe.push_back(node.id);
    }
    if (stripe.empty()) throw InternalError("cyclic quotient: empty stripe");

    // representative of an arbitrary node: shift its label into the stripe
    auto rep_of = [&](int id) {
        const KnitNode& node = component.nodes[id];
        int c = min_col(node);
        int k = s0 - c;
        int shiftv = k >= 0 ? ((k + n - 1) / n) * n : -((-k) / n) * n;
        int rep = unique_node_with(by_label, node.label.shifted_columns(shiftv));
        if (rep < 0)
            throw InvariantViolation("cyclic quotient: missing translate of a node label");
        return rep;
    };

    Quotient qq;
    qq.quiver.desc = make_algebra(Shape::Cyclic, n, component.desc.l);
    qq.quiver.m = component.m;
    std::map<int, int> local;  // component node id -> quotient id
    for (int id : stripe) {
        const KnitNode& node = component.nodes[id];
        KnitNode nn;
        nn.id = (int)qq.quiver.nodes.size();
        nn.label = fold_dimvec(node.label, n);
        nn.is_projective = node.is_projective;
        nn.is_injective = node.is_injective;
        nn.inj_level = node.inj_level;
        nn.generation = node.generation;
        local[id] = nn.id;
        // stalk nodes carry their folded interval name
        std::string name;
        auto row = node.label.concentrated_row();
        if (row) {
            auto cols = node.label.support_columns();
            bool indicator = true;
            for (std::size_t i = 0; i < cols.size(); ++i) {
                indicator &= node.label.at(*row, cols[i]) == 1;
                if (i) indicator &= cols[i] == cols[i - 1] + 1;
            }
            if (indicator) {
                CyclicLabel cl = fold_interval(Interval{cols.front(), cols.back()}, n);
                name = cl.render();
                if (*row != 0) name += "[" + std::to_string(*row) + "]";
            }
        }
        qq.names.push_back(name);
        qq.quiver.nodes.push_back(std::move(nn));
    }

    std::set<std::pair<int, int>> arrows, taus;
    for (int id : stripe) {
        for (int t : component.arrows_out(id)) {
            auto [it, fresh] = arrows.emplace(local[id], local[rep_of(t)]);
            if (!fresh)
                throw InvariantViolation("cyclic quotient: duplicate arrow class (valuation > 1?)");
            (void)it;
        }
    }
    for (const auto& [c, t] : component.tau_pairs) {
        if (!local.count(c)) continue;
        taus.emplace(local[c], local[rep_of(t)]);
    }
    // arrows into stripe nodes whose sources sit left of the stripe are the
    // classes of their shifted copies, already collected above
    for (const auto& [x, y] : arrows) qq.quiver.arrows.emplace_back(x, y);
    for (const auto& [x, y] : taus) qq.quiver.tau_pairs.emplace_back(x, y);

    // translation-quiver property: neighbours of tau C along outgoing arrows
    // are exactly the sources of arrows into C
    for (const auto& [c, t] : qq.quiver.tau_pairs) {
        std::multiset<int> outs, ins;
        for (const auto& [x, y] : qq.quiver.arrows) {
            if (x == t) outs.insert(y);
            if (y == c) ins.insert(x);
        }
        if (outs != ins)
            throw InvariantViolation("cyclic quotient: translation-quiver property failed");
    }
    return qq;
}

}  // namespace

CyclicAR cyclic_ar(int n, int l, int m, const CyclicOptions& opts) {
    if (closed_form(Shape::Cyclic, n, l, m) == Finiteness::Infinite)
        throw ParameterError(
            "cyclic_ar: m-mod of the cyclic algebra is of infinite type for these parameters "
            "(finite only for l=2; l=3 with m<=4; l in {4,5} with m<=2; m=1)");
    CoveringDesc cov = make_covering(n, l, m, opts.d_override);

    auto build = [&](int d) {
        AlgebraDesc lin = make_algebra(Shape::Linear, d, l);
        KnitReport r = knit_dimvec(lin, m, opts.budget, KnitDirection::Forward);
        if (!r.closed)
            throw InternalError("cyclic_ar: linear cover did not close within budget");
        if (!find_repetition(r.quiver, n))
            throw InvariantViolation("cyclic_ar: no shift repetition found in the window");
        return quotient_by_repetition(r.quiver, n);
    };

    Quotient qd = build(cov.d);
    Quotient qd2 = build(cov.d + n);

    CyclicAR out;
    out.d_used = cov.d;
    out.d_check = cov.d + n;
    out.stable = quiver_isomorphic(qd.quiver, qd2.quiver);
    if (!out.stable)
        throw InternalError(
            "cyclic_ar: quotients at d and d+n are not isomorphic (" +
            std::to_string(qd.quiver.nodes.size()) + "/" + std::to_string(qd.quiver.arrows.size()) +
            "/" + std::to_string(qd.quiver.tau_pairs.size()) + " vs " +
            std::to_string(qd2.quiver.nodes.size()) + "/" +
            std::to_string(qd2.quiver.arrows.size()) + "/" +
            std::to_string(qd2.quiver.tau_pairs.size()) + " nodes/arrows/tau)");
    out.quiver = std::move(qd.quiver);
    out.node_names = std::move(qd.names);

    int projs = 0, injs = 0;
    for (const auto& node : out.quiver.nodes) {
        projs += node.is_projective;
        injs += node.is_injective;
    }
    if (projs != n || injs != n)
        throw InternalError("cyclic_ar: quotient does not carry n projectives and n injectives");
    return out;
}

std::string cyclic_to_json_string(const CyclicAR& q) {
    nlohmann::ordered_json j;
    j["algebra"] = {{"shape", "cyclic"}, {"n", q.quiver.desc.n}, {"l", q.quiver.desc.l}};
    j["m"] = q.quiver.m;
    j["closed"] = true;
    j["stability"] = {{"d", q.d_used}, {"d_check", q.d_check}, {"isomorphic", q.stable}};
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& node : q.quiver.nodes) {
        nlohmann::ordered_json nj;
        nj["id"] = node.id;
        std::vector<std::vector<int>> rows;
        for (int i = 0; i < node.label.m; ++i) {
            std::vector<int> row(node.label.n);
            for (int v = 0; v < node.label.n; ++v) row[v] = node.label.at(i, v);
            rows.push_back(std::move(row));
        }
        nj["dimvec"] = rows;
        if (!q.node_names[node.id].empty()) nj["object"] = q.node_names[node.id];
        nj["flags"] = {{"projective", node.is_projective}, {"injective", node.is_injective}};
        j["nodes"].push_back(std::move(nj));
    }
    j["arrows"] = q.quiver.arrows;
    j["tau_pairs"] = q.quiver.tau_pairs;
    return j.dump(2) + "\n";
}

std::string cyclic_to_dot(const CyclicAR& q) {
    std::ostringstream os;
    os << "digraph AR {\n  rankdir=LR;\n  node [shape=box,fontsize=10];\n";
    for (const auto& node : q.quiver.nodes) {
        std::string label = q.node_names[node.id].empty() ? node.label.render()
                                                          : q.node_names[node.id];
        os << "  n" << node.id << " [label=\"" << label << "\"";
        if (node.is_projective) os << ",color=blue";
        if (node.is_injective) os << ",color=red";
        os << "];\n";
    }
    for (const auto& [a, b] : q.quiver.arrows) os << "  n" << a << " -> n" << b << ";\n";
    for (const auto& [c, t] : q.quiver.tau_pairs)
        os << "  n" << c << " -> n" << t << " [style=dashed,constraint=false];\n";
    os << "}\n";
    return os.str();
}

}  // namespace nakayama
