#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nakayama/covering.hpp"
#include "nakayama/errors.hpp"
#include "nakayama/literal.hpp"

using namespace nakayama;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInternal = 3;

std::uint64_t seed_from_env(std::uint64_t fallback) {
    if (const char* s = std::getenv("NAKAYAMA_SEED")) return std::strtoull(s, nullptr, 0);
    return fallback;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw ParameterError("cannot open output file " + out_path);
    f << content;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
}

Shape parse_shape(const std::string& s) {
    if (s == "linear") return Shape::Linear;
    if (s == "cyclic") return Shape::Cyclic;
    throw ParameterError("shape must be linear or cyclic");
}

std::string knit_text(const KnitReport& r) {
    std::ostringstream os;
    os << "algebra: " << (r.quiver.desc.shape == Shape::Linear ? "linear" : "cyclic")
       << " n=" << r.quiver.desc.n << " l=" << r.quiver.desc.l << " m=" << r.quiver.m << "\n";
    os << "mode: " << (r.mode == KnitMode::Exact ? "exact" : "dimvec")
       << "  direction: " << (r.direction == KnitDirection::Forward ? "forward" : "backward")
       << "\n";
    os << "closed: " << (r.closed ? "yes" : "no") << "  nodes: " << r.nodes_created
       << "  arrows: " << r.quiver.arrows.size() << "  tau-pairs: " << r.quiver.tau_pairs.size()
       << "\n";
    for (const auto& node : r.quiver.nodes) {
        os << "  #" << node.id << "  " << node.label.render();
        if (node.object) os << "  " << print_complex(*node.object);
        if (node.is_projective) os << "  [proj]";
        if (node.is_injective) os << "  [inj]";
        os << "\n";
    }
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"exact AR-quiver engine for extended module categories of Nakayama algebras"};
    app.require_subcommand(1);

    std::string shape_s = "linear", format = "text", out_path, object_literal;
    int n = 0, l = 0, m = 1, power = 0, orbit_budget = 64, d_override = 0;
    long budget = 100000;
    bool empirical_flag = false;
    std::string mode_s = "dimvec", direction_s = "forward";
    std::string n_range = "3..9", l_range = "2..7", m_range = "1..4";
    std::uint64_t seed = kDefaultSeed;

    auto add_common = [&](CLI::App* cmd, bool needs_shape) {
        if (needs_shape) cmd->add_option("--shape", shape_s, "linear or cyclic");
        cmd->add_option("-n,--vertices", n, "vertex count")->required();
        cmd->add_option("-l,--relation", l, "relation length")->required();
        cmd->add_option("-m,--window", m, "extension window m");
        cmd->add_option("--seed", seed, "rng seed for isomorphism sampling");
        cmd->add_option("--format", format, "text | dot | json");
        cmd->add_option("-o,--output", out_path, "output path (default stdout)");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "finite-type decision");
    add_common(classify_cmd, true);
    classify_cmd->add_flag("--empirical", empirical_flag, "also knit / search for witnesses");
    classify_cmd->add_option("--budget", budget, "knit node budget");
    classify_cmd->add_option("--orbit-budget", orbit_budget, "tau steps per witness seed");

    CLI::App* knit_cmd = app.add_subcommand("knit", "knit a component");
    add_common(knit_cmd, true);
    knit_cmd->add_option("--mode", mode_s, "dimvec | exact");
    knit_cmd->add_option("--direction", direction_s, "forward | backward");
    knit_cmd->add_option("--budget", budget, "node budget");

    CLI::App* tau_cmd = app.add_subcommand("tau", "apply the AR-translate");
    add_common(tau_cmd, true);
    tau_cmd->add_option("--object", object_literal, "object literal")->required();
    tau_cmd->add_option("--power", power, "tau^k; negative k applies the inverse translate");

    CLI::App* cyclic_cmd = app.add_subcommand("cyclic-ar", "AR-quiver of the cyclic algebra");
    add_common(cyclic_cmd, false);
    cyclic_cmd->add_option("--cover", d_override, "override the linear cover size d");
    cyclic_cmd->add_option("--budget", budget, "node budget for the cover knits");

    CLI::App* table_cmd = app.add_subcommand("table", "finite-type table over parameter ranges");
    table_cmd->add_option("--shape", shape_s, "linear or cyclic");
    table_cmd->add_option("--n", n_range, "n range, e.g. 3..11");
    table_cmd->add_option("--l", l_range, "l range, e.g. 2..7");
    table_cmd->add_option("--m", m_range, "m range, e.g. 1..6");
    table_cmd->add_flag("--empirical", empirical_flag, "add empirical verdicts (linear only)");
    table_cmd->add_option("--budget", budget, "knit budget per cell");
    table_cmd->add_option("--orbit-budget", orbit_budget, "tau steps per witness seed");
    table_cmd->add_option("--seed", seed, "rng seed");
    table_cmd->add_option("--format", format, "text | json");
    table_cmd->add_option("-o,--output", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);
    seed = seed_from_env(seed);

    if (classify_cmd->parsed()) {
        Shape shape = parse_shape(shape_s);
        Finiteness f = closed_form(shape, n, l, m);
        std::ostringstream os;
        os << (f == Finiteness::Finite ? "finite" : "infinite") << "\n";
        int code = kExitOk;
        if (empirical_flag) {
            if (shape != Shape::Linear)
                throw ParameterError("empirical classification is computed on the linear shape; "
                                     "cyclic verdicts follow from the covering theorem");
            Verdict v = empirical(make_algebra(shape, n, l), m, budget, orbit_budget, seed);
            switch (v.kind) {
                case Verdict::Kind::Finite:
                    os << "empirical: finite, " << *v.node_count << " indecomposables\n";
                    break;
                case Verdict::Kind::Infinite:
                    os << "empirical: infinite, witness " << print_complex(*v.witness, seed)
                       << " with period " << v.period << "\n";
                    break;
                case Verdict::Kind::Inconclusive:
                    os << "empirical: inconclusive within budget " << v.budget_used << "\n";
                    code = kExitInconclusive;
                    break;
            }
        }
        emit(out_path, os.str());
        return code;
    }

    if (knit_cmd->parsed()) {
        AlgebraDesc desc = make_algebra(parse_shape(shape_s), n, l);
        KnitMode mode = mode_s == "exact" ? KnitMode::Exact : KnitMode::DimVec;
        if (mode_s != "exact" && mode_s != "dimvec")
            throw ParameterError("mode must be dimvec or exact");
        KnitDirection dir =
            direction_s == "backward" ? KnitDirection::Backward : KnitDirection::Forward;
        if (direction_s != "backward" && direction_s != "forward")
            throw ParameterError("direction must be forward or backward");
        KnitReport r = mode == KnitMode::Exact ? knit_exact(desc, m, budget, dir, seed)
                                               : knit_dimvec(desc, m, budget, dir);
        if (format == "dot")
            emit(out_path, to_dot(r.quiver));
        else if (format == "json")
            emit(out_path, to_json_string(r));
        else
            emit(out_path, knit_text(r));
        return r.closed ? kExitOk : kExitInconclusive;
    }

    if (tau_cmd->parsed()) {
        AlgebraDesc desc = make_algebra(parse_shape(shape_s), n, l);
        Complex x = parse_complex(desc, object_literal);
        TauDir dir = power < 0 ? TauDir::Forward : TauDir::Backward;
        int steps = power < 0 ? -power : power;
        Complex cur = canonical_form(x);
        for (int i = 0; i < steps && !cur.is_zero(); ++i) cur = tau(cur, m, dir);
        emit(out_path, print_complex(cur, seed) + "\n");
        return kExitOk;
    }

    if (cyclic_cmd->parsed()) {
        CyclicOptions opts;
        if (d_override > 0) opts.d_override = d_override;
        opts.budget = budget;
        CyclicAR q = cyclic_ar(n, l, m, opts);
        if (format == "dot") {
            emit(out_path, cyclic_to_dot(q));
        } else if (format == "json") {
            emit(out_path, cyclic_to_json_string(q));
        } else {
            std::ostringstream os;
            os << "cyclic n=" << q.quiver.desc.n << " l=" << q.quiver.desc.l
               << " m=" << q.quiver.m << "\n";
            os << "cover d=" << q.d_used << " checked against d=" << q.d_check
               << " (stable)\n";
            os << "nodes: " << q.quiver.nodes.size() << "  arrows: " << q.quiver.arrows.size()
               << "  tau-pairs: " << q.quiver.tau_pairs.size() << "\n";
            for (const auto& node : q.quiver.nodes) {
                os << "  #" << node.id << "  " << node.label.render();
                if (!q.node_names[node.id].empty()) os << "  " << q.node_names[node.id];
                if (node.is_projective) os << "  [proj]";
                if (node.is_injective) os << "  [inj]";
                os << "\n";
            }
            emit(out_path, os.str());
        }
        return kExitOk;
    }

    // table
    Shape shape = parse_shape(shape_s);
    TableOptions opts;
    opts.with_empirical = empirical_flag;
    opts.knit_budget = budget;
    opts.orbit_budget = orbit_budget;
    opts.seed = seed;
    auto cells = table(shape, parse_range(n_range), parse_range(l_range), parse_range(m_range),
                       opts);
    emit(out_path, format == "json" ? render_table_json(cells, shape) : render_table_text(cells));
    bool all_agree = std::all_of(cells.begin(), cells.end(),
                                 [](const TableCell& c) { return c.agree; });
    return all_agree ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
