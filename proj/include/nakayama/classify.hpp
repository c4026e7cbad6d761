#pragma once

#include "nakayama/knitting.hpp"

namespace nakayama {

enum class Finiteness { Finite, Infinite };

// Closed-form finite-type decision for m-mod of Lambda(n,l) / Delta(n,l).
Finiteness closed_form(Shape shape, int n, int l, int m);

struct Verdict {
    enum class Kind { Finite, Infinite, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::optional<int> node_count;   // Finite via a closed knit
    std::optional<Complex> witness;  // Infinite: a tau-periodic object
    int period = 0;
    long budget_used = 0;
};

// Empirical verdict: a closed exact knit proves finiteness; a tau-periodic
// stalk shift or two-term projective complex proves infiniteness; neither
// within the budgets is inconclusive.
Verdict empirical(const AlgebraDesc& desc, int m, long knit_budget, int orbit_budget,
                  std::uint64_t seed = kDefaultSeed);

struct TableCell {
    int n, l, m;
    Finiteness predicted;
    std::optional<Verdict> observed;
    bool agree = true;  // false only when observed contradicts predicted
};

struct TableOptions {
    bool with_empirical = false;
    long knit_budget = 100000;
    int orbit_budget = 64;
    std::uint64_t seed = kDefaultSeed;
};

std::vector<TableCell> table(Shape shape, std::pair<int, int> n_range, std::pair<int, int> l_range,
                             std::pair<int, int> m_range, const TableOptions& opts = {});

std::string render_table_text(const std::vector<TableCell>& cells);
std::string render_table_json(const std::vector<TableCell>& cells, Shape shape);

}  // namespace nakayama
