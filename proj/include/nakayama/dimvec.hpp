#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nakayama {

// Cohomological dimension vector: row i holds the dimension vector of
// H^{-i}, for i in [0, m-1].
struct DimVec {
    int m = 0;
    int n = 0;
    std::vector<int> e;  // row-major, size m*n

    DimVec() = default;
    DimVec(int m_, int n_) : m(m_), n(n_), e((std::size_t)m_ * n_, 0) {}

    int& at(int row, int col) { return e[(std::size_t)row * n + col]; }
    int at(int row, int col) const { return e[(std::size_t)row * n + col]; }

    bool operator==(const DimVec&) const = default;
    auto operator<=>(const DimVec&) const = default;

    bool is_zero() const;
    DimVec operator+(const DimVec& o) const;
    DimVec operator-(const DimVec& o) const;  // may go negative; callers check

    bool has_negative() const;
    // the single row carrying all mass, if any (zero matrix gives nothing)
    std::optional<int> concentrated_row() const;
    // columns with a nonzero entry in any row
    std::vector<int> support_columns() const;
    // entries moved right by k columns; throws if mass falls off the edge
    DimVec shifted_columns(int k) const;

    std::string render() const;  // "(r0 | r1 | ...)"
};

}  // namespace nakayama
