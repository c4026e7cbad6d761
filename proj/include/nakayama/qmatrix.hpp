#pragma once

#include <cstddef>
#include <vector>

#include "nakayama/rational.hpp"

namespace nakayama {

class QMatrix;

// Projection N -> N/im(f) together with a section of it.
struct CokernelData;

// Dense matrix over Q. Rows-first storage. Everything here is small
// (vertexwise dimensions of interval modules), so no sparsity games.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const QMatrix& o) const = default;

    bool is_zero() const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rational& s) const;
    QMatrix transposed() const;

    std::size_t rank() const;
    // Basis of the right nullspace, one column per basis vector.
    QMatrix nullspace() const;
    // Basis of the column space (subset of columns reduced to echelon basis).
    QMatrix column_space() const;
    bool is_invertible() const;

    // Solves this * x = b columnwise; b may have several columns.
    // Throws InternalError if any column is inconsistent.
    QMatrix solve(const QMatrix& b) const;

    // Columns of `sub` must lie in the column space; returns coordinates of
    // each column of `sub` with respect to the columns of this matrix.
    QMatrix coordinates_of(const QMatrix& sub) const { return solve(sub); }

    // proj has (rows()-rank) rows and rows() columns, proj*this = 0,
    // proj*section = identity.
    CokernelData cokernel_data() const;

    QMatrix hstack(const QMatrix& o) const;
    QMatrix vstack(const QMatrix& o) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

struct CokernelData {
    QMatrix proj;
    QMatrix section;
};

}  // namespace nakayama
