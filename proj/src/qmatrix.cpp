#include "nakayama/qmatrix.hpp"

#include "nakayama/errors.hpp"

namespace nakayama {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& q : data_)
        if (sgn(q) != 0) return false;
    return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw InternalError("QMatrix: shape mismatch in product");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("QMatrix: shape mismatch in sum");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("QMatrix: shape mismatch in diff");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

QMatrix QMatrix::scaled(const Rational& s) const {
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
}

QMatrix QMatrix::transposed() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelonize(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m.at(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) swap(m.at(p, j), m.at(row, j));
        Rational inv = 1 / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m.at(i, col)) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t QMatrix::rank() const {
    QMatrix m = *this;
    return echelonize(m).size();
}

QMatrix QMatrix::nullspace() const {
    QMatrix m = *this;
    auto pivots = echelonize(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix basis(cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis.at(f, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis.at(pivots[r], k) = -m.at(r, f);
    }
    return basis;
}

QMatrix QMatrix::column_space() const {
    QMatrix m = *this;
    auto pivots = echelonize(m);
    QMatrix basis(rows_, pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t r = 0; r < rows_; ++r) basis.at(r, k) = at(r, pivots[k]);
    return basis;
}

bool QMatrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

QMatrix QMatrix::solve(const QMatrix& b) const {
    if (rows_ != b.rows_) throw InternalError("QMatrix::solve: shape mismatch");
    QMatrix aug = hstack(b);
    auto pivots = echelonize(aug);
    QMatrix x(cols_, b.cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= cols_) throw InternalError("QMatrix::solve: inconsistent system");
        for (std::size_t j = 0; j < b.cols_; ++j) x.at(pivots[r], j) = aug.at(r, cols_ + j);
    }
    return x;
}

CokernelData QMatrix::cokernel_data() const {
    // Quotient coordinates: v mod im = coordinates on non-pivot positions of
    // v reduced by the reduced row echelon basis of the column space.
    QMatrix m = transposed();  // rows = original columns as vectors
    auto pivots = echelonize(m);
    std::vector<bool> is_pivot(rows_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t q = rows_ - pivots.size();
    QMatrix proj(q, rows_);
    QMatrix section(rows_, q);
    std::size_t k = 0;
    for (std::size_t c = 0; c < rows_; ++c) {
        if (is_pivot[c]) continue;
        proj.at(k, c) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) proj.at(k, pivots[r]) = -m.at(r, c);
        section.at(c, k) = 1;
        ++k;
    }
    return {std::move(proj), std::move(section)};
}

QMatrix QMatrix::hstack(const QMatrix& o) const {
    if (rows_ != o.rows_) throw InternalError("QMatrix::hstack: shape mismatch");
    QMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

QMatrix QMatrix::vstack(const QMatrix& o) const {
    if (cols_ != o.cols_) throw InternalError("QMatrix::vstack: shape mismatch");
    QMatrix r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

}  // namespace nakayama
