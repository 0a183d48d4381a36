#ifndef LINTERM_MATRIX_HPP
#define LINTERM_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace linterm {

// Dense matrix over an exact field type F. F must provide arithmetic
// operators, is_zero(), inverse(), and same-field constants via member
// zero()/one() (number-field elements carry their field, so constants cannot
// be statics). No default-constructed F is ever required.
template <class F>
class Matrix {
  public:
    Matrix(size_t rows, size_t cols, const F& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw degenerate_input("matrix with zero dimension");
    }

    static Matrix identity(size_t n, const F& prototype) {
        Matrix m(n, n, prototype.zero());
        F one = prototype.one();
        for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
        if (rows.empty() || rows[0].empty()) throw degenerate_input("matrix with zero dimension");
        Matrix m(rows.size(), rows[0].size(), rows[0][0]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw dimension_mismatch("ragged rows");
            for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    F& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const F& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<F> row(size_t i) const {
        std::vector<F> out;
        out.reserve(cols_);
        for (size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
        return out;
    }

    bool row_is_zero(size_t i) const {
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_, data_[0]);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw dimension_mismatch("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_, a.data_[0].zero());
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
            }
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_mismatch("matrix sum shape mismatch");
        Matrix out = a;
        for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_mismatch("matrix difference shape mismatch");
        Matrix out = a;
        for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = out.data_[i] - b.data_[i];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    size_t rows_, cols_;
    std::vector<F> data_;
};

// A^e by iterated multiplication. Exponent 0 gives the identity.
template <class F>
Matrix<F> matrix_power(const Matrix<F>& a, unsigned e) {
    if (a.rows() != a.cols()) throw dimension_mismatch("power of a non-square matrix");
    Matrix<F> out = Matrix<F>::identity(a.rows(), a.at(0, 0));
    for (unsigned i = 0; i < e; ++i) out = out * a;
    return out;
}

template <class F>
std::vector<F> matvec(const Matrix<F>& a, const std::vector<F>& x) {
    if (a.cols() != x.size()) throw dimension_mismatch("matrix-vector shape mismatch");
    std::vector<F> out;
    out.reserve(a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
        F acc = x[0].zero();
        for (size_t j = 0; j < a.cols(); ++j) acc += a.at(i, j) * x[j];
        out.push_back(std::move(acc));
    }
    return out;
}

template <class F>
F dot(const std::vector<F>& a, const std::vector<F>& b) {
    if (a.size() != b.size() || a.empty()) throw dimension_mismatch("dot product shape mismatch");
    F acc = a[0].zero();
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// Reduced row echelon form by Gauss-Jordan elimination: first nonzero pivot
// in each column, pivots scaled to one, pivot columns cleared above and
// below, rows ordered by pivot column with zero rows last. The result is the
// canonical form of the input's row space.
template <class F>
Matrix<F> rref(Matrix<F> m) {
    size_t pivot_row = 0;
    for (size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        F inv = m.at(pivot_row, col).inverse();
        for (size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) = inv * m.at(pivot_row, j);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m.at(i, col).is_zero()) continue;
            F factor = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return m;
}

template <class F>
size_t rank(const Matrix<F>& m) {
    Matrix<F> r = rref(m);
    size_t n = 0;
    for (size_t i = 0; i < r.rows(); ++i)
        if (!r.row_is_zero(i)) ++n;
    return n;
}

// Basis of the right nullspace {x : m x = 0}: one vector per free column of
// the rref, expressed over the pivot columns. Empty when m is injective.
template <class F>
std::vector<std::vector<F>> nullspace_basis(const Matrix<F>& m) {
    Matrix<F> r = rref(m);
    F zero = m.at(0, 0).zero(), one = m.at(0, 0).one();
    std::vector<long> pivot_row_of_col(r.cols(), -1);
    size_t row = 0;
    for (size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        if (!r.at(row, col).is_zero()) {
            pivot_row_of_col[col] = static_cast<long>(row);
            ++row;
        }
    }
    std::vector<std::vector<F>> basis;
    for (size_t free_col = 0; free_col < r.cols(); ++free_col) {
        if (pivot_row_of_col[free_col] >= 0) continue;
        std::vector<F> v(r.cols(), zero);
        v[free_col] = one;
        for (size_t col = 0; col < r.cols(); ++col) {
            long pr = pivot_row_of_col[col];
            if (pr >= 0) v[col] = zero - r.at(static_cast<size_t>(pr), free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
struct RowMembership {
    bool member;
    // Leading entry of the last row of the re-echelonized augmented matrix:
    // zero exactly when that row vanished, i.e. when v was dependent on the
    // rows of m; one otherwise (pivots are normalized). In the square
    // full-rank case this is literally the bottom-right entry.
    F pivot_entry;
};

// Does v lie in the row space of m? Echelonize m, drop zero rows, append v as
// a final row, echelonize again, and look at the last row: it vanishes iff v
// was a combination of the basis rows.
template <class F>
RowMembership<F> row_space_contains(const Matrix<F>& m, const std::vector<F>& v) {
    if (v.size() != m.cols()) throw dimension_mismatch("vector length differs from column count");
    Matrix<F> r = rref(m);
    std::vector<std::vector<F>> rows;
    for (size_t i = 0; i < r.rows(); ++i)
        if (!r.row_is_zero(i)) rows.push_back(r.row(i));
    rows.push_back(v);
    Matrix<F> augmented = rref(Matrix<F>::from_rows(rows));

    size_t last = augmented.rows() - 1;
    if (augmented.row_is_zero(last)) return {true, m.at(0, 0).zero()};
    for (size_t j = 0; j < augmented.cols(); ++j)
        if (!augmented.at(last, j).is_zero()) return {false, augmented.at(last, j)};
    return {true, m.at(0, 0).zero()};  // unreachable
}

}  // namespace linterm

#endif
