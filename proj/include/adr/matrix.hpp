#pragma once

#include <vector>

#include "adr/field.hpp"

namespace adr {

/// Dense matrix over an exact field. Row-major storage; linear maps act on
/// column vectors, subspace bases are stored as rows elsewhere.
class Matrix {
public:
    Matrix(Field f, int rows, int cols);  // zero matrix
    static Matrix identity(Field f, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return f_; }

    const mpq_class& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, const mpq_class& v) { e_[static_cast<size_t>(i) * cols_ + j] = f_.reduce(v); }
    void set_long(int i, int j, long v) { set(i, j, mpq_class(v)); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const mpq_class& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Matrix row(int i) const;
    Matrix rows_slice(int lo, int hi) const;  // rows [lo, hi)
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix hstack(const Matrix& a, const Matrix& b);
    /// Block-diagonal assembly of square or rectangular blocks.
    static Matrix block_diag(Field f, const std::vector<Matrix>& blocks);

    /// Reduced row echelon form with zero rows dropped; pivot columns are
    /// strictly increasing and eliminated from every other row. Unique.
    Matrix rref(std::vector<int>* pivots = nullptr) const;
    int rank() const;
    /// Right kernel {x : A x = 0}; rows of the result are an RREF basis.
    Matrix nullspace() const;
    /// True iff A is square and invertible (full rank).
    bool invertible() const;
    Matrix inverse() const;

    /// Flatten to a single row (row-major).
    Matrix flatten_row() const;
    static Matrix unflatten(Field f, const Matrix& row_vec, int rows, int cols);

private:
    Field f_;
    int rows_, cols_;
    std::vector<mpq_class> e_;
};

/// Reduce a row vector against RREF rows (with given pivots); returns remainder.
Matrix reduce_row(const Matrix& v, const Matrix& rref_rows, const std::vector<int>& pivots);

}  // namespace adr
