#include "adr/matrix.hpp"

namespace adr {

Matrix::Matrix(Field f, int rows, int cols)
    : f_(f), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, mpq_class(0)) {
    if (rows < 0 || cols < 0) throw internal_error("negative matrix dimensions");
}

Matrix Matrix::identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.e_[static_cast<size_t>(i) * n + i] = 1;
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix shape mismatch in +");
    Matrix r(f_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = f_.add(e_[k], o.e_[k]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix shape mismatch in -");
    Matrix r(f_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = f_.sub(e_[k], o.e_[k]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw internal_error("matrix shape mismatch in *");
    Matrix r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const mpq_class& a = at(i, k);
            if (sgn(a) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const mpq_class& b = o.at(k, j);
                if (sgn(b) == 0) continue;
                r.e_[static_cast<size_t>(i) * o.cols_ + j] =
                    f_.add(r.e_[static_cast<size_t>(i) * o.cols_ + j], f_.mul(a, b));
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(const mpq_class& c) const {
    Matrix r(f_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = f_.mul(e_[k], c);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.e_[static_cast<size_t>(j) * rows_ + i] = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
    for (const auto& v : e_)
        if (sgn(v) != 0) return false;
    return true;
}

Matrix Matrix::row(int i) const {
    Matrix r(f_, 1, cols_);
    for (int j = 0; j < cols_; ++j) r.e_[j] = at(i, j);
    return r;
}

Matrix Matrix::rows_slice(int lo, int hi) const {
    Matrix r(f_, hi - lo, cols_);
    for (int i = lo; i < hi; ++i)
        for (int j = 0; j < cols_; ++j) r.e_[static_cast<size_t>(i - lo) * cols_ + j] = at(i, j);
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw internal_error("vstack column mismatch");
    Matrix r(a.f_, a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.e_[static_cast<size_t>(i) * a.cols_ + j] = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j)
            r.e_[static_cast<size_t>(i + a.rows_) * a.cols_ + j] = b.at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw internal_error("hstack row mismatch");
    Matrix r(a.f_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.e_[static_cast<size_t>(i) * r.cols_ + j] = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j)
            r.e_[static_cast<size_t>(i) * r.cols_ + a.cols_ + j] = b.at(i, j);
    }
    return r;
}

Matrix Matrix::block_diag(Field f, const std::vector<Matrix>& blocks) {
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix r(f, rows, cols);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) r.set(ro + i, co + j, b.at(i, j));
        ro += b.rows();
        co += b.cols();
    }
    return r;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
    Matrix w(*this);
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int sel = -1;
        for (int i = r; i < rows_; ++i)
            if (sgn(w.at(i, c)) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < cols_; ++j) std::swap(w.e_[static_cast<size_t>(sel) * cols_ + j],
                                                      w.e_[static_cast<size_t>(r) * cols_ + j]);
        mpq_class pinv = f_.inv(w.at(r, c));
        for (int j = c; j < cols_; ++j)
            w.e_[static_cast<size_t>(r) * cols_ + j] = f_.mul(w.at(r, j), pinv);
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            mpq_class fac = w.at(i, c);
            if (sgn(fac) == 0) continue;
            for (int j = c; j < cols_; ++j)
                w.e_[static_cast<size_t>(i) * cols_ + j] =
                    f_.sub(w.at(i, j), f_.mul(fac, w.at(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = piv;
    return w.rows_slice(0, r);
}

int Matrix::rank() const {
    std::vector<int> piv;
    Matrix r = rref(&piv);
    return r.rows();
}

Matrix Matrix::nullspace() const {
    std::vector<int> piv;
    Matrix r = rref(&piv);
    std::vector<bool> is_piv(cols_, false);
    for (int c : piv) is_piv[c] = true;
    int nfree = cols_ - static_cast<int>(piv.size());
    Matrix basis(f_, nfree, cols_);
    int k = 0;
    for (int c = 0; c < cols_; ++c) {
        if (is_piv[c]) continue;
        basis.set(k, c, f_.one());
        for (size_t i = 0; i < piv.size(); ++i) basis.set(k, piv[i], f_.neg(r.at(static_cast<int>(i), c)));
        ++k;
    }
    return basis.rref();  // canonical form
}

bool Matrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw internal_error("inverse of non-square matrix");
    Matrix aug = hstack(*this, identity(f_, rows_));
    std::vector<int> piv;
    Matrix r = aug.rref(&piv);
    if (r.rows() != rows_ || piv.back() >= rows_ || static_cast<int>(piv.size()) != rows_)
        throw internal_error("matrix not invertible");
    for (int i = 0; i < rows_; ++i)
        if (piv[i] != i) throw internal_error("matrix not invertible");
    Matrix inv(f_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.set(i, j, r.at(i, cols_ + j));
    return inv;
}

Matrix Matrix::flatten_row() const {
    Matrix r(f_, 1, rows_ * cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.e_[static_cast<size_t>(i) * cols_ + j] = at(i, j);
    return r;
}

Matrix Matrix::unflatten(Field f, const Matrix& row_vec, int rows, int cols) {
    if (row_vec.rows() != 1 || row_vec.cols() != rows * cols)
        throw internal_error("unflatten shape mismatch");
    Matrix r(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.set(i, j, row_vec.at(0, i * cols + j));
    return r;
}

Matrix reduce_row(const Matrix& v, const Matrix& rref_rows, const std::vector<int>& pivots) {
    const Field& f = v.field();
    Matrix w = v;
    for (int i = 0; i < rref_rows.rows(); ++i) {
        mpq_class c = w.at(0, pivots[i]);
        if (f.is_zero(c)) continue;
        for (int j = 0; j < w.cols(); ++j) w.set(0, j, f.sub(w.at(0, j), f.mul(c, rref_rows.at(i, j))));
    }
    return w;
}

}  // namespace adr
