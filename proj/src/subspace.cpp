#include "adr/subspace.hpp"

namespace adr {

Subspace Subspace::zero(Field f, int ambient) { return Subspace(ambient, Matrix(f, 0, ambient), {}); }

Subspace Subspace::full(Field f, int ambient) {
    std::vector<int> piv(ambient);
    for (int i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(ambient, Matrix::identity(f, ambient), piv);
}

Subspace Subspace::from_rows(const Matrix& spanning) {
    std::vector<int> piv;
    Matrix b = spanning.rref(&piv);
    return Subspace(spanning.cols(), b, piv);
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

bool Subspace::contains(const Matrix& row_vec) const {
    return reduce_row(row_vec, basis_, pivots_).is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw internal_error("subspace ambient mismatch in sum");
    return from_rows(Matrix::vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw input_error("subspace ambient mismatch in intersect");
    // x = u * basis lies in o iff Q_o * x^T = 0, with Q_o the quotient map of o.
    Matrix q = o.quotient_map().first;                  // (n-d) x n
    Matrix cond = q * basis_.transpose();               // (n-d) x dim(this), acting on u^T
    Matrix ker = cond.nullspace();                      // rows are the valid u's
    return from_rows(ker * basis_);
}

Matrix Subspace::coords_of(const Matrix& row_vec) const {
    const Field& f = field();
    Matrix c(f, 1, dim());
    for (int i = 0; i < dim(); ++i) c.set(0, i, row_vec.at(0, pivots_[i]));
    // membership check: v - c*basis must vanish
    Matrix resid = row_vec - c * basis_;
    if (!resid.is_zero()) throw internal_error("vector outside subspace in coords_of");
    return c;
}

std::pair<Matrix, int> Subspace::quotient_map() const {
    const Field& f = field();
    int qdim = ambient_ - dim();
    Matrix q(f, qdim, ambient_);
    std::vector<bool> is_piv(ambient_, false);
    for (int p : pivots_) is_piv[p] = true;
    int r = 0;
    for (int c = 0; c < ambient_; ++c) {
        if (is_piv[c]) continue;
        q.set(r, c, f.one());
        for (int i = 0; i < dim(); ++i) q.set(r, pivots_[i], f.neg(basis_.at(i, c)));
        ++r;
    }
    return {q, qdim};
}

Matrix Subspace::quotient_section() const {
    const Field& f = field();
    int qdim = ambient_ - dim();
    Matrix s(f, ambient_, qdim);
    std::vector<bool> is_piv(ambient_, false);
    for (int p : pivots_) is_piv[p] = true;
    int r = 0;
    for (int c = 0; c < ambient_; ++c) {
        if (is_piv[c]) continue;
        s.set(c, r, f.one());
        ++r;
    }
    return s;
}

Subspace Subspace::preimage(const Matrix& map) const {
    if (map.rows() != ambient_) throw internal_error("preimage shape mismatch");
    Matrix q = quotient_map().first;  // kills exactly this subspace
    return from_rows((q * map).nullspace());
}

Subspace Subspace::image_under(const Matrix& map) const {
    if (map.cols() != ambient_) throw internal_error("image shape mismatch");
    return from_rows((map * basis_.transpose()).transpose());
}

}  // namespace adr
