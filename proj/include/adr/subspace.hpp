#pragma once

#include "adr/matrix.hpp"

namespace adr {

/// Subspace of K^n in canonical form: the basis matrix is in RREF with no
/// zero rows, so two subspaces are equal iff their basis matrices are
/// identical.
class Subspace {
public:
    static Subspace zero(Field f, int ambient);
    static Subspace full(Field f, int ambient);
    /// Row space of an arbitrary spanning matrix.
    static Subspace from_rows(const Matrix& spanning);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const Field& field() const { return basis_.field(); }

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const Matrix& row_vec) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    /// Coordinates of v in the RREF basis; throws if v is outside.
    Matrix coords_of(const Matrix& row_vec) const;

    /// Deterministic surjection K^ambient -> K^(ambient-dim) with kernel
    /// exactly this subspace; the complement is spanned by the non-pivot
    /// coordinates. Returns the matrix and the quotient dimension.
    std::pair<Matrix, int> quotient_map() const;

    /// Right inverse of quotient_map() given by the non-pivot unit vectors.
    Matrix quotient_section() const;

    /// Preimage {x : A x in this} of this subspace under the map A.
    Subspace preimage(const Matrix& map) const;

    /// Image {A x : x in this} under the map A (ambient = map rows).
    Subspace image_under(const Matrix& map) const;

private:
    Subspace(int ambient, Matrix basis, std::vector<int> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
    int ambient_;
    Matrix basis_;
    std::vector<int> pivots_;
};

}  // namespace adr
