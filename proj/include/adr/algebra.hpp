#pragma once

#include <memory>

#include "adr/quiver.hpp"
#include "adr/subspace.hpp"

namespace adr {

/// Finite-dimensional bound quiver algebra A = KQ/I with a monomial residue
/// basis. Basis elements are residues of paths, sorted by (length, arrow
/// sequence); the span of basis elements of length >= k is rad^k A.
class BoundAlgebra {
public:
    struct BasisPath {
        int src, tgt, len;
        std::vector<int> arrows;  // application order
    };

    Quiver quiver;
    Field field = Field::rationals();
    std::string name;
    int dim = 0;
    int loewy_length = 0;  // least k with rad^k A = 0

    std::vector<BasisPath> basis;
    std::vector<int> e_index;      // basis index of the trivial path at each vertex
    std::vector<int> arrow_index;  // basis index of each arrow

    /// left_mult[i] is the matrix of b -> basis[i] * b in basis coordinates.
    std::vector<Matrix> left_mult;

    int vertex_count() const { return quiver.nv; }

    /// Coordinates of the product x*y (function order: y acts first) of two
    /// coordinate row vectors.
    Matrix mult(const Matrix& x, const Matrix& y) const;

    /// Residue of an arbitrary path given by arrows in application order.
    Matrix reduce_path(int src, const std::vector<int>& arrows) const;

    std::string basis_label(int i) const;

private:
    friend std::shared_ptr<const BoundAlgebra> build_bound_algebra(const AlgebraSpec&, int);
    std::vector<std::vector<std::pair<int, mpq_class>>> path_residues_;  // per enumerated path
    std::map<std::pair<int, std::vector<int>>, int> path_id_;            // (src, arrows) -> id
    int max_path_len_ = 0;                                               // paths of length < this are tabled
};

/// Build A = KQ/I degreewise. Throws input_error if the length guard is hit
/// (ideal not admissible, or bound too small).
std::shared_ptr<const BoundAlgebra> build_bound_algebra(const AlgebraSpec& spec, int max_len = 64);

/// Span of basis residues of path length >= k inside A's underlying space.
Subspace radical_power_basis(const BoundAlgebra& a, int k);

}  // namespace adr
