#pragma once

#include <optional>

#include "adr/scmodule.hpp"

namespace adr {

/// Label (i, j) of a projective summand G_{i,j} = P_i / rad^j P_i; i and j
/// are 1-based as in the usual indexing.
struct Label {
    int i = 0, j = 0;
    bool operator==(const Label& o) const { return i == o.i && j == o.j; }
    bool operator<(const Label& o) const { return i != o.i ? i < o.i : j < o.j; }
    std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
};

/// Hom_A(G, m) together with the block data needed to move between the
/// R-module and the A-module side.
struct HomG {
    SCModule mod;
    Rep m;
    std::vector<std::vector<RepMap>> basis;  // per summand block: maps G_s -> m
    std::vector<Subspace> space;             // flattened canonical span per block
    std::vector<int> offset;                 // block offsets inside mod coordinates
};

/// The generator G, the algebra R = End_A(G)^op as structure constants, its
/// idempotents and radical, and the functor Hom_A(G, -).
class ADRContext : public std::enable_shared_from_this<ADRContext> {
public:
    std::shared_ptr<const BoundAlgebra> alg;
    std::vector<int> proj_ll;    // Loewy length l_i of P_i, per vertex
    std::vector<Label> labels;   // Lambda, ordered by (i, j)
    std::vector<Rep> summand;    // G_{i,j} per label index
    Rep G;
    int dimR = 0;

    // canonical End(G) basis, block by block: block (s,t) holds maps G_s -> G_t
    std::vector<std::vector<std::vector<RepMap>>> block_basis;
    std::vector<std::vector<Subspace>> block_space;  // flattened spans
    std::vector<std::vector<int>> block_offset;      // coordinate offsets
    std::vector<std::pair<int, int>> basis_block;    // basis index -> (s, t)

    // structure constants: prod[x][y] = coordinates of x *_R y = y o x (sparse)
    std::vector<std::vector<std::vector<std::pair<int, mpq_class>>>> prod;

    std::vector<Matrix> e_coords;  // idempotent coordinates per label
    Matrix one_coords = Matrix(Field::rationals(), 0, 0);
    Subspace radR = Subspace::zero(Field::rationals(), 0);
    int rad_nilpotency = 0;  // least k with rad^k = 0

    struct Gen {
        Matrix coords;  // element of R
        int s = 0, t = 0;  // lives in block (s,t): maps weight space W_t to W_s
    };
    std::vector<Gen> rad_gens;

    int nsum() const { return static_cast<int>(labels.size()); }
    int action_count() const { return nsum() + static_cast<int>(rad_gens.size()); }
    int label_index(int i, int j) const;  // 1-based (i,j); throws if absent

    Matrix mult_coords(const Matrix& x, const Matrix& y) const;

    HomG hom_G(const Rep& m) const;
    /// Matrix of Hom_A(G, f): hom_G(src) -> hom_G(dst).
    Matrix hom_G_map(const HomG& src, const HomG& dst, const RepMap& f) const;
    /// Subspace of hom_G(h.m) formed by the maps with image inside s.
    Subspace homg_submodule_subspace(const HomG& h, const SubRep& s) const;
    /// Decode one block component of a coordinate row into an A-map G_s -> m.
    RepMap decode_block(const HomG& h, int block, const Matrix& row) const;

    const HomG& projective_R(int label_index) const;
    SCModule simple_R(int label_index) const;
    /// Coordinates of the identity element of P_{(s)} = hom_G(G_s).
    const Matrix& projective_generator(int label_index) const;

    /// The unique A-map g: G_{label} -> h.m with Hom_A(G, g) = f, for an
    /// R-map f: P_{label} -> hom_G(h.m); evaluates f at the identity element.
    RepMap yoneda_transport(int label_index, const Matrix& f, const HomG& h) const;

    struct SCCover {
        SCModule source;
        Matrix epi;                                 // dim m x dim source
        std::vector<std::pair<int, int>> summands;  // (label index, multiplicity)
    };
    /// Projective cover in Mod R: source matching top(m), kernel inside
    /// rad(source) (right minimal by construction).
    SCCover sc_projective_cover(const SCModule& m) const;

private:
    friend std::shared_ptr<const ADRContext> build_context(std::shared_ptr<const BoundAlgebra>);
    void build_projectives_R() const;
    mutable std::vector<HomG> proj_R_;
    mutable std::vector<Matrix> proj_gen_;
};

/// Build the full context; verifies the idempotent, radical and splitness
/// invariants and throws internal_error on any failure. For prime fields the
/// trace-form radical requires p > max(dim R, dim G).
std::shared_ptr<const ADRContext> build_context(std::shared_ptr<const BoundAlgebra> alg);

}  // namespace adr
