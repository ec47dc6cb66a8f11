#pragma once

#include <optional>

#include "adr/algebra.hpp"

namespace adr {

/// Left A-module presented as a quiver representation: one space per vertex,
/// one matrix per arrow (mapping source coordinates to target coordinates).
struct Rep {
    std::shared_ptr<const BoundAlgebra> alg;
    std::vector<int> dims;
    std::vector<Matrix> arrow;  // arrow[a]: dims[tgt] x dims[src]

    int total_dim() const;
    std::vector<int> offsets() const;  // vertex block offsets in the total space
    void validate() const;             // relations act as zero, shapes consistent
};

/// Morphism of representations: one block per vertex, f[v]: M_v -> N_v.
struct RepMap {
    std::vector<Matrix> block;
};

/// Submodule: one subspace per vertex, closed under every arrow map.
struct SubRep {
    std::vector<Subspace> space;

    int dim() const;
    bool operator==(const SubRep& o) const { return space == o.space; }
    bool operator!=(const SubRep& o) const { return space != o.space; }
    bool contains(const SubRep& o) const;
};

Rep zero_rep(std::shared_ptr<const BoundAlgebra> alg);
Rep projective(std::shared_ptr<const BoundAlgebra> alg, int vertex);  // P_v = A e_v
Rep simple(std::shared_ptr<const BoundAlgebra> alg, int vertex);

/// Direct sum; block offsets per summand and vertex are deterministic
/// (summands in order, blocks concatenated per vertex).
Rep direct_sum(const std::vector<Rep>& parts);
/// Inclusion of part k into direct_sum(parts).
RepMap summand_inclusion(const std::vector<Rep>& parts, int k);
/// Projection of direct_sum(parts) onto part k.
RepMap summand_projection(const std::vector<Rep>& parts, int k);

bool map_commutes(const Rep& m, const Rep& n, const RepMap& f);
RepMap map_compose(const RepMap& g, const RepMap& f);  // g after f
RepMap map_add(const Rep& m, const Rep& n, const RepMap& f, const RepMap& g);
RepMap map_scale(const RepMap& f, const mpq_class& c);
RepMap zero_map(const Rep& m, const Rep& n);
RepMap identity_map(const Rep& m);
bool map_is_injective(const Rep& m, const RepMap& f);
bool map_is_surjective(const Rep& n, const RepMap& f);

SubRep zero_sub(const Rep& m);
SubRep full_sub(const Rep& m);
bool sub_is_stable(const Rep& m, const SubRep& s);
SubRep sub_sum(const SubRep& a, const SubRep& b);
SubRep sub_intersect(const SubRep& a, const SubRep& b);

SubRep radical(const Rep& m);
SubRep rad_power(const Rep& m, int k);
SubRep socle(const Rep& m);
std::vector<SubRep> radical_series(const Rep& m);  // M, rad M, ..., 0
std::vector<SubRep> socle_series(const Rep& m);    // 0, soc M, ..., M
int loewy_length(const Rep& m);
bool is_rigid(const Rep& m);

/// Canonical basis of Hom_A(m, n): the commuting system is solved one arrow
/// at a time and the result is put in RREF over the flattened map space.
std::vector<RepMap> hom_space(const Rep& m, const Rep& n);

/// Smallest submodule containing the given vectors (rows in total coords).
SubRep sub_generated(const Rep& m, const Matrix& vectors);

SubRep map_image(const Rep& m, const Rep& n, const RepMap& f);
SubRep map_kernel(const Rep& m, const Rep& n, const RepMap& f);

/// Quotient m/s with the canonical surjection.
std::pair<Rep, RepMap> quotient(const Rep& m, const SubRep& s);
/// Submodule as a representation in subspace coordinates, with inclusion.
std::pair<Rep, RepMap> submodule_rep(const Rep& m, const SubRep& s);
/// Map X/A -> Y/B induced by f: X -> Y with f(A) <= B.
RepMap induced_on_quotients(const Rep& x, const SubRep& a, const Rep& y, const SubRep& b,
                            const RepMap& f);

/// Quotient by the full isotypic component of L_v inside soc m.
Rep quotient_by_socle_component(const Rep& m, int vertex, RepMap* surj = nullptr);

/// Projective cover of m over A/rad^k A (requires rad^k m = 0): the source is
/// a direct sum of P_v/rad^k P_v matching top(m), with deterministic lifts.
struct CoverResult {
    Rep source;
    RepMap epi;
    std::vector<std::pair<int, int>> summands;  // (vertex, multiplicity), vertex ascending
};
CoverResult projective_cover_mod_radpower(const Rep& m, int k);

/// P_v / rad^k P_v.
Rep truncated_projective(std::shared_ptr<const BoundAlgebra> alg, int vertex, int k);

/// Exact isomorphism search: scan the Hom basis, then seeded random
/// combinations (20 retries). A returned map is certified invertible.
std::optional<RepMap> find_iso(const Rep& m, const Rep& n, uint64_t seed = 1);

/// Action of the algebra element with the given coordinates on the total space.
Matrix elem_action(const Rep& m, const Matrix& coords);

/// Flatten a map into a row vector (vertex blocks in order, row-major).
Matrix flatten_map(const RepMap& f);
RepMap unflatten_map(const Rep& m, const Rep& n, const Matrix& row);

/// Per-vertex composition multiplicities [m : L_v] (= dims of m for reps).
std::vector<int> rep_comp_factors(const Rep& m);

}  // namespace adr
