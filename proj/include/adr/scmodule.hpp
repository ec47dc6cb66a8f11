#pragma once

#include <optional>

#include "adr/rep.hpp"

namespace adr {

class ADRContext;

/// Left module over the structure-constant algebra R. Action matrices are
/// stored for the context's fixed generating set (the idempotents e_{i,j}
/// followed by weight-graded lifts of rad R / rad^2 R); these generate R, so
/// every module-theoretic operation factors through them.
struct SCModule {
    std::shared_ptr<const ADRContext> ctx;
    int dim = 0;
    std::vector<Matrix> act;  // one per context action element, dim x dim
};

SCModule sc_zero(std::shared_ptr<const ADRContext> ctx);
SCModule sc_direct_sum(const std::vector<SCModule>& parts);
Matrix sc_summand_inclusion(const std::vector<SCModule>& parts, int k);
Matrix sc_summand_projection(const std::vector<SCModule>& parts, int k);

bool sc_map_commutes(const SCModule& m, const SCModule& n, const Matrix& x);

/// rad M = rad(R)M as a subspace of M.
Subspace sc_radical(const SCModule& m);
/// soc M = the annihilator of rad(R) in M.
Subspace sc_socle(const SCModule& m);
std::vector<Subspace> sc_radical_series(const SCModule& m);  // full, rad, ..., 0
std::vector<Subspace> sc_socle_series(const SCModule& m);    // 0, soc, ..., full
int sc_loewy_length(const SCModule& m);

std::pair<SCModule, Matrix> sc_submodule(const SCModule& m, const Subspace& s);
std::pair<SCModule, Matrix> sc_quotient(const SCModule& m, const Subspace& s);
SCModule sc_top(const SCModule& m);

/// Weight space e_{i,j} M for the label with the given index.
Subspace sc_weight_space(const SCModule& m, int label_index);

/// Composition multiplicities [M : L_{i,j}] via idempotent ranks, indexed by
/// the context's label order. Requires the split check done at context build.
std::vector<int> comp_multiplicities(const SCModule& m);

/// Canonical basis of Hom_R(m, n). The solver decomposes both modules into
/// weight spaces and imposes one constraint per radical generator.
std::vector<Matrix> sc_hom(const SCModule& m, const SCModule& n);

/// Smallest submodule containing the given row vectors.
Subspace sc_sub_generated(const SCModule& m, const Matrix& rows);

/// Exact isomorphism search: basis scan then seeded random combinations.
std::optional<Matrix> find_sc_iso(const SCModule& m, const SCModule& n, uint64_t seed = 1);

}  // namespace adr
