#pragma once

#include "adr/adr_context.hpp"

namespace adr {

/// One standard module, realized two independent ways and certified
/// isomorphic: as rad^{j-1} of P_{i,1}, and as the cokernel of the canonical
/// embedding Hom_A(G, rad P_i/rad^j P_i) -> P_{i,j}.
struct StandardEntry {
    SCModule delta;       // primary realization: rad^{j-1} P_{i,1}
    SCModule alt;         // cokernel realization
    Matrix iso = Matrix(Field::rationals(), 0, 0);  // certified iso delta -> alt
    SCModule ses_kernel;  // Hom_A(G, rad P_i/rad^j P_i)
    Matrix ses_embed = Matrix(Field::rationals(), 0, 0);  // embedding into P_{i,j}
};

struct StandardFamily {
    std::shared_ptr<const ADRContext> ctx;
    std::vector<StandardEntry> entry;  // per label index

    const SCModule& delta(int label_index) const { return entry[label_index].delta; }
};

/// Build all standard modules; throws internal_error if the two realizations
/// fail to be isomorphic for some label.
StandardFamily standard_family(std::shared_ptr<const ADRContext> ctx);

/// Trace of a class of modules in m: the sum of all hom images. Largest
/// submodule generated by the class.
Subspace sc_trace(const std::vector<const SCModule*>& cls, const SCModule& m);
/// Reject of a class in m: intersection of all hom kernels.
Subspace sc_reject(const SCModule& m, const std::vector<const SCModule*>& cls);

/// delta(m) = trace of the standard family in m.
Subspace delta_preradical(const StandardFamily& fam, const SCModule& m);

/// m lies in F(Delta) iff soc m is a sum of simples L_{i, l_i}.
bool is_delta_good(const StandardFamily& fam, const SCModule& m);
/// Number of standard modules in any Delta-filtration of m.
int delta_factor_count(const StandardFamily& fam, const SCModule& m);

struct DeltaSSDecision {
    bool semisimple = false;
    std::vector<std::pair<int, int>> decomposition;  // (label index, multiplicity)
    bool certified = false;                          // explicit iso m = sum of standards found
};
/// Decide whether m is a direct sum of standard modules; on success the
/// decomposition is certified by an explicit isomorphism.
DeltaSSDecision is_delta_semisimple(const StandardFamily& fam, const SCModule& m);

struct DeltaSSFiltration {
    std::vector<Subspace> chain;  // delta_1(m) c ... c delta_len(m) = m
    std::vector<std::vector<std::pair<int, int>>> layers;  // certified layer decompositions
    int length = 0;
};
/// The filtration 0 c delta_1(m) c ... c m obtained by iterating delta on
/// successive quotients. Requires m in F(Delta).
DeltaSSFiltration delta_ss_filtration(const StandardFamily& fam, const SCModule& m);

struct SocleCorrespondenceReport {
    bool ok = true;
    int loewy_length = 0;
    int delta_ss_length = 0;
    std::vector<std::string> violations;
    DeltaSSFiltration filtration;
};
/// Check, as exact subspace identities inside hom_G(m):
///   delta_k(hom_G m) = hom_G(soc_k m) for all k,
///   the layer law (socle layer at x gives a Delta(x, k) layer factor),
///   the trace identity via the projectives P_{k,l} with l <= j,
/// and that the Delta-semisimple length equals LL(m).
SocleCorrespondenceReport verify_socle_correspondence(const StandardFamily& fam, const Rep& m);

/// A-side trace: largest submodule of m generated by the given modules.
SubRep trace_rep(const std::vector<const Rep*>& cls, const Rep& m);

/// Standard modules over an arbitrary basic split algebra, for the partial
/// order given by leq (leq[a][b] iff a <= b): Delta(i) is the quotient of P_i
/// by the trace of the projectives at incomparable-or-larger vertices.
std::vector<Rep> general_standard_modules(std::shared_ptr<const BoundAlgebra> alg,
                                          const std::vector<std::vector<bool>>& leq);

/// Decide Delta-semisimplicity of an A-module against a list of candidate
/// standard modules: enumerate multiplicity vectors with matching composition
/// factors, then search for a certifying isomorphism.
struct GeneralDeltaSSDecision {
    bool semisimple = false;
    std::vector<int> multiplicities;  // per standard, when semisimple
};
GeneralDeltaSSDecision is_delta_semisimple_general(const std::vector<Rep>& standards, const Rep& m);

}  // namespace adr
