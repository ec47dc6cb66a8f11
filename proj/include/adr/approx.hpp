#pragma once

#include "adr/strat.hpp"

namespace adr {

struct ApproxResult {
    std::vector<std::pair<int, int>> summands;  // (label index, multiplicity)
    Rep source;                                 // direct sum of the G_{i,j}
    RepMap epi;
    bool is_approximation = false;   // every Hom(G_s, -) factors through epi
    bool is_right_minimal = false;   // hom_G(ker) lies inside rad hom_G(source)
};

/// Right minimal Add(G)-approximation of a rigid module: the projective cover
/// of m over A/rad^{LL(m)} A. Throws input_error for non-rigid input.
ApproxResult approx_rigid(const ADRContext& ctx, const Rep& m);

/// Right minimal Add(G)-approximation of an arbitrary nonzero module, via the
/// projective cover of Hom_A(G, m) over R transported back along the functor.
ApproxResult approx_general(const ADRContext& ctx, const Rep& m);

struct ResolutionStep {
    std::vector<std::pair<int, int>> summands;  // (label index, multiplicity)
    int ll_R = 0;     // Loewy length of the projective over R
    int addg_ll = 0;  // Loewy length of the matching Add(G) object: max j
};

struct ResolutionReport {
    std::vector<ResolutionStep> steps;  // covers P_0(M), P_1(M), ...
    std::vector<Matrix> maps;           // d_k: P_k -> P_{k-1} (d_0: P_0 -> M)
    bool finished = false;              // kernel reached zero within max_steps
    bool dll_ok = true;                 // LL(P_{k+1}) < LL(P_k) for all k >= 1
    int first_violation = -1;           // smallest k >= 1 violating the above
    bool addg_ok = true;                // strict decrease of the Add(G) lengths
    int addg_first_violation = -1;
};

/// Iterated projective covers over R; stops at a zero kernel or after
/// max_steps covers (reported via `finished`).
ResolutionReport minimal_resolution_R(const ADRContext& ctx, const SCModule& m,
                                      int max_steps = 32);

/// Resolution with the Add(G)-Loewy lengths of each step audited for strict
/// decrease from step 1 on (see addg_ok / addg_first_violation).
inline ResolutionReport addg_loewy_audit(const ADRContext& ctx, const SCModule& m,
                                         int max_steps = 32) {
    return minimal_resolution_R(ctx, m, max_steps);
}

struct ExtRow {
    int label = 0;                               // source label index
    std::vector<std::pair<int, int>> targets;    // (label index, multiplicity)
    bool rigid = false;                          // G_{i,j} rigid: strengthened form applies
};

struct ExtReport {
    std::vector<ExtRow> rows;
    std::vector<std::string> violations;
};

/// Ext^1 support: the top of rad P_{i,j} read off per label, checked against
/// the constraint (k,l) = (i,j+1) or l <= j-1, strengthened to l = j-1 when
/// G_{i,j} is rigid.
ExtReport ext1_support(const ADRContext& ctx);

struct CounterexampleReport {
    long n = 0;
    int dim_p33 = 0, ll_p33 = 0, ll_p22 = 0, ll_delta11 = 0;
    int ll_n1 = 0, n1_factors = 0;
    std::vector<std::pair<int, int>> n2_chain;  // composition chain labels (i,j)
    std::pair<int, int> top_n1{0, 0};
    std::vector<std::pair<int, int>> n1_layer1, n1_layer2;  // filtration layers
    ResolutionReport resolution;  // of M = P_{3,3}/soc
    int ll_p1m = 0, ll_p2m = 0;
    bool dll_ok = true;
    std::vector<std::string> failures;  // expected-vs-computed mismatches
};

/// Build the three-vertex family for the given n, recompute every structural
/// fact used by the counterexample, and resolve M = P_{3,3}/soc.
CounterexampleReport counterexample_driver(long n, int max_steps = 32);

}  // namespace adr
