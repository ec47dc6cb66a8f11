#pragma once

#include "adr/scmodule.hpp"

namespace adr {

/// Deterministic random submodule: closure of a seeded random vector set
/// under the arrow action. Same seed, same submodule, on every platform.
SubRep random_submodule(const Rep& m, uint64_t seed);
Rep random_quotient(const Rep& m, uint64_t seed);

/// Same construction on the R side.
Subspace random_sc_submodule(const SCModule& m, uint64_t seed);

struct CorpusEntry {
    std::string algebra;  // built-in algebra name (a_n carries its n)
    long n = 0;
    std::shared_ptr<const BoundAlgebra> alg;
    std::vector<std::pair<std::string, Rep>> modules;  // (expression, value)
};

struct Corpus {
    uint64_t seed = 0;
    std::vector<CorpusEntry> entries;
};

/// Built-in algebras plus seeded expression-generated modules. Every module
/// is reproducible from its printed expression.
Corpus make_corpus(uint64_t seed);

/// Composition multiset by iterated socle peeling; factor counts per layer
/// are obtained from Hom spaces out of the simples, independently of the
/// idempotent-rank route.
std::vector<int> oracle_composition_series(const SCModule& m);

/// Per-vertex composition counts of a representation by socle peeling.
std::vector<int> oracle_composition_series_rep(const Rep& m);

/// Hom dimension via one stacked commuting system solved in a single
/// nullspace computation (independent of the per-arrow elimination).
int oracle_hom_dim(const Rep& m, const Rep& n);

}  // namespace adr
