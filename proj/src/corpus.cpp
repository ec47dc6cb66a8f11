#include "adr/corpus.hpp"

#include <random>

#include "adr/builtins.hpp"
#include "adr/expr.hpp"

namespace adr {

SubRep random_submodule(const Rep& m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    int count = 1 + static_cast<int>(rng() % 2);
    Matrix rows(m.alg->field, count, m.total_dim());
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < m.total_dim(); ++j)
            rows.set_long(i, j, static_cast<long>(rng() % 5) - 2);
    return sub_generated(m, rows);
}

Rep random_quotient(const Rep& m, uint64_t seed) {
    return quotient(m, random_submodule(m, seed)).first;
}

Subspace random_sc_submodule(const SCModule& m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    int count = 1 + static_cast<int>(rng() % 2);
    Matrix rows(m.ctx->alg->field, count, m.dim);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < m.dim; ++j) rows.set_long(i, j, static_cast<long>(rng() % 5) - 2);
    return sc_sub_generated(m, rows);
}

Corpus make_corpus(uint64_t seed) {
    Corpus corpus;
    corpus.seed = seed;
    std::vector<std::pair<std::string, long>> algebras{
        {"kx2", 0}, {"ex36", 0}, {"ex54", 0}, {"a_n", 2}, {"a_n", 3}, {"a_n", 4}, {"a_n", 5}};
    uint64_t salt = 0;
    for (const auto& [name, n] : algebras) {
        CorpusEntry entry;
        entry.algebra = name;
        entry.n = n;
        entry.alg = build_bound_algebra(parse_algebra(builtin_algebra_text(name), {{"n", n}}));
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * ++salt));
        std::vector<std::string> exprs;
        int nv = entry.alg->quiver.nv;
        for (int i = 1; i <= nv; ++i) exprs.push_back("P(" + std::to_string(i) + ")");
        exprs.push_back("S(1)");
        exprs.push_back("rad^1(P(1))");
        exprs.push_back("quot(P(1), rad^2(P(1)))");
        if (nv >= 2) {
            exprs.push_back("dsum(P(1), P(2))");
            for (int t = 0; t < 2; ++t)
                exprs.push_back("rsub(dsum(P(1), P(2)), " + std::to_string(rng() % 100000) + ")");
        }
        for (int t = 0; t < 2; ++t)
            exprs.push_back("rquot(P(" + std::to_string(1 + t % nv) + "), " +
                            std::to_string(rng() % 100000) + ")");
        ExprEnv env;
        env.alg = entry.alg;
        for (const auto& ex : exprs) {
            ModuleValue v = eval_module_expr(parse_module_expr(ex), env);
            if (!std::holds_alternative<Rep>(v)) throw internal_error("corpus produced an R-module");
            Rep r = std::get<Rep>(v);
            r.validate();
            entry.modules.push_back({ex, std::move(r)});
        }
        corpus.entries.push_back(std::move(entry));
    }
    return corpus;
}

namespace {

// multiplicity of the simple with the given label inside a semisimple module,
// via the intertwiner system with the one-dimensional simple (no idempotent
// ranking involved)
int simple_multiplicity(const SCModule& semisimple, int label_index) {
    const Field& f = semisimple.ctx->alg->field;
    SCModule l = semisimple.ctx->simple_R(label_index);
    if (l.dim != 1) throw internal_error("simple module is not one-dimensional");
    // unknowns: column vector X with act_S(k) X = lambda_k X for every
    // generator, lambda_k the scalar action on the simple
    Matrix stacked(f, 0, semisimple.dim);
    for (int k = 0; k < semisimple.ctx->action_count(); ++k) {
        Matrix c = semisimple.act[k] -
                   Matrix::identity(f, semisimple.dim).scaled(l.act[k].at(0, 0));
        stacked = Matrix::vstack(stacked, c);
    }
    return stacked.nullspace().rows();
}

}  // namespace

std::vector<int> oracle_composition_series(const SCModule& m) {
    std::vector<int> counts(m.ctx->nsum(), 0);
    SCModule cur = m;
    while (cur.dim > 0) {
        Subspace soc = sc_socle(cur);
        auto [socm, incl] = sc_submodule(cur, soc);
        for (int k = 0; k < m.ctx->nsum(); ++k) counts[k] += simple_multiplicity(socm, k);
        cur = sc_quotient(cur, soc).first;
    }
    return counts;
}

std::vector<int> oracle_composition_series_rep(const Rep& m) {
    std::vector<int> counts(m.dims.size(), 0);
    Rep cur = m;
    while (cur.total_dim() > 0) {
        SubRep soc = socle(cur);
        for (size_t v = 0; v < counts.size(); ++v) counts[v] += soc.space[v].dim();
        cur = quotient(cur, soc).first;
    }
    return counts;
}

int oracle_hom_dim(const Rep& m, const Rep& n) {
    if (m.alg != n.alg) throw input_error("oracle_hom_dim across different algebras");
    const Quiver& q = m.alg->quiver;
    const Field& f = m.alg->field;
    std::vector<int> voff(q.nv + 1, 0);
    for (int v = 0; v < q.nv; ++v) voff[v + 1] = voff[v] + n.dims[v] * m.dims[v];
    int D = voff[q.nv];
    int rows = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a)
        rows += n.dims[q.arrows[a].tgt] * m.dims[q.arrows[a].src];
    Matrix C(f, rows, D);
    int r0 = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Arrow& ar = q.arrows[a];
        for (int i = 0; i < n.dims[ar.tgt]; ++i)
            for (int j = 0; j < m.dims[ar.src]; ++j) {
                int r = r0 + i * m.dims[ar.src] + j;
                for (int k = 0; k < m.dims[ar.tgt]; ++k) {
                    int col = voff[ar.tgt] + i * m.dims[ar.tgt] + k;
                    C.set(r, col, f.add(C.at(r, col), m.arrow[a].at(k, j)));
                }
                for (int k = 0; k < n.dims[ar.src]; ++k) {
                    int col = voff[ar.src] + k * m.dims[ar.src] + j;
                    C.set(r, col, f.sub(C.at(r, col), n.arrow[a].at(i, k)));
                }
            }
        r0 += n.dims[ar.tgt] * m.dims[ar.src];
    }
    return D - C.rank();
}

}  // namespace adr
