// Acceptance suite: one line per criterion, exit 0 iff everything passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "adr/approx.hpp"
#include "adr/builtins.hpp"
#include "adr/corpus.hpp"

using namespace adr;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Suite {
    int failures = 0;

    void run(int num, const std::string& name, const std::function<void(std::string&)>& body) {
        std::string detail;
        auto t0 = clock_type::now();
        bool ok = true;
        try {
            body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        if (!detail.empty() && detail.rfind("ok", 0) != 0) ok = false;
        std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", num,
                    name.c_str(), seconds_since(t0), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

struct Ctx {
    std::shared_ptr<const ADRContext> ctx;
    StandardFamily fam;
};

std::map<std::string, Ctx>& cache() {
    static std::map<std::string, Ctx> c;
    return c;
}

const Ctx& ctx_of(const std::string& name, long n = 0) {
    std::string key = name + ":" + std::to_string(n);
    auto it = cache().find(key);
    if (it == cache().end()) {
        auto alg = build_bound_algebra(parse_algebra(builtin_algebra_text(name), {{"n", n}}));
        auto ctx = build_context(alg);
        it = cache().emplace(key, Ctx{ctx, standard_family(ctx)}).first;
    }
    return it->second;
}

const Corpus& shared_corpus() {
    static Corpus c = make_corpus(1);
    return c;
}

// context over the exact algebra instance held by a corpus entry
const Ctx& ctx_for(const CorpusEntry& entry) {
    std::string key = "corpus:" + entry.algebra + ":" + std::to_string(entry.n);
    auto it = cache().find(key);
    if (it == cache().end()) {
        auto ctx = build_context(entry.alg);
        it = cache().emplace(key, Ctx{ctx, standard_family(ctx)}).first;
    }
    return it->second;
}

std::map<std::pair<int, int>, int> labels_of(const ADRContext& ctx,
                                             const std::vector<std::pair<int, int>>& dec) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [k, mult] : dec) out[{ctx.labels[k].i, ctx.labels[k].j}] += mult;
    return out;
}

void require(std::string& detail, bool cond, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
}

// proper quotient: divide by the submodule generated by a seeded radical vector
Rep radical_quotient(const Rep& big, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Field& f = big.alg->field;
    SubRep rad = radical(big);
    auto off = big.offsets();
    Matrix gen(f, 1, big.total_dim());
    for (size_t v = 0; v < big.dims.size(); ++v)
        for (int r = 0; r < rad.space[v].dim(); ++r) {
            long c = static_cast<long>(rng() % 5) - 2;
            for (int j = 0; j < big.dims[v]; ++j)
                gen.set(0, off[v] + j,
                        f.add(gen.at(0, off[v] + j),
                              f.mul(f.from_long(c), rad.space[v].basis().at(r, j))));
        }
    return quotient(big, sub_generated(big, gen)).first;
}

const std::vector<std::pair<std::string, long>> kBuiltins{
    {"kx2", 0}, {"ex36", 0}, {"ex54", 0}, {"a_n", 2}, {"a_n", 3}, {"a_n", 4}, {"a_n", 5}};

}  // namespace

int main() {
    auto suite_start = clock_type::now();
    Suite suite;

    suite.run(1, "counterexample reproduction at n=5 and n=4, exact, <10s each", [&](std::string& d) {
        auto t5 = clock_type::now();
        auto r5 = counterexample_driver(5);
        double s5 = seconds_since(t5);
        require(d, r5.failures.empty(), "n=5 driver assertions failed");
        require(d, r5.dim_p33 == 6, "dim P_{3,3} != 6");
        require(d, r5.ll_p33 == 5, "LL P_{3,3} != 5");
        require(d, r5.ll_p22 == 6, "LL P_{2,2} != 6");
        require(d, r5.ll_p1m == 5 && r5.ll_p2m == 6, "LL pair at n=5 is not (5,6)");
        require(d, !r5.dll_ok, "dll_ok should be false at n=5");
        require(d, s5 < 10.0, "n=5 run took 10s or more");

        auto t4 = clock_type::now();
        auto r4 = counterexample_driver(4);
        double s4 = seconds_since(t4);
        require(d, r4.failures.empty(), "n=4 driver assertions failed");
        require(d, r4.ll_p1m == 5 && r4.ll_p2m == 5, "LL pair at n=4 is not (5,5)");
        require(d, !r4.dll_ok, "dll_ok should be false at n=4");
        require(d, s4 < 10.0, "n=4 run took 10s or more");
    });

    suite.run(2, "structure of N_1 and N_2 inside P_{3,3} at n=5", [&](std::string& d) {
        auto r = counterexample_driver(5);
        require(d, r.ll_n1 == 4, "LL N_1 != 4");
        require(d, r.n1_factors == 5, "N_1 does not have 5 composition factors");
        require(d, r.n1_layer1 == std::vector<std::pair<int, int>>{{3, 1}},
                "first filtration layer is not Delta(3,1)");
        require(d, r.n1_layer2 == std::vector<std::pair<int, int>>{{2, 2}},
                "second filtration layer is not Delta(2,2)");
        require(d, (r.n2_chain == std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}}),
                "N_2 factor chain is not (2,3)/(3,2)/(3,3)");
        require(d, r.top_n1 == std::make_pair(2, 2), "top N_1 != L_{2,2}");
    });

    suite.run(3, "approximation vs cover for M = P_1/L_6", [&](std::string& d) {
        const auto& s = ctx_of("ex54");
        Rep m = quotient_by_socle_component(projective(s.ctx->alg, 0), 5);
        auto g = approx_general(*s.ctx, m);
        require(d, g.is_approximation && g.is_right_minimal, "approximation flags not verified");
        require(d,
                labels_of(*s.ctx, g.summands) ==
                    std::map<std::pair<int, int>, int>{{{1, 3}, 1}, {{4, 1}, 1}},
                "summand multiset is not {(1,3),(4,1)}");

        HomG h = s.ctx->hom_G(m);
        require(d, h.mod.dim == 6, "hom_G(M) does not have 6 composition factors");
        auto mults = comp_multiplicities(h.mod);
        std::map<std::pair<int, int>, int> got;
        for (int k = 0; k < s.ctx->nsum(); ++k)
            if (mults[k]) got[{s.ctx->labels[k].i, s.ctx->labels[k].j}] = mults[k];
        std::map<std::pair<int, int>, int> expect{{{1, 3}, 1}, {{2, 1}, 1}, {{3, 2}, 1},
                                                  {{4, 1}, 1}, {{4, 2}, 1}, {{5, 1}, 1}};
        require(d, got == expect, "composition factors of hom_G(M) mismatch");

        auto cover = projective_cover_mod_radpower(m, 3);
        require(d, (cover.summands == std::vector<std::pair<int, int>>{{0, 1}}),
                "the A/rad^3 cover is not P_1 alone");
    });

    suite.run(4, "socle series induces the filtration (>=50 random modules, <60s)",
              [&](std::string& d) {
        auto t0 = clock_type::now();
        int checked = 0;
        std::vector<std::pair<std::string, long>> algebras{
            {"kx2", 0}, {"ex54", 0}, {"a_n", 2}, {"a_n", 3}, {"a_n", 5}};
        std::map<std::string, int> budget{{"kx2:0", 8}, {"ex54:0", 14}, {"a_n:2", 14},
                                          {"a_n:3", 14}, {"a_n:5", 4}};
        for (const auto& [name, n] : algebras) {
            const auto& s = ctx_of(name, n);
            std::vector<Rep> mods;
            for (int v = 0; v < s.ctx->alg->quiver.nv; ++v) {
                mods.push_back(projective(s.ctx->alg, v));
                mods.push_back(simple(s.ctx->alg, v));
            }
            std::vector<Rep> projs;
            for (int v = 0; v < s.ctx->alg->quiver.nv; ++v) projs.push_back(projective(s.ctx->alg, v));
            Rep big = direct_sum(projs);
            int quota = budget[name + ":" + std::to_string(n)];
            for (int t = 0; t < quota; ++t) {
                uint64_t seed = 7000 + 13 * static_cast<uint64_t>(t);
                if (t % 2 == 0)
                    mods.push_back(submodule_rep(big, random_submodule(big, seed)).first);
                else
                    mods.push_back(radical_quotient(big, seed));
            }
            for (const auto& m : mods) {
                if (m.total_dim() == 0) continue;
                auto rep = verify_socle_correspondence(s.fam, m);
                if (!rep.ok) {
                    require(d, false, name + ": " + rep.violations[0]);
                    return;
                }
                ++checked;
            }
        }
        require(d, checked >= 50, "fewer than 50 modules checked");
        require(d, seconds_since(t0) < 60.0, "suite exceeded 60s");
        d = "ok: " + std::to_string(checked) + " modules";
    });

    suite.run(5, "submodules of sums of standards stay semisimple (>=100 cases)",
              [&](std::string& d) {
        int checked = 0;
        for (const auto& [name, n] : std::vector<std::pair<std::string, long>>{
                 {"ex54", 0}, {"a_n", 2}, {"a_n", 3}}) {
            const auto& s = ctx_of(name, n);
            std::mt19937_64 rng(4242 + static_cast<uint64_t>(n));
            for (int trial = 0; trial < 34; ++trial) {
                std::vector<SCModule> parts;
                int count = 2 + static_cast<int>(rng() % 3);
                for (int c = 0; c < count; ++c)
                    parts.push_back(s.fam.delta(static_cast<int>(rng() % s.ctx->nsum())));
                SCModule sum = sc_direct_sum(parts);
                auto [sub, incl] = sc_submodule(sum, random_sc_submodule(sum, rng()));
                auto dec = is_delta_semisimple(s.fam, sub);
                if (!dec.semisimple || !dec.certified) {
                    require(d, false, "a submodule failed the certified decomposition");
                    return;
                }
                if (sc_socle(sub).dim() != delta_factor_count(s.fam, sub)) {
                    require(d, false, "socle summand count != Delta factor count");
                    return;
                }
                ++checked;
            }
        }
        require(d, checked >= 100, "fewer than 100 cases");
        d = "ok: " + std::to_string(checked) + " submodules";
    });

    suite.run(6, "rigid modules: both approximation routes agree", [&](std::string& d) {
        const Corpus& corpus = shared_corpus();
        int rigid_count = 0;
        for (const auto& entry : corpus.entries) {
            const auto& s = ctx_for(entry);
            for (const auto& [expr, m] : entry.modules) {
                if (m.total_dim() == 0 || !is_rigid(m)) continue;
                ++rigid_count;
                auto a = approx_rigid(*s.ctx, m);
                auto g = approx_general(*s.ctx, m);
                bool same = labels_of(*s.ctx, a.summands) == labels_of(*s.ctx, g.summands);
                if (!(same && a.is_approximation && a.is_right_minimal && g.is_approximation &&
                      g.is_right_minimal)) {
                    require(d, false, entry.algebra + " " + expr + ": route mismatch");
                    return;
                }
            }
        }
        require(d, rigid_count >= 20, "too few rigid modules in the corpus");
        d = "ok: " + std::to_string(rigid_count) + " rigid modules";
    });

    suite.run(7, "Ext^1 support constraint on every built-in algebra", [&](std::string& d) {
        for (const auto& [name, n] : kBuiltins) {
            const auto& s = ctx_of(name, n);
            auto rep = ext1_support(*s.ctx);
            if (!rep.violations.empty()) {
                require(d, false, name + ": " + rep.violations[0]);
                return;
            }
        }
    });

    suite.run(8, "standard modules: chains, radicals, dual realizations, SES dims",
              [&](std::string& d) {
        for (const auto& [name, n] : kBuiltins) {
            const auto& s = ctx_of(name, n);
            for (int k = 0; k < s.ctx->nsum(); ++k) {
                const Label& lab = s.ctx->labels[k];
                int li = s.ctx->proj_ll[lab.i - 1];
                const StandardEntry& e = s.fam.entry[k];
                if (e.delta.dim != li - lab.j + 1) {
                    require(d, false, name + " Delta" + lab.str() + ": wrong length");
                    return;
                }
                auto series = sc_radical_series(e.delta);
                for (int step = 0; step < e.delta.dim; ++step) {
                    if (series[step].dim() - series[step + 1].dim() != 1) {
                        require(d, false, name + " Delta" + lab.str() + ": not uniserial");
                        return;
                    }
                    auto [sub, incl] = sc_submodule(e.delta, series[step]);
                    auto mults = comp_multiplicities(sc_top(sub));
                    for (int t = 0; t < s.ctx->nsum(); ++t) {
                        int want = (s.ctx->labels[t].i == lab.i && s.ctx->labels[t].j == lab.j + step)
                                       ? 1
                                       : 0;
                        if (mults[t] != want) {
                            require(d, false, name + " Delta" + lab.str() + ": wrong factor chain");
                            return;
                        }
                    }
                }
                if (lab.j < li) {
                    auto [radd, ri] = sc_submodule(e.delta, sc_radical(e.delta));
                    if (!find_sc_iso(radd, s.fam.delta(s.ctx->label_index(lab.i, lab.j + 1)))) {
                        require(d, false, name + ": rad Delta" + lab.str() + " != Delta(i,j+1)");
                        return;
                    }
                } else if (e.delta.dim != 1 || comp_multiplicities(e.delta)[k] != 1) {
                    require(d, false, name + ": Delta(i,l_i) is not the simple");
                    return;
                }
                // SES: 0 -> hom_G(rad P_i/rad^j P_i) -> P_{i,j} -> Delta(i,j) -> 0
                const SCModule& p = s.ctx->projective_R(k).mod;
                bool dims_ok = e.ses_embed.rank() == e.ses_kernel.dim &&
                               p.dim == e.ses_kernel.dim + e.delta.dim &&
                               e.alt.dim == e.delta.dim;
                if (!dims_ok) {
                    require(d, false, name + " " + lab.str() + ": SES dimensions broken");
                    return;
                }
                if (!e.iso.invertible()) {
                    require(d, false, name + " " + lab.str() + ": realization iso missing");
                    return;
                }
            }
        }
    });

    suite.run(9, "two maximal semisimple submodules of the four-vertex example",
              [&](std::string& d) {
        auto alg = build_bound_algebra(parse_algebra(builtin_algebra_text("ex36")));
        std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) leq[a][b] = true;
        auto standards = general_standard_modules(alg, leq);
        Rep p = projective(alg, 2);
        std::vector<const Rep*> cls;
        for (const auto& x : standards) cls.push_back(&x);
        require(d, trace_rep(cls, p) == rad_power(p, 1), "delta(P) != rad P");
        Rep radp = submodule_rep(p, rad_power(p, 1)).first;
        require(d, !is_delta_semisimple_general(standards, radp).semisimple,
                "rad P should not be a sum of standards");
        Rep cand1 = direct_sum({standards[1], standards[2]});
        Rep cand2 = direct_sum({standards[3], standards[0]});
        std::mt19937_64 rng(5);
        for (const Rep* cand : {&cand1, &cand2}) {
            require(d, is_delta_semisimple_general(standards, *cand).semisimple,
                    "candidate is not a sum of standards");
            auto homs = hom_space(*cand, p);
            bool found = false;
            for (int trial = 0; trial < 60 && !found; ++trial) {
                RepMap h = zero_map(*cand, p);
                for (const auto& b : homs) {
                    long c = static_cast<long>(rng() % 7) - 3;
                    h = map_add(*cand, p, h, map_scale(b, alg->field.from_long(c)));
                }
                if (map_is_injective(*cand, h)) found = true;
            }
            require(d, found, "no injective map into the projective found");
        }
    });

    suite.run(10, "Add(G) Loewy lengths decrease strictly (>=20 modules)", [&](std::string& d) {
        int checked = 0;
        for (const auto& [name, n] : std::vector<std::pair<std::string, long>>{
                 {"ex54", 0}, {"a_n", 2}, {"a_n", 3}}) {
            const auto& s = ctx_of(name, n);
            std::vector<Rep> projs;
            for (int v = 0; v < s.ctx->alg->quiver.nv; ++v)
                projs.push_back(projective(s.ctx->alg, v));
            Rep big = direct_sum(projs);
            for (uint64_t seed = 300; seed < 308; ++seed) {
                Rep q = radical_quotient(big, seed);
                if (q.total_dim() == 0) continue;
                HomG h = s.ctx->hom_G(q);
                auto rep = minimal_resolution_R(*s.ctx, h.mod, 32);
                if (!rep.finished || !rep.addg_ok) {
                    require(d, false, name + ": Add(G) audit failed at seed " +
                                          std::to_string(seed));
                    return;
                }
                ++checked;
            }
        }
        require(d, checked >= 20, "fewer than 20 modules audited");
        d = "ok: " + std::to_string(checked) + " resolutions";
    });

    suite.run(11, "oracle agreement over the whole corpus", [&](std::string& d) {
        const Corpus& corpus = shared_corpus();
        for (const auto& entry : corpus.entries) {
            const auto& s = ctx_for(entry);
            bool heavy = entry.algebra == "a_n" && entry.n >= 4;
            for (size_t i = 0; i < entry.modules.size(); ++i) {
                const Rep& m = entry.modules[i].second;
                // composition counts by socle peeling vs the dimension vector
                if (oracle_composition_series_rep(m) != m.dims) {
                    require(d, false, entry.algebra + " " + entry.modules[i].first +
                                          ": rep-side composition oracle disagrees");
                    return;
                }
                // R-side composition counts vs idempotent ranks
                if (!heavy || i < 4) {
                    HomG h = s.ctx->hom_G(m);
                    if (oracle_composition_series(h.mod) != comp_multiplicities(h.mod)) {
                        require(d, false, entry.algebra + " " + entry.modules[i].first +
                                              ": R-side composition oracle disagrees");
                        return;
                    }
                }
                // hom dimension: stacked system vs per-arrow elimination
                size_t jj = (i + 1) % entry.modules.size();
                const Rep& n2 = entry.modules[heavy ? i : jj].second;
                if (oracle_hom_dim(m, n2) != static_cast<int>(hom_space(m, n2).size())) {
                    require(d, false, entry.algebra + ": hom-dimension oracle disagrees");
                    return;
                }
                if (oracle_hom_dim(m, m) != static_cast<int>(hom_space(m, m).size())) {
                    require(d, false, entry.algebra + ": endo-dimension oracle disagrees");
                    return;
                }
            }
        }
    });

    double total = seconds_since(suite_start);
    std::printf("acceptance total: %.1fs%s\n", total,
                total < 300.0 ? "" : "  [FAIL: exceeded the 5 minute budget]");
    if (total >= 300.0) ++suite.failures;
    if (suite.failures) {
        std::printf("%d criterion(s) FAILED\n", suite.failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
