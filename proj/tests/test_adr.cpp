#include "doctest.h"

#include <random>

#include "adr/adr_context.hpp"
#include "adr/builtins.hpp"

using namespace adr;

namespace {

std::shared_ptr<const ADRContext> ctx_of(const std::string& name, long n = 5) {
    static std::map<std::string, std::shared_ptr<const ADRContext>> cache;
    std::string key = name + ":" + std::to_string(n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto alg = build_bound_algebra(parse_algebra(builtin_algebra_text(name), {{"n", n}}));
    auto ctx = build_context(alg);
    cache[key] = ctx;
    return ctx;
}

SubRep seeded_submodule(const Rep& m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    int count = 1 + static_cast<int>(rng() % 2);
    Matrix rows(m.alg->field, count, m.total_dim());
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < m.total_dim(); ++j)
            rows.set_long(i, j, static_cast<long>(rng() % 5) - 2);
    return sub_generated(m, rows);
}

}  // namespace

TEST_CASE("context of K[x]/(x^2): dimensions and radical") {
    auto ctx = ctx_of("kx2");
    CHECK(ctx->labels.size() == 2);
    CHECK(ctx->dimR == 5);  // 1+1+1+2 by the hand count of the four hom blocks
    CHECK(ctx->radR.dim() == 3);
    CHECK(ctx->rad_nilpotency <= 5);

    CHECK(ctx->projective_R(ctx->label_index(1, 1)).mod.dim == 2);
    CHECK(ctx->projective_R(ctx->label_index(1, 2)).mod.dim == 3);

    // hom_G(L_1) has dimension l_1 = 2
    HomG h = ctx->hom_G(simple(ctx->alg, 0));
    CHECK(h.mod.dim == 2);

    // R-associativity on all structure-constant triples (tiny algebra: full scan)
    const Field& f = ctx->alg->field;
    for (int i = 0; i < ctx->dimR; ++i)
        for (int j = 0; j < ctx->dimR; ++j)
            for (int k = 0; k < ctx->dimR; ++k) {
                Matrix ei(f, 1, ctx->dimR), ej(f, 1, ctx->dimR), ek(f, 1, ctx->dimR);
                ei.set(0, i, f.one());
                ej.set(0, j, f.one());
                ek.set(0, k, f.one());
                CHECK(ctx->mult_coords(ctx->mult_coords(ei, ej), ek) ==
                      ctx->mult_coords(ei, ctx->mult_coords(ej, ek)));
            }
}

TEST_CASE("label sets") {
    auto a5 = ctx_of("a_n", 5);
    std::vector<Label> expect;
    for (int j = 1; j <= 5; ++j) expect.push_back({1, j});
    for (int j = 1; j <= 3; ++j) expect.push_back({2, j});
    for (int j = 1; j <= 3; ++j) expect.push_back({3, j});
    CHECK(a5->labels == expect);

    auto e54 = ctx_of("ex54");
    CHECK(e54->labels.size() == 10);  // l = (3,1,2,2,1,1)
    CHECK(e54->proj_ll == std::vector<int>{3, 1, 2, 2, 1, 1});
}

TEST_CASE("hom_G of the projectives of A(5)") {
    auto ctx = ctx_of("a_n", 5);
    // dim P_{3,3} = dim Hom(G, P_3) = 6
    CHECK(ctx->projective_R(ctx->label_index(3, 3)).mod.dim == 6);
    HomG hp3 = ctx->hom_G(projective(ctx->alg, 2));
    CHECK(hp3.mod.dim == 6);

    // every projective has a one-dimensional top at its own label
    for (int s = 0; s < ctx->nsum(); ++s) {
        SCModule top = sc_top(ctx->projective_R(s).mod);
        CHECK(top.dim == 1);
        auto mults = comp_multiplicities(top);
        for (int k = 0; k < ctx->nsum(); ++k) CHECK(mults[k] == (k == s ? 1 : 0));
    }
}

TEST_CASE("composition multiplicities of hom_G(M) in the hereditary example") {
    auto ctx = ctx_of("ex54");
    Rep m = quotient_by_socle_component(projective(ctx->alg, 0), 5);
    HomG h = ctx->hom_G(m);
    CHECK(h.mod.dim == 6);
    auto mults = comp_multiplicities(h.mod);
    std::map<std::pair<int, int>, int> got;
    for (int k = 0; k < ctx->nsum(); ++k)
        if (mults[k] > 0) got[{ctx->labels[k].i, ctx->labels[k].j}] = mults[k];
    std::map<std::pair<int, int>, int> expect{
        {{1, 3}, 1}, {{2, 1}, 1}, {{3, 2}, 1}, {{4, 1}, 1}, {{4, 2}, 1}, {{5, 1}, 1}};
    CHECK(got == expect);
}

TEST_CASE("one acts as identity and covers of projectives are trivial") {
    auto ctx = ctx_of("ex54");
    for (int s = 0; s < ctx->nsum(); ++s) {
        const SCModule& p = ctx->projective_R(s).mod;
        // sum of idempotent actions is the identity
        Matrix sum(ctx->alg->field, p.dim, p.dim);
        for (int k = 0; k < ctx->nsum(); ++k) sum = sum + p.act[k];
        CHECK(sum == Matrix::identity(ctx->alg->field, p.dim));

        auto cover = ctx->sc_projective_cover(p);
        CHECK(cover.summands == std::vector<std::pair<int, int>>{{s, 1}});
        CHECK(cover.epi.invertible());
    }
}

TEST_CASE("functor is additive and fully faithful on a test corpus") {
    auto ctx = ctx_of("a_n", 3);
    auto alg = ctx->alg;
    std::vector<Rep> mods;
    mods.push_back(projective(alg, 0));
    mods.push_back(simple(alg, 1));
    mods.push_back(quotient(projective(alg, 1), rad_power(projective(alg, 1), 2)).first);
    Rep big = direct_sum({projective(alg, 1), projective(alg, 2)});
    for (uint64_t seed = 3; seed <= 5; ++seed)
        mods.push_back(submodule_rep(big, seeded_submodule(big, seed)).first);

    std::vector<HomG> images;
    for (const auto& m : mods) images.push_back(ctx->hom_G(m));
    for (size_t a = 0; a < mods.size(); ++a)
        for (size_t b = 0; b < mods.size(); ++b) {
            size_t lhs = hom_space(mods[a], mods[b]).size();
            size_t rhs = sc_hom(images[a].mod, images[b].mod).size();
            CHECK(lhs == rhs);
        }

    // hom_G(0) = 0 and additivity on a direct sum
    CHECK(ctx->hom_G(zero_rep(alg)).mod.dim == 0);
    Rep sum2 = direct_sum({mods[0], mods[1]});
    CHECK(ctx->hom_G(sum2).mod.dim == images[0].mod.dim + images[1].mod.dim);
}

TEST_CASE("left exactness and the canonical embedding") {
    auto ctx = ctx_of("a_n", 3);
    auto alg = ctx->alg;
    Rep big = direct_sum({projective(alg, 0), projective(alg, 2)});
    for (uint64_t seed = 11; seed <= 14; ++seed) {
        SubRep n = seeded_submodule(big, seed);
        auto [nm, incl] = submodule_rep(big, n);
        auto [qm, qmap] = quotient(big, n);

        HomG hM = ctx->hom_G(big), hQ = ctx->hom_G(qm);
        Matrix pi_star = ctx->hom_G_map(hM, hQ, qmap);

        // kernel of Hom(G, pi) is exactly Hom(G, N) inside Hom(G, M)
        Subspace ker = Subspace::from_rows(pi_star.nullspace());
        Subspace homN = ctx->homg_submodule_subspace(hM, n);
        CHECK(ker == homN);

        // the induced embedding iota: hom_G(M)/hom_G(N) -> hom_G(M/N)
        Subspace img = Subspace::from_rows(pi_star.transpose());
        auto [W, Wincl] = sc_submodule(hQ.mod, img);

        // Cor 4.2: equal socles inside hom_G(M/N), and equal counts of
        // composition factors with j = l_i
        Subspace socZ = sc_socle(hQ.mod);
        Subspace socW = sc_socle(W).image_under(Wincl);
        CHECK(socZ == socW);
        auto multZ = comp_multiplicities(hQ.mod);
        auto multW = comp_multiplicities(W);
        int zc = 0, wc = 0;
        for (int k = 0; k < ctx->nsum(); ++k) {
            const Label& l = ctx->labels[k];
            if (l.j == ctx->proj_ll[l.i - 1]) {
                zc += multZ[k];
                wc += multW[k];
            }
        }
        CHECK(zc == wc);

        // induced maps Hom(P_{i,l_i}, -) across iota are isomorphisms
        for (int i = 1; i <= alg->quiver.nv; ++i) {
            int li = ctx->proj_ll[i - 1];
            const SCModule& pil = ctx->projective_R(ctx->label_index(i, li)).mod;
            CHECK(sc_hom(pil, W).size() == sc_hom(pil, hQ.mod).size());
        }

        // socle preservation: soc(hom_G M) = soc(hom_G(soc M))
        Subspace hsoc = ctx->homg_submodule_subspace(hM, socle(big));
        auto [S, Sincl] = sc_submodule(hM.mod, hsoc);
        CHECK(sc_socle(hM.mod) == sc_socle(S).image_under(Sincl));
    }
}

TEST_CASE("yoneda transport round trip") {
    auto ctx = ctx_of("a_n", 3);
    auto alg = ctx->alg;
    Rep m = quotient(projective(alg, 2), rad_power(projective(alg, 2), 2)).first;
    HomG h = ctx->hom_G(m);
    for (int s = 0; s < ctx->nsum(); ++s) {
        const HomG& p = ctx->projective_R(s);
        // identity on P_{i,j} transports to the identity on G_{i,j}
        if (ctx->summand[s].dims == m.dims) {
            // not necessarily comparable; skip shape-specific identity check here
        }
        for (const auto& f : sc_hom(p.mod, h.mod)) {
            RepMap g = ctx->yoneda_transport(s, f, h);
            CHECK(map_commutes(ctx->summand[s], m, g));
            CHECK(ctx->hom_G_map(p, h, g) == f);
        }
    }
    // identity element transports to the identity map
    for (int s = 0; s < ctx->nsum(); ++s) {
        const HomG& p = ctx->projective_R(s);
        Matrix id = Matrix::identity(ctx->alg->field, p.mod.dim);
        RepMap g = ctx->yoneda_transport(s, id, p);
        for (size_t v = 0; v < g.block.size(); ++v)
            CHECK(g.block[v] == Matrix::identity(ctx->alg->field, ctx->summand[s].dims[v]));
    }
}

TEST_CASE("structure constants associate on seeded triples of a larger context") {
    auto ctx = ctx_of("ex54");
    const Field& f = ctx->alg->field;
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        Matrix x(f, 1, ctx->dimR), y(f, 1, ctx->dimR), z(f, 1, ctx->dimR);
        x.set(0, static_cast<int>(rng() % ctx->dimR), f.one());
        y.set(0, static_cast<int>(rng() % ctx->dimR), f.one());
        z.set(0, static_cast<int>(rng() % ctx->dimR), f.one());
        CHECK(ctx->mult_coords(ctx->mult_coords(x, y), z) ==
              ctx->mult_coords(x, ctx->mult_coords(y, z)));
    }
}

TEST_CASE("the identity acts as identity on derived modules") {
    auto ctx = ctx_of("a_n", 3);
    const SCModule& p = ctx->projective_R(ctx->label_index(2, 2)).mod;
    auto [q, qm] = sc_quotient(p, sc_socle(p));
    auto [sub, incl] = sc_submodule(p, sc_radical(p));
    for (const SCModule* m : std::vector<const SCModule*>{&p, &q, &sub}) {
        Matrix sum(ctx->alg->field, m->dim, m->dim);
        for (int k = 0; k < ctx->nsum(); ++k) sum = sum + m->act[k];
        CHECK(sum == Matrix::identity(ctx->alg->field, m->dim));
    }
}

TEST_CASE("prime field context respects the validity bound") {
    auto alg_small = build_bound_algebra(
        parse_algebra("algebra m field Fp:5\nvertices 1\narrow x: 1 -> 1\nrelations:\nx^2\n"));
    CHECK_THROWS_WITH_AS(build_context(alg_small), doctest::Contains("prime field too small"),
                         input_error);
    auto alg_big = build_bound_algebra(
        parse_algebra("algebra m field Fp:101\nvertices 1\narrow x: 1 -> 1\nrelations:\nx^2\n"));
    auto ctx = build_context(alg_big);
    CHECK(ctx->dimR == 5);
    CHECK(ctx->radR.dim() == 3);
}

TEST_CASE("truncated projectives carry the quotient coordinates") {
    auto ctx = ctx_of("a_n", 4);
    for (int v = 0; v < 3; ++v) {
        Rep p = projective(ctx->alg, v);
        for (int j = 1; j <= ctx->proj_ll[v]; ++j) {
            Rep trunc = truncated_projective(ctx->alg, v, j);
            auto [q, qm] = quotient(p, rad_power(p, j));
            CHECK(q.dims == trunc.dims);
            for (size_t a = 0; a < p.arrow.size(); ++a) CHECK(q.arrow[a] == trunc.arrow[a]);
        }
    }
}

TEST_CASE("socle and radical series of R-modules agree on the length") {
    auto ctx = ctx_of("a_n", 5);
    for (int s : {ctx->label_index(1, 3), ctx->label_index(2, 2), ctx->label_index(3, 3)}) {
        const SCModule& p = ctx->projective_R(s).mod;
        auto rad_series = sc_radical_series(p);
        auto soc_series = sc_socle_series(p);
        CHECK(rad_series.size() == soc_series.size());
        CHECK(sc_loewy_length(p) == static_cast<int>(soc_series.size()) - 1);
        // each radical power sits inside the matching socle-series member
        int ll = static_cast<int>(rad_series.size()) - 1;
        for (int k = 0; k <= ll; ++k) CHECK(soc_series[ll - k].contains(rad_series[k]));
    }
}

TEST_CASE("validation rejects a representation that ignores the relations") {
    auto alg = build_bound_algebra(
        parse_algebra("algebra m field Q\nvertices 1\narrow x: 1 -> 1\nrelations:\nx^2\n"));
    Rep bad;
    bad.alg = alg;
    bad.dims = {2};
    Matrix act(alg->field, 2, 2);
    act.set_long(0, 1, 1);
    act.set_long(1, 0, 1);  // x acts as a transposition: x^2 = 1 != 0
    bad.arrow.push_back(act);
    CHECK_THROWS_AS(bad.validate(), internal_error);
    Rep good = projective(alg, 0);
    good.validate();
}
