#include "adr/approx.hpp"

#include "adr/builtins.hpp"

namespace adr {

namespace {

void verify_approx_flags(const ADRContext& ctx, const Rep& m, ApproxResult& res) {
    // approximation: composing with epi surjects Hom(G_s, X) onto Hom(G_s, m)
    res.is_approximation = true;
    for (int s = 0; s < ctx.nsum(); ++s) {
        auto hx = hom_space(ctx.summand[s], res.source);
        auto hm = hom_space(ctx.summand[s], m);
        if (hm.empty()) continue;
        Matrix stacked(ctx.alg->field, static_cast<int>(hx.size()),
                       flatten_map(hm[0]).cols());
        for (size_t r = 0; r < hx.size(); ++r) {
            Matrix fr = flatten_map(map_compose(res.epi, hx[r]));
            for (int c = 0; c < stacked.cols(); ++c) stacked.set(static_cast<int>(r), c, fr.at(0, c));
        }
        if (stacked.rank() != static_cast<int>(hm.size())) {
            res.is_approximation = false;
            break;
        }
    }
    // right minimality on the R side: hom_G(ker) inside rad hom_G(source)
    HomG hx = ctx.hom_G(res.source);
    SubRep ker = map_kernel(res.source, m, res.epi);
    Subspace homk = ctx.homg_submodule_subspace(hx, ker);
    res.is_right_minimal = sc_radical(hx.mod).contains(homk);
}

}  // namespace

ApproxResult approx_rigid(const ADRContext& ctx, const Rep& m) {
    if (m.total_dim() == 0) throw input_error("approximation of the zero module");
    if (!is_rigid(m))
        throw input_error("module is not rigid; use the general approximation");
    int k = loewy_length(m);
    auto cover = projective_cover_mod_radpower(m, k);
    ApproxResult res;
    res.source = cover.source;
    res.epi = cover.epi;
    for (const auto& [v, mult] : cover.summands) {
        int j = std::min(k, ctx.proj_ll[v]);
        res.summands.push_back({ctx.label_index(v + 1, j), mult});
    }
    verify_approx_flags(ctx, m, res);
    return res;
}

ApproxResult approx_general(const ADRContext& ctx, const Rep& m) {
    if (m.total_dim() == 0) throw input_error("approximation of the zero module");
    HomG h = ctx.hom_G(m);
    auto cover = ctx.sc_projective_cover(h.mod);
    ApproxResult res;
    res.summands = cover.summands;
    std::vector<Rep> parts;
    std::vector<RepMap> maps;
    int off = 0;
    for (const auto& [label, mult] : cover.summands) {
        const SCModule& p = ctx.projective_R(label).mod;
        for (int c = 0; c < mult; ++c) {
            // slice of the cover epi for this copy, as an R-map P -> hom_G(m)
            Matrix f(ctx.alg->field, h.mod.dim, p.dim);
            for (int i = 0; i < h.mod.dim; ++i)
                for (int j = 0; j < p.dim; ++j) f.set(i, j, cover.epi.at(i, off + j));
            off += p.dim;
            parts.push_back(ctx.summand[label]);
            maps.push_back(ctx.yoneda_transport(label, f, h));
        }
    }
    res.source = direct_sum(parts);
    res.epi = zero_map(res.source, m);
    for (size_t p = 0; p < parts.size(); ++p) {
        int before;
        for (size_t v = 0; v < m.dims.size(); ++v) {
            before = 0;
            for (size_t q = 0; q < p; ++q) before += parts[q].dims[v];
            for (int c = 0; c < parts[p].dims[v]; ++c)
                for (int r = 0; r < m.dims[v]; ++r)
                    res.epi.block[v].set(r, before + c, maps[p].block[v].at(r, c));
        }
    }
    if (!map_commutes(res.source, m, res.epi))
        throw internal_error("transported approximation does not commute");
    if (!map_is_surjective(m, res.epi))
        throw internal_error("transported approximation is not surjective");
    verify_approx_flags(ctx, m, res);
    return res;
}

ResolutionReport minimal_resolution_R(const ADRContext& ctx, const SCModule& m, int max_steps) {
    if (max_steps < 1) throw input_error("max_steps must be >= 1");
    ResolutionReport rep;
    SCModule cur = m;
    Matrix prev_incl = Matrix::identity(ctx.alg->field, m.dim);
    for (int step = 0; step < max_steps; ++step) {
        auto cover = ctx.sc_projective_cover(cur);
        ResolutionStep st;
        st.summands = cover.summands;
        st.ll_R = sc_loewy_length(cover.source);
        st.addg_ll = 0;
        for (const auto& [label, mult] : cover.summands)
            st.addg_ll = std::max(st.addg_ll, ctx.labels[label].j);
        rep.steps.push_back(st);
        rep.maps.push_back(prev_incl * cover.epi);
        if (cover.source.dim == 0) {
            rep.finished = true;
            break;
        }
        Subspace ker = Subspace::from_rows(cover.epi.nullspace());
        if (ker.dim() == 0) {
            rep.finished = true;
            break;
        }
        auto [next, incl] = sc_submodule(cover.source, ker);
        cur = next;
        prev_incl = incl;
    }
    for (size_t k = 1; k + 1 < rep.steps.size(); ++k) {
        if (rep.steps[k + 1].summands.empty()) continue;
        if (rep.steps[k + 1].ll_R >= rep.steps[k].ll_R && rep.dll_ok) {
            rep.dll_ok = false;
            rep.first_violation = static_cast<int>(k);
        }
        if (rep.steps[k + 1].addg_ll >= rep.steps[k].addg_ll && rep.addg_ok) {
            rep.addg_ok = false;
            rep.addg_first_violation = static_cast<int>(k);
        }
    }
    return rep;
}

ExtReport ext1_support(const ADRContext& ctx) {
    ExtReport rep;
    for (int s = 0; s < ctx.nsum(); ++s) {
        const Label& lab = ctx.labels[s];
        ExtRow row;
        row.label = s;
        row.rigid = is_rigid(ctx.summand[s]);
        const SCModule& p = ctx.projective_R(s).mod;
        auto [radp, incl] = sc_submodule(p, sc_radical(p));
        auto mults = comp_multiplicities(sc_top(radp));
        for (int t = 0; t < ctx.nsum(); ++t)
            if (mults[t] > 0) row.targets.push_back({t, mults[t]});
        for (const auto& [t, mult] : row.targets) {
            const Label& tl = ctx.labels[t];
            bool next_in_chain = tl.i == lab.i && tl.j == lab.j + 1;
            bool ok = next_in_chain || (row.rigid ? tl.j == lab.j - 1 : tl.j <= lab.j - 1);
            if (!ok)
                rep.violations.push_back("Ext^1(L_" + lab.str() + ", L_" + tl.str() +
                                         ") violates the support constraint");
        }
        rep.rows.push_back(row);
    }
    return rep;
}

CounterexampleReport counterexample_driver(long n, int max_steps) {
    if (n < 2) throw input_error("the family needs n >= 2");
    CounterexampleReport rep;
    rep.n = n;
    auto alg = build_bound_algebra(parse_algebra(builtin_algebra_text("a_n"), {{"n", n}}));
    auto ctx = build_context(alg);
    auto fam = standard_family(ctx);
    auto expect = [&](const std::string& what, long expected, long got) {
        if (expected != got)
            rep.failures.push_back(what + ": expected " + std::to_string(expected) + ", computed " +
                                   std::to_string(got));
    };

    const SCModule& p33 = ctx->projective_R(ctx->label_index(3, 3)).mod;
    rep.dim_p33 = p33.dim;
    rep.ll_p33 = sc_loewy_length(p33);
    expect("dim P_{3,3}", 6, rep.dim_p33);
    expect("LL P_{3,3}", 5, rep.ll_p33);

    const SCModule& p22 = ctx->projective_R(ctx->label_index(2, 2)).mod;
    rep.ll_p22 = sc_loewy_length(p22);
    rep.ll_delta11 = sc_loewy_length(fam.delta(ctx->label_index(1, 1)));
    if (n >= 3) {
        // for n = 2 the eps-chain is shorter than the beta1*alpha1 branch and
        // l_1 = 3; the identities below hold in the stated form only for n >= 3
        expect("LL P_{2,2}", 1 + n, rep.ll_p22);
        expect("LL Delta(1,1)", n, rep.ll_delta11);
    }

    Rep p3 = projective(alg, 2);
    auto [radp3, incl] = submodule_rep(p3, rad_power(p3, 1));
    HomG n1 = ctx->hom_G(radp3);
    rep.ll_n1 = sc_loewy_length(n1.mod);
    rep.n1_factors = n1.mod.dim;
    expect("LL N_1", 4, rep.ll_n1);
    expect("composition length of N_1", 5, rep.n1_factors);

    auto tops = comp_multiplicities(sc_top(n1.mod));
    for (int k = 0; k < ctx->nsum(); ++k)
        if (tops[k] == 1 && sc_top(n1.mod).dim == 1)
            rep.top_n1 = {ctx->labels[k].i, ctx->labels[k].j};
    if (rep.top_n1 != std::pair<int, int>{2, 2})
        rep.failures.push_back("top(N_1): expected (2,2), computed (" +
                               std::to_string(rep.top_n1.first) + "," +
                               std::to_string(rep.top_n1.second) + ")");

    auto filt = delta_ss_filtration(fam, n1.mod);
    auto layer_labels = [&](int idx) {
        std::vector<std::pair<int, int>> out;
        if (idx < filt.length)
            for (const auto& [k, mult] : filt.layers[idx])
                for (int c = 0; c < mult; ++c)
                    out.push_back({ctx->labels[k].i, ctx->labels[k].j});
        return out;
    };
    rep.n1_layer1 = layer_labels(0);
    rep.n1_layer2 = layer_labels(1);
    if (filt.length != 2 || rep.n1_layer1 != std::vector<std::pair<int, int>>{{3, 1}} ||
        rep.n1_layer2 != std::vector<std::pair<int, int>>{{2, 2}})
        rep.failures.push_back("Delta-semisimple filtration of N_1 is not {(3,1)},{(2,2)}");

    // N_2: unique submodule with top L_{2,3}
    Subspace w = sc_weight_space(n1.mod, ctx->label_index(2, 3));
    if (w.dim() != 1) {
        rep.failures.push_back("weight space (2,3) of N_1 is not one-dimensional");
    } else {
        auto [n2, incl2] = sc_submodule(n1.mod, sc_sub_generated(n1.mod, w.basis()));
        auto series = sc_radical_series(n2);
        for (size_t step = 0; step + 1 < series.size(); ++step) {
            auto [sub, i2] = sc_submodule(n2, series[step]);
            auto mt = comp_multiplicities(sc_top(sub));
            for (int t = 0; t < ctx->nsum(); ++t)
                for (int c = 0; c < mt[t]; ++c)
                    rep.n2_chain.push_back({ctx->labels[t].i, ctx->labels[t].j});
        }
        std::vector<std::pair<int, int>> expect_chain{{2, 3}, {3, 2}, {3, 3}};
        if (rep.n2_chain != expect_chain)
            rep.failures.push_back("N_2 factor chain is not (2,3)/(3,2)/(3,3)");
    }

    // M = P_{3,3}/soc; the socle must be the simple L_{3,3}
    Subspace soc = sc_socle(p33);
    if (soc.dim() != 1)
        rep.failures.push_back("soc P_{3,3} is not simple");
    auto [socm, socincl] = sc_submodule(p33, soc);
    auto socmults = comp_multiplicities(socm);
    if (socmults[ctx->label_index(3, 3)] != soc.dim())
        rep.failures.push_back("soc P_{3,3} is not of type L_{3,3}");
    auto [mmod, qm] = sc_quotient(p33, soc);
    rep.resolution = minimal_resolution_R(*ctx, mmod, max_steps);
    rep.dll_ok = rep.resolution.dll_ok;
    if (rep.resolution.steps.size() > 1) rep.ll_p1m = rep.resolution.steps[1].ll_R;
    if (rep.resolution.steps.size() > 2) rep.ll_p2m = rep.resolution.steps[2].ll_R;
    return rep;
}

}  // namespace adr
