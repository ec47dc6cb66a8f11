#include "adr/report.hpp"

#include <sstream>

namespace adr {

namespace {

ojson label_json(const Label& l) { return ojson{{"i", l.i}, {"j", l.j}}; }

ojson summand_list_json(const ADRContext& ctx, const std::vector<std::pair<int, int>>& s) {
    ojson out = ojson::array();
    for (const auto& [k, mult] : s) {
        ojson o = label_json(ctx.labels[k]);
        o["mult"] = mult;
        out.push_back(o);
    }
    return out;
}

std::string summand_list_text(const ADRContext& ctx, const std::vector<std::pair<int, int>>& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, mult] : s) {
        if (!first) os << " + ";
        os << ctx.labels[k].str();
        if (mult > 1) os << "^" << mult;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// composition labels of each radical layer of an R-module
std::vector<std::vector<std::pair<Label, int>>> sc_layers(const ADRContext& ctx,
                                                          const SCModule& m) {
    std::vector<std::vector<std::pair<Label, int>>> out;
    auto series = sc_radical_series(m);
    for (size_t k = 0; k + 1 < series.size(); ++k) {
        auto [sub, incl] = sc_submodule(m, series[k]);
        auto mults = comp_multiplicities(sc_top(sub));
        std::vector<std::pair<Label, int>> layer;
        for (int t = 0; t < ctx.nsum(); ++t)
            if (mults[t]) layer.push_back({ctx.labels[t], mults[t]});
        out.push_back(layer);
    }
    return out;
}

}  // namespace

ojson algebra_json(const BoundAlgebra& a) {
    ojson o;
    o["kind"] = "algebra";
    o["name"] = a.name;
    o["field"] = a.field.str();
    o["vertices"] = a.quiver.nv;
    ojson arrows = ojson::array();
    for (const auto& ar : a.quiver.arrows)
        arrows.push_back(ojson{{"name", ar.name}, {"src", ar.src + 1}, {"tgt", ar.tgt + 1}});
    o["arrows"] = arrows;
    o["dim"] = a.dim;
    o["loewy_length"] = a.loewy_length;
    ojson basis = ojson::array();
    for (int b = 0; b < a.dim; ++b) basis.push_back(a.basis_label(b));
    o["basis"] = basis;
    ojson radical = ojson::array();
    for (int k = 0; k <= a.loewy_length; ++k) radical.push_back(radical_power_basis(a, k).dim());
    o["radical_power_dims"] = radical;
    return o;
}

std::string algebra_text(const BoundAlgebra& a) {
    std::ostringstream os;
    os << "algebra " << a.name << " over " << a.field.str() << "\n";
    os << "  vertices: " << a.quiver.nv << ", arrows: " << a.quiver.arrows.size() << "\n";
    os << "  dim: " << a.dim << ", Loewy length: " << a.loewy_length << "\n";
    os << "  basis:";
    for (int b = 0; b < a.dim; ++b) os << " " << a.basis_label(b);
    os << "\n  rad^k dims:";
    for (int k = 0; k <= a.loewy_length; ++k) os << " " << radical_power_basis(a, k).dim();
    os << "\n";
    return os.str();
}

ojson rep_json(const Rep& m) {
    ojson o;
    o["kind"] = "module";
    o["over"] = "A";
    o["dims"] = m.dims;
    o["total_dim"] = m.total_dim();
    o["loewy_length"] = loewy_length(m);
    o["rigid"] = is_rigid(m);
    ojson layers = ojson::array();
    auto series = radical_series(m);
    for (size_t k = 0; k + 1 < series.size(); ++k) {
        ojson layer = ojson::array();
        for (size_t v = 0; v < m.dims.size(); ++v) {
            int d = series[k].space[v].dim() - series[k + 1].space[v].dim();
            if (d) layer.push_back(ojson{{"vertex", static_cast<int>(v) + 1}, {"mult", d}});
        }
        layers.push_back(layer);
    }
    o["radical_layers"] = layers;
    ojson socs = ojson::array();
    for (const auto& s : socle_series(m)) socs.push_back(s.dim());
    o["socle_series_dims"] = socs;
    return o;
}

std::string rep_text(const Rep& m) {
    std::ostringstream os;
    os << "module over A: dim " << m.total_dim() << ", Loewy length " << loewy_length(m)
       << (is_rigid(m) ? ", rigid" : ", not rigid") << "\n";
    os << "  vertex dims:";
    for (int d : m.dims) os << " " << d;
    os << "\n  radical layers (simple factors per layer):\n";
    auto series = radical_series(m);
    for (size_t k = 0; k + 1 < series.size(); ++k) {
        os << "    layer " << k << ":";
        for (size_t v = 0; v < m.dims.size(); ++v) {
            int d = series[k].space[v].dim() - series[k + 1].space[v].dim();
            for (int c = 0; c < d; ++c) os << " " << v + 1;
        }
        os << "\n";
    }
    return os.str();
}

ojson sc_json(const ADRContext& ctx, const SCModule& m) {
    ojson o;
    o["kind"] = "module";
    o["over"] = "R";
    o["dim"] = m.dim;
    o["loewy_length"] = sc_loewy_length(m);
    ojson mult = ojson::array();
    auto mults = comp_multiplicities(m);
    for (int k = 0; k < ctx.nsum(); ++k)
        if (mults[k]) {
            ojson e = label_json(ctx.labels[k]);
            e["mult"] = mults[k];
            mult.push_back(e);
        }
    o["composition_factors"] = mult;
    ojson layers = ojson::array();
    for (const auto& layer : sc_layers(ctx, m)) {
        ojson jl = ojson::array();
        for (const auto& [lab, c] : layer) {
            ojson e = label_json(lab);
            e["mult"] = c;
            jl.push_back(e);
        }
        layers.push_back(jl);
    }
    o["radical_layers"] = layers;
    return o;
}

std::string sc_text(const ADRContext& ctx, const SCModule& m) {
    std::ostringstream os;
    os << "module over R: dim " << m.dim << ", Loewy length " << sc_loewy_length(m) << "\n";
    os << "  radical layers (label grid):\n";
    for (const auto& layer : sc_layers(ctx, m)) {
        os << "   ";
        for (const auto& [lab, c] : layer)
            for (int t = 0; t < c; ++t) os << " " << lab.str();
        os << "\n";
    }
    return os.str();
}

ojson adr_json(const ADRContext& ctx) {
    ojson o;
    o["kind"] = "adr";
    o["algebra"] = ctx.alg->name;
    o["dim_A"] = ctx.alg->dim;
    o["dim_G"] = ctx.G.total_dim();
    o["dim_R"] = ctx.dimR;
    o["dim_rad_R"] = ctx.radR.dim();
    o["rad_nilpotency"] = ctx.rad_nilpotency;
    ojson labels = ojson::array();
    for (int s = 0; s < ctx.nsum(); ++s) {
        ojson e = label_json(ctx.labels[s]);
        e["dim_G_ij"] = ctx.summand[s].total_dim();
        e["dim_P_ij"] = ctx.projective_R(s).mod.dim;
        e["ll_P_ij"] = sc_loewy_length(ctx.projective_R(s).mod);
        labels.push_back(e);
    }
    o["labels"] = labels;
    return o;
}

std::string adr_text(const ADRContext& ctx) {
    std::ostringstream os;
    os << "ADR algebra of " << ctx.alg->name << ": dim A = " << ctx.alg->dim
       << ", dim G = " << ctx.G.total_dim() << ", dim R = " << ctx.dimR
       << ", dim rad R = " << ctx.radR.dim() << ", rad^" << ctx.rad_nilpotency << " = 0\n";
    os << "  label   dim G_ij  dim P_ij  LL P_ij\n";
    for (int s = 0; s < ctx.nsum(); ++s) {
        const auto& p = ctx.projective_R(s).mod;
        os << "  " << ctx.labels[s].str() << "\t" << ctx.summand[s].total_dim() << "\t  "
           << p.dim << "\t    " << sc_loewy_length(p) << "\n";
    }
    return os.str();
}

ojson standards_json(const ADRContext& ctx, const StandardFamily& fam) {
    ojson o;
    o["kind"] = "standards";
    ojson list = ojson::array();
    for (int k = 0; k < ctx.nsum(); ++k) {
        ojson e = label_json(ctx.labels[k]);
        e["dim"] = fam.delta(k).dim;
        ojson chain = ojson::array();
        for (const auto& layer : sc_layers(ctx, fam.delta(k)))
            for (const auto& [lab, c] : layer)
                for (int t = 0; t < c; ++t) chain.push_back(label_json(lab));
        e["factor_chain"] = chain;
        e["realizations_isomorphic"] = true;  // certified at construction
        list.push_back(e);
    }
    o["standards"] = list;
    return o;
}

std::string standards_text(const ADRContext& ctx, const StandardFamily& fam) {
    std::ostringstream os;
    os << "standard modules (uniserial; factor chains top to socle):\n";
    for (int k = 0; k < ctx.nsum(); ++k) {
        os << "  Delta" << ctx.labels[k].str() << "  dim " << fam.delta(k).dim << "  chain";
        for (const auto& layer : sc_layers(ctx, fam.delta(k)))
            for (const auto& [lab, c] : layer)
                for (int t = 0; t < c; ++t) os << " " << lab.str();
        os << "\n";
    }
    return os.str();
}

ojson filtration_json(const ADRContext& ctx, const SCModule& m, const DeltaSSFiltration& f) {
    ojson o;
    o["kind"] = "filtration";
    o["module_dim"] = m.dim;
    o["length"] = f.length;
    ojson dims = ojson::array();
    for (const auto& c : f.chain) dims.push_back(c.dim());
    o["chain_dims"] = dims;
    ojson layers = ojson::array();
    for (const auto& layer : f.layers) layers.push_back(summand_list_json(ctx, layer));
    o["layers"] = layers;
    return o;
}

std::string filtration_text(const ADRContext& ctx, const SCModule& m, const DeltaSSFiltration& f) {
    std::ostringstream os;
    os << "Delta-semisimple filtration: module dim " << m.dim << ", length " << f.length << "\n";
    for (int k = 0; k < f.length; ++k) {
        os << "  delta_" << k + 1 << " dim " << f.chain[k].dim() << "  layer: ";
        bool first = true;
        for (const auto& [li, mult] : f.layers[k]) {
            if (!first) os << " + ";
            os << "Delta" << ctx.labels[li].str();
            if (mult > 1) os << "^" << mult;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

ojson approx_json(const ADRContext& ctx, const Rep& m, const ApproxResult& a) {
    ojson o;
    o["kind"] = "approximation";
    o["module_dim"] = m.total_dim();
    o["source_dim"] = a.source.total_dim();
    o["summands"] = summand_list_json(ctx, a.summands);
    o["is_approximation"] = a.is_approximation;
    o["is_right_minimal"] = a.is_right_minimal;
    return o;
}

std::string approx_text(const ADRContext& ctx, const Rep& m, const ApproxResult& a) {
    std::ostringstream os;
    os << "right minimal Add(G)-approximation of a module of dim " << m.total_dim() << ":\n";
    os << "  source: " << summand_list_text(ctx, a.summands) << " (dim "
       << a.source.total_dim() << ")\n";
    os << "  approximation verified: " << (a.is_approximation ? "yes" : "NO")
       << ", right minimal: " << (a.is_right_minimal ? "yes" : "NO") << "\n";
    return os.str();
}

ojson resolution_json(const ADRContext& ctx, const SCModule& m, const ResolutionReport& r) {
    ojson o;
    o["kind"] = "resolution";
    o["module_dim"] = m.dim;
    o["finished"] = r.finished;
    o["dll_ok"] = r.dll_ok;
    if (r.first_violation >= 0)
        o["first_violation"] = r.first_violation;
    else
        o["first_violation"] = nullptr;
    o["addg_ok"] = r.addg_ok;
    if (r.addg_first_violation >= 0)
        o["addg_first_violation"] = r.addg_first_violation;
    else
        o["addg_first_violation"] = nullptr;
    ojson steps = ojson::array();
    for (size_t k = 0; k < r.steps.size(); ++k) {
        ojson st;
        st["index"] = static_cast<int>(k);
        st["summands"] = summand_list_json(ctx, r.steps[k].summands);
        st["ll_R"] = r.steps[k].ll_R;
        st["addg_ll"] = r.steps[k].addg_ll;
        steps.push_back(st);
    }
    o["steps"] = steps;
    return o;
}

std::string resolution_text(const ADRContext& ctx, const SCModule& m, const ResolutionReport& r) {
    std::ostringstream os;
    os << "minimal projective resolution over R of a module of dim " << m.dim << ":\n";
    for (size_t k = 0; k < r.steps.size(); ++k)
        os << "  P_" << k << " = " << summand_list_text(ctx, r.steps[k].summands) << "  (LL "
           << r.steps[k].ll_R << ", Add(G)-LL " << r.steps[k].addg_ll << ")\n";
    os << "  finished: " << (r.finished ? "yes" : "no (step limit reached)") << "\n";
    os << "  descending Loewy length condition: " << (r.dll_ok ? "holds" : "FAILS");
    if (!r.dll_ok) os << " (first violation at step " << r.first_violation << ")";
    os << "\n  Add(G)-Loewy lengths strictly decreasing: " << (r.addg_ok ? "yes" : "NO");
    if (!r.addg_ok) os << " (first violation at step " << r.addg_first_violation << ")";
    os << "\n";
    return os.str();
}

ojson ext_json(const ADRContext& ctx, const ExtReport& r) {
    ojson o;
    o["kind"] = "ext_table";
    ojson rows = ojson::array();
    for (const auto& row : r.rows) {
        ojson e = label_json(ctx.labels[row.label]);
        e["rigid"] = row.rigid;
        e["targets"] = summand_list_json(ctx, row.targets);
        rows.push_back(e);
    }
    o["rows"] = rows;
    o["violations"] = r.violations;
    return o;
}

std::string ext_text(const ADRContext& ctx, const ExtReport& r) {
    std::ostringstream os;
    os << "Ext^1 support (top of rad P_{i,j} per label):\n";
    for (const auto& row : r.rows) {
        os << "  " << ctx.labels[row.label].str() << (row.rigid ? " [rigid]" : "        ")
           << " -> " << summand_list_text(ctx, row.targets) << "\n";
    }
    if (r.violations.empty())
        os << "  constraint satisfied for every label\n";
    else
        for (const auto& v : r.violations) os << "  VIOLATION: " << v << "\n";
    return os.str();
}

ojson counterexample_json(const CounterexampleReport& r) {
    ojson o;
    o["kind"] = "counterexample";
    o["n"] = r.n;
    o["dim_p33"] = r.dim_p33;
    o["ll_p33"] = r.ll_p33;
    o["ll_p22"] = r.ll_p22;
    o["ll_delta11"] = r.ll_delta11;
    o["ll_n1"] = r.ll_n1;
    o["n1_factors"] = r.n1_factors;
    o["top_n1"] = ojson{{"i", r.top_n1.first}, {"j", r.top_n1.second}};
    auto pairs = [](const std::vector<std::pair<int, int>>& v) {
        ojson out = ojson::array();
        for (const auto& [i, j] : v) out.push_back(ojson{{"i", i}, {"j", j}});
        return out;
    };
    o["n1_layers"] = ojson::array({pairs(r.n1_layer1), pairs(r.n1_layer2)});
    o["n2_chain"] = pairs(r.n2_chain);
    o["ll_p1m"] = r.ll_p1m;
    o["ll_p2m"] = r.ll_p2m;
    o["dll_ok"] = r.dll_ok;
    o["failures"] = r.failures;
    ojson steps = ojson::array();
    for (size_t k = 0; k < r.resolution.steps.size(); ++k)
        steps.push_back(ojson{{"index", static_cast<int>(k)},
                              {"ll_R", r.resolution.steps[k].ll_R},
                              {"addg_ll", r.resolution.steps[k].addg_ll}});
    o["resolution_steps"] = steps;
    o["resolution_finished"] = r.resolution.finished;
    return o;
}

std::string counterexample_text(const CounterexampleReport& r) {
    std::ostringstream os;
    os << "descending-Loewy-length audit for the family at n = " << r.n << ":\n";
    os << "  dim P_{3,3} = " << r.dim_p33 << ", LL P_{3,3} = " << r.ll_p33
       << ", LL P_{2,2} = " << r.ll_p22 << ", LL Delta(1,1) = " << r.ll_delta11 << "\n";
    os << "  N_1 = rad P_{3,3}: LL " << r.ll_n1 << ", " << r.n1_factors
       << " composition factors, top (" << r.top_n1.first << "," << r.top_n1.second << ")\n";
    os << "  resolution of M = P_{3,3}/soc: LL P_1(M) = " << r.ll_p1m
       << ", LL P_2(M) = " << r.ll_p2m << "\n";
    os << "  dll_ok = " << (r.dll_ok ? "true" : "false") << "\n";
    if (!r.failures.empty()) {
        os << "  ASSERTION FAILURES:\n";
        for (const auto& fmsg : r.failures) os << "    " << fmsg << "\n";
    }
    return os.str();
}

ojson corpus_json(const Corpus& c) {
    ojson o;
    o["kind"] = "corpus";
    o["seed"] = c.seed;
    ojson entries = ojson::array();
    for (const auto& e : c.entries) {
        ojson je;
        je["algebra"] = e.algebra;
        je["n"] = e.n;
        ojson mods = ojson::array();
        for (const auto& [expr, m] : e.modules)
            mods.push_back(ojson{{"expr", expr}, {"dims", m.dims}});
        je["modules"] = mods;
        entries.push_back(je);
    }
    o["entries"] = entries;
    return o;
}

std::string corpus_text(const Corpus& c) {
    std::ostringstream os;
    os << "corpus seed " << c.seed << "\n";
    for (const auto& e : c.entries) {
        os << "algebra " << e.algebra;
        if (e.algebra == "a_n") os << " n=" << e.n;
        os << "\n";
        for (const auto& [expr, m] : e.modules) {
            os << "  " << expr << "  # dims";
            for (int d : m.dims) os << " " << d;
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace adr
