#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "adr/builtins.hpp"
#include "adr/expr.hpp"
#include "adr/report.hpp"

using namespace adr;

namespace {

struct Options {
    std::string algebra_path;
    std::string module_expr;
    std::string field_override;
    bool json = false;
    uint64_t seed = 1;
    long n = 5;
    bool n_given = false;
    int max_steps = 32;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open algebra file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::shared_ptr<const BoundAlgebra> load_algebra(const Options& opt) {
    if (opt.algebra_path.empty()) throw input_error("--algebra <file> is required");
    std::map<std::string, long> overrides;
    if (opt.n_given) overrides["n"] = opt.n;
    AlgebraSpec spec = parse_algebra(slurp(opt.algebra_path), overrides);
    if (!opt.field_override.empty()) {
        if (opt.field_override == "Q") {
            spec.field = Field::rationals();
        } else if (opt.field_override.rfind("Fp:", 0) == 0) {
            spec.field = Field::prime(std::stoul(opt.field_override.substr(3)));
        } else {
            throw input_error("--field must be Q or Fp:<prime>");
        }
    }
    return build_bound_algebra(spec);
}

ModuleValue eval_expr(const Options& opt, ExprEnv& env, std::optional<StandardFamily>& fam) {
    if (opt.module_expr.empty()) throw input_error("--module <expr> is required");
    ModuleExpr e = parse_module_expr(opt.module_expr);
    if (!env.fam && expr_needs_standards(e)) {
        fam = standard_family(env.context());
        env.fam = &*fam;
    }
    return eval_module_expr(e, env);
}

SCModule require_sc(ModuleValue v) {
    if (std::holds_alternative<SCModule>(v)) return std::get<SCModule>(v);
    throw input_error("this command needs a module over R; wrap the expression in homG(...)");
}

Rep require_rep(ModuleValue v) {
    if (std::holds_alternative<Rep>(v)) return std::get<Rep>(v);
    throw input_error("this command needs a module over the base algebra");
}

void emit(const Options& opt, const ojson& j, const std::string& text) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run(const std::string& verb, const Options& opt) {
    if (verb == "counterexample") {
        auto rep = counterexample_driver(opt.n, opt.max_steps);
        emit(opt, counterexample_json(rep), counterexample_text(rep));
        return rep.failures.empty() ? 0 : 2;
    }
    if (verb == "corpus-dump") {
        Corpus c = make_corpus(opt.seed);
        emit(opt, corpus_json(c), corpus_text(c));
        return 0;
    }

    auto alg = load_algebra(opt);
    if (verb == "build") {
        emit(opt, algebra_json(*alg), algebra_text(*alg));
        return 0;
    }

    ExprEnv env;
    env.alg = alg;
    std::optional<StandardFamily> fam_store;
    if (verb == "module") {
        ModuleValue v = eval_expr(opt, env, fam_store);
        if (std::holds_alternative<Rep>(v)) {
            emit(opt, rep_json(std::get<Rep>(v)), rep_text(std::get<Rep>(v)));
        } else {
            const SCModule& m = std::get<SCModule>(v);
            emit(opt, sc_json(*env.context(), m), sc_text(*env.context(), m));
        }
        return 0;
    }

    auto ctx = env.context();
    if (verb == "adr") {
        emit(opt, adr_json(*ctx), adr_text(*ctx));
        return 0;
    }
    if (verb == "standard") {
        StandardFamily fam = standard_family(ctx);
        emit(opt, standards_json(*ctx, fam), standards_text(*ctx, fam));
        return 0;
    }
    if (verb == "filtration") {
        StandardFamily fam = standard_family(ctx);
        env.fam = &fam;
        SCModule m = require_sc(eval_expr(opt, env, fam_store));
        auto filt = delta_ss_filtration(fam, m);
        emit(opt, filtration_json(*ctx, m, filt), filtration_text(*ctx, m, filt));
        return 0;
    }
    if (verb == "approx") {
        Rep m = require_rep(eval_expr(opt, env, fam_store));
        auto res = approx_general(*ctx, m);
        emit(opt, approx_json(*ctx, m, res), approx_text(*ctx, m, res));
        return 0;
    }
    if (verb == "resolve" || verb == "dll-check") {
        StandardFamily fam = standard_family(ctx);
        env.fam = &fam;
        SCModule m = require_sc(eval_expr(opt, env, fam_store));
        auto rep = minimal_resolution_R(*ctx, m, opt.max_steps);
        emit(opt, resolution_json(*ctx, m, rep), resolution_text(*ctx, m, rep));
        return 0;
    }
    if (verb == "ext-table") {
        auto rep = ext1_support(*ctx);
        emit(opt, ext_json(*ctx, rep), ext_text(*ctx, rep));
        return 0;
    }
    throw input_error("unknown command '" + verb + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with endomorphism algebras of radical-truncated "
                 "projectives: stratifications, approximations, resolutions"};
    app.require_subcommand(1);
    Options opt;

    std::vector<std::string> verbs{"build",      "module", "adr",       "standard",
                                   "filtration", "approx", "resolve",   "ext-table",
                                   "dll-check",  "counterexample", "corpus-dump"};
    std::map<std::string, CLI::App*> subs;
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v);
        sub->add_option("--algebra", opt.algebra_path, "algebra presentation file");
        sub->add_option("--module", opt.module_expr,
                        "module expression, e.g. homG(rad^1(P(3)))");
        sub->add_flag("--json", opt.json, "emit the documented JSON schema");
        sub->add_option("--seed", opt.seed, "seed for the corpus and rsub/rquot");
        sub->add_option("--n", opt.n, "substitute the parameter n")
            ->check(CLI::Range(2L, 64L))
            ->each([&](const std::string&) { opt.n_given = true; });
        sub->add_option("--max-steps", opt.max_steps, "resolution step bound");
        sub->add_option("--field", opt.field_override, "override the coefficient field (Q, Fp:p)");
        subs[v] = sub;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        for (const auto& [name, sub] : subs)
            if (sub->parsed()) return run(name, opt);
        throw input_error("no command given");
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 2;
    }
}
