#include "adr/expr.hpp"

#include "adr/corpus.hpp"

namespace adr {

bool ModuleExpr::operator==(const ModuleExpr& o) const {
    return kind == o.kind && a == o.a && b == o.b && args == o.args;
}

std::string ModuleExpr::str() const {
    auto arglist = [&](const std::string& head) {
        std::string s = head + "(";
        for (size_t i = 0; i < args.size(); ++i) {
            if (i) s += ", ";
            s += args[i].str();
        }
        return s + ")";
    };
    switch (kind) {
        case P: return "P(" + std::to_string(a) + ")";
        case S: return "S(" + std::to_string(a) + ")";
        case PR: return "PR(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Std: return "std(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Rad: return "rad^" + std::to_string(a) + "(" + args[0].str() + ")";
        case Soc: return "soc_" + std::to_string(a) + "(" + args[0].str() + ")";
        case Quot: return arglist("quot");
        case QuotSoc:
            return "quot_soc(" + args[0].str() + ", " + std::to_string(a) +
                   (b > 0 ? ", " + std::to_string(b) : "") + ")";
        case DSum: return arglist("dsum");
        case HomG: return arglist("homG");
        case RSub: return "rsub(" + args[0].str() + ", " + std::to_string(a) + ")";
        case RQuot: return "rquot(" + args[0].str() + ", " + std::to_string(a) + ")";
    }
    throw internal_error("unreachable");
}

namespace {

struct ExprParser {
    const std::string& s;
    size_t pos = 0;

    explicit ExprParser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw input_error("module expression, position " + std::to_string(pos + 1) + ": " + msg);
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    long integer() {
        skip();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }
    std::string ident() {
        skip();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected name");
        return s.substr(start, pos - start);
    }

    ModuleExpr expr() {
        std::string name = ident();
        ModuleExpr e;
        // identifiers absorb '_', so soc_k arrives as one token
        if (name.size() > 4 && name.rfind("soc_", 0) == 0 &&
            name.find_first_not_of("0123456789", 4) == std::string::npos) {
            e.kind = ModuleExpr::Soc;
            e.a = std::stol(name.substr(4));
            expect('(');
            e.args.push_back(expr());
            expect(')');
        } else if (name == "P" || name == "S") {
            e.kind = name == "P" ? ModuleExpr::P : ModuleExpr::S;
            expect('(');
            e.a = integer();
            expect(')');
        } else if (name == "PR" || name == "std") {
            e.kind = name == "PR" ? ModuleExpr::PR : ModuleExpr::Std;
            expect('(');
            e.a = integer();
            expect(',');
            e.b = integer();
            expect(')');
        } else if (name == "rad") {
            e.kind = ModuleExpr::Rad;
            expect('^');
            e.a = integer();
            expect('(');
            e.args.push_back(expr());
            expect(')');
        } else if (name == "quot") {
            e.kind = ModuleExpr::Quot;
            expect('(');
            e.args.push_back(expr());
            expect(',');
            e.args.push_back(expr());
            expect(')');
        } else if (name == "quot_soc") {
            e.kind = ModuleExpr::QuotSoc;
            expect('(');
            e.args.push_back(expr());
            expect(',');
            e.a = integer();
            if (eat(',')) e.b = integer();
            expect(')');
        } else if (name == "dsum") {
            e.kind = ModuleExpr::DSum;
            expect('(');
            e.args.push_back(expr());
            while (eat(',')) e.args.push_back(expr());
            expect(')');
        } else if (name == "homG") {
            e.kind = ModuleExpr::HomG;
            expect('(');
            e.args.push_back(expr());
            expect(')');
        } else if (name == "rsub" || name == "rquot") {
            e.kind = name == "rsub" ? ModuleExpr::RSub : ModuleExpr::RQuot;
            expect('(');
            e.args.push_back(expr());
            expect(',');
            e.a = integer();
            expect(')');
        } else {
            fail("unknown constructor '" + name + "'");
        }
        return e;
    }

    // soc is written soc_k; '_' may already be part of the scanned identifier
    ModuleExpr top() {
        ModuleExpr e = expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        return e;
    }
};

}  // namespace

ModuleExpr parse_module_expr(const std::string& text) {
    // normalize: the lexer reads "soc" then expects '_'; identifiers in this
    // grammar never contain '_' except soc_k, handled in expr()
    ExprParser p(text);
    return p.top();
}

bool expr_needs_context(const ModuleExpr& e) {
    if (e.kind == ModuleExpr::PR || e.kind == ModuleExpr::Std || e.kind == ModuleExpr::HomG ||
        (e.kind == ModuleExpr::QuotSoc && e.b > 0))
        return true;
    for (const auto& arg : e.args)
        if (expr_needs_context(arg)) return true;
    return false;
}

bool expr_needs_standards(const ModuleExpr& e) {
    if (e.kind == ModuleExpr::Std) return true;
    for (const auto& arg : e.args)
        if (expr_needs_standards(arg)) return true;
    return false;
}

const std::shared_ptr<const ADRContext>& ExprEnv::context() {
    if (!ctx) {
        if (!owned_) owned_ = build_context(alg);
        ctx = owned_;
    }
    return ctx;
}

ModuleValue eval_module_expr(const ModuleExpr& e, ExprEnv& env) {
    auto vertex_arg = [&](long i) {
        if (i < 1 || i > env.alg->quiver.nv)
            throw input_error("vertex index " + std::to_string(i) + " out of range");
        return static_cast<int>(i) - 1;
    };
    switch (e.kind) {
        case ModuleExpr::P: return projective(env.alg, vertex_arg(e.a));
        case ModuleExpr::S: return simple(env.alg, vertex_arg(e.a));
        case ModuleExpr::PR: {
            auto ctx = env.context();
            return ctx->projective_R(ctx->label_index(static_cast<int>(e.a),
                                                      static_cast<int>(e.b)))
                .mod;
        }
        case ModuleExpr::Std: {
            if (!env.fam) throw input_error("std(i,j) needs the standard family");
            auto ctx = env.context();
            return env.fam->delta(ctx->label_index(static_cast<int>(e.a), static_cast<int>(e.b)));
        }
        case ModuleExpr::Rad: {
            ModuleValue v = eval_module_expr(e.args[0], env);
            if (std::holds_alternative<Rep>(v)) {
                const Rep& m = std::get<Rep>(v);
                return submodule_rep(m, rad_power(m, static_cast<int>(e.a))).first;
            }
            const SCModule& m = std::get<SCModule>(v);
            auto series = sc_radical_series(m);
            int k = std::min<long>(e.a, static_cast<long>(series.size()) - 1);
            return sc_submodule(m, series[k]).first;
        }
        case ModuleExpr::Soc: {
            ModuleValue v = eval_module_expr(e.args[0], env);
            if (std::holds_alternative<Rep>(v)) {
                const Rep& m = std::get<Rep>(v);
                auto series = socle_series(m);
                int k = std::min<long>(e.a, static_cast<long>(series.size()) - 1);
                return submodule_rep(m, series[k]).first;
            }
            const SCModule& m = std::get<SCModule>(v);
            auto series = sc_socle_series(m);
            int k = std::min<long>(e.a, static_cast<long>(series.size()) - 1);
            return sc_submodule(m, series[k]).first;
        }
        case ModuleExpr::Quot: {
            const ModuleExpr& sub = e.args[1];
            if ((sub.kind != ModuleExpr::Rad && sub.kind != ModuleExpr::Soc) ||
                !(sub.args[0] == e.args[0]))
                throw input_error(
                    "quot expects rad^k or soc_k of the same first argument, e.g. "
                    "quot(P(1), rad^2(P(1)))");
            ModuleValue v = eval_module_expr(e.args[0], env);
            if (std::holds_alternative<Rep>(v)) {
                const Rep& m = std::get<Rep>(v);
                if (sub.kind == ModuleExpr::Rad)
                    return quotient(m, rad_power(m, static_cast<int>(sub.a))).first;
                auto series = socle_series(m);
                int k = std::min<long>(sub.a, static_cast<long>(series.size()) - 1);
                return quotient(m, series[k]).first;
            }
            const SCModule& m = std::get<SCModule>(v);
            auto series = sub.kind == ModuleExpr::Rad ? sc_radical_series(m) : sc_socle_series(m);
            int k = std::min<long>(sub.a, static_cast<long>(series.size()) - 1);
            return sc_quotient(m, series[k]).first;
        }
        case ModuleExpr::QuotSoc: {
            ModuleValue v = eval_module_expr(e.args[0], env);
            if (std::holds_alternative<Rep>(v)) {
                if (e.b != 0) throw input_error("quot_soc over the base algebra takes one index");
                return quotient_by_socle_component(std::get<Rep>(v), vertex_arg(e.a));
            }
            const SCModule& m = std::get<SCModule>(v);
            auto ctx = env.context();
            int label = ctx->label_index(static_cast<int>(e.a), static_cast<int>(e.b));
            Subspace soc = sc_socle(m);
            Subspace weight = sc_weight_space(m, label);
            Subspace comp = soc.intersect(weight);
            if (comp.dim() == 0)
                throw input_error("socle has no component at label " + ctx->labels[label].str());
            return sc_quotient(m, comp).first;
        }
        case ModuleExpr::DSum: {
            std::vector<ModuleValue> vals;
            for (const auto& arg : e.args) vals.push_back(eval_module_expr(arg, env));
            if (std::holds_alternative<Rep>(vals[0])) {
                std::vector<Rep> parts;
                for (auto& v : vals) {
                    if (!std::holds_alternative<Rep>(v))
                        throw input_error("dsum mixes base-algebra and R modules");
                    parts.push_back(std::get<Rep>(v));
                }
                return direct_sum(parts);
            }
            std::vector<SCModule> parts;
            for (auto& v : vals) {
                if (!std::holds_alternative<SCModule>(v))
                    throw input_error("dsum mixes base-algebra and R modules");
                parts.push_back(std::get<SCModule>(v));
            }
            return sc_direct_sum(parts);
        }
        case ModuleExpr::HomG: {
            ModuleValue v = eval_module_expr(e.args[0], env);
            if (!std::holds_alternative<Rep>(v))
                throw input_error("homG takes a module over the base algebra");
            return env.context()->hom_G(std::get<Rep>(v)).mod;
        }
        case ModuleExpr::RSub: {
            ModuleValue v = eval_module_expr(e.args[0], env);
            if (std::holds_alternative<Rep>(v)) {
                const Rep& m = std::get<Rep>(v);
                return submodule_rep(m, random_submodule(m, static_cast<uint64_t>(e.a))).first;
            }
            const SCModule& m = std::get<SCModule>(v);
            return sc_submodule(m, random_sc_submodule(m, static_cast<uint64_t>(e.a))).first;
        }
        case ModuleExpr::RQuot: {
            ModuleValue v = eval_module_expr(e.args[0], env);
            if (std::holds_alternative<Rep>(v)) {
                const Rep& m = std::get<Rep>(v);
                return quotient(m, random_submodule(m, static_cast<uint64_t>(e.a))).first;
            }
            const SCModule& m = std::get<SCModule>(v);
            return sc_quotient(m, random_sc_submodule(m, static_cast<uint64_t>(e.a))).first;
        }
    }
    throw internal_error("unreachable");
}

}  // namespace adr
