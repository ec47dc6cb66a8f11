#pragma once

#include <variant>

#include "adr/strat.hpp"

namespace adr {

/// Module expression language shared by the CLI and the corpus:
///   P(i)  S(i)  PR(i,j)  std(i,j)  rad^k(E)  soc_k(E)
///   quot(E, rad^k(E))  quot_soc(E, i)  quot_soc(E, i, j)
///   dsum(E1, E2, ...)  homG(E)  rsub(E, seed)  rquot(E, seed)
struct ModuleExpr {
    enum Kind { P, S, PR, Std, Rad, Soc, Quot, QuotSoc, DSum, HomG, RSub, RQuot } kind = P;
    long a = 0, b = 0;  // indices, powers or seeds, depending on kind
    std::vector<ModuleExpr> args;

    bool operator==(const ModuleExpr& o) const;
    std::string str() const;
};

ModuleExpr parse_module_expr(const std::string& text);

/// True when evaluating e requires the ADR context (R-side constructors).
bool expr_needs_context(const ModuleExpr& e);
/// True when evaluating e requires the standard family (std(i,j)).
bool expr_needs_standards(const ModuleExpr& e);

using ModuleValue = std::variant<Rep, SCModule>;

/// Lazily built R-side data for expression evaluation.
struct ExprEnv {
    std::shared_ptr<const BoundAlgebra> alg;
    std::shared_ptr<const ADRContext> ctx;   // may be null; built on demand
    const StandardFamily* fam = nullptr;     // needed only for std(i,j)

    const std::shared_ptr<const ADRContext>& context();

private:
    std::shared_ptr<const ADRContext> owned_;
};

ModuleValue eval_module_expr(const ModuleExpr& e, ExprEnv& env);

}  // namespace adr
