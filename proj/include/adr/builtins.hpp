#pragma once

#include <string>
#include <vector>

namespace adr {

/// Text of a built-in algebra presentation. Available names:
///   kx2   K[x]/(x^2)
///   ex36  the quasihereditary 4-vertex algebra with two maximal
///         direct-sum-of-standards submodules of P_3
///   ex54  the hereditary 6-vertex one-source algebra of the
///         approximation example
///   a_n   the 3-vertex family with a loop of nilpotency degree n
///         (parameter n, default 5)
const std::string& builtin_algebra_text(const std::string& name);

std::vector<std::string> builtin_algebra_names();

}  // namespace adr
