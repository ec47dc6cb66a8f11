#include "adr/builtins.hpp"

#include <map>

#include "adr/field.hpp"

namespace adr {

namespace {

const std::map<std::string, std::string> kBuiltins = {
    {"kx2",
     "algebra kx2 field Q\n"
     "vertices 1\n"
     "arrow x: 1 -> 1\n"
     "relations:\n"
     "x^2\n"},

    // Vertices 1..4 stand for the labels 0..3; quasihereditary for 1 < 2 < 3 < 4.
    {"ex36",
     "algebra ex36 field Q\n"
     "vertices 4\n"
     "arrow al: 2 -> 1\n"
     "arrow ep: 2 -> 1\n"
     "arrow be: 3 -> 2\n"
     "arrow g0: 3 -> 4\n"
     "arrow de: 4 -> 1\n"
     "arrow g1: 4 -> 3\n"
     "relations:\n"
     "ep*be - de*g0\n"
     "g0*g1\n"},

    {"ex54",
     "algebra ex54 field Q\n"
     "vertices 6\n"
     "arrow al: 1 -> 2\n"
     "arrow be: 1 -> 3\n"
     "arrow ga: 1 -> 4\n"
     "arrow ep: 3 -> 5\n"
     "arrow et: 4 -> 6\n"},

    {"a_n",
     "algebra a_n field Q param n=5\n"
     "vertices 3\n"
     "arrow eps: 1 -> 1\n"
     "arrow a1: 1 -> 2\n"
     "arrow b1: 2 -> 1\n"
     "arrow a2: 2 -> 3\n"
     "arrow b2: 3 -> 2\n"
     "relations:\n"
     "a2*a1\n"
     "b1*b2\n"
     "b2*a2 - a1*b1\n"
     "eps*b1\n"
     "a1*eps\n"
     "eps^n\n"},
};

}  // namespace

const std::string& builtin_algebra_text(const std::string& name) {
    auto it = kBuiltins.find(name);
    if (it == kBuiltins.end()) throw input_error("unknown built-in algebra '" + name + "'");
    return it->second;
}

std::vector<std::string> builtin_algebra_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : kBuiltins) names.push_back(k);
    return names;
}

}  // namespace adr
