#pragma once

#include <map>
#include <string>
#include <vector>

#include "adr/field.hpp"

namespace adr {

struct Arrow {
    std::string name;
    int src = 0;  // 0-based vertex indices
    int tgt = 0;
};

struct Quiver {
    int nv = 0;
    std::vector<Arrow> arrows;

    int arrow_index(const std::string& name) const;
    bool operator==(const Quiver& o) const;
};

/// One summand of a relation: coeff * (arrows applied left to right, i.e.
/// arrows[0] acts first). In the text format "a*b" means "apply b first".
struct PathTerm {
    mpq_class coeff;
    std::vector<int> arrows;
    bool operator==(const PathTerm& o) const { return coeff == o.coeff && arrows == o.arrows; }
};

struct Relation {
    int src = 0;
    int tgt = 0;
    std::vector<PathTerm> terms;
    bool operator==(const Relation& o) const { return src == o.src && tgt == o.tgt && terms == o.terms; }
};

struct AlgebraSpec {
    std::string name;
    Field field = Field::rationals();
    std::vector<std::pair<std::string, long>> params;  // declaration order
    Quiver quiver;
    std::vector<Relation> relations;
};

/// Parse the line-oriented algebra format (see README). Named integer
/// parameters are substituted; `overrides` replaces declared defaults.
AlgebraSpec parse_algebra(const std::string& text,
                          const std::map<std::string, long>& overrides = {});

/// Canonical printer; parse(print(spec)) reproduces the structure bit-exactly.
std::string print_algebra(const AlgebraSpec& spec);

bool spec_equal(const AlgebraSpec& a, const AlgebraSpec& b);

}  // namespace adr
