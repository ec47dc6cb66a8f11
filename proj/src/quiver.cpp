#include "adr/quiver.hpp"

#include <sstream>

namespace adr {

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

bool Quiver::operator==(const Quiver& o) const {
    if (nv != o.nv || arrows.size() != o.arrows.size()) return false;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name != o.arrows[i].name || arrows[i].src != o.arrows[i].src ||
            arrows[i].tgt != o.arrows[i].tgt)
            return false;
    return true;
}

namespace {

struct Tok {
    enum Kind { Ident, Int, Star, Caret, Plus, Minus, Colon, ArrowTo, Eq, End } kind;
    std::string text;
    long value = 0;
    int col = 0;
};

class LineLexer {
public:
    LineLexer(const std::string& line, int lineno) : s_(line), lineno_(lineno) { advance(); }

    const Tok& peek() const { return cur_; }
    Tok next() {
        Tok t = cur_;
        advance();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg, int col) const {
        throw input_error("line " + std::to_string(lineno_) + ", column " + std::to_string(col + 1) +
                          ": " + msg);
    }
    [[noreturn]] void fail_here(const std::string& msg) const { fail(msg, cur_.col); }
    int lineno() const { return lineno_; }

private:
    void advance() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
        cur_.col = static_cast<int>(pos_);
        if (pos_ >= s_.size()) {
            cur_.kind = Tok::End;
            cur_.text.clear();
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            cur_.kind = Tok::Ident;
            cur_.text = s_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            cur_.kind = Tok::Int;
            cur_.text = s_.substr(start, pos_ - start);
            cur_.value = std::stol(cur_.text);
            return;
        }
        if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            pos_ += 2;
            cur_.kind = Tok::ArrowTo;
            return;
        }
        switch (c) {
            case '*': cur_.kind = Tok::Star; break;
            case '^': cur_.kind = Tok::Caret; break;
            case '+': cur_.kind = Tok::Plus; break;
            case '-': cur_.kind = Tok::Minus; break;
            case ':': cur_.kind = Tok::Colon; break;
            case '=': cur_.kind = Tok::Eq; break;
            default: fail(std::string("unexpected character '") + c + "'", static_cast<int>(pos_));
        }
        ++pos_;
    }

    std::string s_;
    int lineno_;
    size_t pos_ = 0;
    Tok cur_;
};

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

long lookup_param(const AlgebraSpec& spec, const std::string& name, LineLexer& lx, int col) {
    for (const auto& [k, v] : spec.params)
        if (k == name) return v;
    lx.fail("unknown parameter '" + name + "'", col);
}

// relation := term (('+'|'-') term)* ; term := [int ['*']] factor ('*' factor)*
// factor := arrow ['^' (int|param)] ; text order is composition order (rightmost acts first)
Relation parse_relation(const AlgebraSpec& spec, LineLexer& lx) {
    std::vector<PathTerm> terms;
    bool first = true;
    while (lx.peek().kind != Tok::End) {
        mpq_class sign(1);
        if (lx.peek().kind == Tok::Plus || lx.peek().kind == Tok::Minus) {
            if (lx.next().kind == Tok::Minus) sign = -1;
        } else if (!first) {
            lx.fail_here("expected '+' or '-' between terms");
        }
        mpq_class coeff = sign;
        if (lx.peek().kind == Tok::Int) {
            coeff = sign * mpq_class(lx.next().value);
            if (lx.peek().kind == Tok::Star) lx.next();
        }
        // factors in text order; application order is the reverse
        std::vector<int> text_arrows;
        while (true) {
            if (lx.peek().kind != Tok::Ident) lx.fail_here("expected arrow name");
            Tok id = lx.next();
            int ai = spec.quiver.arrow_index(id.text);
            if (ai < 0) lx.fail("unknown arrow '" + id.text + "'", id.col);
            long power = 1;
            if (lx.peek().kind == Tok::Caret) {
                lx.next();
                Tok e = lx.next();
                if (e.kind == Tok::Int)
                    power = e.value;
                else if (e.kind == Tok::Ident)
                    power = lookup_param(spec, e.text, lx, e.col);
                else
                    lx.fail("expected exponent", e.col);
                if (power < 1) lx.fail("exponent must be >= 1", e.col);
                if (power > 1 && spec.quiver.arrows[ai].src != spec.quiver.arrows[ai].tgt)
                    lx.fail("'^' requires a loop arrow", id.col);
            }
            for (long k = 0; k < power; ++k) text_arrows.push_back(ai);
            if (lx.peek().kind == Tok::Star) {
                lx.next();
                continue;
            }
            break;
        }
        PathTerm t;
        t.coeff = coeff;
        t.arrows.assign(text_arrows.rbegin(), text_arrows.rend());
        // composability: consecutive arrows chain src->tgt in application order
        for (size_t k = 0; k + 1 < t.arrows.size(); ++k) {
            const Arrow& a = spec.quiver.arrows[t.arrows[k]];
            const Arrow& b = spec.quiver.arrows[t.arrows[k + 1]];
            if (a.tgt != b.src)
                lx.fail("non-composable path: '" + b.name + "' cannot follow '" + a.name + "'", 0);
        }
        if (t.arrows.size() < 2)
            lx.fail("relation paths must have length >= 2", 0);
        terms.push_back(std::move(t));
        first = false;
    }
    if (terms.empty()) throw input_error("line " + std::to_string(lx.lineno()) + ": empty relation");
    Relation r;
    const Arrow& a0 = spec.quiver.arrows[terms[0].arrows.front()];
    const Arrow& a1 = spec.quiver.arrows[terms[0].arrows.back()];
    r.src = a0.src;
    r.tgt = a1.tgt;
    for (const auto& t : terms) {
        int s = spec.quiver.arrows[t.arrows.front()].src;
        int g = spec.quiver.arrows[t.arrows.back()].tgt;
        if (s != r.src || g != r.tgt)
            throw input_error("line " + std::to_string(lx.lineno()) +
                              ": relation mixes endpoints; split it into separate relations");
    }
    r.terms = std::move(terms);
    return r;
}

}  // namespace

AlgebraSpec parse_algebra(const std::string& text, const std::map<std::string, long>& overrides) {
    AlgebraSpec spec;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    enum { Header, Vertices, Arrows, Relations } state = Header;
    bool saw_header = false, saw_vertices = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line)) continue;
        LineLexer lx(line, lineno);
        if (state == Header) {
            Tok kw = lx.next();
            if (kw.kind != Tok::Ident || kw.text != "algebra") lx.fail("expected 'algebra'", kw.col);
            Tok name = lx.next();
            if (name.kind != Tok::Ident) lx.fail("expected algebra name", name.col);
            spec.name = name.text;
            Tok fkw = lx.next();
            if (fkw.kind != Tok::Ident || fkw.text != "field") lx.fail("expected 'field'", fkw.col);
            Tok fv = lx.next();
            if (fv.kind != Tok::Ident) lx.fail("expected field tag", fv.col);
            if (fv.text == "Q") {
                spec.field = Field::rationals();
            } else if (fv.text == "Fp") {
                Tok colon = lx.next();
                if (colon.kind != Tok::Colon) lx.fail("expected ':' after Fp", colon.col);
                Tok p = lx.next();
                if (p.kind != Tok::Int) lx.fail("expected prime after Fp:", p.col);
                spec.field = Field::prime(static_cast<unsigned long>(p.value));
            } else {
                lx.fail("field must be Q or Fp:<prime>", fv.col);
            }
            while (lx.peek().kind != Tok::End) {
                Tok pkw = lx.next();
                if (pkw.kind != Tok::Ident || pkw.text != "param") lx.fail("expected 'param'", pkw.col);
                Tok pname = lx.next();
                if (pname.kind != Tok::Ident) lx.fail("expected parameter name", pname.col);
                Tok eq = lx.next();
                if (eq.kind != Tok::Eq) lx.fail("expected '='", eq.col);
                Tok pval = lx.next();
                long v;
                if (pval.kind == Tok::Int)
                    v = pval.value;
                else if (pval.kind == Tok::Minus && lx.peek().kind == Tok::Int)
                    v = -lx.next().value;
                else
                    lx.fail("expected integer parameter value", pval.col);
                auto ov = overrides.find(pname.text);
                if (ov != overrides.end()) v = ov->second;
                spec.params.emplace_back(pname.text, v);
            }
            saw_header = true;
            state = Vertices;
        } else if (state == Vertices) {
            Tok kw = lx.next();
            if (kw.kind != Tok::Ident || kw.text != "vertices") lx.fail("expected 'vertices'", kw.col);
            Tok n = lx.next();
            if (n.kind != Tok::Int || n.value < 1) lx.fail("expected positive vertex count", n.col);
            spec.quiver.nv = static_cast<int>(n.value);
            saw_vertices = true;
            state = Arrows;
        } else if (state == Arrows) {
            Tok kw = lx.next();
            if (kw.kind == Tok::Ident && kw.text == "relations") {
                Tok colon = lx.next();
                if (colon.kind != Tok::Colon) lx.fail("expected ':' after relations", colon.col);
                state = Relations;
                continue;
            }
            if (kw.kind != Tok::Ident || kw.text != "arrow") lx.fail("expected 'arrow' or 'relations:'", kw.col);
            Tok name = lx.next();
            if (name.kind != Tok::Ident) lx.fail("expected arrow name", name.col);
            if (spec.quiver.arrow_index(name.text) >= 0)
                lx.fail("duplicate arrow name '" + name.text + "'", name.col);
            Tok colon = lx.next();
            if (colon.kind != Tok::Colon) lx.fail("expected ':'", colon.col);
            Tok s = lx.next();
            if (s.kind != Tok::Int) lx.fail("expected source vertex", s.col);
            Tok ar = lx.next();
            if (ar.kind != Tok::ArrowTo) lx.fail("expected '->'", ar.col);
            Tok t = lx.next();
            if (t.kind != Tok::Int) lx.fail("expected target vertex", t.col);
            if (s.value < 1 || s.value > spec.quiver.nv || t.value < 1 || t.value > spec.quiver.nv)
                lx.fail("vertex index out of range 1.." + std::to_string(spec.quiver.nv), s.col);
            spec.quiver.arrows.push_back(
                {name.text, static_cast<int>(s.value) - 1, static_cast<int>(t.value) - 1});
        } else {
            spec.relations.push_back(parse_relation(spec, lx));
        }
    }
    if (!saw_header) throw input_error("empty algebra specification");
    if (!saw_vertices) throw input_error("missing 'vertices' line");
    return spec;
}

std::string print_algebra(const AlgebraSpec& spec) {
    std::ostringstream out;
    out << "algebra " << spec.name << " field " << spec.field.str();
    for (const auto& [k, v] : spec.params) out << " param " << k << "=" << v;
    out << "\n";
    out << "vertices " << spec.quiver.nv << "\n";
    for (const auto& a : spec.quiver.arrows)
        out << "arrow " << a.name << ": " << a.src + 1 << " -> " << a.tgt + 1 << "\n";
    if (!spec.relations.empty()) {
        out << "relations:\n";
        for (const auto& r : spec.relations) {
            bool first = true;
            for (const auto& t : r.terms) {
                mpq_class c = t.coeff;
                bool negative = sgn(c) < 0;
                if (negative) c = -c;
                if (first) {
                    if (negative) out << "-";
                } else {
                    out << (negative ? " - " : " + ");
                }
                if (c != 1) out << c.get_str() << "*";
                for (size_t k = t.arrows.size(); k-- > 0;) {
                    out << spec.quiver.arrows[t.arrows[k]].name;
                    if (k > 0) out << "*";
                }
                first = false;
            }
            out << "\n";
        }
    }
    return out.str();
}

bool spec_equal(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.name == b.name && a.field == b.field && a.params == b.params && a.quiver == b.quiver &&
           a.relations == b.relations;
}

}  // namespace adr
