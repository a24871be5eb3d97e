#include <cctype>
#include <charconv>

#include "thetalab/relations.hpp"

namespace thetalab {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RelationSpec relation(std::string id) {
        RelationSpec spec;
        spec.id = std::move(id);
        spec.lhs = expr();
        expect("==");
        spec.rhs = expr();
        skip_ws();
        if (keyword("for")) spec.predicate = predicate();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        spec.citation = std::string(text_);
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    // A word that is not a prefix of a longer identifier.
    bool keyword(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) return false;
        const auto end = pos_ + word.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        return true;
    }

    std::int64_t integer() {
        skip_ws();
        const auto start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc() || ptr != text_.data() + pos_ || pos_ == start) {
            pos_ = start;
            fail("expected integer");
        }
        return v;
    }

    Rational rational() {
        const auto num = integer();
        if (accept("/")) {
            const auto at = pos_;
            const auto den = integer();
            if (den <= 0) {
                pos_ = at;
                fail("denominator must be positive");
            }
            return Rational(num, den);
        }
        return Rational(num);
    }

    CountExpr expr() {
        CountExpr e;
        bool negate = accept("-");
        for (;;) {
            auto t = term();
            if (negate) t.coeff = -t.coeff;
            e.terms.push_back(std::move(t));
            if (accept("+")) {
                negate = false;
            } else if (peek() == '-') {
                ++pos_;
                negate = true;
            } else {
                return e;
            }
        }
    }

    bool at_count_kind() {
        const char c = peek();
        return c == 'N' || c == 't' || std::isalpha(static_cast<unsigned char>(c));
    }

    Term term() {
        if (at_count_kind()) return Term{Rational(1), atom()};
        const auto c = rational();
        if (accept("*")) return Term{c, atom()};
        return Term{c, std::nullopt};
    }

    Atom atom() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '\'')) {
            ++pos_;
        }
        const auto name = text_.substr(start, pos_ - start);
        CountKind kind;
        if (name == "N") {
            kind = CountKind::N;
        } else if (name == "t") {
            kind = CountKind::t;
        } else if (name == "t'") {
            kind = CountKind::tprime;
        } else {
            pos_ = start;
            fail("unknown count kind '" + std::string(name) + "'");
        }
        expect("(");
        std::int64_t entries[4];
        for (int i = 0; i < 4; ++i) {
            const auto at = pos_;
            entries[i] = integer();
            if (entries[i] < 1) {
                pos_ = at;
                fail("form entries must be positive");
            }
            if (i < 3 && !accept(",")) fail("form needs exactly four entries");
        }
        if (!accept(";")) fail("expected ';' after four form entries");
        const auto arg = affine();
        expect(")");
        return Atom(kind, FormTuple(entries[0], entries[1], entries[2], entries[3]), arg);
    }

    Affine affine() {
        Affine a{0, 0};
        if (peek() == 'n') {
            ++pos_;
            a.mul = 1;
        } else {
            const auto v = integer();
            accept("*");
            if (peek() == 'n') {
                ++pos_;
                if (v < 0) fail("index multiplier must be nonnegative");
                a.mul = v;
            } else {
                a.add = v;
                return a;
            }
        }
        if (accept("+")) {
            a.add = integer();
        } else if (peek() == '-') {
            ++pos_;
            a.add = -integer();
        }
        return a;
    }

    Predicate predicate() {
        if (!keyword("n")) fail("predicate must start with 'n'");
        if (!accept("%")) fail("expected '%' in predicate");
        const auto at = pos_;
        const auto m = integer();
        if (m < 1) {
            pos_ = at;
            fail("predicate modulus must be positive");
        }
        if (!keyword("in")) fail("expected 'in' in predicate");
        if (!accept("{")) fail("expected '{' in predicate");
        std::vector<std::int64_t> rs;
        do {
            const auto r_at = pos_;
            const auto r = integer();
            if (r < 0 || r >= m) {
                pos_ = r_at;
                fail("residue " + std::to_string(r) + " outside [0, " + std::to_string(m) + ")");
            }
            rs.push_back(r);
        } while (accept(","));
        if (!accept("}")) fail("expected '}' closing the residue set");
        return Predicate::residue_classes(m, std::move(rs));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RelationSpec parse_relation(std::string_view text, std::string id) {
    return Parser(text).relation(std::move(id));
}

std::string print(const Affine& a) {
    if (a.mul == 0) return std::to_string(a.add);
    std::string s = a.mul == 1 ? "n" : std::to_string(a.mul) + "n";
    if (a.add > 0) s += "+" + std::to_string(a.add);
    if (a.add < 0) s += "-" + std::to_string(-a.add);
    return s;
}

std::string print(const CountExpr& expr) {
    if (expr.terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < expr.terms.size(); ++i) {
        const auto& term = expr.terms[i];
        // Compare against Rational values: boost's mixed rational/int == recurses under C++20 rewriting.
        auto c = term.coeff;
        if (c < Rational(0)) {
            out += i == 0 ? "-" : " - ";
            c = -c;
        } else if (i > 0) {
            out += " + ";
        }
        if (!term.atom) {
            out += to_string(c);
            continue;
        }
        if (c != Rational(1)) out += to_string(c) + "*";
        const auto& atom = *term.atom;
        out += to_string(atom.kind) + "(" + atom.form.to_string() + ";" + print(atom.arg) + ")";
    }
    return out;
}

std::string print(const Predicate& p) {
    if (p.is_all()) return "";
    std::string s = "n % " + std::to_string(p.modulus) + " in {";
    for (std::size_t i = 0; i < p.residues.size(); ++i) {
        s += (i ? "," : "") + std::to_string(p.residues[i]);
    }
    return s + "}";
}

std::string print(const RelationSpec& spec) {
    auto s = print(spec.lhs) + " == " + print(spec.rhs);
    if (!spec.predicate.is_all()) s += " for " + print(spec.predicate);
    return s;
}

}  // namespace thetalab
