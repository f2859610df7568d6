#include "wb/syntax.hpp"

#include <cctype>

namespace wb {

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

class Parser {
public:
    Parser(const std::string& text, Lang lang) : text_(text), lang_(lang) {}

    Formula run() {
        try {
            Formula f = implication();
            skip_ws();
            if (pos_ != text_.size()) fail("unexpected trailing input");
            return f;
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), pos_);
        }
    }

private:
    const std::string& text_;
    Lang lang_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(const char* tok) {
        skip_ws();
        std::size_t n = std::string(tok).size();
        if (text_.compare(pos_, n, tok) == 0) {
            pos_ += n;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::string ident() {
        skip_ws();
        if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected identifier");
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    // Peeks a full identifier without consuming it.
    std::string peek_word() {
        skip_ws();
        std::size_t p = pos_;
        if (p >= text_.size() || !ident_start(text_[p])) return {};
        std::size_t start = p;
        while (p < text_.size() && ident_char(text_[p])) ++p;
        return text_.substr(start, p - start);
    }

    Formula implication() {
        Formula lhs = disjunct();
        if (eat("->")) return Formula::implies(std::move(lhs), implication());
        return lhs;
    }

    Formula disjunct() {
        Formula f = conjunct();
        while (true) {
            skip_ws();
            // do not consume the '|' of an identifier-free context wrongly; '|' is unambiguous
            if (pos_ < text_.size() && text_[pos_] == '|') {
                ++pos_;
                f = Formula::disj(std::move(f), conjunct());
            } else {
                break;
            }
        }
        return f;
    }

    Formula conjunct() {
        Formula f = unary();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '&') {
                ++pos_;
                f = Formula::conj(std::move(f), unary());
            } else {
                break;
            }
        }
        return f;
    }

    Formula unary() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '~') {
            ++pos_;
            return Formula::negate(unary());
        }
        std::string w = peek_word();
        if (w == "forall" || w == "exists") return quantifier();
        return primary();
    }

    Formula quantifier() {
        std::size_t at = pos_;
        std::string kw = ident();
        if (lang_ == Lang::Prop) {
            pos_ = at;
            fail("quantifier in propositional formula");
        }
        std::string var = ident();
        if (var == "in" || var == "true" || var == "false" || var == "forall" || var == "exists")
            fail("reserved word used as variable");
        skip_ws();
        if (!eat(".")) fail("expected '.' after quantified variable");
        Formula body = implication();
        return kw == "forall" ? Formula::forall(std::move(var), std::move(body))
                              : Formula::exists(std::move(var), std::move(body));
    }

    Formula primary() {
        skip_ws();
        std::size_t at = pos_;
        if (eat("(")) {
            Formula f = implication();
            if (!eat(")")) fail("expected ')'");
            return f;
        }
        std::string name = peek_word();
        if (name.empty()) fail("expected formula");
        pos_ += name.size();
        if (name == "true") return Formula::top();
        if (name == "false") return Formula::bot();
        if (name == "forall" || name == "exists" || name == "in")
            fail("reserved word in formula position");

        skip_ws();
        // set-theoretic infix atoms: `s in t`, `s = t`
        std::string next = peek_word();
        if (next == "in" || (peek() == '=' && !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '='))) {
            if (lang_ != Lang::SetTheory) {
                pos_ = at;
                fail("set-theoretic atom outside set-theoretic formula");
            }
            bool membership = next == "in";
            if (membership)
                pos_ += 2;
            else
                eat("=");
            std::string rhs = ident();
            return membership ? Formula::in(name, rhs) : Formula::eq(name, rhs);
        }

        if (peek() == '(') {
            if (lang_ == Lang::Prop) {
                pos_ = at;
                fail("non-nullary atom in propositional formula");
            }
            if (lang_ == Lang::SetTheory) {
                pos_ = at;
                fail("only `in` and `=` atoms are allowed in set-theoretic formulas");
            }
            eat("(");
            std::vector<std::string> args;
            args.push_back(ident());
            while (eat(",")) args.push_back(ident());
            if (!eat(")")) fail("expected ')' after atom arguments");
            try {
                return Formula::atom(name, std::move(args));
            } catch (const Error& e) {
                pos_ = at;
                fail(e.what());
            }
        }

        if (lang_ == Lang::SetTheory) {
            pos_ = at;
            fail("bare atom '" + name + "' is not a set-theoretic formula");
        }
        return Formula::atom(name);
    }
};

int level(const Formula& f) {
    switch (f.kind()) {
        case Kind::Implies:
            return 1;
        case Kind::Forall:
        case Kind::Exists:
            return 2;
        case Kind::Or:
            return 3;
        case Kind::And:
            return 4;
        case Kind::Atom:
            return f.lang() == Lang::SetTheory ? 5 : 7;  // infix atoms vs names
        case Kind::Not:
            return 6;
        default:
            return 7;
    }
}

void render(const Formula& f, int ctx, std::string& out) {
    bool parens = level(f) < ctx;
    if (parens) out += '(';
    switch (f.kind()) {
        case Kind::Top:
            out += "true";
            break;
        case Kind::Bot:
            out += "false";
            break;
        case Kind::Atom:
            if (f.lang() == Lang::SetTheory) {
                out += f.args()[0];
                out += f.pred() == "in" ? " in " : " = ";
                out += f.args()[1];
            } else {
                out += f.pred();
                if (!f.args().empty()) {
                    out += '(';
                    for (std::size_t i = 0; i < f.args().size(); ++i) {
                        if (i) out += ',';
                        out += f.args()[i];
                    }
                    out += ')';
                }
            }
            break;
        case Kind::Not:
            out += '~';
            render(f.body(), 6, out);
            break;
        case Kind::And:
            render(f.lhs(), 4, out);
            out += " & ";
            render(f.rhs(), 5, out);
            break;
        case Kind::Or:
            render(f.lhs(), 3, out);
            out += " | ";
            render(f.rhs(), 4, out);
            break;
        case Kind::Implies:
            render(f.lhs(), 3, out);
            out += " -> ";
            render(f.rhs(), 1, out);
            break;
        case Kind::Forall:
        case Kind::Exists:
            out += f.kind() == Kind::Forall ? "forall " : "exists ";
            out += f.var();
            out += ". ";
            render(f.body(), 2, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

Formula parse_formula(const std::string& text, Lang lang) { return Parser(text, lang).run(); }

std::string render_formula(const Formula& f) {
    std::string out;
    render(f, 0, out);
    return out;
}

}  // namespace wb
