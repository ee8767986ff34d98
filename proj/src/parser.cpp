#include "wittkit/parser.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

#include "wittkit/errors.hpp"

namespace wittkit {

bool ExprAtom::operator==(const ExprAtom& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Basis:
            return degree == o.degree && level == o.level;
        case Kind::Central:
            return true;
        case Kind::Bracket:
            return *left == *o.left && *right == *o.right;
        case Kind::Paren:
            return *left == *o.left;
    }
    return false;
}

bool ExprTerm::operator==(const ExprTerm& o) const {
    return negated == o.negated && coeff == o.coeff && atom == o.atom;
}

namespace {

struct Token {
    enum class Kind { Number, Ident, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    long number = 0;
    char symbol = 0;
    int line = 1, column = 1;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (src[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < src.size()) {
        char c = src[i];
        if (isspace((unsigned char)c)) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (isdigit((unsigned char)c)) {
            size_t j = i;
            while (j < src.size() && isdigit((unsigned char)src[j])) ++j;
            t.kind = Token::Kind::Number;
            t.text = src.substr(i, j - i);
            t.number = std::stol(t.text);
            advance(j - i);
        } else if (isalpha((unsigned char)c) || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (isalnum((unsigned char)src[j]) || src[j] == '_'))
                ++j;
            t.kind = Token::Kind::Ident;
            t.text = src.substr(i, j - i);
            advance(j - i);
        } else if (std::string("+-*/^()[],").find(c) != std::string::npos) {
            t.kind = Token::Kind::Symbol;
            t.symbol = c;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

class Parser {
  public:
    Parser(const GammaConfig& config, std::vector<Token> tokens)
        : config_(config), tokens_(std::move(tokens)) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_expr();
        expect_end();
        return e;
    }

    Scalar parse_scalar_all() {
        Scalar s = parse_scalar_expr();
        expect_end();
        return s;
    }

  private:
    const GammaConfig& config_;
    std::vector<Token> tokens_;
    size_t pos_ = 0;

    const Token& peek(size_t ahead = 0) const {
        size_t p = pos_ + ahead;
        return p < tokens_.size() ? tokens_[p] : tokens_.back();
    }
    const Token& take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
    bool at_symbol(char c, size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Token::Kind::Symbol && t.symbol == c;
    }
    void expect_symbol(char c, const char* what) {
        const Token& t = peek();
        if (!at_symbol(c))
            throw SyntaxError(std::string("expected '") + c + "' " + what, t.line, t.column);
        take();
    }
    void expect_end() {
        const Token& t = peek();
        if (t.kind != Token::Kind::End)
            throw SyntaxError("unexpected trailing input '" + t.text + "'", t.line, t.column);
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw SyntaxError(msg, t.line, t.column);
    }

    int generator_index(const std::string& name) const {
        const auto& names = config_.generator_names();
        for (size_t k = 0; k < names.size(); ++k)
            if (names[k] == name) return (int)k;
        return -1;
    }

    bool atom_starts_here(size_t ahead) const {
        const Token& t = peek(ahead);
        if (t.kind == Token::Kind::Symbol) return t.symbol == '[';
        if (t.kind == Token::Kind::Ident) return t.text == "L" || t.text == "C";
        return false;
    }

    ExprPtr parse_expr() {
        auto ast = std::make_shared<ExprAst>();
        bool negated = false;
        if (at_symbol('-')) {
            take();
            negated = true;
        }
        ast->terms.push_back(parse_term(negated));
        while (at_symbol('+') || at_symbol('-')) {
            bool neg = take().symbol == '-';
            ast->terms.push_back(parse_term(neg));
        }
        return ast;
    }

    ExprTerm parse_term(bool negated) {
        ExprTerm term;
        term.negated = negated;
        if (!atom_starts_here(0)) {
            size_t save = pos_;
            bool scalar_ok = true;
            Scalar s = config_.zero();
            try {
                s = parse_scalar_expr();
            } catch (const Error&) {
                scalar_ok = false;
            }
            if (scalar_ok && at_symbol('*')) {
                take();
                term.coeff = s;
            } else {
                pos_ = save;  // plain parenthesized element, or an error
            }
        }
        term.atom = parse_atom();
        // Canonical sign: coefficients keep a positive leading term and
        // the sign lives on the term, so print-parse round trips.
        if (term.coeff && !term.coeff->is_zero() &&
            term.coeff->num().leading().coeff < 0) {
            term.coeff = -*term.coeff;
            term.negated = !term.negated;
        }
        return term;
    }

    ExprAtom parse_atom() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Ident && t.text == "L") {
            take();
            expect_symbol('(', "after L");
            ExprAtom atom;
            atom.kind = ExprAtom::Kind::Basis;
            atom.degree = parse_group();
            expect_symbol(',', "between degree and level");
            const Token& lvl = peek();
            if (lvl.kind != Token::Kind::Number)
                fail("expected a nonnegative level");
            atom.level = (int)take().number;
            expect_symbol(')', "closing L(...)");
            return atom;
        }
        if (t.kind == Token::Kind::Ident && t.text == "C") {
            take();
            ExprAtom atom;
            atom.kind = ExprAtom::Kind::Central;
            return atom;
        }
        if (at_symbol('[')) {
            take();
            ExprAtom atom;
            atom.kind = ExprAtom::Kind::Bracket;
            atom.left = parse_expr();
            expect_symbol(',', "between bracket arguments");
            atom.right = parse_expr();
            expect_symbol(']', "closing bracket");
            return atom;
        }
        if (at_symbol('(')) {
            take();
            ExprAtom atom;
            atom.kind = ExprAtom::Kind::Paren;
            atom.left = parse_expr();
            expect_symbol(')', "closing parenthesis");
            return atom;
        }
        fail("expected L(...), C, [expr, expr] or (expr)");
    }

    // Degree literal: integer combination of generators; a bare integer
    // only for rank 1 (or the zero element).
    GroupElement parse_group() {
        GroupElement out = config_.zero_degree();
        bool first = true;
        while (true) {
            int sign = 1;
            if (at_symbol('+') || at_symbol('-')) {
                sign = take().symbol == '-' ? -1 : 1;
            } else if (!first) {
                break;
            }
            const Token& t = peek();
            if (t.kind == Token::Kind::Number) {
                long n = take().number;
                if (peek().kind == Token::Kind::Ident ||
                    (at_symbol('*') && peek(1).kind == Token::Kind::Ident)) {
                    if (at_symbol('*')) take();
                    const Token& g = peek();
                    int idx = generator_index(g.text);
                    if (idx < 0) throw UnknownGenerator(g.text);
                    take();
                    out.n[idx] += sign * (int)n;
                } else {
                    if (n == 0) {
                        // the zero element, any rank
                    } else if (config_.rank() == 1) {
                        out.n[0] += sign * (int)n;
                    } else {
                        fail("a bare integer degree needs rank 1 (use generator names)");
                    }
                }
            } else if (t.kind == Token::Kind::Ident) {
                int idx = generator_index(t.text);
                if (idx < 0) throw UnknownGenerator(t.text);
                take();
                out.n[idx] += sign;
            } else {
                fail("expected a degree");
            }
            first = false;
            if (!(at_symbol('+') || at_symbol('-'))) break;
        }
        return out;
    }

    // Scalar grammar with a lookahead stop: '*' followed by an atom start
    // belongs to the enclosing term, not to the scalar product.
    Scalar parse_scalar_expr() {
        Scalar s = parse_scalar_term();
        while (at_symbol('+') || at_symbol('-')) {
            bool neg = take().symbol == '-';
            Scalar t = parse_scalar_term();
            s = neg ? s - t : s + t;
        }
        return s;
    }

    Scalar parse_scalar_term() {
        Scalar s = parse_scalar_factor();
        while (true) {
            if (at_symbol('*')) {
                if (atom_starts_here(1)) break;  // term-level multiplication
                if (at_symbol('(', 1)) {
                    // '*(' may open a parenthesized element; try the
                    // scalar reading and rewind to '*' when it fails.
                    size_t save = pos_;
                    take();
                    try {
                        s *= parse_scalar_factor();
                        continue;
                    } catch (const Error&) {
                        pos_ = save;
                        break;
                    }
                }
                take();
                s *= parse_scalar_factor();
            } else if (at_symbol('/')) {
                take();
                Scalar d = parse_scalar_factor();
                if (d.is_zero()) fail("division by zero in scalar");
                s /= d;
            } else {
                break;
            }
        }
        return s;
    }

    Scalar parse_scalar_factor() {
        bool neg = false;
        while (at_symbol('-')) {
            take();
            neg = !neg;
        }
        Scalar s = parse_scalar_primary();
        if (at_symbol('^')) {
            take();
            bool eneg = false;
            if (at_symbol('-')) {
                take();
                eneg = true;
            }
            const Token& t = peek();
            if (t.kind != Token::Kind::Number) fail("expected an integer exponent");
            long e = take().number;
            s = s.pow(eneg ? -e : e);
        }
        return neg ? -s : s;
    }

    Scalar parse_scalar_primary() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Number) {
            long n = take().number;
            return config_.scalar(n);
        }
        if (t.kind == Token::Kind::Ident) {
            int idx = generator_index(t.text);
            if (idx < 0) throw UnknownGenerator(t.text);
            take();
            if (config_.specialized()) return config_.scalar((*config_.specialization())[idx]);
            return Scalar::generator(config_.nvars(), idx);
        }
        if (at_symbol('(')) {
            take();
            Scalar s = parse_scalar_expr();
            expect_symbol(')', "closing scalar parenthesis");
            return s;
        }
        fail("expected a scalar");
    }
};

std::string print_atom(const GammaConfig& config, const ExprAtom& atom);

std::string print_group(const GammaConfig& config, const GroupElement& d) {
    std::ostringstream os;
    if (config.rank() == 1) {
        os << d.n[0];
        return os.str();
    }
    if (d.is_zero()) return "0";
    bool first = true;
    for (int k = 0; k < config.rank(); ++k) {
        int v = d.n[k];
        if (v == 0) continue;
        if (!first && v > 0) os << "+";
        if (v == -1)
            os << "-";
        else if (v != 1)
            os << v << "*";
        os << config.generator_names()[k];
        first = false;
    }
    return os.str();
}

std::string print_term(const GammaConfig& config, const ExprTerm& term) {
    std::string out;
    if (term.coeff) {
        std::string c = term.coeff->to_string(config.generator_names());
        if (term.coeff->needs_parens()) c = "(" + c + ")";
        out += c + "*";
    }
    out += print_atom(config, term.atom);
    return out;
}

std::string print_atom(const GammaConfig& config, const ExprAtom& atom) {
    switch (atom.kind) {
        case ExprAtom::Kind::Basis:
            return "L(" + print_group(config, atom.degree) + "," +
                   std::to_string(atom.level) + ")";
        case ExprAtom::Kind::Central:
            return "C";
        case ExprAtom::Kind::Bracket:
            return "[" + print(config, *atom.left) + ", " + print(config, *atom.right) + "]";
        case ExprAtom::Kind::Paren:
            return "(" + print(config, *atom.left) + ")";
    }
    return "";
}

}  // namespace

ExprPtr parse(const GammaConfig& config, const std::string& src) {
    Parser p(config, tokenize(src));
    return p.parse_all();
}

Scalar parse_scalar(const GammaConfig& config, const std::string& src) {
    Parser p(config, tokenize(src));
    return p.parse_scalar_all();
}

std::string print(const GammaConfig& config, const ExprAst& ast) {
    std::string out;
    for (size_t i = 0; i < ast.terms.size(); ++i) {
        const ExprTerm& t = ast.terms[i];
        if (i == 0) {
            if (t.negated) out += "-";
        } else {
            out += t.negated ? " - " : " + ";
        }
        out += print_term(config, t);
    }
    return out;
}

Element eval(const GammaConfig& config, const ExprAst& ast, const BracketRule& rule) {
    Element out;
    for (const ExprTerm& term : ast.terms) {
        Element atom;
        switch (term.atom.kind) {
            case ExprAtom::Kind::Basis:
                atom = Element::basis(config, term.atom.degree, term.atom.level);
                break;
            case ExprAtom::Kind::Central:
                if (!rule.allows_central()) throw CentralTermPresent();
                atom = Element::central(config);
                break;
            case ExprAtom::Kind::Bracket:
                atom = bracket(config, eval(config, *term.atom.left, rule),
                               eval(config, *term.atom.right, rule), rule);
                break;
            case ExprAtom::Kind::Paren:
                atom = eval(config, *term.atom.left, rule);
                break;
        }
        if (term.coeff) atom = atom.scaled(*term.coeff);
        if (term.negated) atom = -atom;
        out += atom;
    }
    return out;
}

}  // namespace wittkit
