#ifndef LINTERM_FRONTEND_HPP
#define LINTERM_FRONTEND_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "program.hpp"
#include "rational.hpp"

// Text frontend for single loops of the shape
//
//     vars x, y;
//     while (3*x - y > 0) {
//         x := 3*x - 2*y;
//         y := 4/3*x - 5/3*y;
//     }
//
// The vars clause is optional; without it, variables are the identifiers that
// occur in the loop, in lexicographic order. Coefficients are integers or
// fractions (never decimals), "*" between coefficient and variable may be
// omitted, and assignments execute sequentially: each right-hand side sees
// the values already assigned above it in the same iteration.

namespace linterm {

enum class Comparator { Greater, GreaterEqual };

// One guard inequality: coefficients . x  (> or >=)  constant.
struct GuardRow {
    std::vector<Rational> coefficients;
    Comparator comparator;
    Rational constant;

    friend bool operator==(const GuardRow&, const GuardRow&) = default;
};

// target := coefficients . x + constant
struct Assignment {
    size_t target;
    std::vector<Rational> coefficients;
    Rational constant;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct SourceLoop {
    std::vector<std::string> variables;
    std::vector<GuardRow> guards;
    std::vector<Assignment> body;

    friend bool operator==(const SourceLoop&, const SourceLoop&) = default;
};

// The loop body collapsed to one simultaneous step x := A x + c, with the
// guard system F x (cmp) b untouched. Comparators ride along so the
// homogenization step can reject anything but a single strict inequality.
struct AffineSystem {
    Matrix<Rational> update;
    std::vector<Rational> constant;
    Matrix<Rational> guard_matrix;
    std::vector<Comparator> comparators;
    std::vector<Rational> guard_constant;
    std::vector<std::string> variables;
};

namespace detail {

enum class Tok {
    Ident, Integer, KwVars, KwWhile,
    LParen, RParen, LBrace, RBrace,
    Semi, Comma, Assign, Gt, Ge, AndAnd, Plus, Minus, Star, Slash,
    End
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto peek = [&](size_t k = 0) -> char { return i + k < src.size() ? src[i + k] : '\0'; };
    auto advance = [&] {
        if (src[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < src.size()) {
        char c = peek();
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        if (c == '/' && peek(1) == '/') {
            while (i < src.size() && peek() != '\n') advance();
            continue;
        }
        if (c == '/' && peek(1) == '*') {
            int start_line = line, start_col = col;
            advance();
            advance();
            while (i < src.size() && !(peek() == '*' && peek(1) == '/')) advance();
            if (i >= src.size()) throw parse_error("unterminated comment", start_line, start_col);
            advance();
            advance();
            continue;
        }
        int tline = line, tcol = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                text += peek();
                advance();
            }
            Tok kind = text == "vars" ? Tok::KwVars : text == "while" ? Tok::KwWhile : Tok::Ident;
            out.push_back({kind, std::move(text), tline, tcol});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
                text += peek();
                advance();
            }
            if (peek() == '.')
                throw parse_error(
                    "decimal literals are not supported; write an exact fraction like 3/10",
                    tline, tcol);
            out.push_back({Tok::Integer, std::move(text), tline, tcol});
            continue;
        }
        auto push1 = [&](Tok k) {
            out.push_back({k, std::string(1, c), tline, tcol});
            advance();
        };
        switch (c) {
            case '(': push1(Tok::LParen); break;
            case ')': push1(Tok::RParen); break;
            case '{': push1(Tok::LBrace); break;
            case '}': push1(Tok::RBrace); break;
            case ';': push1(Tok::Semi); break;
            case ',': push1(Tok::Comma); break;
            case '+': push1(Tok::Plus); break;
            case '-': push1(Tok::Minus); break;
            case '*': push1(Tok::Star); break;
            case '/': push1(Tok::Slash); break;
            case ':':
                if (peek(1) != '=') throw parse_error("expected ':='", tline, tcol);
                advance();
                advance();
                out.push_back({Tok::Assign, ":=", tline, tcol});
                break;
            case '>':
                if (peek(1) == '=') {
                    advance();
                    advance();
                    out.push_back({Tok::Ge, ">=", tline, tcol});
                } else {
                    push1(Tok::Gt);
                }
                break;
            case '&':
                if (peek(1) != '&') throw parse_error("expected '&&'", tline, tcol);
                advance();
                advance();
                out.push_back({Tok::AndAnd, "&&", tline, tcol});
                break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", tline, tcol);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// A parsed linear combination plus constant term.
struct LinearExpr {
    std::vector<Rational> coefficients;
    Rational constant;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    SourceLoop parse_program() {
        SourceLoop loop;
        bool declared = false;
        if (peek().kind == Tok::KwVars) {
            declared = true;
            next();
            loop.variables.push_back(expect_ident("variable name"));
            while (peek().kind == Tok::Comma) {
                next();
                loop.variables.push_back(expect_ident("variable name"));
            }
            expect(Tok::Semi, "';' after variable declaration");
            std::set<std::string> seen;
            for (const auto& v : loop.variables)
                if (!seen.insert(v).second)
                    throw parse_error("variable '" + v + "' declared twice", toks_[0].line,
                                      toks_[0].column);
        } else {
            // No declaration: collect identifiers from the whole token stream,
            // lexicographic order.
            std::set<std::string> names;
            for (const Token& t : toks_)
                if (t.kind == Tok::Ident) names.insert(t.text);
            loop.variables.assign(names.begin(), names.end());
        }
        for (size_t j = 0; j < loop.variables.size(); ++j) index_[loop.variables[j]] = j;
        declared_ = declared;

        expect(Tok::KwWhile, "'while'");
        expect(Tok::LParen, "'(' after while");
        loop.guards.push_back(parse_guard());
        while (peek().kind == Tok::AndAnd) {
            next();
            loop.guards.push_back(parse_guard());
        }
        expect(Tok::RParen, "')' after guard");
        expect(Tok::LBrace, "'{'");
        std::set<size_t> assigned;
        while (peek().kind != Tok::RBrace) {
            Token name_tok = peek();
            std::string name = expect_ident("assignment target");
            size_t target = resolve(name, name_tok);
            if (!assigned.insert(target).second)
                throw parse_error("variable '" + name + "' assigned twice in one body",
                                  name_tok.line, name_tok.column);
            expect(Tok::Assign, "':=' in assignment");
            LinearExpr rhs = parse_linear();
            expect(Tok::Semi, "';' after assignment");
            loop.body.push_back({target, std::move(rhs.coefficients), std::move(rhs.constant)});
        }
        expect(Tok::RBrace, "'}'");
        if (peek().kind != Tok::End)
            throw parse_error("trailing input after loop", peek().line, peek().column);
        if (loop.body.empty())
            throw degenerate_body("loop body has no assignments");
        return loop;
    }

  private:
    GuardRow parse_guard() {
        Token start = peek();
        LinearExpr lhs = parse_linear();
        if (!lhs.constant.is_zero())
            throw parse_error(
                "constant terms are not allowed left of the comparator; move them to the right",
                start.line, start.column);
        Comparator cmp;
        if (peek().kind == Tok::Gt) {
            cmp = Comparator::Greater;
        } else if (peek().kind == Tok::Ge) {
            cmp = Comparator::GreaterEqual;
        } else {
            throw parse_error("expected '>' or '>=' in guard", peek().line, peek().column);
        }
        next();
        Rational rhs = parse_signed_rational();
        return {std::move(lhs.coefficients), cmp, std::move(rhs)};
    }

    // Sum of signed terms; bare rationals accumulate into the constant, and
    // the caller decides whether a nonzero constant is legal in its position.
    LinearExpr parse_linear() {
        LinearExpr e{std::vector<Rational>(index_.size(), Rational(0)), Rational(0)};
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                sign = peek().kind == Tok::Minus ? -1 : 1;
                next();
            } else if (!first) {
                break;
            }
            parse_term(e, sign);
            first = false;
        }
        return e;
    }

    void parse_term(LinearExpr& e, int sign) {
        Token t = peek();
        if (t.kind == Tok::Ident) {
            next();
            add_coeff(e, t, Rational(sign));
            return;
        }
        if (t.kind == Tok::Integer || t.kind == Tok::LParen) {
            Rational coeff = Rational(sign) * parse_rational();
            if (peek().kind == Tok::Star) {
                next();
                Token vt = peek();
                expect_ident("variable after '*'");
                add_coeff(e, vt, coeff);
                return;
            }
            if (peek().kind == Tok::Ident) {  // juxtaposition: 3x, 4/3y
                Token vt = peek();
                next();
                add_coeff(e, vt, coeff);
                return;
            }
            e.constant += coeff;
            return;
        }
        throw parse_error("expected a term", t.line, t.column);
    }

    void add_coeff(LinearExpr& e, const Token& var_tok, const Rational& c) {
        e.coefficients[resolve(var_tok.text, var_tok)] += c;
    }

    // integer | integer "/" integer | "(" rational ")"
    Rational parse_rational() {
        if (peek().kind == Tok::LParen) {
            next();
            Rational r = parse_signed_rational();
            expect(Tok::RParen, "')'");
            return r;
        }
        Token t = expect_token(Tok::Integer, "number");
        mpz_class num(t.text);
        if (peek().kind == Tok::Slash) {
            next();
            Token d = expect_token(Tok::Integer, "denominator");
            mpz_class den(d.text);
            if (den == 0) throw parse_error("zero denominator", d.line, d.column);
            return Rational(num, den);
        }
        return Rational(num);
    }

    Rational parse_signed_rational() {
        int sign = 1;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            if (peek().kind == Tok::Minus) sign = -sign;
            next();
        }
        return Rational(sign) * parse_rational();
    }

    size_t resolve(const std::string& name, const Token& tok) {
        auto it = index_.find(name);
        if (it == index_.end())
            throw parse_error("undeclared variable '" + name + "'", tok.line, tok.column);
        return it->second;
    }

    const Token& peek() const { return toks_[pos_]; }
    void next() { if (pos_ + 1 < toks_.size()) ++pos_; }

    Token expect_token(Tok kind, const std::string& what) {
        if (peek().kind != kind)
            throw parse_error("expected " + what, peek().line, peek().column);
        Token t = peek();
        next();
        return t;
    }

    void expect(Tok kind, const std::string& what) { expect_token(kind, what); }

    std::string expect_ident(const std::string& what) {
        return expect_token(Tok::Ident, what).text;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    std::map<std::string, size_t> index_;
    bool declared_ = false;
};

inline std::string format_linear(const std::vector<Rational>& coeffs,
                                 const std::vector<std::string>& vars, const Rational& constant,
                                 bool print_constant) {
    std::string out;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        const Rational& c = coeffs[j];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (!a.is_one()) out += a.to_string() + "*";
        out += vars[j];
    }
    if (print_constant && !constant.is_zero()) {
        if (out.empty()) {
            out = constant.to_string();
        } else {
            out += constant.sign() < 0 ? " - " : " + ";
            out += constant.abs().to_string();
        }
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace detail

inline SourceLoop parse(std::string_view source) {
    detail::Parser p(detail::tokenize(source));
    return p.parse_program();
}

// Canonical source form; parse(pretty_print(loop)) reproduces loop exactly.
inline std::string pretty_print(const SourceLoop& loop) {
    std::string out = "vars ";
    for (size_t i = 0; i < loop.variables.size(); ++i) {
        if (i > 0) out += ", ";
        out += loop.variables[i];
    }
    out += ";\nwhile (";
    for (size_t g = 0; g < loop.guards.size(); ++g) {
        if (g > 0) out += " && ";
        const GuardRow& row = loop.guards[g];
        out += detail::format_linear(row.coefficients, loop.variables, Rational(0), false);
        out += row.comparator == Comparator::Greater ? " > " : " >= ";
        out += row.constant.to_string();
    }
    out += ") {\n";
    for (const Assignment& a : loop.body) {
        out += "  " + loop.variables[a.target] + " := ";
        out += detail::format_linear(a.coefficients, loop.variables, a.constant, true);
        out += ";\n";
    }
    out += "}\n";
    return out;
}

// Collapse the sequential body into one simultaneous update x := A x + c.
// Rows for unassigned variables stay identity; each assignment's right-hand
// side is rewritten over the loop-entry values via the rows accumulated so
// far, which is exactly "later assignments see earlier ones".
inline AffineSystem propagate_sequential(const SourceLoop& loop) {
    if (loop.body.empty()) throw degenerate_body("loop body has no assignments");
    if (loop.guards.empty()) throw degenerate_guard("loop has no guard");
    const size_t n = loop.variables.size();
    if (n == 0) throw degenerate_input("loop has no variables");

    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> consts(n, Rational(0));
    for (size_t i = 0; i < n; ++i) rows[i][i] = Rational(1);

    for (const Assignment& a : loop.body) {
        if (a.coefficients.size() != n) throw dimension_mismatch("assignment arity mismatch");
        std::vector<Rational> new_row(n, Rational(0));
        Rational new_const = a.constant;
        for (size_t j = 0; j < n; ++j) {
            const Rational& c = a.coefficients[j];
            if (c.is_zero()) continue;
            for (size_t k = 0; k < n; ++k) new_row[k] += c * rows[j][k];
            new_const += c * consts[j];
        }
        rows[a.target] = std::move(new_row);
        consts[a.target] = std::move(new_const);
    }

    Matrix<Rational> update(n, n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) update.at(i, j) = rows[i][j];

    const size_t m = loop.guards.size();
    Matrix<Rational> guard_matrix(m, n, Rational(0));
    std::vector<Comparator> comparators;
    std::vector<Rational> guard_constant;
    for (size_t g = 0; g < m; ++g) {
        const GuardRow& row = loop.guards[g];
        if (row.coefficients.size() != n) throw dimension_mismatch("guard arity mismatch");
        for (size_t j = 0; j < n; ++j) guard_matrix.at(g, j) = row.coefficients[j];
        comparators.push_back(row.comparator);
        guard_constant.push_back(row.constant);
    }

    return {std::move(update), std::move(consts), std::move(guard_matrix), std::move(comparators),
            std::move(guard_constant), loop.variables};
}

// Reduce an affine single-guard loop to the homogeneous form the decision
// procedure takes. A fresh coordinate pinned at 1 absorbs the affine parts:
//     x := A x + c,  guard f.x > b   ~>   [A c; 0 1],  guard (f, -b) . (x, z) > 0.
// When both c and b are zero the program passes through unchanged.
inline HomogeneousProgram homogenize(const AffineSystem& sys) {
    if (sys.comparators.size() != 1 || sys.guard_matrix.rows() != 1)
        throw unsupported_guard_count("expected exactly one guard inequality, got " +
                                      std::to_string(sys.guard_matrix.rows()));
    if (sys.comparators[0] != Comparator::Greater)
        throw unsupported_comparator("only strict '>' guards are supported");

    const size_t n = sys.update.rows();
    if (sys.update.cols() != n || sys.constant.size() != n || sys.guard_matrix.cols() != n)
        throw dimension_mismatch("inconsistent affine system shapes");

    bool constant_zero = true;
    for (const Rational& c : sys.constant) constant_zero = constant_zero && c.is_zero();
    bool b_zero = sys.guard_constant[0].is_zero();

    if (constant_zero && b_zero) {
        std::vector<Rational> f;
        for (size_t j = 0; j < n; ++j) f.push_back(sys.guard_matrix.at(0, j));
        return make_program(sys.update, std::move(f), sys.variables);
    }

    Matrix<Rational> up(n + 1, n + 1, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) up.at(i, j) = sys.update.at(i, j);
    for (size_t i = 0; i < n; ++i) up.at(i, n) = sys.constant[i];
    up.at(n, n) = Rational(1);

    std::vector<Rational> f;
    for (size_t j = 0; j < n; ++j) f.push_back(sys.guard_matrix.at(0, j));
    f.push_back(-sys.guard_constant[0]);

    std::vector<std::string> vars = sys.variables;
    std::string fresh = "z";
    for (int k = 1; std::find(vars.begin(), vars.end(), fresh) != vars.end(); ++k)
        fresh = "z" + std::to_string(k);
    vars.push_back(fresh);

    return make_program(std::move(up), std::move(f), std::move(vars));
}

}  // namespace linterm

#endif
