#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lsym/basis.hpp"
#include "lsym/symseries.hpp"

namespace lsym {

// Parse failure with a 1-based source column for diagnostics; maps to
// exit code 2 in the CLI.
struct SyntaxError : std::runtime_error {
    std::size_t column;
    SyntaxError(const std::string& msg, std::size_t col)
        : std::runtime_error(msg + " at column " + std::to_string(col)), column(col) {}
};

/**
 * Expression AST over symmetric-series atoms.
 *
 * Grammar:
 *   expr      := ['-'] term (('+'|'-') term)*
 *   term      := factor ('*' factor)*
 *   factor    := atom | func '(' expr (',' expr)* ')' | '(' expr ')'
 *   atom      := ('e'|'h'|'p') '_' nat | ('m'|'s') '_' partition
 *              | rational | ident ('^' ['-'] nat)?
 *   partition := '[' nat (',' nat)* ']' | '[]'
 *   rational  := nat ('/' nat)?
 * Functions: omega, omegat, flip, exp, log, pow(f,r), pleth(g,f),
 * inner(f,g).
 */
struct Expr {
    using Ptr = std::shared_ptr<const Expr>;

    struct BasisAtom {
        Basis basis;
        Partition tau;
    };
    struct Literal {
        Rational value;
    };
    struct Var {
        std::string name;
        int exponent = 1;
    };
    struct BinOp {
        char op; // '+', '-', '*'
        Ptr lhs, rhs;
    };
    struct Neg {
        Ptr inner;
    };
    struct Call {
        std::string func;
        std::vector<Ptr> args;
    };

    std::variant<BasisAtom, Literal, Var, BinOp, Neg, Call> node;
};

namespace detail {

struct Token {
    enum Kind { ident, number, partition, punct, end } kind;
    std::string text;
    Partition part;
    std::size_t column; // 1-based
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t col = i + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Token::ident, src.substr(i, j - i), {}, col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j < src.size() && src[j] == '/') {
                std::size_t k = j + 1;
                while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k])))
                    ++k;
                if (k == j + 1) throw SyntaxError("malformed rational", j + 2);
                j = k;
            }
            out.push_back({Token::number, src.substr(i, j - i), {}, col});
            i = j;
        } else if (c == '[') {
            std::size_t j = src.find(']', i);
            if (j == std::string::npos)
                throw SyntaxError("unterminated partition literal", col);
            std::string lit = src.substr(i, j - i + 1);
            Partition p;
            try {
                p = parse_partition(lit);
            } catch (const std::exception&) {
                throw SyntaxError("malformed partition literal '" + lit + "'", col);
            }
            out.push_back({Token::partition, lit, p, col});
            i = j + 1;
        } else if (std::string("+-*(),^").find(c) != std::string::npos) {
            out.push_back({Token::punct, std::string(1, c), {}, col});
            ++i;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", col);
        }
    }
    out.push_back({Token::end, "", {}, src.size() + 1});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

    Expr::Ptr parse() {
        Expr::Ptr e = parse_expr();
        if (cur().kind != Token::end)
            throw SyntaxError("unexpected trailing input '" + cur().text + "'",
                              cur().column);
        return e;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    bool is_punct(const char* p) const {
        return cur().kind == Token::punct && cur().text == p;
    }

    Expr::Ptr parse_expr() {
        Expr::Ptr lhs;
        if (is_punct("-")) {
            advance();
            lhs = std::make_shared<Expr>(Expr{Expr::Neg{parse_term()}});
        } else {
            lhs = parse_term();
        }
        while (is_punct("+") || is_punct("-")) {
            char op = cur().text[0];
            advance();
            Expr::Ptr rhs = parse_term();
            lhs = std::make_shared<Expr>(Expr{Expr::BinOp{op, lhs, rhs}});
        }
        return lhs;
    }

    Expr::Ptr parse_term() {
        Expr::Ptr lhs = parse_factor();
        while (is_punct("*")) {
            advance();
            Expr::Ptr rhs = parse_factor();
            lhs = std::make_shared<Expr>(Expr{Expr::BinOp{'*', lhs, rhs}});
        }
        return lhs;
    }

    static int expected_arity(const std::string& f) {
        if (f == "omega" || f == "omegat" || f == "flip" || f == "exp" || f == "log")
            return 1;
        if (f == "pow" || f == "pleth" || f == "inner") return 2;
        return -1;
    }

    Expr::Ptr parse_factor() {
        if (is_punct("(")) {
            advance();
            Expr::Ptr e = parse_expr();
            if (!is_punct(")"))
                throw SyntaxError("expected ')'", cur().column);
            advance();
            return e;
        }
        if (cur().kind == Token::number) {
            Rational q = parse_rational(cur().text);
            advance();
            return std::make_shared<Expr>(Expr{Expr::Literal{q}});
        }
        if (cur().kind == Token::ident) {
            Token tok = cur();
            advance();
            // function application
            if (is_punct("(")) {
                int arity = expected_arity(tok.text);
                if (arity < 0)
                    throw SyntaxError("unknown function '" + tok.text + "'", tok.column);
                advance();
                std::vector<Expr::Ptr> args;
                if (!is_punct(")")) {
                    args.push_back(parse_expr());
                    while (is_punct(",")) {
                        advance();
                        args.push_back(parse_expr());
                    }
                }
                if (!is_punct(")"))
                    throw SyntaxError("expected ')'", cur().column);
                advance();
                if (static_cast<int>(args.size()) != arity)
                    throw SyntaxError("function '" + tok.text + "' expects " +
                                          std::to_string(arity) + " argument(s)",
                                      tok.column);
                return std::make_shared<Expr>(Expr{Expr::Call{tok.text, std::move(args)}});
            }
            // basis atoms: e_3, h_2, p_1, m_[..], s_[..]
            if (tok.text.size() >= 2 && tok.text[1] == '_' &&
                (tok.text[0] == 'e' || tok.text[0] == 'h' || tok.text[0] == 'p' ||
                 tok.text[0] == 'm' || tok.text[0] == 's')) {
                char b = tok.text[0];
                std::string sub = tok.text.substr(2);
                if (b == 'm' || b == 's') {
                    if (!sub.empty())
                        throw SyntaxError("expected partition subscript", tok.column + 2);
                    if (cur().kind != Token::partition)
                        throw SyntaxError("expected partition literal after '" +
                                              tok.text + "'",
                                          cur().column);
                    Partition p = cur().part;
                    advance();
                    return std::make_shared<Expr>(
                        Expr{Expr::BasisAtom{b == 'm' ? Basis::m : Basis::s, p}});
                }
                if (sub.empty() || !std::all_of(sub.begin(), sub.end(), [](char ch) {
                        return std::isdigit(static_cast<unsigned char>(ch));
                    }))
                    throw SyntaxError("expected natural subscript", tok.column + 2);
                int k = std::stoi(sub);
                Basis basis = b == 'e' ? Basis::e : (b == 'h' ? Basis::h : Basis::p);
                return std::make_shared<Expr>(
                    Expr{Expr::BasisAtom{basis, k == 0 ? Partition{} : Partition{k}}});
            }
            // bare two-char prefixes like "h_" with nothing after
            if (tok.text.size() == 2 && tok.text[1] == '_')
                throw SyntaxError("expected subscript", tok.column + 1);
            // coefficient-ring indeterminate, optionally with an exponent
            int exponent = 1;
            if (is_punct("^")) {
                advance();
                int sign = 1;
                if (is_punct("-")) {
                    advance();
                    sign = -1;
                }
                if (cur().kind != Token::number ||
                    cur().text.find('/') != std::string::npos)
                    throw SyntaxError("expected integer exponent", cur().column);
                exponent = sign * std::stoi(cur().text);
                advance();
            }
            return std::make_shared<Expr>(Expr{Expr::Var{tok.text, exponent}});
        }
        throw SyntaxError("expected expression", cur().column);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Expr::Ptr parse_expr(const std::string& src) {
    return detail::Parser(src).parse();
}

// Constant (rational) part of a coefficient, for pleth's outer argument.
inline Rational constant_part(const Rational& c) { return c; }
inline Rational constant_part(const LaurentScalar& c) {
    return c.constant_coefficient();
}

template <AdamsScalar C>
struct EvalConfig {
    int degree_bound = 8;
    std::set<std::string> variables; // allowed coefficient indeterminates
};

template <AdamsScalar C>
struct EvalResult {
    SymSeries<C> series;
    bool scalar = false; // result of inner(,) or a pure coefficient
};

namespace detail {

template <AdamsScalar C>
C make_variable(const std::string&, int) {
    throw std::domain_error("indeterminates are not available in this ring");
}

template <>
inline LaurentScalar make_variable<LaurentScalar>(const std::string& name, int e) {
    return LaurentScalar::variable(name, e);
}

} // namespace detail

template <AdamsScalar C>
EvalResult<C> eval(const Expr::Ptr& ast, const EvalConfig<C>& cfg) {
    using R = EvalResult<C>;
    const int d = cfg.degree_bound;
    auto rec = [&](auto&& self, const Expr::Ptr& e) -> R {
        return std::visit(
            [&](const auto& node) -> R {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Expr::BasisAtom>) {
                    if (node.tau.weight() > d)
                        throw std::domain_error(
                            "basis element of weight " +
                            std::to_string(node.tau.weight()) +
                            " exceeds degree bound " + std::to_string(d));
                    return R{unit_basis_element<C>(node.basis, node.tau, d), false};
                } else if constexpr (std::is_same_v<T, Expr::Literal>) {
                    return R{SymSeries<C>::constant(
                                 d, ring_traits<C>::from_rational(node.value)),
                             true};
                } else if constexpr (std::is_same_v<T, Expr::Var>) {
                    if (!cfg.variables.count(node.name))
                        throw std::domain_error("unknown identifier '" + node.name +
                                                "' (declare it via --ring laurent:...)");
                    return R{SymSeries<C>::constant(
                                 d, detail::make_variable<C>(node.name, node.exponent)),
                             true};
                } else if constexpr (std::is_same_v<T, Expr::Neg>) {
                    R a = self(self, node.inner);
                    return R{-a.series, a.scalar};
                } else if constexpr (std::is_same_v<T, Expr::BinOp>) {
                    R a = self(self, node.lhs);
                    R b = self(self, node.rhs);
                    SymSeries<C> s = node.op == '+'   ? a.series + b.series
                                     : node.op == '-' ? a.series - b.series
                                                      : a.series * b.series;
                    return R{std::move(s), a.scalar && b.scalar};
                } else {
                    const Expr::Call& call = node;
                    if (call.func == "inner") {
                        R a = self(self, call.args[0]);
                        R b = self(self, call.args[1]);
                        C ip = hall_inner(a.series, b.series);
                        return R{SymSeries<C>::constant(d, ip), true};
                    }
                    if (call.func == "pow") {
                        R base = self(self, call.args[0]);
                        R expo = self(self, call.args[1]);
                        SymSeries<C> rest = expo.series;
                        C r = rest.constant_term();
                        rest.set(Partition{}, C{});
                        if (!rest.is_zero())
                            throw std::domain_error(
                                "pow exponent must be a coefficient scalar");
                        return R{pow_structure(base.series, r), false};
                    }
                    if (call.func == "pleth") {
                        R outer = self(self, call.args[0]);
                        R inner_arg = self(self, call.args[1]);
                        // outer argument must have rational coefficients
                        SymSeries<Rational> g(d);
                        for (const auto& [tau, c] : outer.series.terms()) {
                            C diff =
                                c - ring_traits<C>::from_rational(constant_part(c));
                            if (!(diff == C{}))
                                throw std::domain_error(
                                    "pleth outer argument must have rational "
                                    "coefficients");
                            g.set(tau, constant_part(c));
                        }
                        return R{plethysm(g, inner_arg.series), false};
                    }
                    R a = self(self, call.args[0]);
                    if (call.func == "omega") return R{omega(a.series), false};
                    if (call.func == "omegat") return R{omega_tilde(a.series), false};
                    if (call.func == "flip") return R{degree_flip(a.series), false};
                    if (call.func == "exp") return R{exp_sigma(a.series), false};
                    if (call.func == "log") return R{log_sigma(a.series), false};
                    throw std::logic_error("unhandled function " + call.func);
                }
            },
            e->node);
    };
    return rec(rec, ast);
}

namespace detail {

inline std::string rational_factor_str(const Rational& q) { return lsym::to_string(q); }

// Grammar-compatible rendering of a coefficient (uses '*' and '^').
inline std::string coeff_expr_str(const Rational& q, bool& negative) {
    Rational a = q;
    negative = a < 0;
    if (negative) a = -a;
    return lsym::to_string(a);
}

inline std::string coeff_expr_str(const LaurentScalar& c, bool& negative) {
    negative = false;
    if (c.is_constant()) return coeff_expr_str(c.constant_coefficient(), negative);
    std::string body;
    bool first = true;
    bool multi = c.terms().size() > 1;
    for (const auto& [m, q] : c.terms()) {
        Rational a = q;
        if (first) {
            if (a < 0) {
                body += "-";
                a = -a;
            }
        } else {
            body += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string factors;
        if (a != 1 || m.empty()) factors = lsym::to_string(a);
        for (const auto& [v, e] : m) {
            if (!factors.empty()) factors += "*";
            factors += v;
            if (e != 1) factors += "^" + std::to_string(e);
        }
        body += factors;
    }
    if (multi || body.find(' ') != std::string::npos) return "(" + body + ")";
    // single monomial: pull a leading minus out as the term sign
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.erase(body.begin());
        if (body.empty() || body.front() == '*') body = "1" + body;
    }
    return body;
}

} // namespace detail

/**
 * Renders a series as a parseable expression in the requested basis:
 * m/s terms as "m_[2,1]", multiplicative bases as products "h_2*h_1",
 * terms sorted by the documented partition order.
 */
template <AdamsScalar C>
std::string render(const SymSeries<C>& f, Basis b) {
    auto coeffs = to_basis(f, b);
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [tau, c] : coeffs) {
        bool negative = false;
        std::string cs = detail::coeff_expr_str(c, negative);
        std::string basis_part;
        if (!tau.empty()) {
            if (b == Basis::m || b == Basis::s) {
                basis_part = std::string(1, basis_char(b)) + "_" + tau.str();
            } else {
                for (int part : tau.parts()) {
                    if (!basis_part.empty()) basis_part += "*";
                    basis_part += std::string(1, basis_char(b)) + "_" +
                                  std::to_string(part);
                }
            }
        }
        std::string piece;
        if (basis_part.empty())
            piece = cs;
        else if (cs == "1")
            piece = basis_part;
        else
            piece = cs + "*" + basis_part;
        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

// Renders a scalar result (inner products and friends).
template <AdamsScalar C>
std::string render_scalar(const C& c) {
    return ring_traits<C>::to_string(c);
}

} // namespace lsym
