#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsym/rational.hpp"

namespace lsym {

/**
 * Multivariate Laurent polynomial with exact rational coefficients.
 *
 * A monomial maps variable names to nonzero integer exponents; terms map
 * monomials to nonzero coefficients. The variable alphabet is implicit in
 * the stored exponents, so values over different alphabets mix freely.
 *
 * Adams operations act by raising every variable to the i-th power
 * (exponent vectors scaled by i, coefficients untouched), which makes
 * every psi^i a ring homomorphism with psi^i o psi^j = psi^{ij}.
 */
class LaurentScalar {
public:
    using Monomial = std::map<std::string, int>;

    LaurentScalar() = default;

    LaurentScalar(const Rational& c) { // implicit: constants embed
        if (c != 0) terms_[Monomial{}] = c;
    }
    LaurentScalar(int c) : LaurentScalar(Rational(c)) {}

    static LaurentScalar variable(const std::string& name, int exponent = 1) {
        LaurentScalar x;
        if (exponent != 0)
            x.terms_[Monomial{{name, exponent}}] = 1;
        else
            x.terms_[Monomial{}] = 1;
        return x;
    }

    static LaurentScalar monomial(Monomial m, const Rational& c) {
        LaurentScalar x;
        if (c != 0) x.terms_[std::move(m)] = c;
        return x;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rational constant_coefficient() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Total degree of a monomial = sum of exponents (negatives included).
    int max_total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int t = 0;
            for (const auto& [v, e] : m) t += e;
            d = std::max(d, t);
        }
        return d;
    }

    friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend LaurentScalar operator-(const LaurentScalar& a) {
        LaurentScalar r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }

    friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) {
        return a + (-b);
    }

    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb) {
                    int ne = (m.count(v) ? m[v] : 0) + e;
                    if (ne == 0) m.erase(v); else m[v] = ne;
                }
                r.add_term(m, ca * cb);
            }
        return r;
    }

    LaurentScalar& operator+=(const LaurentScalar& b) { return *this = *this + b; }
    LaurentScalar& operator-=(const LaurentScalar& b) { return *this = *this - b; }
    LaurentScalar& operator*=(const LaurentScalar& b) { return *this = *this * b; }

    bool operator==(const LaurentScalar& other) const = default;

    // psi^i: every exponent vector scaled by i.
    LaurentScalar adams(int i) const {
        if (i < 1) throw std::invalid_argument("adams index must be >= 1");
        LaurentScalar r;
        for (const auto& [m, c] : terms_) {
            Monomial sm;
            for (const auto& [v, e] : m) sm[v] = e * i;
            r.add_term(sm, c);
        }
        return r;
    }

    // Serialization: monomials as "x^2·y^-1", coefficient prefix when != 1.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (!first) {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            std::string ms = monomial_str(m);
            if (ms.empty()) {
                os << lsym::to_string(a);
            } else if (a == 1) {
                os << ms;
            } else if (a == -1) {
                os << "-" << ms;
            } else {
                os << lsym::to_string(a) << "·" << ms;
            }
        }
        return os.str();
    }

private:
    static std::string monomial_str(const Monomial& m) {
        std::string s;
        for (const auto& [v, e] : m) {
            if (!s.empty()) s += "·";
            s += v;
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

namespace detail {

// Splits off the factors of one monomial term; accepts '*' or U+00B7.
inline std::vector<std::string> split_factors(const std::string& term) {
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 0; i < term.size();) {
        if (term[i] == '*') {
            out.push_back(cur);
            cur.clear();
            ++i;
        } else if (static_cast<unsigned char>(term[i]) == 0xC2 &&
                   i + 1 < term.size() &&
                   static_cast<unsigned char>(term[i + 1]) == 0xB7) {
            out.push_back(cur);
            cur.clear();
            i += 2;
        } else {
            cur += term[i++];
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

// Parses sums of monomial terms, e.g. "3/2·x^2·y^-1 + 4 - x".
inline LaurentScalar parse_laurent(const std::string& src) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("malformed scalar: '" + src + "'");
    };
    LaurentScalar result;
    std::size_t i = 0;
    auto skip_ws = [&]() {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    };
    skip_ws();
    if (i == src.size()) fail();
    bool first = true;
    while (i < src.size()) {
        int sign = 1;
        skip_ws();
        if (src[i] == '+' || src[i] == '-') {
            if (src[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail();
        }
        first = false;
        // read one term up to the next top-level +/-
        std::string term;
        while (i < src.size() && src[i] != '+' &&
               !(src[i] == '-' && !term.empty() && term.back() != '^')) {
            term += src[i++];
        }
        Rational coeff = sign;
        LaurentScalar::Monomial mono;
        for (std::string f : detail::split_factors(term)) {
            // trim
            while (!f.empty() && std::isspace(static_cast<unsigned char>(f.front())))
                f.erase(f.begin());
            while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back())))
                f.pop_back();
            if (f.empty()) fail();
            if (std::isdigit(static_cast<unsigned char>(f.front()))) {
                coeff *= parse_rational(f);
            } else {
                std::size_t caret = f.find('^');
                std::string var = f.substr(0, caret);
                for (char ch : var)
                    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
                        fail();
                if (var.empty() || std::isdigit(static_cast<unsigned char>(var[0])))
                    fail();
                int e = 1;
                if (caret != std::string::npos) {
                    try {
                        e = std::stoi(f.substr(caret + 1));
                    } catch (const std::exception&) {
                        fail();
                    }
                }
                int ne = (mono.count(var) ? mono[var] : 0) + e;
                if (ne == 0) mono.erase(var); else mono[var] = ne;
            }
        }
        result += LaurentScalar::monomial(std::move(mono), coeff);
    }
    return result;
}

} // namespace lsym
