#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsym/laurent.hpp"
#include "lsym/partition.hpp"

namespace lsym {

namespace detail {

// Elementary symmetric polynomials e_0..e_max of a list of Laurent values.
inline std::vector<LaurentScalar> elementary_of(const std::vector<LaurentScalar>& vals,
                                                int max) {
    std::vector<LaurentScalar> e(static_cast<std::size_t>(max) + 1);
    e[0] = LaurentScalar(1);
    for (const auto& a : vals)
        for (int j = max; j >= 1; --j)
            e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * a;
    return e;
}

// Complete homogeneous h_0..h_max of a list of Laurent values.
inline std::vector<LaurentScalar> complete_of(const std::vector<LaurentScalar>& vals,
                                              int max) {
    std::vector<LaurentScalar> h(static_cast<std::size_t>(max) + 1);
    h[0] = LaurentScalar(1);
    for (const auto& a : vals)
        for (int j = 1; j <= max; ++j)
            h[static_cast<std::size_t>(j)] += a * h[static_cast<std::size_t>(j - 1)];
    return h;
}

// Product of character factors for the parts of tau over a fixed alphabet.
inline LaurentScalar character_product(const std::vector<LaurentScalar>& alphabet,
                                       const Partition& tau, bool symmetric) {
    int max_part = tau.empty() ? 0 : tau.parts().front();
    auto chars = symmetric ? complete_of(alphabet, max_part)
                           : elementary_of(alphabet, max_part);
    LaurentScalar out(1);
    for (int part : tau.parts()) out *= chars[static_cast<std::size_t>(part)];
    return out;
}

inline LaurentScalar torus_var(int j, int e) {
    return LaurentScalar::variable("x" + std::to_string(j), e);
}

// prod_j (1 - x_j^s)(1 - x_j^-s) for j in [1, m]
inline LaurentScalar short_long_density(int m, int s) {
    LaurentScalar d(1);
    const LaurentScalar one(1);
    for (int j = 1; j <= m; ++j)
        d *= (one - torus_var(j, s)) * (one - torus_var(j, -s));
    return d;
}

// prod_{j<k} (1 - x_j x_k)(1 - x_j^-1 x_k^-1)(1 - x_j x_k^-1)(1 - x_j^-1 x_k)
inline LaurentScalar cross_density(int m) {
    LaurentScalar d(1);
    const LaurentScalar one(1);
    for (int j = 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k)
            d *= (one - torus_var(j, 1) * torus_var(k, 1)) *
                 (one - torus_var(j, -1) * torus_var(k, -1)) *
                 (one - torus_var(j, 1) * torus_var(k, -1)) *
                 (one - torus_var(j, -1) * torus_var(k, 1));
    return d;
}

// Alphabet {x_1^{+-1}, ..., x_m^{+-1}}, optionally negated, plus fixed values.
inline std::vector<LaurentScalar> torus_alphabet(int m, int sign,
                                                 std::initializer_list<int> fixed) {
    std::vector<LaurentScalar> alphabet;
    for (int v : fixed) alphabet.push_back(LaurentScalar(Rational(v)));
    for (int j = 1; j <= m; ++j) {
        alphabet.push_back(LaurentScalar(Rational(sign)) * torus_var(j, 1));
        alphabet.push_back(LaurentScalar(Rational(sign)) * torus_var(j, -1));
    }
    return alphabet;
}

} // namespace detail

struct WeylLimits {
    int max_rank = 5;   // n <= 10
    int max_weight = 8; // constant-term extraction blows up beyond desk scale
};

/**
 * Exact Haar integral over Sp(n), n = 2m, of a product of exterior-power
 * characters: dim (wedge^tau C^n)^{Sp(n)} as the constant term
 *
 *   (1/(2^m m!)) CT[ prod_i e_{tau_i}(x_1, x_1^-1, ..., x_m, x_m^-1)
 *                    * prod_j (1-x_j^2)(1-x_j^-2)
 *                    * prod_{j<k} (1-x_j x_k)(1-x_j^-1 x_k^-1)
 *                                 (1-x_j x_k^-1)(1-x_j^-1 x_k) ],
 *
 * the density being prod_{alpha in roots(C_m)} (1 - x^alpha). With
 * symmetric = true the character factors are h_{tau_i} instead, giving
 * dim (Sym^tau C^n)^{Sp(n)}.
 */
inline std::int64_t weyl_ct_sp(int n, const Partition& tau, bool symmetric = false,
                               const WeylLimits& limits = {}) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("Sp(n) requires positive even n");
    int m = n / 2;
    if (m > limits.max_rank)
        throw std::domain_error("rank " + std::to_string(m) + " beyond configured limit");
    if (tau.weight() > limits.max_weight)
        throw std::domain_error("weight " + std::to_string(tau.weight()) +
                                " beyond configured limit");

    LaurentScalar integrand =
        detail::character_product(detail::torus_alphabet(m, 1, {}), tau, symmetric);
    integrand *= detail::short_long_density(m, 2) * detail::cross_density(m);

    std::int64_t weyl_order = 1;
    for (int j = 1; j <= m; ++j) weyl_order *= 2 * j;
    Rational dim = integrand.constant_coefficient() / weyl_order;
    if (!is_integer(dim))
        throw std::logic_error("non-integral Weyl constant term");
    return numerator(dim).convert_to<std::int64_t>();
}

/**
 * Exact Haar integral over the full orthogonal group O(n) of a product of
 * exterior-power (or, with symmetric = true, symmetric-power) characters:
 * the average of the constant-term integrals over the two components.
 *
 * Component densities, with CT always against prod_{roots}(1 - x^alpha):
 *   SO(2m+1): alphabet {1, x_j^{+-1}}, B_m roots, |W| = 2^m m!;
 *   O^-(2m+1) = -SO(2m+1): same density, alphabet negated;
 *   SO(2m): alphabet {x_j^{+-1}}, D_m roots, |W| = 2^{m-1} m!;
 *   O^-(2m): alphabet {1, -1, x_j^{+-1} (j <= m-1)}, C_{m-1} roots,
 *            |W| = 2^{m-1} (m-1)!.
 */
inline std::int64_t weyl_ct_o(int n, const Partition& tau, bool symmetric = false,
                              const WeylLimits& limits = {}) {
    if (n < 1) throw std::domain_error("O(n) requires n >= 1");
    if ((n + 1) / 2 > limits.max_rank)
        throw std::domain_error("rank " + std::to_string((n + 1) / 2) +
                                " beyond configured limit");
    if (tau.weight() > limits.max_weight)
        throw std::domain_error("weight " + std::to_string(tau.weight()) +
                                " beyond configured limit");

    auto component = [&](const std::vector<LaurentScalar>& alphabet,
                         const LaurentScalar& density,
                         std::int64_t weyl_order) -> Rational {
        LaurentScalar integrand = detail::character_product(alphabet, tau, symmetric);
        integrand *= density;
        return integrand.constant_coefficient() / weyl_order;
    };

    Rational plus, minus;
    if (n % 2 == 1) {
        int m = n / 2;
        std::int64_t order = 1;
        for (int j = 1; j <= m; ++j) order *= 2 * j;
        LaurentScalar density = detail::short_long_density(m, 1) * detail::cross_density(m);
        plus = component(detail::torus_alphabet(m, 1, {1}), density, order);
        minus = component(detail::torus_alphabet(m, -1, {-1}), density, order);
    } else {
        int m = n / 2;
        std::int64_t order_plus = 1;
        for (int j = 2; j <= m; ++j) order_plus *= 2 * j;
        plus = component(detail::torus_alphabet(m, 1, {}), detail::cross_density(m),
                         order_plus);
        std::int64_t order_minus = 1;
        for (int j = 1; j <= m - 1; ++j) order_minus *= 2 * j;
        LaurentScalar density =
            detail::short_long_density(m - 1, 2) * detail::cross_density(m - 1);
        minus = component(detail::torus_alphabet(m - 1, 1, {1, -1}), density,
                          order_minus);
    }

    Rational dim = (plus + minus) / 2;
    if (!is_integer(dim))
        throw std::logic_error("non-integral Weyl constant term");
    return numerator(dim).convert_to<std::int64_t>();
}

} // namespace lsym
