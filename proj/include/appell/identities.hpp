#pragma once

// Classical identities as exact polynomial checks.  Each oracle builds both
// sides from the closed-form families and reports their difference; the
// identity holds iff the residual is the zero polynomial.
//
//   a  B_n(x+1) - B_n(x) = n x^{n-1}
//   b  B_n(1-x) = (-1)^n B_n(x)
//   c  (-1)^n B_n(-x) - B_n(x) = n x^{n-1}
//   d  B_n(x) = 2^{n-1} (B_n(x/2) + B_n((x+1)/2))
//   e  B_n(1/2) = -(1 - 2^{1-n}) B_n(0)
//   f  (-1)^{n-1} B_{2n}(0) > 0                     (n >= 1)
//   g  E_n(x+1) + E_n(x) = 2 x^n
//   h  E_n(1-x) = (-1)^n E_n(x)
//   i  x^n = E_n(x) + (1/2) sum_{k<n} C(n,k) E_k(x)
//   j  E_n(x) = 2^{n+1}/(n+1) [B_{n+1}((x+1)/2) - B_{n+1}(x/2)]
//   k  sum_{k=1..m} k^n = (B_{n+1}(m+1) - B_{n+1}(1)) / (n+1)
//   l  sum_{k=0..m} (-1)^k k^n = ((-1)^m E_n(m+1) + E_n(0)) / 2
//   m  He_n(x) = (-1)^n He_n(-x)
//   n  x^{2n} = sum_k C(2n,2k) (2(n-k))!/(2^{n-k} (n-k)!) He_{2k}(x)
//   o  x^n = sum_m C(n,m) [Gamma(beta+n-m)/Gamma(beta)] (-1)^m m! L_m^{(beta-m)}(x)
//
// For the summation identities (k) and (l) the residual polynomial carries
// the residual at sample point m in its coefficient of x^m.

#include <string>
#include <vector>

#include "classical.hpp"
#include "report.hpp"

namespace appell {

struct OracleParams {
    /// Largest sample point m for the power-sum identities (k) and (l).
    long max_m = 10;
    /// Shape parameter of the gamma law in identity (o).
    Scalar beta = Scalar::ratio(1, 2);
};

inline const std::string& oracle_ids() {
    static const std::string ids = "abcdefghijklmno";
    return ids;
}

namespace detail {

inline Scalar sign_pow(std::size_t n) { return (n % 2) ? Scalar(-1) : Scalar(1); }

// n x^{n-1}, zero for n = 0.
inline Poly n_x_pow(std::size_t n) { return n == 0 ? Poly() : Poly::monomial(n - 1, Scalar(static_cast<long>(n))); }

inline Poly power_sum_residuals(std::size_t n, long max_m) {
    const Poly b = bernoulli(n + 1);
    std::vector<Scalar> res(static_cast<std::size_t>(max_m) + 1);
    Scalar lhs(0);
    for (long m = 1; m <= max_m; ++m) {
        lhs += Scalar(m).pow(static_cast<long>(n));
        const Scalar rhs = (b(Scalar(m + 1)) - b(Scalar(1))) / Scalar(static_cast<long>(n + 1));
        res[static_cast<std::size_t>(m)] = lhs - rhs;
    }
    return Poly(std::move(res));
}

inline Poly alternating_sum_residuals(std::size_t n, long max_m) {
    const Poly e = euler(n);
    std::vector<Scalar> res(static_cast<std::size_t>(max_m) + 1);
    Scalar lhs(0);
    for (long m = 0; m <= max_m; ++m) {
        // 0^0 = 1
        const Scalar term = (m == 0) ? (n == 0 ? Scalar(1) : Scalar(0)) : Scalar(m).pow(static_cast<long>(n));
        lhs += (m % 2) ? -term : term;
        const Scalar rhs = (((m % 2) ? Scalar(-1) : Scalar(1)) * e(Scalar(m + 1)) + e(Scalar(0))) / Scalar(2);
        res[static_cast<std::size_t>(m)] = lhs - rhs;
    }
    return Poly(std::move(res));
}

} // namespace detail

/// Checks one classical identity at degree n.
inline IdentityReport identity_oracle(char id, std::size_t n, const OracleParams& params = {}) {
    using detail::sign_pow;
    const Scalar half = Scalar::ratio(1, 2);
    const long deg = static_cast<long>(n);
    const std::string key(1, id);
    switch (id) {
    case 'a': {
        const Poly b = bernoulli(n);
        return exact_report(key, "bernoulli", deg, compose_affine(b, 1, 1) - b - detail::n_x_pow(n),
                            "first difference");
    }
    case 'b': {
        const Poly b = bernoulli(n);
        return exact_report(key, "bernoulli", deg, compose_affine(b, -1, 1) - sign_pow(n) * b, "symmetry");
    }
    case 'c': {
        const Poly b = bernoulli(n);
        return exact_report(key, "bernoulli", deg, sign_pow(n) * compose_affine(b, -1, 0) - b - detail::n_x_pow(n),
                            "second difference");
    }
    case 'd': {
        const Poly b = bernoulli(n);
        const Poly rhs = Scalar(2).pow(deg - 1) * (compose_affine(b, half, 0) + compose_affine(b, half, half));
        return exact_report(key, "bernoulli", deg, b - rhs, "duplication via U + Ber(1/2)");
    }
    case 'e': {
        const Poly b = bernoulli(n);
        const Scalar lhs = b(half);
        const Scalar rhs = -(Scalar(1) - Scalar(2).pow(1 - deg)) * b(Scalar(0));
        return exact_report(key, "bernoulli", deg, Poly::constant(lhs - rhs), "value at 1/2");
    }
    case 'f': {
        if (n == 0) throw InvalidParameter("identity (f) is stated for n >= 1");
        const Scalar v = sign_pow(n - 1) * bernoulli_numbers(2 * n)[2 * n];
        // positive value: empty residual; otherwise the offending value
        return exact_report(key, "bernoulli", deg, v.sign() > 0 ? Poly() : Poly::constant(v.is_zero() ? Scalar(-1) : v),
                            "(-1)^{n-1} B_2n(0) = " + v.to_string());
    }
    case 'g': {
        const Poly e = euler(n);
        return exact_report(key, "euler", deg, compose_affine(e, 1, 1) + e - Poly::monomial(n, 2), "difference");
    }
    case 'h': {
        const Poly e = euler(n);
        return exact_report(key, "euler", deg, compose_affine(e, -1, 1) - sign_pow(n) * e, "symmetry");
    }
    case 'i': {
        Poly rhs = euler(n);
        for (std::size_t k = 0; k < n; ++k)
            rhs += half * Scalar(binomial(deg, static_cast<long>(k))) * euler(k);
        return exact_report(key, "euler", deg, Poly::monomial(n) - rhs, "representation of powers");
    }
    case 'j': {
        const Poly b = bernoulli(n + 1);
        const Poly rhs = (Scalar(2).pow(deg + 1) / Scalar(deg + 1)) *
                         (compose_affine(b, half, half) - compose_affine(b, half, 0));
        return exact_report(key, "euler", deg, euler(n) - rhs, "Bernoulli-Euler relation");
    }
    case 'k':
        return exact_report(key, "bernoulli", deg, detail::power_sum_residuals(n, params.max_m),
                            "power sums m <= " + std::to_string(params.max_m));
    case 'l':
        return exact_report(key, "euler", deg, detail::alternating_sum_residuals(n, params.max_m),
                            "alternating power sums m <= " + std::to_string(params.max_m));
    case 'm': {
        const Poly h = hermite_he(n);
        return exact_report(key, "hermite", deg, h - sign_pow(n) * compose_affine(h, -1, 0), "symmetry");
    }
    case 'n': {
        Poly rhs;
        for (std::size_t k = 0; k <= n; ++k) {
            const std::size_t r = n - k;
            const Rational w(factorial(static_cast<long>(2 * r)),
                             factorial(static_cast<long>(r)) * (Integer(1) << static_cast<unsigned>(r)));
            rhs += Scalar(binomial(2 * deg, 2 * static_cast<long>(k))) * Scalar(w) * hermite_he(2 * k);
        }
        return exact_report(key, "hermite", deg, Poly::monomial(2 * n) - rhs, "even powers");
    }
    case 'o': {
        const Scalar& beta = params.beta;
        Poly rhs;
        for (std::size_t m = 0; m <= n; ++m) {
            Scalar ratio(1); // Gamma(beta + n - m) / Gamma(beta)
            for (std::size_t i = 0; i < n - m; ++i) ratio *= beta + Scalar(static_cast<long>(i));
            rhs += Scalar(binomial(deg, static_cast<long>(m))) * ratio * sign_pow(m) *
                   Scalar(factorial(static_cast<long>(m))) * laguerre_shifted(beta, m);
        }
        return exact_report(key, "gamma(beta=" + beta.to_string() + ")", deg, Poly::monomial(n) - rhs,
                            "powers via Laguerre");
    }
    default: throw InvalidParameter(std::string("unknown identity '") + id + "'");
    }
}

} // namespace appell
