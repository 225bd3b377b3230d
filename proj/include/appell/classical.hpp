#pragma once

// Closed forms for the classical Appell families and their generator laws:
//
//   Bernoulli B_n     <- U(0,1)
//   Euler E_n         <- Bernoulli(1/2)
//   Hermite He_n      <- N(0,1),  H_n <- N(mu, sigma^2)
//   Laguerre-type     <- Gamma(beta, alpha)
//
// These are computed by their own recurrences and explicit sums, never by
// the generic engine, so that the two can be compared.

#include <string>
#include <variant>
#include <vector>

#include "appell.hpp"
#include "distribution.hpp"
#include "poly.hpp"

namespace appell {

/// B~_0 .. B~_N from B~_n = -sum_{k<n} C(n,k) B~_k / (n-k+1).
inline std::vector<Scalar> bernoulli_numbers(std::size_t N) {
    std::vector<Scalar> b(N + 1);
    b[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Scalar acc(0);
        for (std::size_t k = 0; k < n; ++k)
            acc += Scalar(binomial(static_cast<long>(n), static_cast<long>(k))) * b[k] /
                   Scalar(static_cast<long>(n - k + 1));
        b[n] = -acc;
    }
    return b;
}

/// E~_n = E_n(0) from E~_n = -(1/2) sum_{k<n} C(n,k) E~_k.
inline std::vector<Scalar> euler_constants(std::size_t N) {
    std::vector<Scalar> e(N + 1);
    e[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Scalar acc(0);
        for (std::size_t k = 0; k < n; ++k) acc += Scalar(binomial(static_cast<long>(n), static_cast<long>(k))) * e[k];
        e[n] = -acc / Scalar(2);
    }
    return e;
}

/// Euler numbers E^_n = 2^n E_n(1/2) from
/// E^_n = 1 - sum_{k<n} C(n,k) 2^{n-k-1} E^_k.  They are integers; a
/// non-integer value is reported as a logic error.
inline std::vector<Scalar> euler_numbers(std::size_t N) {
    std::vector<Scalar> e(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        Scalar acc(1);
        for (std::size_t k = 0; k < n; ++k)
            acc -= Scalar(binomial(static_cast<long>(n), static_cast<long>(k))) *
                   Scalar(2).pow(static_cast<long>(n - k) - 1) * e[k];
        if (!acc.is_integer())
            throw std::logic_error("Euler number " + std::to_string(n) + " is not an integer: " + acc.to_string());
        e[n] = acc;
    }
    return e;
}

namespace detail {

inline Poly from_constants_closed(const std::vector<Scalar>& c, std::size_t n) {
    std::vector<Scalar> v(n + 1);
    for (std::size_t m = 0; m <= n; ++m)
        v[m] = Scalar(binomial(static_cast<long>(n), static_cast<long>(m))) * c[n - m];
    return Poly(std::move(v));
}

} // namespace detail

/// B_n(x) = sum_m C(n,m) B~_{n-m} x^m.
inline Poly bernoulli(std::size_t n) { return detail::from_constants_closed(bernoulli_numbers(n), n); }

/// E_n(x) = sum_m C(n,m) E~_{n-m} x^m.
inline Poly euler(std::size_t n) { return detail::from_constants_closed(euler_constants(n), n); }

/// He_n(x) = n! sum_{k<=n/2} (-1)^k x^{n-2k} / ((n-2k)! k! 2^k).
inline Poly hermite_he(std::size_t n) {
    std::vector<Scalar> v(n + 1);
    const Integer nf = factorial(static_cast<long>(n));
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const Integer den = factorial(static_cast<long>(n - 2 * k)) * factorial(static_cast<long>(k)) *
                            (Integer(1) << static_cast<unsigned>(k));
        Rational c(nf, den);
        if (k % 2) c = -c;
        v[n - 2 * k] = Scalar(c);
    }
    return Poly(std::move(v));
}

/// H_n(x) = sigma^n He_n((x - mu)/sigma), the family of N(mu, sigma2).
/// He_n has the parity of n, so only even powers of sigma appear and the
/// result stays rational for rational sigma2.
inline Poly hermite_general(const Scalar& mu, const Scalar& sigma2, std::size_t n) {
    if (sigma2.sign() <= 0) throw InvalidParameter("hermite_general: sigma2 must be positive");
    const Poly he = hermite_he(n);
    std::vector<Scalar> scaled(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        if ((n - j) % 2 == 0) scaled[j] = he.coeff(j) * sigma2.pow(static_cast<long>((n - j) / 2));
    return compose_affine(Poly(std::move(scaled)), 1, -mu);
}

/// Generalized binomial C(beta, j) = beta (beta-1) ... (beta-j+1) / j!.
inline Scalar generalized_binomial(const Scalar& beta, std::size_t j) {
    Scalar r(1);
    for (std::size_t i = 0; i < j; ++i) r *= (beta - Scalar(static_cast<long>(i))) / Scalar(static_cast<long>(i + 1));
    return r;
}

/// L_n^{(beta-n)}(x) = sum_m (-1)^m C(beta, n-m) x^m / m!.
inline Poly laguerre_shifted(const Scalar& beta, std::size_t n) {
    if (beta.sign() <= 0) throw InvalidParameter("laguerre_shifted: beta must be positive");
    std::vector<Scalar> v(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        Scalar c = generalized_binomial(beta, n - m) / Scalar(factorial(static_cast<long>(m)));
        v[m] = (m % 2) ? -c : c;
    }
    return Poly(std::move(v));
}

/// Appell polynomial of Gamma(beta, alpha) (alpha is the rate):
/// ((-1)^n n! / alpha^n) L_n^{(beta-n)}(alpha x).
inline Poly gamma_appell(const Scalar& beta, const Scalar& alpha, std::size_t n) {
    if (alpha.sign() <= 0) throw InvalidParameter("gamma_appell: alpha must be positive");
    const Scalar sign = (n % 2) ? Scalar(-1) : Scalar(1);
    const Scalar factor = sign * Scalar(factorial(static_cast<long>(n))) / alpha.pow(static_cast<long>(n));
    return factor * compose_affine(laguerre_shifted(beta, n), alpha, 0);
}

struct BernoulliFamily {};
struct EulerFamily {};
struct HermiteHeFamily {};
struct HermiteGeneralFamily {
    Scalar mu;
    Scalar sigma2;
};
struct LaguerreGammaFamily {
    Scalar beta;
    Scalar alpha;
};

using FamilyTag =
    std::variant<BernoulliFamily, EulerFamily, HermiteHeFamily, HermiteGeneralFamily, LaguerreGammaFamily>;

/// The generator law whose Appell family is the tagged classical family.
inline DistSpec generator(const FamilyTag& tag) {
    struct Visitor {
        DistSpec operator()(BernoulliFamily) const { return DistSpec::uniform(); }
        DistSpec operator()(EulerFamily) const { return DistSpec::bernoulli(Scalar::ratio(1, 2)); }
        DistSpec operator()(HermiteHeFamily) const { return DistSpec::normal(0, 1); }
        DistSpec operator()(const HermiteGeneralFamily& f) const { return DistSpec::normal(f.mu, f.sigma2); }
        DistSpec operator()(const LaguerreGammaFamily& f) const { return DistSpec::gamma(f.beta, f.alpha); }
    };
    return std::visit(Visitor{}, tag);
}

/// Closed-form member of degree n.
inline Poly family_poly(const FamilyTag& tag, std::size_t n) {
    struct Visitor {
        std::size_t n;
        Poly operator()(BernoulliFamily) const { return bernoulli(n); }
        Poly operator()(EulerFamily) const { return euler(n); }
        Poly operator()(HermiteHeFamily) const { return hermite_he(n); }
        Poly operator()(const HermiteGeneralFamily& f) const { return hermite_general(f.mu, f.sigma2, n); }
        Poly operator()(const LaguerreGammaFamily& f) const { return gamma_appell(f.beta, f.alpha, n); }
    };
    return std::visit(Visitor{n}, tag);
}

inline std::string family_name(const FamilyTag& tag) {
    struct Visitor {
        std::string operator()(BernoulliFamily) const { return "bernoulli"; }
        std::string operator()(EulerFamily) const { return "euler"; }
        std::string operator()(HermiteHeFamily) const { return "hermite"; }
        std::string operator()(const HermiteGeneralFamily& f) const {
            return "hermite(mu=" + f.mu.to_string() + ",sigma2=" + f.sigma2.to_string() + ")";
        }
        std::string operator()(const LaguerreGammaFamily& f) const {
            return "gamma(beta=" + f.beta.to_string() + ",alpha=" + f.alpha.to_string() + ")";
        }
    };
    return std::visit(Visitor{}, tag);
}

} // namespace appell
