#pragma once

// Appell polynomials associated with a distribution.
//
// Q_n is the monic degree-n polynomial with Q_n' = n Q_{n-1} and
// E Q_n(xi) = 0.  Three independent constructions are provided:
//
//   recurrence      Q_k(0) = -sum_{i=1..k} C(k,i) Q_{k-i}(0) mu_i
//   series inverse  sum_n Q_n(0) u^n/n! = 1 / sum_n mu_n u^n/n!
//   determinant     Q_k(0) = -det of the k x k moment matrix (Bareiss)
//
// and in every case Q_n(x) = sum_k C(n,k) Q_k(0) x^{n-k}.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "distribution.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace appell {

enum class Construction { Recurrence, SeriesInversion, Determinant, ClosedForm };

inline std::string to_string(Construction c) {
    switch (c) {
    case Construction::Recurrence: return "recurrence";
    case Construction::SeriesInversion: return "inversion";
    case Construction::Determinant: return "determinant";
    case Construction::ClosedForm: return "closed-form";
    }
    return "?";
}

struct AppellPoly {
    Poly poly;
    std::size_t n = 0;
    DistSpec spec;
    Construction construction = Construction::Recurrence;

    Scalar operator()(const Scalar& x) const { return poly(x); }
};

namespace detail {

inline AppellPoly make_appell(Poly poly, std::size_t n, const DistSpec& spec, Construction how) {
    if (poly.degree() != static_cast<long>(n) || !(poly.leading() == Scalar(1)))
        throw std::logic_error("Appell polynomial of degree " + std::to_string(n) + " is not monic: " +
                               poly.to_string());
    return AppellPoly{std::move(poly), n, spec, how};
}

inline void require_exact(const DistSpec& spec, const char* what) {
    if (!spec.exact())
        throw InexactUnsupported(std::string(what) + " needs exact moments; '" + spec.to_string() +
                                 "' has inexact moments");
}

} // namespace detail

/// Q_n(x) = sum_k C(n,k) Q_k(0) x^{n-k}, from the constants Q_0(0)..Q_n(0).
inline Poly appell_from_constants(const std::vector<Scalar>& q0, std::size_t n) {
    std::vector<Scalar> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        c[n - k] = Scalar(binomial(static_cast<long>(n), static_cast<long>(k))) * q0[k];
    return Poly(std::move(c));
}

/// [Q_0(0) .. Q_N(0)] by the moment recurrence.
inline std::vector<Scalar> appell_constants(const DistSpec& spec, std::size_t N) {
    const auto mu = spec.moments_upto(N);
    std::vector<Scalar> q(N + 1);
    q[0] = 1;
    for (std::size_t k = 1; k <= N; ++k) {
        Scalar acc(0);
        for (std::size_t i = 1; i <= k; ++i)
            acc += Scalar(binomial(static_cast<long>(k), static_cast<long>(i))) * q[k - i] * mu[i];
        q[k] = -acc;
    }
    return q;
}

/// The constants as coefficients of the exponential generating function
/// 1 / E(e^{u xi}), obtained by inverting the truncated moment series.
inline std::vector<Scalar> appell_constants_via_inversion(const DistSpec& spec, std::size_t N) {
    detail::require_exact(spec, "series inversion");
    const auto mu = spec.moments_upto(N);
    // ordinary coefficients a_n = mu_n / n!
    std::vector<Scalar> a(N + 1), c(N + 1);
    Integer fact = 1;
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0) fact *= static_cast<long>(n);
        a[n] = mu[n] / Scalar(fact);
    }
    c[0] = Scalar(1) / a[0];
    for (std::size_t n = 1; n <= N; ++n) {
        Scalar acc(0);
        for (std::size_t j = 1; j <= n; ++j) acc += a[j] * c[n - j];
        c[n] = -acc / a[0];
    }
    fact = 1;
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0) fact *= static_cast<long>(n);
        c[n] *= Scalar(fact);
    }
    return c;
}

/// The k x k matrix whose negated determinant is Q_k(0).  Row i belongs to
/// the equation of order r = k - i; column 0 holds mu_r and column c holds
/// the coefficient C(r, k-c) mu_{r-k+c} of the unknown Q_{k-c}(0).
inline Matrix<Rational> q0_moment_matrix(const DistSpec& spec, std::size_t k) {
    detail::require_exact(spec, "determinant construction");
    const auto mu = spec.moments_upto(k);
    Matrix<Rational> m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t r = k - i;
        m(i, 0) = mu[r].rational();
        for (std::size_t c = 1; c < k; ++c) {
            const std::size_t j = k - c;
            if (j <= r)
                m(i, c) = Rational(binomial(static_cast<long>(r), static_cast<long>(j))) * mu[r - j].rational();
        }
    }
    return m;
}

/// Q_k(0) = -det(q0_moment_matrix(spec, k)).
inline Scalar q0_via_determinant(const DistSpec& spec, std::size_t k) {
    if (k == 0) return Scalar(1);
    return Scalar(Rational(-bareiss_determinant(q0_moment_matrix(spec, k))));
}

inline std::vector<Scalar> appell_constants_via_determinant(const DistSpec& spec, std::size_t N) {
    detail::require_exact(spec, "determinant construction");
    std::vector<Scalar> q(N + 1);
    for (std::size_t k = 0; k <= N; ++k) q[k] = q0_via_determinant(spec, k);
    return q;
}

inline std::vector<Scalar> appell_constants(const DistSpec& spec, std::size_t N, Construction how) {
    switch (how) {
    case Construction::SeriesInversion: return appell_constants_via_inversion(spec, N);
    case Construction::Determinant: return appell_constants_via_determinant(spec, N);
    default: return appell_constants(spec, N);
    }
}

/// Q_0 .. Q_N built from one set of constants.
inline std::vector<AppellPoly> appell_family(const DistSpec& spec, std::size_t N,
                                             Construction how = Construction::Recurrence) {
    const auto q0 = appell_constants(spec, N, how);
    std::vector<AppellPoly> out;
    out.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        out.push_back(detail::make_appell(appell_from_constants(q0, n), n, spec, how));
    return out;
}

inline AppellPoly appell_poly(const DistSpec& spec, std::size_t n,
                              Construction how = Construction::Recurrence) {
    return detail::make_appell(appell_from_constants(appell_constants(spec, n, how), n), n, spec, how);
}

inline std::vector<AppellPoly> appell_via_series_inversion(const DistSpec& spec, std::size_t N) {
    return appell_family(spec, N, Construction::SeriesInversion);
}

/// Q_n(x + y) via sum_k C(n,k) Q_k(x) y^{n-k}.
inline Poly shift(const AppellPoly& p, const Scalar& y) {
    const auto family = appell_family(p.spec, p.n);
    Poly out;
    for (std::size_t k = 0; k <= p.n; ++k)
        out += Scalar(binomial(static_cast<long>(p.n), static_cast<long>(k))) * y.pow(static_cast<long>(p.n - k)) *
               family[k].poly;
    return out;
}

/// Q_n(m x) via sum_k C(n,k) Q_k(x) (m-1)^{n-k} x^{n-k}.
inline Poly multiplication_formula(const AppellPoly& p, const Scalar& m) {
    const auto family = appell_family(p.spec, p.n);
    const Scalar step = m - Scalar(1);
    Poly out;
    for (std::size_t k = 0; k <= p.n; ++k) {
        const auto e = p.n - k;
        out += family[k].poly *
               Poly::monomial(e, Scalar(binomial(static_cast<long>(p.n), static_cast<long>(k))) *
                                     step.pow(static_cast<long>(e)));
    }
    return out;
}

/// x -> E p(x + xi), expanded termwise against the moments of xi.
inline Poly expect_shift(const Poly& p, const DistSpec& spec) {
    if (p.is_zero()) return {};
    const auto n = static_cast<std::size_t>(p.degree());
    const auto mu = spec.moments_upto(n);
    std::vector<Scalar> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const Scalar& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= i; ++j)
            out[j] += c * Scalar(binomial(static_cast<long>(i), static_cast<long>(j))) * mu[i - j];
    }
    return Poly(std::move(out));
}

/// M with x^j = sum_k M(j,k) Q_k(x); M(j,k) = C(j,k) mu_{j-k}.
inline Matrix<Scalar> to_power_basis(const DistSpec& spec, std::size_t n) {
    const auto mu = spec.moments_upto(n);
    Matrix<Scalar> m(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t k = 0; k <= j; ++k)
            m(j, k) = Scalar(binomial(static_cast<long>(j), static_cast<long>(k))) * mu[j - k];
    return m;
}

/// A with Q_j(x) = sum_i A(j,i) x^i.
inline Matrix<Scalar> appell_coefficient_matrix(const DistSpec& spec, std::size_t n) {
    const auto family = appell_family(spec, n);
    Matrix<Scalar> m(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i) m(j, i) = family[j].poly.coeff(i);
    return m;
}

/// Appell polynomial of -xi.
inline AppellPoly reflect(const DistSpec& spec, std::size_t n) {
    return appell_poly(DistSpec::affine(-1, 0, spec), n);
}

/// Appell polynomial of xi_a + xi_b for independent xi_a, xi_b.
inline AppellPoly convolve(const DistSpec& a, const DistSpec& b, std::size_t n) {
    return appell_poly(DistSpec::sum(a, b), n);
}

/// Coefficients R(i,j) of x^i y^j in
///   Q_n^{(a+b)}(x+y) - sum_k C(n,k) Q_k^{(a)}(x) Q_{n-k}^{(b)}(y).
inline Matrix<Scalar> convolution_identity_residual(const DistSpec& a, const DistSpec& b, std::size_t n) {
    const auto joint = convolve(a, b, n).poly;
    const auto fa = appell_family(a, n), fb = appell_family(b, n);
    Matrix<Scalar> r(n + 1, n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        const Scalar c = joint.coeff(d);
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i <= d; ++i)
            r(i, d - i) += c * Scalar(binomial(static_cast<long>(d), static_cast<long>(i)));
    }
    for (std::size_t k = 0; k <= n; ++k) {
        const Scalar w(binomial(static_cast<long>(n), static_cast<long>(k)));
        const Poly& pa = fa[k].poly;
        const Poly& pb = fb[n - k].poly;
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= n - k; ++j) r(i, j) -= w * pa.coeff(i) * pb.coeff(j);
    }
    return r;
}

/// sum_k C(n,k) Q_k^{(a)}(x) Q_{n-k}^{(b)}(-x); constant in x.
inline Poly convolution_constant(const DistSpec& a, const DistSpec& b, std::size_t n) {
    const auto fa = appell_family(a, n), fb = appell_family(b, n);
    Poly out;
    for (std::size_t k = 0; k <= n; ++k)
        out += Scalar(binomial(static_cast<long>(n), static_cast<long>(k))) * fa[k].poly *
               compose_affine(fb[n - k].poly, -1, 0);
    return out;
}

/// a^n Q_n^{(xi)}((x - b)/a), which must equal the Appell polynomial of a xi + b.
inline Poly affine_appell_via_scaling(const DistSpec& spec, const Scalar& a, const Scalar& b, std::size_t n) {
    const auto q = appell_poly(spec, n).poly;
    return a.pow(static_cast<long>(n)) * compose_affine(q, Scalar(1) / a, -b / a);
}

/// kappa_{n+1} = sum_{j=0..n} C(n,j) mu_{j+1} Q_{n-j}(0).
inline Scalar cumulant_via_appell(const DistSpec& spec, std::size_t n) {
    const auto mu = spec.moments_upto(n + 1);
    const auto q = appell_constants(spec, n);
    Scalar acc(0);
    for (std::size_t j = 0; j <= n; ++j)
        acc += Scalar(binomial(static_cast<long>(n), static_cast<long>(j))) * mu[j + 1] * q[n - j];
    return acc;
}

/// [kappa_1 .. kappa_K] through the Appell constants.
inline std::vector<Scalar> cumulants_via_appell(const DistSpec& spec, std::size_t K) {
    std::vector<Scalar> out;
    if (K == 0) return out;
    const auto mu = spec.moments_upto(K);
    const auto q = appell_constants(spec, K - 1);
    for (std::size_t n = 0; n < K; ++n) {
        Scalar acc(0);
        for (std::size_t j = 0; j <= n; ++j)
            acc += Scalar(binomial(static_cast<long>(n), static_cast<long>(j))) * mu[j + 1] * q[n - j];
        out.push_back(acc);
    }
    return out;
}

/// Q_{n+1} = (x - a) Q_n - n b Q_{n-1} - sum_{j<=n-2} tail[j] Q_j
/// with a = kappa_1, b = kappa_2 and tail[j] = C(n,j) kappa_{n+1-j}.
struct RecurrenceTail {
    Scalar a;
    Scalar b;
    std::vector<Scalar> tail;
};

inline RecurrenceTail recurrence_tail(const DistSpec& spec, std::size_t n) {
    const auto kappa = cumulants_upto(spec, std::max<std::size_t>(n + 1, 2));
    RecurrenceTail out{kappa[0], kappa[1], {}};
    for (std::size_t j = 0; j + 2 <= n; ++j)
        out.tail.push_back(Scalar(binomial(static_cast<long>(n), static_cast<long>(j))) * kappa[n - j]);
    return out;
}

/// Rebuilds Q_{n+1} from a decomposition and the lower family members.
inline Poly reconstruct_from_tail(const RecurrenceTail& t, std::size_t n, const std::vector<AppellPoly>& family) {
    Poly out = Poly(std::vector<Scalar>{-t.a, Scalar(1)}) * family[n].poly;
    if (n >= 1) out -= Scalar(static_cast<long>(n)) * t.b * family[n - 1].poly;
    for (std::size_t j = 0; j < t.tail.size(); ++j) out -= t.tail[j] * family[j].poly;
    return out;
}

struct OrthogonalityResult {
    bool orthogonal = false;
    /// Index of the first offending cumulant: 2 for a degenerate law
    /// (kappa_2 <= 0), otherwise the first nonzero kappa_k with k >= 3.
    std::optional<std::size_t> first_violation;
};

/// Finite-order Favard certificate: the family obeys a three-term
/// recurrence up to degree K iff kappa_3 .. kappa_K all vanish, and the
/// recurrence comes from a positive-definite functional iff kappa_2 > 0.
/// A point mass therefore fails at k = 2.
inline OrthogonalityResult orthogonality_check(const DistSpec& spec, std::size_t K) {
    if (K < 3) throw InvalidParameter("orthogonality_check needs K >= 3");
    const auto kappa = cumulants_upto(spec, K);
    if (kappa[1].sign() <= 0) return {false, 2};
    for (std::size_t k = 3; k <= K; ++k)
        if (!kappa[k - 1].is_zero()) return {false, k};
    return {true, std::nullopt};
}

} // namespace appell
