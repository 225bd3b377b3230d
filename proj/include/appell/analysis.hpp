#pragma once

// Moment representations Q_n(x) = E(x + c + i zeta)^n through symmetric
// companion laws, and certified positive-root isolation for polynomials
// whose coefficient signs change exactly once.

#include <mutex>
#include <string>
#include <vector>

#include "classical.hpp"
#include "poly.hpp"

namespace appell {

/// Symmetric laws zeta whose characteristic function is the reciprocal
/// moment generating function of a centred generator:
///   Logistic          density (pi/2) sech^2(pi x)   <- U(-1/2, 1/2)
///   HyperbolicSecant  density sech(pi y)            <- Bernoulli(1/2) - 1/2
///   StandardNormal                                  <- N(0,1)
enum class SymmetricMomentLaw { Logistic, HyperbolicSecant, StandardNormal };

inline std::string to_string(SymmetricMomentLaw law) {
    switch (law) {
    case SymmetricMomentLaw::Logistic: return "logistic";
    case SymmetricMomentLaw::HyperbolicSecant: return "hyperbolic-secant";
    case SymmetricMomentLaw::StandardNormal: return "standard-normal";
    }
    return "?";
}

/// E(zeta^{2n}).  The logistic and hyperbolic secant moments are defined
/// through the polynomial families, (-1)^n B_2n(1/2) and (-1)^n E_2n(1/2);
/// the normal ones through (2n)! / (2^n n!).
inline Scalar companion_even_moment(SymmetricMomentLaw law, std::size_t n) {
    const Scalar sign = (n % 2) ? Scalar(-1) : Scalar(1);
    const Scalar half = Scalar::ratio(1, 2);
    switch (law) {
    case SymmetricMomentLaw::Logistic: return sign * bernoulli(2 * n)(half);
    case SymmetricMomentLaw::HyperbolicSecant: return sign * euler(2 * n)(half);
    case SymmetricMomentLaw::StandardNormal:
        return Scalar(Rational(factorial(static_cast<long>(2 * n)),
                               factorial(static_cast<long>(n)) * (Integer(1) << static_cast<unsigned>(n))));
    }
    throw std::logic_error("unhandled law");
}

/// Lazily extended even-moment table of a companion law.  Odd moments are
/// zero by symmetry.
class CompanionMoments {
public:
    explicit CompanionMoments(SymmetricMomentLaw law) : law_(law) {}

    SymmetricMomentLaw law() const { return law_; }

    /// E(zeta^k) for any k >= 0.
    Scalar moment(std::size_t k) const {
        if (k % 2) return Scalar(0);
        std::lock_guard lock(mutex_);
        while (even_.size() <= k / 2) even_.push_back(companion_even_moment(law_, even_.size()));
        return even_[k / 2];
    }

private:
    SymmetricMomentLaw law_;
    mutable std::mutex mutex_;
    mutable std::vector<Scalar> even_;
};

/// E(x + shift + i zeta)^n = sum_{k even} C(n,k) (-1)^{k/2} E(zeta^k) (x + shift)^{n-k}.
inline Poly complex_moment_poly(SymmetricMomentLaw law, const Scalar& shift, std::size_t n) {
    const CompanionMoments zeta(law);
    // coefficients in powers of y = x + shift, then substitute
    std::vector<Scalar> in_y(n + 1);
    for (std::size_t k = 0; k <= n; k += 2) {
        const Scalar sign = ((k / 2) % 2) ? Scalar(-1) : Scalar(1);
        in_y[n - k] = sign * Scalar(binomial(static_cast<long>(n), static_cast<long>(k))) * zeta.moment(k);
    }
    return compose_affine(Poly(std::move(in_y)), 1, shift);
}

/// Number of sign changes in the nonzero coefficients, ascending powers.
inline std::size_t sign_variations(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("sign_variations of the zero polynomial");
    std::size_t changes = 0;
    int last = 0;
    for (const auto& c : p.coeffs()) {
        const int s = c.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

struct RootReport {
    std::size_t sign_variations = 0;
    /// Multiplicity of the root at the origin that was factored out.
    std::size_t zero_multiplicity = 0;
    Scalar lo;
    Scalar hi;
    Scalar root;
    Scalar residual;
    bool unique = false;
    std::size_t iterations = 0;
};

/// Isolates the unique positive root certified by a single sign variation.
///
/// The factor x^m is stripped first, leaving q with q(0) != 0.  A linear q
/// gives the root exactly, with lo = hi = root.  Otherwise the root
/// lies in (0, 1 + max_k |q_k / q_lead|] (Cauchy bound) and is bisected,
/// with exact dyadic midpoints when the coefficients are exact, until the
/// bracket is narrower than rel_tol * lo and |p(x*)| <= rel_tol * sum_k |p_k| x*^k.
inline RootReport isolate_positive_root(const Poly& p, double rel_tol = 1e-12) {
    RootReport rep;
    rep.sign_variations = sign_variations(p);
    if (rep.sign_variations != 1)
        throw NotSingleVariation("polynomial has " + std::to_string(rep.sign_variations) +
                                 " sign variations; a unique positive root is not certified");

    const auto& c = p.coeffs();
    std::size_t m = 0;
    while (c[m].is_zero()) ++m;
    rep.zero_multiplicity = m;
    const Poly q(std::vector<Scalar>(c.begin() + static_cast<long>(m), c.end()));

    const Scalar tol = p.exact() ? Scalar(Rational(rel_tol)) : Scalar::inexact(rel_tol);
    auto residual_ok = [&](const Scalar& x) {
        Scalar scale(0);
        for (std::size_t k = 0; k < c.size(); ++k) scale += c[k].abs() * x.pow(static_cast<long>(k));
        return p(x).abs() <= tol * scale;
    };

    const int sign0 = q.coeff(0).sign();
    if (q.degree() == 1) {
        const Scalar x = -q.coeff(0) / q.coeff(1);
        rep.root = x;
        rep.lo = x;
        rep.hi = x;
    } else {
        Scalar bound(0);
        for (const auto& qk : q.coeffs()) bound = std::max(bound, (qk / q.leading()).abs());
        Scalar lo(0), hi = Scalar(1) + bound;
        const Scalar half = Scalar::ratio(1, 2);
        bool exact_hit = false;
        for (std::size_t it = 0; it < 4000; ++it) {
            const Scalar mid = (lo + hi) * half;
            if (lo.sign() > 0 && hi - lo <= tol * lo && residual_ok(mid)) break;
            rep.iterations = it + 1;
            const int s = q(mid).sign();
            if (s == 0) {
                lo = hi = mid;
                exact_hit = true;
                break;
            }
            (s == sign0 ? lo : hi) = mid;
        }
        rep.lo = lo;
        rep.hi = hi;
        rep.root = exact_hit ? lo : Scalar::inexact(((lo + hi) * half).to_real());
    }
    rep.residual = p(rep.root).abs();
    rep.unique = true;
    return rep;
}

} // namespace appell
