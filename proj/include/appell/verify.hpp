#pragma once

// Batch identity suites.  Every check compares two independently computed
// polynomials; for exact inputs the residual must vanish identically.
// Inexact inputs (log-normal) fall back to a relative tolerance of 1e-30.

#include <functional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "appell.hpp"
#include "classical.hpp"
#include "identities.hpp"
#include "report.hpp"

namespace appell {

enum class Suite { Core, Bernoulli, Euler, Hermite, Laguerre, MomentRepresentation, Roots, All };

inline Suite parse_suite(const std::string& name) {
    if (name == "core") return Suite::Core;
    if (name == "bernoulli") return Suite::Bernoulli;
    if (name == "euler") return Suite::Euler;
    if (name == "hermite") return Suite::Hermite;
    if (name == "laguerre") return Suite::Laguerre;
    if (name == "moment-representation") return Suite::MomentRepresentation;
    if (name == "roots") return Suite::Roots;
    if (name == "all") return Suite::All;
    throw UnknownSuite("unknown suite '" + name +
                       "' (core, bernoulli, euler, hermite, laguerre, moment-representation, roots, all)");
}

/// Generator laws exercised by the core suite when none are given.
inline std::vector<DistSpec> default_core_specs() {
    const auto half = Scalar::ratio(1, 2);
    return {
        DistSpec::uniform(),
        DistSpec::bernoulli(half),
        DistSpec::normal(0, 1),
        DistSpec::gamma(half, 1),
        DistSpec::gamma(Scalar::ratio(3, 4), 2),
        DistSpec::exponential(1),
        DistSpec::point_mass(2),
        DistSpec::sum(DistSpec::uniform(), DistSpec::bernoulli(half)),
    };
}

namespace detail {

inline Scalar max_abs(const Poly& p) {
    Scalar m(0);
    for (const auto& c : p.coeffs()) m = std::max(m, c.abs());
    return m;
}

/// lhs - rhs as an exact report, or a relative-tolerance report when either
/// side carries inexact coefficients.
inline IdentityReport compare(std::string id, std::string subject, long degree, const Poly& lhs, const Poly& rhs,
                              std::string detail = {}) {
    Poly residual = lhs - rhs;
    if (lhs.exact() && rhs.exact()) return exact_report(std::move(id), std::move(subject), degree, std::move(residual), std::move(detail));
    const double scale = std::max(1.0, std::max(max_abs(lhs).to_double(), max_abs(rhs).to_double()));
    return tolerance_report(std::move(id), std::move(subject), degree, std::move(residual), 1e-30 * scale,
                            std::move(detail));
}

inline Poly flatten(const Matrix<Scalar>& m) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return Poly(std::move(v));
}

inline void core_for_spec(const DistSpec& spec, std::size_t N, std::vector<IdentityReport>& out) {
    const std::string name = spec.to_string();
    const auto family = appell_family(spec, N + 1);
    const Scalar y = Scalar::ratio(1, 3);

    if (spec.exact()) {
        const auto inv = appell_family(spec, N, Construction::SeriesInversion);
        const auto det = appell_family(spec, N, Construction::Determinant);
        for (std::size_t n = 0; n <= N; ++n) {
            out.push_back(timed([&] {
                return compare("construction.inversion", name, static_cast<long>(n), inv[n].poly, family[n].poly);
            }));
            out.push_back(timed([&] {
                return compare("construction.determinant", name, static_cast<long>(n), det[n].poly, family[n].poly);
            }));
        }
    }

    const auto power = to_power_basis(spec, N);
    const auto kappa = cumulants_upto(spec, N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        const long d = static_cast<long>(n);
        const Poly& q = family[n].poly;
        if (n >= 1)
            out.push_back(timed([&] {
                return compare("derivative", name, d, q.derivative(), Scalar(d) * family[n - 1].poly);
            }));
        out.push_back(timed([&] { return compare("mean-value", name, d, expect_shift(q, spec), Poly::monomial(n)); }));
        if (n >= 1)
            out.push_back(timed([&] {
                return compare("normalization", name, d, Poly::constant(expect_shift(q, spec)(Scalar(0))), Poly());
            }));
        out.push_back(timed([&] {
            Poly rhs;
            for (std::size_t k = 0; k <= n; ++k) rhs += power(n, k) * family[k].poly;
            return compare("power-basis", name, d, Poly::monomial(n), rhs);
        }));
        out.push_back(timed([&] {
            return compare("series-expansion", name, d, shift(family[n], y), compose_affine(q, 1, y));
        }));
        out.push_back(timed([&] {
            const Scalar sign = (n % 2) ? Scalar(-1) : Scalar(1);
            return compare("reflection", name, d, reflect(spec, n).poly, sign * compose_affine(q, -1, 0));
        }));
        out.push_back(timed([&] {
            const Scalar a = Scalar::ratio(-3, 2), b = Scalar::ratio(2, 5);
            return compare("affine", name, d, appell_poly(DistSpec::affine(a, b, spec), n).poly,
                           affine_appell_via_scaling(spec, a, b, n));
        }));
        out.push_back(timed([&] {
            return compare("cumulant-routes", name, d + 1, Poly::constant(cumulant_via_appell(spec, n)),
                           Poly::constant(kappa[n]));
        }));
        out.push_back(timed([&] {
            return compare("recurrence-tail", name, d + 1,
                           reconstruct_from_tail(recurrence_tail(spec, n), n, family), family[n + 1].poly);
        }));
    }
}

inline void convolution_checks(const DistSpec& a, const DistSpec& b, std::size_t N, std::vector<IdentityReport>& out) {
    const std::string name = a.to_string() + " + " + b.to_string();
    for (std::size_t n = 0; n <= N; ++n) {
        const long d = static_cast<long>(n);
        out.push_back(timed([&] {
            return compare("convolution", name, d, flatten(convolution_identity_residual(a, b, n)), Poly());
        }));
        out.push_back(timed([&] {
            const Poly lhs = convolution_constant(a, b, n);
            return compare("convolution-constant", name, d, lhs, Poly::constant(lhs.coeff(0)));
        }));
        out.push_back(timed([&] {
            return compare("integral-representation", name, d, expect_shift(convolve(a, b, n).poly, b),
                           appell_poly(a, n).poly);
        }));
    }
}

inline void core_suite(std::size_t N, const std::vector<DistSpec>& specs, std::vector<IdentityReport>& out) {
    for (const auto& s : specs) core_for_spec(s, N, out);
    const auto half = Scalar::ratio(1, 2);
    std::vector<std::pair<DistSpec, DistSpec>> pairs;
    for (const auto& s : specs)
        if (s.kind() == DistKind::IndependentSum) pairs.emplace_back(s.left(), s.right());
    if (specs.size() > 1 || pairs.empty()) {
        pairs.emplace_back(DistSpec::uniform(), DistSpec::bernoulli(half));
        pairs.emplace_back(DistSpec::normal(0, 1), DistSpec::normal(0, 1));
    }
    for (const auto& [a, b] : pairs) convolution_checks(a, b, N, out);
}

inline void oracle_reports(const std::string& ids, std::size_t N, std::vector<IdentityReport>& out,
                           const OracleParams& params = {}) {
    for (char id : ids)
        for (std::size_t n = (id == 'f' ? 1 : 0); n <= N; ++n)
            out.push_back(timed([&] { return identity_oracle(id, n, params); }));
}

inline void bernoulli_suite(std::size_t N, std::vector<IdentityReport>& out) {
    oracle_reports("abcdefk", N, out);
    const auto numbers = bernoulli_numbers(N + 1);
    const auto kappa = cumulants_upto(DistSpec::uniform(), N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        const long d = static_cast<long>(n);
        out.push_back(timed([&] {
            return compare("engine", "bernoulli", d, bernoulli(n), appell_poly(DistSpec::uniform(), n).poly);
        }));
        if (n >= 1)
            out.push_back(timed([&] {
                return compare("cumulant-relation", "bernoulli", d + 1, Poly::constant(kappa[n]),
                               Poly::constant(numbers[n + 1] / Scalar(d + 1)));
            }));
        if (n >= 3 && n % 2 == 1)
            out.push_back(timed([&] { return compare("odd-number", "bernoulli", d, Poly::constant(numbers[n]), Poly()); }));
    }
}

inline void euler_suite(std::size_t N, std::vector<IdentityReport>& out) {
    oracle_reports("ghijl", N, out);
    const auto half = Scalar::ratio(1, 2);
    const auto tilde = euler_constants(N);
    const auto hat = euler_numbers(2 * N); // integrality asserted inside
    for (std::size_t n = 0; n <= N; ++n) {
        const long d = static_cast<long>(n);
        out.push_back(timed([&] {
            return compare("engine", "euler", d, euler(n), appell_poly(DistSpec::bernoulli(half), n).poly);
        }));
        out.push_back(timed([&] {
            // E^_n = 2^n E_n(1/2)
            return compare("euler-number", "euler", d, Poly::constant(hat[n]),
                           Poly::constant(Scalar(2).pow(d) * euler(n)(half)));
        }));
        if (n >= 2 && n % 2 == 0)
            out.push_back(timed([&] { return compare("even-constant", "euler", d, Poly::constant(tilde[n]), Poly()); }));
        if (n >= 1)
            out.push_back(timed([&] {
                const Scalar v = ((n % 2) ? Scalar(-1) : Scalar(1)) * hat[2 * n];
                return exact_report("number-sign", "euler", d, v.sign() > 0 ? Poly() : Poly::constant(v),
                                    "(-1)^n E^_2n = " + v.to_string());
            }));
    }
}

inline void hermite_suite(std::size_t N, std::vector<IdentityReport>& out) {
    oracle_reports("mn", N, out);
    const auto normal = DistSpec::normal(0, 1);
    const auto shifted = DistSpec::normal(2, 9);
    const auto family = appell_family(normal, N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        const long d = static_cast<long>(n);
        out.push_back(timed([&] { return compare("engine", "hermite", d, hermite_he(n), family[n].poly); }));
        out.push_back(timed([&] {
            return compare("engine", "hermite(mu=2,sigma2=9)", d, hermite_general(2, 9, n),
                           appell_poly(shifted, n).poly);
        }));
        out.push_back(timed([&] {
            Poly rhs = Poly::monomial(1) * hermite_he(n);
            if (n >= 1) rhs -= Scalar(d) * hermite_he(n - 1);
            return compare("three-term", "hermite", d + 1, hermite_he(n + 1), rhs);
        }));
        if (n % 2 == 0)
            out.push_back(timed([&] {
                const std::size_t h = n / 2;
                const Rational expect(factorial(static_cast<long>(n)),
                                      factorial(static_cast<long>(h)) * (Integer(1) << static_cast<unsigned>(h)));
                const Scalar v = (h % 2) ? Scalar(-expect) : Scalar(expect);
                return compare("value-at-zero", "hermite", d, Poly::constant(hermite_he(n)(Scalar(0))), Poly::constant(v));
            }));
        else
            out.push_back(timed([&] {
                return compare("odd-constant", "hermite", d, Poly::constant(family[n].poly(Scalar(0))), Poly());
            }));
    }
    if (N >= 3) {
        for (const auto& [spec, expect] : std::vector<std::pair<DistSpec, bool>>{
                 {normal, true}, {shifted, true}, {DistSpec::uniform(), false}, {DistSpec::bernoulli(), false}}) {
            out.push_back(timed([&, spec = spec, expect = expect] {
                const auto res = orthogonality_check(spec, N);
                IdentityReport r;
                r.identity_id = "orthogonality";
                r.subject = spec.to_string();
                r.degree = static_cast<long>(N);
                r.pass = res.orthogonal == expect;
                r.detail = res.orthogonal ? "kappa_3..kappa_K vanish"
                                          : "first nonzero cumulant k=" + std::to_string(*res.first_violation);
                return r;
            }));
        }
    }
}

inline void laguerre_suite(std::size_t N, std::vector<IdentityReport>& out) {
    for (const auto& beta : {Scalar::ratio(1, 4), Scalar::ratio(1, 2), Scalar::ratio(3, 4), Scalar(1),
                             Scalar::ratio(5, 2)}) {
        OracleParams p;
        p.beta = beta;
        oracle_reports("o", N, out, p);
    }
    const std::vector<std::pair<Scalar, Scalar>> params = {
        {Scalar::ratio(1, 2), 1}, {Scalar::ratio(3, 4), 2}, {1, Scalar::ratio(1, 3)}, {Scalar::ratio(5, 2), 3}};
    for (const auto& [beta, alpha] : params) {
        const auto spec = DistSpec::gamma(beta, alpha);
        for (std::size_t n = 0; n <= N; ++n)
            out.push_back(timed([&] {
                return compare("engine", spec.to_string(), static_cast<long>(n), gamma_appell(beta, alpha, n),
                               appell_poly(spec, n).poly);
            }));
    }
    for (const auto& alpha : {Scalar(1), Scalar(2), Scalar::ratio(1, 3)}) {
        const auto spec = DistSpec::exponential(alpha);
        for (std::size_t n = 1; n <= N; ++n)
            out.push_back(timed([&] {
                const Poly closed = Poly(std::vector<Scalar>{-Scalar(static_cast<long>(n)) / alpha, 1}) *
                                    Poly::monomial(n - 1);
                return compare("exponential-closed-form", spec.to_string(), static_cast<long>(n),
                               appell_poly(spec, n).poly, closed);
            }));
    }
}

inline void moment_representation_suite(std::size_t N, std::vector<IdentityReport>& out) {
    const Scalar mhalf = Scalar::ratio(-1, 2);
    for (std::size_t n = 0; n <= N; ++n) {
        const long d = static_cast<long>(n);
        out.push_back(timed([&] {
            return compare("complex-moment", "logistic", d, complex_moment_poly(SymmetricMomentLaw::Logistic, mhalf, n),
                           bernoulli(n));
        }));
        out.push_back(timed([&] {
            return compare("complex-moment", "hyperbolic-secant", d,
                           complex_moment_poly(SymmetricMomentLaw::HyperbolicSecant, mhalf, n), euler(n));
        }));
        out.push_back(timed([&] {
            return compare("complex-moment", "standard-normal", d,
                           complex_moment_poly(SymmetricMomentLaw::StandardNormal, 0, n), hermite_he(n));
        }));
        if (n == 0) continue;
        for (const auto law : {SymmetricMomentLaw::Logistic, SymmetricMomentLaw::HyperbolicSecant,
                               SymmetricMomentLaw::StandardNormal}) {
            out.push_back(timed([&] {
                const Scalar v = companion_even_moment(law, n);
                return exact_report("companion-positive", to_string(law), d, v.sign() > 0 ? Poly() : Poly::constant(v),
                                    "E zeta^2n = " + v.to_string());
            }));
        }
        // sign theorems from positivity
        out.push_back(timed([&] {
            const Scalar m = companion_even_moment(SymmetricMomentLaw::Logistic, n);
            const Scalar lhs = ((n % 2) ? Scalar(1) : Scalar(-1)) * bernoulli_numbers(2 * n)[2 * n];
            return compare("bernoulli-sign-chain", "logistic", d, Poly::constant(lhs),
                           Poly::constant(m / (Scalar(1) - Scalar(2).pow(1 - 2 * d))));
        }));
        out.push_back(timed([&] {
            const Scalar m = companion_even_moment(SymmetricMomentLaw::HyperbolicSecant, n);
            const Scalar sign = (n % 2) ? Scalar(-1) : Scalar(1);
            return compare("euler-sign-chain", "hyperbolic-secant", d, Poly::constant(euler_numbers(2 * n)[2 * n]),
                           Poly::constant(sign * Scalar(4).pow(d) * m));
        }));
    }
}

inline IdentityReport root_report(const DistSpec& spec, std::size_t n, const std::optional<Scalar>& expected) {
    IdentityReport r;
    r.identity_id = "unique-root";
    r.subject = spec.to_string();
    r.degree = static_cast<long>(n);
    const Poly q = appell_poly(spec, n).poly;
    bool nonpositive = true;
    for (std::size_t k = 0; k < n; ++k) nonpositive = nonpositive && q.coeff(k).sign() <= 0;
    try {
        const auto rep = isolate_positive_root(q, 1e-12);
        r.residual = rep.residual.is_zero() ? Poly() : Poly::constant(rep.residual);
        r.pass = rep.unique && nonpositive;
        r.detail = "x* = " + rep.root.to_string() + ", variations = " + std::to_string(rep.sign_variations);
        if (expected) {
            const double rel = std::abs(rep.root.to_double() - expected->to_double()) / expected->to_double();
            r.pass = r.pass && rel <= 1e-12;
            r.detail += ", expected " + expected->to_string();
        }
    } catch (const NotSingleVariation& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

inline void roots_suite(std::size_t N, std::vector<IdentityReport>& out) {
    for (const auto& beta : {Scalar::ratio(1, 4), Scalar::ratio(1, 2), Scalar::ratio(3, 4), Scalar(1)}) {
        const auto spec = DistSpec::gamma(beta, 1);
        for (std::size_t n = 1; n <= N; ++n) out.push_back(timed([&] { return root_report(spec, n, std::nullopt); }));
    }
    for (const auto& alpha : {Scalar(1), Scalar(2), Scalar::ratio(1, 3)}) {
        const auto spec = DistSpec::exponential(alpha);
        for (std::size_t n = 1; n <= N; ++n)
            out.push_back(timed([&] { return root_report(spec, n, Scalar(static_cast<long>(n)) / alpha); }));
    }
}

} // namespace detail

/// Runs a suite over degrees 0..max_degree.  `core_specs` overrides the
/// laws used by the core suite.
inline std::vector<IdentityReport> run_suite(Suite suite, std::size_t max_degree,
                                             const std::vector<DistSpec>& core_specs = default_core_specs()) {
    std::vector<IdentityReport> out;
    const auto N = max_degree;
    switch (suite) {
    case Suite::Core: detail::core_suite(N, core_specs, out); break;
    case Suite::Bernoulli: detail::bernoulli_suite(N, out); break;
    case Suite::Euler: detail::euler_suite(N, out); break;
    case Suite::Hermite: detail::hermite_suite(N, out); break;
    case Suite::Laguerre: detail::laguerre_suite(N, out); break;
    case Suite::MomentRepresentation: detail::moment_representation_suite(N, out); break;
    case Suite::Roots: detail::roots_suite(N, out); break;
    case Suite::All:
        for (auto s : {Suite::Core, Suite::Bernoulli, Suite::Euler, Suite::Hermite, Suite::Laguerre,
                       Suite::MomentRepresentation, Suite::Roots}) {
            auto part = run_suite(s, max_degree, core_specs);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        break;
    }
    return out;
}

inline std::vector<IdentityReport> run_suite(const std::string& suite, std::size_t max_degree,
                                             const std::vector<DistSpec>& core_specs = default_core_specs()) {
    return run_suite(parse_suite(suite), max_degree, core_specs);
}

inline bool all_pass(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

} // namespace appell
