// Acceptance criteria 1-10.  Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <appell/analysis.hpp>
#include <appell/identities.hpp>
#include <appell/mc.hpp>
#include <appell/serialize.hpp>

using namespace appell;

namespace {

// Relative tolerance for root isolation and the Exp(alpha) root check.
constexpr double kRootRelTol = 1e-12;
// Absolute agreement of the Gamma(1/2,1), n = 2 root with (1 + sqrt 2)/2.
constexpr double kSqrtRootTol = 1e-10;
// Monte Carlo gate in standard errors, sample count, seed and time budget.
constexpr double kMcGate = 4.0;
constexpr std::uint64_t kMcSamples = 1000000;
constexpr std::uint64_t kMcSeed = 42;
constexpr unsigned kMcWorkers = 4;
constexpr double kMcBudgetSeconds = 30.0;

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) note = what;
        pass = pass && ok;
    }
};

Scalar S(long n, long d = 1) { return Scalar::ratio(n, d); }

std::vector<DistSpec> triangle_specs() {
    return {DistSpec::uniform(),
            DistSpec::bernoulli(S(1, 2)),
            DistSpec::normal(0, 1),
            DistSpec::gamma(S(1, 2), 1),
            DistSpec::gamma(S(3, 4), 2),
            DistSpec::exponential(1),
            DistSpec::point_mass(2),
            DistSpec::sum(DistSpec::uniform(), DistSpec::bernoulli(S(1, 2)))};
}

Outcome construction_triangle() {
    Outcome o;
    std::size_t compared = 0;
    for (const auto& spec : triangle_specs()) {
        const auto rec = appell_family(spec, 12, Construction::Recurrence);
        const auto inv = appell_family(spec, 12, Construction::SeriesInversion);
        const auto det = appell_family(spec, 12, Construction::Determinant);
        for (std::size_t n = 0; n <= 12; ++n) {
            o.require(rec[n].poly.exact() && rec[n].poly == inv[n].poly && rec[n].poly == det[n].poly,
                      spec.to_string() + " n=" + std::to_string(n));
            ++compared;
        }
    }
    if (o.pass) o.note = std::to_string(compared) + " (spec, n) pairs identical across 3 constructions";
    return o;
}

Outcome known_constants() {
    Outcome o;
    const auto b = bernoulli_numbers(4);
    const std::vector<Scalar> b_expect{S(1), S(-1, 2), S(1, 6), S(0), S(-1, 30)};
    for (std::size_t i = 0; i <= 4; ++i) o.require(b[i] == b_expect[i], "B~_" + std::to_string(i));
    const auto e = euler_constants(5);
    const std::vector<Scalar> e_expect{S(1), S(-1, 2), S(0), S(1, 4), S(0), S(-1, 2)};
    for (std::size_t i = 0; i <= 5; ++i) o.require(e[i] == e_expect[i], "E~_" + std::to_string(i));
    for (long n = 0; n <= 8; ++n) {
        const Scalar v = appell_poly(DistSpec::normal(0, 1), 2 * n).poly(Scalar(0));
        const Scalar expect = Scalar(n % 2 ? -1 : 1) * Scalar(factorial(2 * n)) /
                              (Scalar(Integer(1) << static_cast<unsigned>(n)) * Scalar(factorial(n)));
        o.require(v == expect, "He_" + std::to_string(2 * n) + "(0)");
    }
    for (const auto& alpha : {S(1), S(2), S(1, 3)})
        for (std::size_t n = 1; n <= 10; ++n) {
            const Poly closed = Poly(std::vector<Scalar>{-Scalar(static_cast<long>(n)) / alpha, S(1)}) *
                                Poly::monomial(n - 1);
            o.require(appell_poly(DistSpec::exponential(alpha), n).poly == closed,
                      "Exp(" + alpha.to_string() + ") n=" + std::to_string(n));
        }
    if (o.pass) o.note = "B~_0..4, E~_0..5, He_2n(0) n<=8, Exp closed form n<=10";
    return o;
}

Outcome mean_value() {
    Outcome o;
    for (const auto& spec : triangle_specs()) {
        const auto family = appell_family(spec, 15);
        const auto mu = moments_upto(spec, 15);
        for (std::size_t n = 0; n <= 15; ++n) {
            o.require(expect_shift(family[n].poly, spec) == Poly::monomial(n),
                      "E Q_n(x+xi) " + spec.to_string() + " n=" + std::to_string(n));
            if (n == 0) continue;
            Scalar mean(0);
            for (std::size_t i = 0; i <= n; ++i) mean += family[n].poly.coeff(i) * mu[i];
            o.require(mean.is_zero(), "E Q_n(xi) " + spec.to_string() + " n=" + std::to_string(n));
        }
    }
    if (o.pass) o.note = "E Q_n(x+xi) = x^n and E Q_n(xi) = 0 for n<=15 on 8 laws";
    return o;
}

Outcome classical_identities() {
    Outcome o;
    OracleParams p;
    p.max_m = 10;
    std::size_t checks = 0;
    for (char id : oracle_ids())
        for (std::size_t n = (id == 'f' ? 1 : 0); n <= 15; ++n) {
            const auto r = identity_oracle(id, n, p);
            o.require(r.pass && r.residual.is_zero(), std::string("identity ") + id + " n=" + std::to_string(n));
            ++checks;
        }
    if (o.pass) o.note = std::to_string(checks) + " zero residuals, identities a-o, n<=15";
    return o;
}

Outcome moment_representations() {
    Outcome o;
    for (std::size_t n = 0; n <= 12; ++n) {
        o.require(complex_moment_poly(SymmetricMomentLaw::Logistic, S(-1, 2), n) == bernoulli(n),
                  "logistic n=" + std::to_string(n));
        o.require(complex_moment_poly(SymmetricMomentLaw::HyperbolicSecant, S(-1, 2), n) == euler(n),
                  "hyperbolic secant n=" + std::to_string(n));
        o.require(complex_moment_poly(SymmetricMomentLaw::StandardNormal, 0, n) == hermite_he(n),
                  "standard normal n=" + std::to_string(n));
    }
    const auto b = bernoulli_numbers(20);
    const auto e = euler_numbers(20);
    for (std::size_t n = 1; n <= 10; ++n) {
        for (auto law : {SymmetricMomentLaw::Logistic, SymmetricMomentLaw::HyperbolicSecant,
                         SymmetricMomentLaw::StandardNormal})
            o.require(companion_even_moment(law, n).sign() > 0, to_string(law) + " moment " + std::to_string(2 * n));
        // the sign theorems that positivity implies
        o.require(((n % 2) ? b[2 * n] : -b[2 * n]).sign() > 0, "sign of B~_" + std::to_string(2 * n));
        o.require(((n % 2) ? -e[2 * n] : e[2 * n]).sign() > 0, "sign of E^_" + std::to_string(2 * n));
    }
    if (o.pass) o.note = "families reproduced n<=12; companion moments positive n<=10";
    return o;
}

Outcome cumulants() {
    Outcome o;
    for (const auto& spec : triangle_specs()) {
        const auto direct = cumulants_upto(spec, 13);
        for (std::size_t n = 0; n <= 12; ++n)
            o.require(cumulant_via_appell(spec, n) == direct[n], spec.to_string() + " kappa_" + std::to_string(n + 1));
    }
    const auto b = bernoulli_numbers(12);
    const auto ku = cumulants_upto(DistSpec::uniform(), 12);
    for (std::size_t n = 1; n <= 11; ++n)
        o.require(ku[n] == b[n + 1] / Scalar(static_cast<long>(n + 1)), "uniform kappa_" + std::to_string(n + 1));
    for (const auto& spec : triangle_specs()) {
        const auto r = orthogonality_check(spec, 12);
        o.require(r.orthogonal == (spec.kind() == DistKind::Normal), "orthogonality " + spec.to_string());
    }
    o.require(orthogonality_check(DistSpec::uniform(), 12).first_violation == std::optional<std::size_t>(4),
              "uniform first violation");
    o.require(orthogonality_check(DistSpec::bernoulli(S(1, 2)), 12).first_violation == std::optional<std::size_t>(4),
              "Bernoulli first violation");
    if (o.pass) o.note = "routes agree n<=12; uniform kappa = B~/n; only Normal orthogonal, violation at 4";
    return o;
}

Outcome roots() {
    Outcome o;
    for (const auto& beta : {S(1, 4), S(1, 2), S(3, 4), S(1)})
        for (std::size_t n = 1; n <= 10; ++n) {
            const std::string tag = "Gamma(" + beta.to_string() + ",1) n=" + std::to_string(n);
            const Poly q = appell_poly(DistSpec::gamma(beta, 1), n).poly;
            o.require(sign_variations(q) == 1, tag + " variations");
            try {
                const auto r = isolate_positive_root(q, kRootRelTol);
                o.require(r.unique && r.lo.sign() > 0 && r.hi - r.lo <= Scalar(Rational(kRootRelTol)) * r.lo,
                          tag + " bracket");
                o.require(q(r.lo).sign() * q(r.hi).sign() <= 0, tag + " sign change");
            } catch (const Error&) {
                o.require(false, tag + " isolation");
            }
        }
    for (const auto& alpha : {S(1), S(2), S(1, 3)})
        for (std::size_t n = 1; n <= 10; ++n) {
            const auto r = isolate_positive_root(appell_poly(DistSpec::exponential(alpha), n).poly, kRootRelTol);
            const Scalar expect = Scalar(static_cast<long>(n)) / alpha;
            o.require(r.root.exact() && r.root == expect, "Exp(" + alpha.to_string() + ") n=" + std::to_string(n));
            o.require(std::abs(r.root.to_double() - expect.to_double()) <= kRootRelTol * expect.to_double(),
                      "Exp root tolerance");
        }
    const auto r = isolate_positive_root(appell_poly(DistSpec::gamma(S(1, 2), 1), 2).poly, kRootRelTol);
    const double target = (1.0 + std::sqrt(2.0)) / 2.0;
    o.require(std::abs(r.root.to_double() - target) <= kSqrtRootTol, "(1+sqrt 2)/2");
    if (o.pass) {
        std::ostringstream s;
        s.precision(15);
        s << "40 gamma roots certified; Exp roots n/alpha exact; Gamma(1/2) n=2 root " << r.root.to_double();
        o.note = s.str();
    }
    return o;
}

Outcome monte_carlo() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream z;
    z.precision(3);
    for (std::size_t n : {1u, 2u})
        for (double x : {0.0, 1.0}) {
            const auto a = mc_mean_value(DistSpec::lognormal(), n, x, kMcSamples, kMcSeed, kMcWorkers);
            const auto b = mc_mean_value(DistSpec::lognormal(), n, x, kMcSamples, kMcSeed, kMcWorkers);
            const std::string tag = "n=" + std::to_string(n) + " x=" + std::to_string(static_cast<int>(x));
            o.require(std::abs(a.sample_mean - std::pow(x, n)) <= kMcGate * a.stderr_, tag + " outside gate");
            o.require(to_json(a).dump() == to_json(b).dump(), tag + " not reproducible");
            z << " " << tag << " z=" << a.z;
        }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < kMcBudgetSeconds, "runtime " + std::to_string(seconds) + " s");
    if (o.pass) {
        std::ostringstream s;
        s.precision(3);
        s << "log-normal 1e6 samples seed 42:" << z.str() << "; " << seconds << " s for 8 runs";
        o.note = s.str();
    }
    return o;
}

Outcome convolution() {
    Outcome o;
    const auto u = DistSpec::uniform(), ber = DistSpec::bernoulli(S(1, 2));
    for (std::size_t n = 0; n <= 12; ++n) {
        const Poly expect = Scalar(2).pow(static_cast<long>(n)) * compose_affine(bernoulli(n), S(1, 2), 0);
        o.require(convolve(u, ber, n).poly == expect, "2^n B_n(x/2) n=" + std::to_string(n));
    }
    const std::vector<std::pair<DistSpec, DistSpec>> pairs = {
        {u, ber},
        {DistSpec::normal(0, 1), DistSpec::gamma(S(1, 2), 1)},
        {DistSpec::exponential(1), DistSpec::point_mass(2)},
        {DistSpec::gamma(S(3, 4), 2), DistSpec::bernoulli(S(1, 3))}};
    for (const auto& [a, b] : pairs) {
        const std::string tag = a.to_string() + " + " + b.to_string();
        for (std::size_t n = 0; n <= 8; ++n) {
            const auto r = convolution_identity_residual(a, b, n);
            bool zero = true;
            for (std::size_t i = 0; i < r.rows(); ++i)
                for (std::size_t j = 0; j < r.cols(); ++j) zero = zero && r(i, j).is_zero();
            o.require(zero, tag + " two-variable n=" + std::to_string(n));
        }
        for (std::size_t n = 0; n <= 10; ++n)
            o.require(convolution_constant(a, b, n).degree() <= 0, tag + " constancy n=" + std::to_string(n));
    }
    if (o.pass) o.note = "U+Ber(1/2) = 2^n B_n(x/2) n<=12; 4 pairs zero residual n<=8, constant n<=10";
    return o;
}

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(APPELL_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_contract() {
    Outcome o;
    for (const char* dist : {"uniform", "bernoulli:p=1/2", "normal", "'sum(uniform,bernoulli:p=1/2)'",
                             "gamma:beta=3/4,alpha=2"}) {
        std::string first;
        for (const char* how : {"recurrence", "inversion", "determinant"}) {
            const auto r = run_cli(std::string("gen --dist ") + dist + " --degree 12 --format csv --construction " + how);
            o.require(r.code == 0, std::string(dist) + " " + how + " exit " + std::to_string(r.code));
            if (first.empty()) first = r.out;
            o.require(!r.out.empty() && r.out == first, std::string(dist) + " " + how + " differs");
        }
    }
    const auto csv = run_cli("gen --dist uniform --degree 2 --format csv");
    o.require(csv.code == 0 && csv.out == "2,1/6,-1,1\n", "csv bytes: " + csv.out);
    const auto json = run_cli("gen --dist uniform --degree 2 --format json");
    o.require(json.code == 0 &&
                  json.out == "{\"distribution\":\"uniform\",\"degree\":2,\"coefficients\":[[\"1\",\"6\"],[\"-1\","
                              "\"1\"],[\"1\",\"1\"]],\"exact\":true,\"construction\":\"recurrence\"}\n",
              "json bytes: " + json.out);
    if (o.pass) o.note = "3 constructions agree (exit 0); B_2 csv and json bytes match";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"construction triangle", construction_triangle},
        {"known constants", known_constants},
        {"mean value property", mean_value},
        {"classical identity oracles", classical_identities},
        {"moment representations", moment_representations},
        {"cumulants", cumulants},
        {"roots", roots},
        {"monte carlo", monte_carlo},
        {"convolution", convolution},
        {"cli contract", cli_contract},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.note
                  << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed" << std::endl;
    return failed ? 1 : 0;
}
