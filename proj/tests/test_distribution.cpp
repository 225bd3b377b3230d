#include <catch_amalgamated.hpp>

#include <cmath>

#include <appell/distribution.hpp>

#include "support.hpp"

using namespace appell;

namespace {

// kappa_n = n! [u^n] log M(u), computed from M L' = M' term by term.
std::vector<Rational> log_series_cumulants(const std::vector<Scalar>& mu, std::size_t K) {
    std::vector<Rational> m(K + 1), l(K + 1);
    for (std::size_t n = 0; n <= K; ++n) m[n] = mu[n].rational() / Rational(factorial(static_cast<long>(n)));
    // coefficient of u^{n-1}: sum_{j} m_j (n-j) l_{n-j} = n m_n
    for (std::size_t n = 1; n <= K; ++n) {
        Rational acc = Rational(static_cast<long>(n)) * m[n];
        for (std::size_t j = 1; j < n; ++j) acc -= m[j] * Rational(static_cast<long>(n - j)) * l[n - j];
        l[n] = acc / Rational(static_cast<long>(n));
    }
    std::vector<Rational> kappa;
    for (std::size_t n = 1; n <= K; ++n) kappa.push_back(l[n] * Rational(factorial(static_cast<long>(n))));
    return kappa;
}

} // namespace

TEST_CASE("uniform, Bernoulli, point-mass and exponential moments") {
    const auto u = moments_upto(DistSpec::uniform(), 10);
    for (long k = 0; k <= 10; ++k) CHECK(u[k] == Scalar::ratio(1, k + 1));

    const auto b = moments_upto(DistSpec::bernoulli(Scalar::ratio(2, 7)), 6);
    CHECK(b[0] == Scalar(1));
    for (std::size_t k = 1; k <= 6; ++k) CHECK(b[k] == Scalar::ratio(2, 7));

    const auto p = moments_upto(DistSpec::point_mass(Scalar::ratio(-3, 2)), 6);
    for (long k = 0; k <= 6; ++k) CHECK(p[k] == Scalar::ratio(-3, 2).pow(k));

    const Scalar alpha = Scalar::ratio(1, 3);
    const auto e = moments_upto(DistSpec::exponential(alpha), 8);
    for (long k = 0; k <= 8; ++k) CHECK(e[k] == Scalar(factorial(k)) / alpha.pow(k));
}

TEST_CASE("normal moments follow the double-factorial expansion") {
    const Scalar mu = Scalar::ratio(2, 3), s2 = Scalar::ratio(5, 4);
    const auto m = moments_upto(DistSpec::normal(mu, s2), 10);
    for (long k = 0; k <= 10; ++k) {
        Scalar expect(0);
        for (long j = 0; j <= k; j += 2) {
            Integer dfact = 1; // (j-1)!!
            for (long i = j - 1; i > 0; i -= 2) dfact *= i;
            expect += Scalar(binomial(k, j)) * mu.pow(k - j) * s2.pow(j / 2) * Scalar(dfact);
        }
        CHECK(m[k] == expect);
    }
}

TEST_CASE("gamma moments match quadrature") {
    // Gamma(1/2, 1): x = t^2 gives E X^k = (2/sqrt(pi)) int_0^inf t^{2k} e^{-t^2} dt
    const auto m = moments_upto(DistSpec::gamma(Scalar::ratio(1, 2), 1), 4);
    CHECK(m[2] == Scalar::ratio(3, 4));
    for (int k = 1; k <= 4; ++k) {
        const double q = testgen::simpson([k](double t) { return std::pow(t, 2 * k) * std::exp(-t * t); }, 0.0, 12.0) *
                         2.0 / std::sqrt(M_PI);
        CHECK(m[k].to_double() == Catch::Approx(q).epsilon(1e-9));
    }
    // rate alpha scales moments by alpha^-k
    const auto g = moments_upto(DistSpec::gamma(Scalar::ratio(3, 4), 2), 5);
    Scalar rising(1);
    for (long k = 0; k <= 5; ++k) {
        CHECK(g[k] == rising / Scalar(2).pow(k));
        rising *= Scalar::ratio(3, 4) + Scalar(k);
    }
}

TEST_CASE("log-normal moments are inexact exponentials") {
    const auto spec = DistSpec::lognormal();
    CHECK_FALSE(spec.exact());
    const auto m = moments_upto(spec, 4);
    for (int k = 0; k <= 4; ++k) CHECK(m[k].to_double() == Catch::Approx(std::exp(k * k / 2.0)).epsilon(1e-14));
    CHECK_FALSE(m[2].exact());
}

TEST_CASE("sums and affine maps combine moments binomially") {
    for (int i = 0; i < 30; ++i) {
        INFO("case " << i);
        const auto a = testgen::exact_spec(1), b = testgen::exact_spec(1);
        const auto ma = moments_upto(a, 8), mb = moments_upto(b, 8);
        const auto ms = moments_upto(DistSpec::sum(a, b), 8);
        for (long k = 0; k <= 8; ++k) {
            Scalar expect(0);
            for (long j = 0; j <= k; ++j) expect += Scalar(binomial(k, j)) * ma[j] * mb[k - j];
            CHECK(ms[k] == expect);
        }
        const Scalar s = Scalar::ratio(-3, 2), t = Scalar::ratio(1, 5);
        const auto mf = moments_upto(DistSpec::affine(s, t, a), 8);
        for (long k = 0; k <= 8; ++k) {
            Scalar expect(0);
            for (long j = 0; j <= k; ++j) expect += Scalar(binomial(k, j)) * s.pow(j) * t.pow(k - j) * ma[j];
            CHECK(mf[k] == expect);
        }
    }
}

TEST_CASE("raw moment lists expose a finite horizon") {
    const auto spec = DistSpec::raw_moments({Scalar(1), Scalar::ratio(1, 2), Scalar::ratio(1, 3)});
    CHECK(spec.max_available() == std::optional<std::size_t>(2));
    CHECK(moment(spec, 2) == Scalar::ratio(1, 3));
    CHECK_THROWS_AS(moment(spec, 3), MomentUnavailable);
    CHECK_FALSE(DistSpec::uniform().max_available().has_value());
    CHECK(DistSpec::sum(spec, DistSpec::uniform()).max_available() == std::optional<std::size_t>(2));
    CHECK_THROWS_AS(DistSpec::raw_moments({Scalar(2)}), InvalidParameter);
    CHECK_THROWS_AS(DistSpec::raw_moments({}), InvalidParameter);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(DistSpec::bernoulli(Scalar::ratio(3, 2)), InvalidParameter);
    CHECK_THROWS_AS(DistSpec::bernoulli(Scalar::inexact(0.5)), InvalidParameter);
    CHECK_THROWS_AS(DistSpec::normal(0, 0), InvalidParameter);
    CHECK_THROWS_AS(DistSpec::gamma(-1, 1), InvalidParameter);
    CHECK_THROWS_AS(DistSpec::gamma(1, 0), InvalidParameter);
    CHECK_THROWS_AS(DistSpec::exponential(Scalar::ratio(-1, 2)), InvalidParameter);
    CHECK_THROWS_AS(DistSpec::affine(0, 1, DistSpec::uniform()), InvalidParameter);
}

TEST_CASE("cumulants match the logarithm of the moment series") {
    for (int i = 0; i < 40; ++i) {
        INFO("case " << i);
        const auto spec = testgen::exact_spec();
        const auto kappa = cumulants_upto(spec, 10);
        const auto oracle = log_series_cumulants(moments_upto(spec, 10), 10);
        REQUIRE(kappa.size() == 10);
        for (std::size_t n = 0; n < 10; ++n) CHECK(kappa[n].rational() == oracle[n]);
    }
}

TEST_CASE("closed-form cumulants of the generator laws") {
    const auto n = cumulants_upto(DistSpec::normal(Scalar::ratio(1, 2), 3), 8);
    CHECK(n[0] == Scalar::ratio(1, 2));
    CHECK(n[1] == Scalar(3));
    for (std::size_t k = 2; k < 8; ++k) CHECK(n[k].is_zero());

    const Scalar beta = Scalar::ratio(3, 4), alpha = 2;
    const auto g = cumulants_upto(DistSpec::gamma(beta, alpha), 8);
    for (long k = 1; k <= 8; ++k) CHECK(g[k - 1] == beta * Scalar(factorial(k - 1)) / alpha.pow(k));

    const auto p = cumulants_upto(DistSpec::point_mass(5), 6);
    CHECK(p[0] == Scalar(5));
    for (std::size_t k = 1; k < 6; ++k) CHECK(p[k].is_zero());

    CHECK(cumulants_upto(DistSpec::bernoulli(), 2)[1] == Scalar::ratio(1, 4));
    CHECK(cumulants_upto(DistSpec::uniform(), 2)[1] == Scalar::ratio(1, 12));
}

TEST_CASE("cumulants are additive over independent sums") {
    for (int i = 0; i < 20; ++i) {
        const auto a = testgen::exact_spec(1), b = testgen::exact_spec(1);
        const auto ka = cumulants_upto(a, 8), kb = cumulants_upto(b, 8), ks = cumulants_upto(DistSpec::sum(a, b), 8);
        for (std::size_t k = 0; k < 8; ++k) CHECK(ks[k] == ka[k] + kb[k]);
    }
}

TEST_CASE("sequence views are one-based for cumulants") {
    const CumulantSequence c(DistSpec::exponential(1));
    CHECK(c[1] == Scalar(1));
    CHECK(c[3] == Scalar(2));
    CHECK_THROWS_AS(c[0], InvalidParameter);
    const MomentSequence m(DistSpec::exponential(1));
    CHECK(m[4] == Scalar(24));
    CHECK(m.upto(3).size() == 4);
}

TEST_CASE("canonical spec strings") {
    CHECK(DistSpec::bernoulli().to_string() == "bernoulli:p=1/2");
    CHECK(DistSpec::normal().to_string() == "normal:mu=0,sigma2=1");
    CHECK(DistSpec::gamma(Scalar::ratio(1, 2)).to_string() == "gamma:beta=1/2,alpha=1");
    CHECK(DistSpec::affine(-1, 0, DistSpec::uniform()).to_string() == "affine:a=-1,b=0(uniform)");
    CHECK(DistSpec::sum(DistSpec::uniform(), DistSpec::point_mass(2)).to_string() == "sum(uniform,point:c=2)");
    CHECK(DistSpec::raw_moments({Scalar(1), Scalar::ratio(1, 2)}).to_string() == "moments:[1,1/2]");
}
