#pragma once

// Seeded Monte Carlo check of the mean value property E Q_n(x + xi) = x^n,
// for laws that only have finitely many usable moments (log-normal).
//
// Sample i draws from its own Philox stream, workers own contiguous index
// ranges, and partial statistics are merged pairwise in worker order, so a
// run is reproducible bit-for-bit for a given (seed, samples, workers).

#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "appell.hpp"
#include "philox.hpp"

namespace appell {

struct McCheckResult {
    std::string spec;
    std::size_t n = 0;
    double x = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    double sample_mean = 0;
    double target = 0;
    double stderr_ = 0;
    double z = 0;
    bool pass = false;
    std::string warning;
};

namespace detail {

inline double draw_gamma(double shape, SampleStream& s) {
    if (shape < 1.0) {
        // Gamma(a) = Gamma(a + 1) * U^{1/a}
        const double u = s.uniform();
        return draw_gamma(shape + 1.0, s) * std::pow(u, 1.0 / shape);
    }
    // Marsaglia-Tsang
    const double d = shape - 1.0 / 3.0, c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double z, v;
        do {
            z = s.normal();
            v = 1.0 + c * z;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = s.uniform();
        if (std::log(u) < 0.5 * z * z + d - d * v + d * std::log(v)) return d * v;
    }
}

inline double draw(const DistSpec& spec, SampleStream& s) {
    const auto& p = spec.params();
    switch (spec.kind()) {
    case DistKind::Uniform01: return s.uniform();
    case DistKind::Bernoulli: return s.uniform() < p[0].to_double() ? 1.0 : 0.0;
    case DistKind::Normal: return p[0].to_double() + std::sqrt(p[1].to_double()) * s.normal();
    case DistKind::Gamma: return draw_gamma(p[0].to_double(), s) / p[1].to_double();
    case DistKind::Exponential: return -std::log(s.uniform()) / p[0].to_double();
    case DistKind::LogNormalStd: return std::exp(s.normal());
    case DistKind::PointMass: return p[0].to_double();
    case DistKind::IndependentSum: return draw(spec.left(), s) + draw(spec.right(), s);
    case DistKind::Affine: return p[0].to_double() * draw(spec.left(), s) + p[1].to_double();
    case DistKind::RawMoments: break;
    }
    throw InvalidParameter("cannot sample from a law given only by its moments");
}

inline bool samplable(const DistSpec& spec) {
    switch (spec.kind()) {
    case DistKind::RawMoments: return false;
    case DistKind::IndependentSum: return samplable(spec.left()) && samplable(spec.right());
    case DistKind::Affine: return samplable(spec.left());
    default: return true;
    }
}

// Mean / sum of squared deviations for a block of samples (Chan et al.
// pairwise combination).
struct Moments2 {
    double count = 0, mean = 0, m2 = 0;

    static Moments2 merge(const Moments2& a, const Moments2& b) {
        if (a.count == 0) return b;
        if (b.count == 0) return a;
        Moments2 r;
        r.count = a.count + b.count;
        const double delta = b.mean - a.mean;
        r.mean = a.mean + delta * (b.count / r.count);
        r.m2 = a.m2 + b.m2 + delta * delta * (a.count * b.count / r.count);
        return r;
    }
};

inline Moments2 reduce_pairwise(std::vector<Moments2> parts) {
    if (parts.empty()) return {};
    while (parts.size() > 1) {
        std::vector<Moments2> next;
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(Moments2::merge(parts[i], parts[i + 1]));
        if (parts.size() % 2) next.push_back(parts.back());
        parts = std::move(next);
    }
    return parts.front();
}

} // namespace detail

/// z-gate check: pass iff |mean - x^n| <= 4 standard errors.
inline McCheckResult mc_mean_value(const DistSpec& spec, std::size_t n, double x, std::uint64_t samples,
                                   std::uint64_t seed, unsigned workers = 1) {
    if (samples < 100000) throw InvalidParameter("mc_mean_value needs at least 1e5 samples");
    if (workers == 0) throw InvalidParameter("workers must be positive");
    if (!detail::samplable(spec)) throw InvalidParameter("cannot sample '" + spec.to_string() + "'");
    McCheckResult r;
    if (spec.kind() == DistKind::LogNormalStd) {
        if (n > 3) throw InvalidParameter("log-normal Monte Carlo check supports n <= 3");
        if (n == 3) r.warning = "variance of Q_3(x + xi) involves mu_6 = e^18; expect a weak test";
    }

    const Poly q = appell_poly(spec, n).poly;
    std::vector<double> coeffs;
    for (const auto& c : q.coeffs()) coeffs.push_back(c.to_double());

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        detail::Moments2 m;
        for (std::uint64_t i = begin; i < end; ++i) {
            SampleStream stream(seed, i);
            const double y = x + detail::draw(spec, stream);
            double v = 0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * y + *it;
            m.count += 1;
            const double delta = v - m.mean;
            m.mean += delta / m.count;
            m.m2 += delta * (v - m.mean);
        }
        return m;
    };

    std::vector<detail::Moments2> parts(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = samples * w / workers, end = samples * (w + 1) / workers;
        threads.emplace_back([&, w, begin, end] { parts[w] = run_range(begin, end); });
    }
    for (auto& t : threads) t.join();
    const auto total = detail::reduce_pairwise(parts);

    r.spec = spec.to_string();
    r.n = n;
    r.x = x;
    r.samples = samples;
    r.seed = seed;
    r.workers = workers;
    r.sample_mean = total.mean;
    r.target = std::pow(x, static_cast<double>(n));
    r.stderr_ = std::sqrt(total.m2 / (total.count - 1) / total.count);
    r.z = r.stderr_ > 0 ? (r.sample_mean - r.target) / r.stderr_ : 0.0;
    r.pass = std::abs(r.sample_mean - r.target) <= 4.0 * r.stderr_;
    return r;
}

} // namespace appell
