#pragma once

// Hand-rolled generators for property tests.  Fixed seeds keep runs
// reproducible; failures print the case index through Catch2's INFO.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include <appell/distribution.hpp>
#include <appell/poly.hpp>

namespace testgen {

using appell::DistSpec;
using appell::Poly;
using appell::Scalar;

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline long uniform_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Scalar rational(long num_bound = 9, long den_bound = 7) {
    return Scalar::ratio(uniform_int(-num_bound, num_bound), uniform_int(1, den_bound));
}

inline Scalar positive_rational(long num_bound = 9, long den_bound = 7) {
    return Scalar::ratio(uniform_int(1, num_bound), uniform_int(1, den_bound));
}

inline Poly poly(long max_degree = 6) {
    std::vector<Scalar> c;
    const long d = uniform_int(0, max_degree);
    for (long i = 0; i <= d; ++i) c.push_back(rational());
    return Poly(std::move(c));
}

/// A random law with exact rational moments, up to `depth` levels of
/// sums and affine maps.
inline DistSpec exact_spec(int depth = 2) {
    const long pick = uniform_int(0, depth > 0 ? 8 : 6);
    switch (pick) {
    case 0: return DistSpec::uniform();
    case 1: return DistSpec::bernoulli(Scalar::ratio(uniform_int(0, 6), 6));
    case 2: return DistSpec::normal(rational(), positive_rational());
    case 3: return DistSpec::gamma(positive_rational(), positive_rational());
    case 4: return DistSpec::exponential(positive_rational());
    case 5: return DistSpec::point_mass(rational());
    case 6: {
        std::vector<Scalar> mu{Scalar(1)};
        for (int k = 0; k < 20; ++k) mu.push_back(rational());
        return DistSpec::raw_moments(std::move(mu));
    }
    case 7: return DistSpec::sum(exact_spec(depth - 1), exact_spec(depth - 1));
    default: {
        Scalar a = rational();
        if (a.is_zero()) a = Scalar(2);
        return DistSpec::affine(a, rational(), exact_spec(depth - 1));
    }
    }
}

/// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

} // namespace testgen
