#pragma once

// Exact-or-tracked numeric scalar.
//
// A Scalar holds either an arbitrary precision rational (GMP) or a
// multiprecision binary float (MPFR).  Arithmetic between two exact values
// stays exact; anything touching an inexact value becomes inexact.  The float
// precision is read once from APPELL_PRECISION_BITS (default 256, never below
// 200 bits).

#include <algorithm>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace appell {

namespace bmp = boost::multiprecision;

using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;
using Real = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

namespace detail {

inline unsigned requested_precision_bits() {
    unsigned bits = 256;
    if (const char* env = std::getenv("APPELL_PRECISION_BITS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) bits = static_cast<unsigned>(v);
    }
    return bits < 200 ? 200u : bits;
}

inline void init_precision() {
    static std::once_flag once;
    std::call_once(once, [] {
        const unsigned bits = requested_precision_bits();
        // boost sizes MPFR values in decimal digits; round up so the binary
        // significand is never smaller than requested.
        const auto digits10 = static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
        Real::default_precision(digits10);
    });
}

} // namespace detail

/// Binary significand bits used for inexact scalars.
inline unsigned precision_bits() {
    detail::init_precision();
    const Real probe(1);
    return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

inline Real make_real(const Rational& q) {
    detail::init_precision();
    return Real(q);
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Integer factorial(long n) {
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(int v) : value_(Rational(v)) {}
    Scalar(long v) : value_(Rational(v)) {}
    Scalar(long long v) : value_(Rational(v)) {}
    Scalar(const Integer& v) : value_(Rational(v)) {}
    Scalar(const Rational& v) : value_(v) {}
    Scalar(Rational&& v) : value_(std::move(v)) {}

    static Scalar ratio(long long num, long long den) {
        if (den == 0) throw InvalidParameter("zero denominator");
        return Scalar(Rational(Integer(num), Integer(den)));
    }

    static Scalar inexact(const Real& v) {
        detail::init_precision();
        return Scalar(Tag{}, v);
    }
    static Scalar inexact(double v) {
        detail::init_precision();
        return Scalar(Tag{}, Real(v));
    }

    bool exact() const { return std::holds_alternative<Rational>(value_); }

    /// Throws InexactUnsupported when the value is a float.
    const Rational& rational() const {
        if (const auto* q = std::get_if<Rational>(&value_)) return *q;
        throw InexactUnsupported("exact rational required, got inexact scalar");
    }

    Real to_real() const {
        if (const auto* q = std::get_if<Rational>(&value_)) return make_real(*q);
        return std::get<Real>(value_);
    }

    double to_double() const {
        if (const auto* q = std::get_if<Rational>(&value_)) return q->convert_to<double>();
        return std::get<Real>(value_).convert_to<double>();
    }

    int sign() const {
        return std::visit([](const auto& v) { return v.sign(); }, value_);
    }
    bool is_zero() const { return sign() == 0; }

    bool is_integer() const {
        const auto* q = std::get_if<Rational>(&value_);
        return q && bmp::denominator(*q) == 1;
    }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    /// Integer power; negative exponents invert.
    Scalar pow(long e) const {
        if (e < 0) return Scalar(1) / pow(-e);
        Scalar result(1), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    Scalar operator-() const {
        return std::visit([](const auto& v) { return Scalar::wrap(-v); }, value_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.q() + b.q());
        return inexact(a.to_real() + b.to_real());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.q() - b.q());
        return inexact(a.to_real() - b.to_real());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.q() * b.q());
        return inexact(a.to_real() * b.to_real());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw InvalidParameter("division by zero");
        if (a.exact() && b.exact()) return Scalar(a.q() / b.q());
        return inexact(a.to_real() / b.to_real());
    }

    /// Numeric equality.  Two exact values compare as rationals; otherwise
    /// the comparison happens in floating point, so callers that want a
    /// tolerance should use approx_equal instead.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return a.q() == b.q();
        return a.to_real() == b.to_real();
    }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return a.q() < b.q();
        return a.to_real() < b.to_real();
    }
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

    /// "p/q" (or "p" for integers) when exact, otherwise a decimal string
    /// carrying every stored digit.
    std::string to_string() const {
        if (const auto* q = std::get_if<Rational>(&value_)) {
            if (bmp::denominator(*q) == 1) return bmp::numerator(*q).str();
            return bmp::numerator(*q).str() + "/" + bmp::denominator(*q).str();
        }
        return std::get<Real>(value_).str(0, std::ios_base::scientific);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    struct Tag {};
    Scalar(Tag, const Real& v) : value_(v) {}

    static Scalar wrap(const Rational& v) { return Scalar(v); }
    static Scalar wrap(const Real& v) { return Scalar(Tag{}, v); }

    const Rational& q() const { return std::get<Rational>(value_); }

    std::variant<Rational, Real> value_;
};

inline bool all_exact(const std::vector<Scalar>& values) {
    for (const auto& v : values)
        if (!v.exact()) return false;
    return true;
}

/// Exact equality for exact pairs; relative tolerance otherwise.
inline bool approx_equal(const Scalar& a, const Scalar& b, double rel_tol = 1e-30) {
    if (a.exact() && b.exact()) return a == b;
    const Real x = a.to_real(), y = b.to_real();
    const Real diff = bmp::abs(x - y);
    const Real scale = std::max({Real(1), Real(bmp::abs(x)), Real(bmp::abs(y))});
    return diff <= Real(rel_tol) * scale;
}

/// Parses "n/d" or an integer, with optional leading sign.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
        return Rational(to_int(text));
    }
    const auto num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("not a rational: '" + std::string(text) + "'");
    const Integer d = to_int(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(to_int(num), d);
}

/// Rational syntax yields an exact scalar; a decimal literal yields an
/// inexact one.
inline Scalar parse_scalar(std::string_view text) {
    try {
        return Scalar(parse_rational(text));
    } catch (const ParseError&) {
    }
    const std::string s(text);
    char* end = nullptr;
    (void)std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw ParseError("not a number: '" + s + "'");
    detail::init_precision();
    return Scalar::inexact(Real(s));
}

} // namespace appell
