#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace appell {

/// Dense univariate polynomial, ascending powers, trailing zeros trimmed.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

    /// x^n
    static Poly monomial(std::size_t n, const Scalar& c = 1) {
        std::vector<Scalar> v(n + 1);
        v[n] = c;
        return Poly(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
    Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

    bool exact() const { return all_exact(c_); }

    /// Horner evaluation.
    Scalar operator()(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Scalar> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
        return Poly(std::move(d));
    }

    Poly operator-() const {
        std::vector<Scalar> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        return Poly(std::move(v));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const Scalar& s, const Poly& p) {
        std::vector<Scalar> v(p.c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * p.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& p, const Scalar& s) { return s * p; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    /// Coefficientwise equality (exact for exact coefficients).
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    /// Human-readable form in descending powers, e.g. "x^2 - x + 1/6".
    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const Scalar& c = c_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            const bool neg = c.sign() < 0;
            const Scalar mag = c.abs();
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            const bool unit = mag == Scalar(1);
            if (i == 0 || !unit) out += mag.to_string();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    /// LaTeX form in descending powers with \frac for rationals.
    std::string to_latex(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        auto frac = [](const Scalar& s) {
            if (!s.exact() || s.is_integer()) return s.to_string();
            const Rational& q = s.rational();
            return "\\frac{" + bmp::numerator(q).str() + "}{" + bmp::denominator(q).str() + "}";
        };
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const Scalar& c = c_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            const bool neg = c.sign() < 0;
            const Scalar mag = c.abs();
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            const bool unit = mag == Scalar(1);
            if (i == 0 || !unit) out += frac(mag);
            if (i > 0) {
                out += var;
                if (i > 1) out += "^{" + std::to_string(i) + "}";
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

/// p(a*x + b), expanded.
inline Poly compose_affine(const Poly& p, const Scalar& a, const Scalar& b) {
    // Horner in the polynomial ring: acc = acc * (a x + b) + c_i
    const Poly lin(std::vector<Scalar>{b, a});
    Poly acc;
    for (long i = p.degree(); i >= 0; --i) acc = acc * lin + Poly::constant(p.coeff(static_cast<std::size_t>(i)));
    return acc;
}

/// Coefficientwise comparison with a relative tolerance for inexact entries.
inline bool approx_equal(const Poly& a, const Poly& b, double rel_tol = 1e-30) {
    const auto n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < n; ++i)
        if (!approx_equal(a.coeff(i), b.coeff(i), rel_tol)) return false;
    return true;
}

} // namespace appell
