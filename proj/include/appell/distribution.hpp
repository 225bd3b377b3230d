#pragma once

// Declarative distribution descriptions and their moment / cumulant
// sequences.
//
// A DistSpec is an immutable tree of shared nodes.  Each node owns a lazily
// extended moment cache guarded by its own mutex; readers always receive a
// consistent prefix copy.  Composition (independent sum, affine transform)
// locks parent before child, and trees are acyclic, so lock order is total.

#include <cmath>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace appell {

enum class DistKind {
    Uniform01,
    Bernoulli,
    Normal,
    Gamma,
    Exponential,
    LogNormalStd,
    PointMass,
    IndependentSum,
    Affine,
    RawMoments,
};

class DistSpec;

namespace detail {

struct DistNode {
    DistKind kind;
    std::vector<Scalar> params;
    std::shared_ptr<const DistNode> left;
    std::shared_ptr<const DistNode> right;

    mutable std::mutex cache_mutex;
    mutable std::vector<Scalar> moment_cache;

    DistNode(DistKind k, std::vector<Scalar> p,
             std::shared_ptr<const DistNode> l = nullptr,
             std::shared_ptr<const DistNode> r = nullptr)
        : kind(k), params(std::move(p)), left(std::move(l)), right(std::move(r)) {}

    std::optional<std::size_t> max_available() const {
        switch (kind) {
        case DistKind::RawMoments: return params.size() - 1;
        case DistKind::IndependentSum: {
            const auto a = left->max_available(), b = right->max_available();
            if (a && b) return std::min(*a, *b);
            return a ? a : b;
        }
        case DistKind::Affine: return left->max_available();
        default: return std::nullopt;
        }
    }

    bool exact() const {
        if (kind == DistKind::LogNormalStd) return false;
        if (!all_exact(params)) return false;
        if (left && !left->exact()) return false;
        if (right && !right->exact()) return false;
        return true;
    }

    std::vector<Scalar> moments_upto(std::size_t K) const {
        if (const auto cap = max_available(); cap && K > *cap)
            throw MomentUnavailable("moment of order " + std::to_string(K) +
                                    " requested but only " + std::to_string(*cap) +
                                    " are available");
        std::lock_guard lock(cache_mutex);
        if (moment_cache.empty()) moment_cache.emplace_back(1);
        while (moment_cache.size() <= K) moment_cache.push_back(next_moment());
        return {moment_cache.begin(), moment_cache.begin() + static_cast<long>(K) + 1};
    }

private:
    // Computes mu_k for k = moment_cache.size(); caller holds the lock.
    Scalar next_moment() const {
        const long k = static_cast<long>(moment_cache.size());
        switch (kind) {
        case DistKind::Uniform01: return Scalar(Rational(1, k + 1));
        case DistKind::Bernoulli: return params[0];
        case DistKind::Normal: {
            // E(mu + sigma Z)^k, odd Gaussian moments vanish and
            // E Z^{2j} = (2j-1)!!, so only integer powers of sigma^2 occur.
            const Scalar& mu = params[0];
            const Scalar& s2 = params[1];
            Scalar sum(0), double_fact(1);
            for (long j = 0; j <= k; j += 2) {
                if (j >= 2) double_fact *= Scalar(j - 1);
                sum += Scalar(binomial(k, j)) * mu.pow(k - j) * s2.pow(j / 2) * double_fact;
            }
            return sum;
        }
        case DistKind::Gamma:
            // rising product beta (beta+1) ... (beta+k-1) / alpha^k
            return moment_cache.back() * (params[0] + Scalar(k - 1)) / params[1];
        case DistKind::Exponential: return moment_cache.back() * Scalar(k) / params[0];
        case DistKind::LogNormalStd: {
            detail::init_precision();
            return Scalar::inexact(bmp::exp(Real(k) * Real(k) / 2));
        }
        case DistKind::PointMass: return moment_cache.back() * params[0];
        case DistKind::IndependentSum: {
            const auto a = left->moments_upto(static_cast<std::size_t>(k));
            const auto b = right->moments_upto(static_cast<std::size_t>(k));
            Scalar sum(0);
            for (long j = 0; j <= k; ++j) sum += Scalar(binomial(k, j)) * a[j] * b[k - j];
            return sum;
        }
        case DistKind::Affine: {
            const auto m = left->moments_upto(static_cast<std::size_t>(k));
            const Scalar& a = params[0];
            const Scalar& b = params[1];
            Scalar sum(0);
            for (long j = 0; j <= k; ++j)
                sum += Scalar(binomial(k, j)) * a.pow(j) * m[j] * b.pow(k - j);
            return sum;
        }
        case DistKind::RawMoments: return params[static_cast<std::size_t>(k)];
        }
        throw std::logic_error("unhandled distribution kind");
    }
};

} // namespace detail

/// Immutable description of a real random variable through its law.
class DistSpec {
public:
    static DistSpec uniform() { return make(DistKind::Uniform01, {}); }

    static DistSpec bernoulli(const Scalar& p = Scalar::ratio(1, 2)) {
        if (!p.exact()) throw InvalidParameter("bernoulli: p must be rational");
        if (p < Scalar(0) || p > Scalar(1)) throw InvalidParameter("bernoulli: p must lie in [0,1]");
        return make(DistKind::Bernoulli, {p});
    }

    static DistSpec normal(const Scalar& mu = 0, const Scalar& sigma2 = 1) {
        if (sigma2.sign() <= 0) throw InvalidParameter("normal: sigma2 must be positive");
        return make(DistKind::Normal, {mu, sigma2});
    }

    static DistSpec gamma(const Scalar& beta, const Scalar& alpha = 1) {
        if (beta.sign() <= 0) throw InvalidParameter("gamma: beta must be positive");
        if (alpha.sign() <= 0) throw InvalidParameter("gamma: alpha must be positive");
        return make(DistKind::Gamma, {beta, alpha});
    }

    static DistSpec exponential(const Scalar& alpha = 1) {
        if (alpha.sign() <= 0) throw InvalidParameter("exp: alpha must be positive");
        return make(DistKind::Exponential, {alpha});
    }

    static DistSpec lognormal() { return make(DistKind::LogNormalStd, {}); }

    static DistSpec point_mass(const Scalar& c) { return make(DistKind::PointMass, {c}); }

    static DistSpec sum(const DistSpec& a, const DistSpec& b) {
        return DistSpec(std::make_shared<const detail::DistNode>(
            DistKind::IndependentSum, std::vector<Scalar>{}, a.node_, b.node_));
    }

    /// Law of a*X + b.
    static DistSpec affine(const Scalar& a, const Scalar& b, const DistSpec& inner) {
        if (a.is_zero()) throw InvalidParameter("affine: scale must be nonzero");
        return DistSpec(std::make_shared<const detail::DistNode>(
            DistKind::Affine, std::vector<Scalar>{a, b}, inner.node_));
    }

    /// Law known only through mu_0..mu_K; mu_0 must be 1.
    static DistSpec raw_moments(std::vector<Scalar> mu) {
        if (mu.empty() || !(mu.front() == Scalar(1)))
            throw InvalidParameter("moments: list must start with mu_0 = 1");
        return make(DistKind::RawMoments, std::move(mu));
    }

    DistKind kind() const { return node_->kind; }
    const std::vector<Scalar>& params() const { return node_->params; }

    /// First operand of an independent sum, or the inner law of an affine map.
    DistSpec left() const { return DistSpec(node_->left); }
    DistSpec right() const { return DistSpec(node_->right); }

    /// True when every moment is an exact rational.
    bool exact() const { return node_->exact(); }

    /// Highest moment index available; nullopt means unbounded.
    std::optional<std::size_t> max_available() const { return node_->max_available(); }

    std::vector<Scalar> moments_upto(std::size_t K) const { return node_->moments_upto(K); }

    /// Canonical mini-language form, e.g. "affine:a=-1,b=0(uniform)".
    std::string to_string() const {
        const auto& p = node_->params;
        switch (node_->kind) {
        case DistKind::Uniform01: return "uniform";
        case DistKind::Bernoulli: return "bernoulli:p=" + p[0].to_string();
        case DistKind::Normal: return "normal:mu=" + p[0].to_string() + ",sigma2=" + p[1].to_string();
        case DistKind::Gamma: return "gamma:beta=" + p[0].to_string() + ",alpha=" + p[1].to_string();
        case DistKind::Exponential: return "exp:alpha=" + p[0].to_string();
        case DistKind::LogNormalStd: return "lognormal";
        case DistKind::PointMass: return "point:c=" + p[0].to_string();
        case DistKind::IndependentSum: return "sum(" + left().to_string() + "," + right().to_string() + ")";
        case DistKind::Affine:
            return "affine:a=" + p[0].to_string() + ",b=" + p[1].to_string() + "(" + left().to_string() + ")";
        case DistKind::RawMoments: {
            std::string s = "moments:[";
            for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].to_string();
            return s + "]";
        }
        }
        return "?";
    }

private:
    explicit DistSpec(std::shared_ptr<const detail::DistNode> node) : node_(std::move(node)) {}

    static DistSpec make(DistKind kind, std::vector<Scalar> params) {
        return DistSpec(std::make_shared<const detail::DistNode>(kind, std::move(params)));
    }

    std::shared_ptr<const detail::DistNode> node_;
};

/// mu_k = E(X^k).
inline Scalar moment(const DistSpec& spec, std::size_t k) { return spec.moments_upto(k)[k]; }

/// [mu_0 .. mu_K].
inline std::vector<Scalar> moments_upto(const DistSpec& spec, std::size_t K) {
    return spec.moments_upto(K);
}

/// [kappa_1 .. kappa_K] via the moment recursion
/// kappa_n = mu_n - sum_{m=1}^{n-1} C(n-1, m-1) kappa_m mu_{n-m}.
inline std::vector<Scalar> cumulants_upto(const DistSpec& spec, std::size_t K) {
    const auto mu = spec.moments_upto(K);
    std::vector<Scalar> kappa(K + 1);
    for (std::size_t n = 1; n <= K; ++n) {
        Scalar acc = mu[n];
        for (std::size_t m = 1; m < n; ++m)
            acc -= Scalar(binomial(static_cast<long>(n - 1), static_cast<long>(m - 1))) * kappa[m] * mu[n - m];
        kappa[n] = acc;
    }
    return {kappa.begin() + 1, kappa.end()};
}

/// View of a spec's moments.  The cache itself lives with the spec, so
/// copies of a MomentSequence share work.
class MomentSequence {
public:
    explicit MomentSequence(DistSpec spec) : spec_(std::move(spec)) {}

    Scalar operator[](std::size_t k) const { return moment(spec_, k); }
    std::vector<Scalar> upto(std::size_t K) const { return spec_.moments_upto(K); }
    std::optional<std::size_t> max_available() const { return spec_.max_available(); }
    const DistSpec& spec() const { return spec_; }

private:
    DistSpec spec_;
};

/// Cumulants indexed from 1.
class CumulantSequence {
public:
    explicit CumulantSequence(DistSpec spec) : spec_(std::move(spec)) {}

    Scalar operator[](std::size_t n) const {
        if (n == 0) throw InvalidParameter("cumulants are indexed from 1");
        std::lock_guard lock(mutex_);
        if (cache_.size() < n) cache_ = cumulants_upto(spec_, n);
        return cache_[n - 1];
    }
    const DistSpec& spec() const { return spec_; }

private:
    DistSpec spec_;
    mutable std::mutex mutex_;
    mutable std::vector<Scalar> cache_;
};

} // namespace appell
