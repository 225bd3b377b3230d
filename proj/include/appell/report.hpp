#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>

#include "poly.hpp"

namespace appell {

/// Outcome of one machine-checked identity at one degree.
///
/// In exact mode `pass` holds iff the residual polynomial is identically
/// zero; there is no tolerance.  Inexact checks set `tolerance` and pass
/// when every residual coefficient is below it in absolute value.
struct IdentityReport {
    std::string identity_id;
    std::string subject;
    long degree = 0;
    bool pass = false;
    Poly residual;
    std::string detail;
    std::optional<double> tolerance;
    std::chrono::nanoseconds elapsed{0};
};

inline IdentityReport exact_report(std::string id, std::string subject, long degree, Poly residual,
                                   std::string detail = {}) {
    IdentityReport r;
    r.identity_id = std::move(id);
    r.subject = std::move(subject);
    r.degree = degree;
    r.pass = residual.is_zero() && residual.exact();
    r.residual = std::move(residual);
    r.detail = std::move(detail);
    return r;
}

inline IdentityReport tolerance_report(std::string id, std::string subject, long degree, Poly residual,
                                       double tolerance, std::string detail = {}) {
    IdentityReport r;
    r.identity_id = std::move(id);
    r.subject = std::move(subject);
    r.degree = degree;
    r.pass = true;
    for (const auto& c : residual.coeffs())
        if (c.abs() > Scalar::inexact(tolerance)) r.pass = false;
    r.residual = std::move(residual);
    r.detail = std::move(detail);
    r.tolerance = tolerance;
    return r;
}

/// Runs `body` (returning an IdentityReport) and stamps the wall time.
template <typename F>
IdentityReport timed(F&& body) {
    const auto start = std::chrono::steady_clock::now();
    IdentityReport r = std::forward<F>(body)();
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

} // namespace appell
