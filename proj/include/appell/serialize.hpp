#pragma once

// Machine-readable output: JSON records (one per line), CSV rows and LaTeX.
//
// OutputRecord JSON, field order fixed:
//   {"distribution":"uniform","degree":2,
//    "coefficients":[["1","6"],["-1","1"],["1","1"]],
//    "exact":true,"construction":"recurrence"}
// Exact coefficients are [numerator, denominator] string pairs in lowest
// terms; inexact ones are decimal strings with every stored digit.

#include <json.hpp>

#include <string>
#include <vector>

#include "analysis.hpp"
#include "appell.hpp"
#include "mc.hpp"
#include "report.hpp"

namespace appell {

using ordered_json = nlohmann::ordered_json;

struct OutputRecord {
    std::string distribution;
    long degree = 0;
    std::vector<Scalar> coefficients;
    bool exact = true;
    std::string construction;
};

inline OutputRecord make_output_record(const AppellPoly& p) {
    OutputRecord r;
    r.distribution = p.spec.to_string();
    r.degree = static_cast<long>(p.n);
    r.coefficients = p.poly.coeffs();
    r.exact = p.poly.exact();
    r.construction = to_string(p.construction);
    return r;
}

inline ordered_json scalar_to_json(const Scalar& s) {
    if (s.exact()) {
        const Rational& q = s.rational();
        return ordered_json::array({bmp::numerator(q).str(), bmp::denominator(q).str()});
    }
    return s.to_string();
}

inline ordered_json to_json(const OutputRecord& r) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : r.coefficients) coeffs.push_back(scalar_to_json(c));
    ordered_json j;
    j["distribution"] = r.distribution;
    j["degree"] = r.degree;
    j["coefficients"] = std::move(coeffs);
    j["exact"] = r.exact;
    j["construction"] = r.construction;
    return j;
}

/// "degree,c0,c1,...,cN" with rationals written p/q.
inline std::string to_csv(const OutputRecord& r) {
    std::string out = std::to_string(r.degree);
    for (const auto& c : r.coefficients) out += "," + c.to_string();
    return out;
}

inline std::string to_latex(const OutputRecord& r, const Poly& p) {
    return "Q_{" + std::to_string(r.degree) + "}(x) = " + p.to_latex();
}

/// Identity reports are deterministic by default; wall time is only added
/// on request since it differs between runs.
inline ordered_json to_json(const IdentityReport& r, bool with_timing = false) {
    ordered_json residual = ordered_json::array();
    for (const auto& c : r.residual.coeffs()) residual.push_back(c.to_string());
    ordered_json j;
    j["id"] = r.identity_id;
    j["subject"] = r.subject;
    j["degree"] = r.degree;
    j["status"] = r.pass ? "pass" : "fail";
    j["residual"] = std::move(residual);
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.tolerance) j["tolerance"] = *r.tolerance;
    if (with_timing) j["elapsed_ns"] = r.elapsed.count();
    return j;
}

inline ordered_json to_json(const McCheckResult& r) {
    ordered_json j;
    j["spec"] = r.spec;
    j["n"] = r.n;
    j["x"] = r.x;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["workers"] = r.workers;
    j["sample_mean"] = r.sample_mean;
    j["target"] = r.target;
    j["stderr"] = r.stderr_;
    j["z"] = r.z;
    j["status"] = r.pass ? "pass" : "fail";
    if (!r.warning.empty()) j["warning"] = r.warning;
    return j;
}

inline ordered_json to_json(const RootReport& r) {
    ordered_json j;
    j["sign_variations"] = r.sign_variations;
    j["zero_multiplicity"] = r.zero_multiplicity;
    j["lo"] = r.lo.to_string();
    j["hi"] = r.hi.to_string();
    j["root"] = r.root.to_string();
    j["root_approx"] = r.root.to_double();
    j["residual"] = r.residual.to_string();
    j["unique"] = r.unique;
    return j;
}

} // namespace appell
