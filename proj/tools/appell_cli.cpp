// appell: tabulate, evaluate and verify Appell polynomials of probability laws.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <appell/dist_parse.hpp>
#include <appell/mc.hpp>
#include <appell/serialize.hpp>
#include <appell/verify.hpp>

namespace {

using namespace appell;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kCapability = 3 };

struct Options {
    std::string dist;
    std::size_t degree = 0;
    std::size_t degree_cap = 64;
    std::string construction = "recurrence";
    std::string format = "json";
    std::string x;
    double rel_tol = 1e-12;
    std::size_t upto = 0;
    bool cumulants = false;
    std::string suite;
    std::size_t max_degree = 0;
    bool json = false;
    bool timing = false;
    std::vector<std::string> verify_dists;
    double mc_x = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

Construction parse_construction(const std::string& s) {
    if (s == "recurrence") return Construction::Recurrence;
    if (s == "inversion") return Construction::SeriesInversion;
    if (s == "determinant") return Construction::Determinant;
    throw InvalidParameter("unknown construction '" + s + "'");
}

void check_degree(std::size_t n, const Options& o) {
    if (n > o.degree_cap)
        throw InvalidParameter("degree " + std::to_string(n) + " exceeds the cap " + std::to_string(o.degree_cap) +
                               " (raise it with --degree-cap)");
}

int cmd_gen(const Options& o) {
    check_degree(o.degree, o);
    const DistSpec spec = parse_dist(o.dist);
    const Construction how = parse_construction(o.construction);
    const AppellPoly q = appell_poly(spec, o.degree, how);
    if (spec.exact()) {
        for (auto other : {Construction::Recurrence, Construction::SeriesInversion, Construction::Determinant}) {
            if (appell_poly(spec, o.degree, other).poly == q.poly) continue;
            std::cerr << "error: " << to_string(how) << " and " << to_string(other)
                      << " constructions disagree for degree " << o.degree << "\n";
            return kFailed;
        }
    }
    const OutputRecord rec = make_output_record(q);
    if (o.format == "json")
        std::cout << to_json(rec).dump() << "\n";
    else if (o.format == "csv")
        std::cout << to_csv(rec) << "\n";
    else
        std::cout << to_latex(rec, q.poly) << "\n";
    return kOk;
}

int cmd_eval(const Options& o) {
    check_degree(o.degree, o);
    const DistSpec spec = parse_dist(o.dist);
    const Scalar x = parse_scalar(o.x);
    std::cout << appell_poly(spec, o.degree).poly(x).to_string() << "\n";
    return kOk;
}

int cmd_deriv(const Options& o) {
    check_degree(o.degree, o);
    const DistSpec spec = parse_dist(o.dist);
    const auto family = appell_family(spec, o.degree);
    const Poly d = family[o.degree].poly.derivative();
    const Poly expected = o.degree == 0 ? Poly() : Scalar(static_cast<long>(o.degree)) * family[o.degree - 1].poly;
    const bool ok = spec.exact() ? d == expected : approx_equal(d, expected);
    if (!ok) {
        std::cerr << "error: Q_n' differs from n Q_{n-1}\n";
        return kFailed;
    }
    std::cout << (d.is_zero() ? std::string("0") : d.to_string()) << "\n";
    return kOk;
}

int cmd_roots(const Options& o) {
    check_degree(o.degree, o);
    const DistSpec spec = parse_dist(o.dist);
    const Poly q = appell_poly(spec, o.degree).poly;
    try {
        std::cout << to_json(isolate_positive_root(q, o.rel_tol)).dump() << "\n";
    } catch (const NotSingleVariation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kOk;
}

int cmd_moments(const Options& o) {
    check_degree(o.upto, o);
    const DistSpec spec = parse_dist(o.dist);
    const auto mu = moments_upto(spec, o.upto);
    for (std::size_t k = 0; k <= o.upto; ++k) std::cout << "mu_" << k << " = " << mu[k] << "\n";
    if (o.cumulants) {
        const auto kappa = cumulants_upto(spec, o.upto);
        for (std::size_t k = 1; k <= o.upto; ++k) std::cout << "kappa_" << k << " = " << kappa[k - 1] << "\n";
    }
    return kOk;
}

int cmd_verify(const Options& o) {
    check_degree(o.max_degree, o);
    const Suite suite = parse_suite(o.suite);
    std::vector<DistSpec> specs;
    for (const auto& d : o.verify_dists) specs.push_back(parse_dist(d));
    if (specs.empty()) specs = default_core_specs();
    const auto reports = run_suite(suite, o.max_degree, specs);
    std::size_t failed = 0;
    for (const auto& r : reports) {
        if (!r.pass) ++failed;
        if (o.json) {
            std::cout << to_json(r, o.timing).dump() << "\n";
        } else if (!r.pass) {
            std::cout << "FAIL " << r.identity_id << " [" << r.subject << "] n=" << r.degree;
            if (!r.detail.empty()) std::cout << " " << r.detail;
            std::cout << "\n";
        }
    }
    if (!o.json)
        std::cout << o.suite << ": " << reports.size() - failed << "/" << reports.size() << " checks passed\n";
    return failed ? kFailed : kOk;
}

int cmd_mc(const Options& o) {
    const DistSpec spec = parse_dist(o.dist);
    const auto r = mc_mean_value(spec, o.degree, o.mc_x, o.samples, o.seed, o.workers);
    if (!r.warning.empty()) std::cerr << "warning: " << r.warning << "\n";
    std::cout << to_json(r).dump() << "\n";
    return r.pass ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Appell polynomials of probability distributions"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--degree-cap", o.degree_cap, "Largest accepted degree")->capture_default_str();

    auto dist_opt = [&](CLI::App* sub) { sub->add_option("--dist", o.dist, "Distribution spec")->required(); };
    auto degree_opt = [&](CLI::App* sub) { sub->add_option("--degree", o.degree, "Polynomial degree")->required(); };

    auto* gen = app.add_subcommand("gen", "Print Q_n in the power basis");
    dist_opt(gen);
    degree_opt(gen);
    gen->add_option("--construction", o.construction)
        ->check(CLI::IsMember({"recurrence", "inversion", "determinant"}))
        ->capture_default_str();
    gen->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "latex"}))->capture_default_str();

    auto* eval = app.add_subcommand("eval", "Evaluate Q_n(x)");
    dist_opt(eval);
    degree_opt(eval);
    eval->add_option("--x", o.x, "Rational p/q or decimal")->required();

    auto* deriv = app.add_subcommand("deriv", "Print Q_n' = n Q_{n-1}");
    dist_opt(deriv);
    degree_opt(deriv);

    auto* roots = app.add_subcommand("roots", "Isolate the unique positive root of Q_n");
    dist_opt(roots);
    degree_opt(roots);
    roots->add_option("--rel-tol", o.rel_tol)->check(CLI::PositiveNumber)->capture_default_str();

    auto* moments = app.add_subcommand("moments", "List raw moments (and cumulants)");
    dist_opt(moments);
    moments->add_option("--upto", o.upto)->required();
    moments->add_flag("--cumulants", o.cumulants);

    auto* verify = app.add_subcommand("verify", "Run an identity suite");
    verify->add_option("--suite", o.suite, "core|bernoulli|euler|hermite|laguerre|moment-representation|roots|all")
        ->required();
    verify->add_option("--max-degree", o.max_degree)->required();
    verify->add_flag("--json", o.json, "One JSON report per line");
    verify->add_flag("--timing", o.timing, "Include elapsed_ns in JSON reports");
    verify->add_option("--dist", o.verify_dists, "Laws for the core suite (repeatable)");

    auto* mc = app.add_subcommand("mc-check", "Monte Carlo check of E Q_n(x + xi) = x^n");
    dist_opt(mc);
    degree_opt(mc);
    mc->add_option("--x", o.mc_x)->required();
    mc->add_option("--samples", o.samples)->required();
    mc->add_option("--seed", o.seed)->required();
    mc->add_option("--workers", o.workers)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) return cmd_gen(o);
        if (*eval) return cmd_eval(o);
        if (*deriv) return cmd_deriv(o);
        if (*roots) return cmd_roots(o);
        if (*moments) return cmd_moments(o);
        if (*verify) return cmd_verify(o);
        if (*mc) return cmd_mc(o);
    } catch (const InexactUnsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapability;
    } catch (const MomentUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapability;
    } catch (const appell::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
