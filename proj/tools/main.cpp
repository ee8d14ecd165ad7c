// Command-line surface over the invariant-curve library: analysis,
// coefficient computation, curve tracing, trajectory generation,
// verification, and the reference-value regression table.
//
// Exit codes: 0 success, 1 verification/regression failure, 2 usage or
// domain error. Diagnostics go to stderr, data to stdout (or --out).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "invman/invman.hpp"

namespace {
using json = nlohmann::ordered_json;
using namespace invman;

double rounded(double v) { return round_significant(v); }

json vec_json(const Vec2& v) { return json::array({rounded(v.x), rounded(v.y)}); }

/// Output stream selector: stdout by default, a file (binary mode, so line
/// endings are exactly LF) when a path is given.
class OutStream {
  public:
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::domain_error("cannot open output file: " + path);
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void note_alpha_boundary(double alpha) {
    if (alpha == 0.0) {
        std::cerr << "warning: alpha = 0 lies on the admissible boundary (alpha > 0 is the "
                     "generic regime); positivity of iterates is not guaranteed for every "
                     "start\n";
    }
}

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

int run_analyze(double alpha, double beta, bool as_json) {
    note_alpha_boundary(alpha);
    const SpectrumT s = spectrum_T(Params(alpha, beta));
    if (as_json) {
        json j;
        j["x_bar"] = rounded(s.x_bar);
        j["theta"] = rounded(s.theta);
        j["lambda1"] = rounded(s.lambda1);
        j["lambda2"] = rounded(s.lambda2);
        j["v1"] = vec_json(s.v1);
        j["v2"] = vec_json(s.v2);
        j["saddle"] = s.saddle;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "x_bar = " << format_significant(s.x_bar) << "\n"
              << "theta = " << format_significant(s.theta) << "\n"
              << "lambda1 = " << format_significant(s.lambda1) << "\n"
              << "lambda2 = " << format_significant(s.lambda2) << "\n"
              << "v1 = (" << format_significant(s.v1.x) << ", " << format_significant(s.v1.y)
              << ")\n"
              << "v2 = (" << format_significant(s.v2.x) << ", " << format_significant(s.v2.y)
              << ")\n"
              << "saddle = " << (s.saddle ? "true" : "false") << "\n";
    return 0;
}

int run_coeffs(const std::string& kind, double alpha, double beta, bool as_json) {
    note_alpha_boundary(alpha);
    const Params p(alpha, beta);
    const bool unstable = kind == "unstable";
    const ManifoldModel m = unstable ? unstable_model(p) : stable_model(p);
    const char* n2 = unstable ? "a2" : "b2";
    const char* n3 = unstable ? "a3" : "b3";
    if (as_json) {
        json j;
        j["gamma1"] = rounded(m.linear_constants[0]);
        j["gamma2"] = rounded(m.linear_constants[1]);
        j["gamma3"] = rounded(m.linear_constants[2]);
        j[n2] = rounded(m.coeff2);
        j[n3] = rounded(m.coeff3);
        j["tangent_slope"] = rounded(m.tangent_slope);
        j["polynomial"] = polynomial_string(m);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "gamma1 = " << format_significant(m.linear_constants[0]) << "\n"
              << "gamma2 = " << format_significant(m.linear_constants[1]) << "\n"
              << "gamma3 = " << format_significant(m.linear_constants[2]) << "\n"
              << n2 << " = " << format_significant(m.coeff2) << "\n"
              << n3 << " = " << format_significant(m.coeff3) << "\n"
              << "tangent_slope = " << format_significant(m.tangent_slope) << "\n"
              << "polynomial: " << polynomial_string(m) << "\n";
    return 0;
}

int run_center(double phi, double beta, bool swap, bool as_json) {
    const PeriodicPair pr(phi, beta);
    const ManifoldModel m = center_model(swap ? pr.swapped() : pr);
    if (as_json) {
        json j;
        j["psi"] = rounded(pr.psi());
        j["delta1"] = rounded(m.linear_constants[0]);
        j["delta2"] = rounded(m.linear_constants[1]);
        j["delta3"] = rounded(m.linear_constants[2]);
        j["c2"] = rounded(m.coeff2);
        j["c3"] = rounded(m.coeff3);
        j["tangent_slope"] = rounded(m.tangent_slope);
        j["polynomial"] = polynomial_string(m);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "psi = " << format_significant(pr.psi()) << "\n"
              << "delta1 = " << format_significant(m.linear_constants[0]) << "\n"
              << "delta2 = " << format_significant(m.linear_constants[1]) << "\n"
              << "delta3 = " << format_significant(m.linear_constants[2]) << "\n"
              << "c2 = " << format_significant(m.coeff2) << "\n"
              << "c3 = " << format_significant(m.coeff3) << "\n"
              << "tangent_slope = " << format_significant(m.tangent_slope) << "\n"
              << "polynomial: " << polynomial_string(m) << "\n";
    return 0;
}

int run_curve(const ManifoldModel& m, bool has_xmin, double xmin, bool has_xmax, double xmax,
              std::size_t samples, const std::string& out_path) {
    const double lo = has_xmin ? xmin : m.base.x - 0.5;
    const double hi = has_xmax ? xmax : m.base.x + 0.5;
    const CurveTrace tr = trace_curve(m, lo, hi, samples);
    if (!tr.gaps.empty()) {
        std::cerr << "warning: " << tr.gaps.size() << " sample(s) did not converge and were "
                  << "skipped (first at x = " << format_significant(tr.gaps.front()) << ")\n";
    }
    OutStream out(out_path);
    out.get() << "x,y\n";
    for (const Vec2& pt : tr.points) {
        out.get() << format_significant(pt.x) << "," << format_significant(pt.y) << "\n";
    }
    return 0;
}

int run_trajectory(double alpha, double beta, double y0, double z0, long long n,
                   const std::string& out_path) {
    note_alpha_boundary(alpha);
    const Params p(alpha, beta);
    const auto states = iterate_trajectory(p, State(y0, z0), static_cast<std::size_t>(n));
    OutStream out(out_path);
    out.get() << "n,x\n";
    out.get() << "-1," << format_significant(y0) << "\n";
    out.get() << "0," << format_significant(z0) << "\n";
    for (std::size_t k = 1; k < states.size(); ++k) {
        out.get() << k << "," << format_significant(states[k].z()) << "\n";
    }
    return 0;
}

int run_verify(std::uint64_t seed, const std::string& grid) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.fine_grid = grid == "fine";
    const std::vector<CheckReport> rows = run_verify_suite(opt);
    std::size_t pass = 0, fail = 0, erratum = 0;
    for (const CheckReport& r : rows) {
        switch (r.status) {
            case CheckStatus::PASS: ++pass; break;
            case CheckStatus::FAIL: ++fail; break;
            case CheckStatus::ERRATUM: ++erratum; break;
        }
        std::cout << to_string(r.status) << " " << r.name << " (observed "
                  << format_significant(r.observed, 6) << ", expected "
                  << format_significant(r.expected, 6) << ", tolerance "
                  << format_significant(r.tolerance, 6) << ")";
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
    }
    std::cout << "checks: " << rows.size() << ", PASS: " << pass << ", ERRATUM: " << erratum
              << ", FAIL: " << fail << "\n";
    return fail > 0 ? 1 : 0;
}

int run_reproduce(bool as_json) {
    const std::vector<CheckReport> rows = reproduce_paper_report();
    std::size_t pass = 0, fail = 0, erratum = 0;
    json jrows = json::array();
    if (!as_json) {
        std::cout << pad("case", 14) << pad("quantity", 15) << pad("paper_value", 18)
                  << pad("computed", 18) << pad("abs_diff", 12) << "status\n";
    }
    for (const CheckReport& r : rows) {
        switch (r.status) {
            case CheckStatus::PASS: ++pass; break;
            case CheckStatus::FAIL: ++fail; break;
            case CheckStatus::ERRATUM: ++erratum; break;
        }
        const std::size_t sp = r.name.find(' ');
        const std::string case_name = r.name.substr(0, sp);
        const std::string quantity = sp == std::string::npos ? "" : r.name.substr(sp + 1);
        const double diff = std::abs(r.observed - r.expected);
        if (as_json) {
            json j;
            j["case"] = case_name;
            j["quantity"] = quantity;
            j["paper_value"] = rounded(r.expected);
            j["computed"] = rounded(r.observed);
            j["abs_diff"] = rounded(diff);
            j["status"] = to_string(r.status);
            jrows.push_back(std::move(j));
        } else {
            std::cout << pad(case_name, 14) << pad(quantity, 15)
                      << pad(format_significant(r.expected), 18)
                      << pad(format_significant(r.observed), 18)
                      << pad(format_significant(diff, 6), 12) << to_string(r.status) << "\n";
        }
    }
    if (as_json) {
        json j;
        j["rows"] = std::move(jrows);
        j["summary"] = {{"PASS", pass}, {"ERRATUM", erratum}, {"FAIL", fail}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "PASS: " << pass << ", ERRATUM: " << erratum << ", FAIL: " << fail << "\n";
    }
    return fail > 0 ? 1 : 0;
}
}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant curves of x_{n+1} = alpha + beta*x_{n-1} + x_{n-1}/x_n: "
                 "saddle manifolds, period-two center curves, tracing, and verification"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    double alpha = 0.0, beta = 0.0, phi = 0.0;
    double xmin = 0.0, xmax = 0.0, y0 = 0.0, z0 = 0.0;
    long long nsteps = 0;
    std::size_t samples = 201;
    std::uint64_t seed = 42;
    std::string kind, grid = "fine", out_path;
    bool as_json = false, swap_pair = false;

    CLI::App* analyze = app.add_subcommand("analyze", "Fixed point and linearization data");
    analyze->add_option("--alpha", alpha, "alpha >= 0")->required();
    analyze->add_option("--beta", beta, "beta in [0, 1)")->required();
    analyze->add_flag("--json", as_json, "emit JSON");

    CLI::App* coeffs =
        app.add_subcommand("coeffs", "Closed-form manifold coefficients at a saddle");
    coeffs->add_option("--kind", kind, "unstable or stable")
        ->required()
        ->check(CLI::IsMember({"unstable", "stable"}));
    coeffs->add_option("--alpha", alpha, "alpha >= 0")->required();
    coeffs->add_option("--beta", beta, "beta in [0, 1)")->required();
    coeffs->add_flag("--json", as_json, "emit JSON");

    CLI::App* center =
        app.add_subcommand("center", "Invariant-curve coefficients at a period-two point");
    center->add_option("--phi", phi, "Phi > 1/(1-beta)")->required();
    center->add_option("--beta", beta, "beta in [0, 1)")->required();
    center->add_flag("--swap", swap_pair, "use the companion (Psi, Phi) base point");
    center->add_flag("--json", as_json, "emit JSON");

    CLI::App* curve = app.add_subcommand("curve", "Trace an invariant curve to CSV (x,y)");
    curve->add_option("--kind", kind, "unstable, stable, or center")
        ->required()
        ->check(CLI::IsMember({"unstable", "stable", "center"}));
    curve->add_option("--alpha", alpha, "alpha >= 0 (saddle kinds)");
    curve->add_option("--phi", phi, "Phi > 1/(1-beta) (center kind)");
    curve->add_option("--beta", beta, "beta in [0, 1)")->required();
    curve->add_flag("--swap", swap_pair, "center kind: use the (Psi, Phi) base point");
    curve->add_option("--xmin", xmin, "left end of the traced range (default base - 0.5)");
    curve->add_option("--xmax", xmax, "right end of the traced range (default base + 0.5)");
    curve->add_option("--samples", samples, "number of x samples (default 201)");
    curve->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* trajectory =
        app.add_subcommand("trajectory", "Iterate the map from (y0, z0) to CSV (n,x)");
    trajectory->add_option("--alpha", alpha, "alpha >= 0")->required();
    trajectory->add_option("--beta", beta, "beta in [0, 1)")->required();
    trajectory->add_option("--y0", y0, "x_{-1} > 0")->required();
    trajectory->add_option("--z0", z0, "x_0 > 0")->required();
    trajectory->add_option("-n", nsteps, "number of steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    trajectory->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--seed", seed, "random seed (default 42)");
    verify->add_option("--grid", grid, "coarse or fine (default fine)")
        ->check(CLI::IsMember({"coarse", "fine"}));

    CLI::App* reproduce =
        app.add_subcommand("reproduce-paper", "Regression table of the reference values");
    reproduce->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(alpha, beta, as_json);
        if (coeffs->parsed()) return run_coeffs(kind, alpha, beta, as_json);
        if (center->parsed()) return run_center(phi, beta, swap_pair, as_json);
        if (curve->parsed()) {
            if (kind == "center") {
                if (curve->count("--phi") == 0) {
                    std::cerr << "error: --phi is required for --kind center\n";
                    return 2;
                }
                const PeriodicPair pr(phi, beta);
                return run_curve(center_model(swap_pair ? pr.swapped() : pr),
                                 curve->count("--xmin") > 0, xmin, curve->count("--xmax") > 0,
                                 xmax, samples, out_path);
            }
            if (curve->count("--alpha") == 0) {
                std::cerr << "error: --alpha is required for --kind " << kind << "\n";
                return 2;
            }
            if (swap_pair) {
                std::cerr << "error: --swap applies only to --kind center\n";
                return 2;
            }
            note_alpha_boundary(alpha);
            const Params p(alpha, beta);
            return run_curve(kind == "unstable" ? unstable_model(p) : stable_model(p),
                             curve->count("--xmin") > 0, xmin, curve->count("--xmax") > 0, xmax,
                             samples, out_path);
        }
        if (trajectory->parsed()) return run_trajectory(alpha, beta, y0, z0, nsteps, out_path);
        if (verify->parsed()) return run_verify(seed, grid);
        if (reproduce->parsed()) return run_reproduce(as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand executed\n";
    return 2;
}
