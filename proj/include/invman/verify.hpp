#pragma once

// Executable verification checks: residual order of the cubic truncations,
// conjugacy of the normal forms with the shifted maps, trajectory-vs-curve
// distance, global-dynamics spot checks, the closed-form-vs-oracle
// equivalence, and the published-value regression report. Each check
// returns a CheckReport carrying observed/expected/tolerance so every
// decision is reproducible; randomized checks take an explicit seed
// (default 42).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "invman/dynamics.hpp"
#include "invman/format.hpp"
#include "invman/linalg.hpp"
#include "invman/manifolds.hpp"
#include "invman/reference_data.hpp"
#include "invman/series.hpp"
#include "invman/spectral.hpp"

namespace invman {

enum class CheckStatus { PASS, FAIL, ERRATUM };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::PASS: return "PASS";
        case CheckStatus::FAIL: return "FAIL";
        case CheckStatus::ERRATUM: return "ERRATUM";
    }
    return "?";
}

struct CheckReport {
    std::string name;
    CheckStatus status = CheckStatus::FAIL;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

namespace detail {
inline CheckStatus status_from(double observed, double expected, double tolerance) {
    return std::abs(observed - expected) <= tolerance ? CheckStatus::PASS : CheckStatus::FAIL;
}

inline std::string param_tag(const Params& p) {
    return "alpha=" + format_significant(p.alpha()) + " beta=" + format_significant(p.beta());
}

inline std::string pair_tag(const PeriodicPair& pr) {
    return "phi=" + format_significant(pr.phi()) + " beta=" + format_significant(pr.beta());
}

/// Pointwise residual of the invariance equation for the cubic graph of the
/// given saddle-kind model, using the exact normal-form nonlinearities.
inline double pointwise_residual(ManifoldKind kind, const Params& p, double c2, double c3,
                                 double t) {
    const SpectrumT s = spectrum_T(p);
    const auto graph = [&](double u) { return c2 * u * u + c3 * u * u * u; };
    if (kind == ManifoldKind::unstable) {
        const double w = graph(t);
        const FG n = normal_nonlinearity(p, t, w);
        return graph(s.lambda1 * t + n.f) - s.lambda2 * w - n.g;
    }
    const double w = graph(t);
    const FG n = normal_nonlinearity(p, w, t);
    return graph(s.lambda2 * t + n.g) - s.lambda1 * w - n.f;
}

inline double pointwise_residual(const PeriodicPair& pr, double c2, double c3, double t) {
    const SpectrumT2 s = spectrum_T2(pr);
    const auto graph = [&](double u) { return c2 * u * u + c3 * u * u * u; };
    const double w = graph(t);
    const FG n = normal_nonlinearity2(pr, t, w);
    return graph(s.lambda01 * t + n.f) - w - n.g;
}

template <typename ResidualFn>
CheckReport residual_order_report(std::string name, ResidualFn&& residual) {
    const double xis[] = {0.1, 0.05, 0.025, 0.0125};
    double lo = 0.0, hi = 0.0;
    std::string ratios;
    bool first = true;
    for (double xi : xis) {
        const double t = std::abs(residual(xi)) / (xi * xi * xi * xi);
        if (first) {
            lo = hi = t;
            first = false;
        } else {
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
        if (!ratios.empty()) ratios += ", ";
        ratios += format_significant(t, 6);
    }
    CheckReport r;
    r.name = std::move(name);
    r.expected = 1.0;
    r.tolerance = 3.0;
    r.observed = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    r.status = std::isfinite(r.observed) ? status_from(r.observed, r.expected, r.tolerance)
                                         : CheckStatus::FAIL;
    r.detail = "|r(xi)|/xi^4 at xi = 0.1, 0.05, 0.025, 0.0125: " + ratios +
               "; spread factor " + format_significant(r.observed, 6);
    if (r.status == CheckStatus::FAIL) {
        r.detail += " (spread > 4: the quartic residual coefficient is small or changes sign "
                    "near these parameters, so the quintic term dominates at these xi)";
    }
    return r;
}
}  // namespace detail

/// Verifies fourth-order vanishing of the invariance-equation residual for
/// the cubic graph: PASS iff |r(xi)|/xi^4 varies by at most a factor of 4
/// across xi in {0.1, 0.05, 0.025, 0.0125}.
inline CheckReport residual_order_check(ManifoldKind kind, const Params& p) {
    const ManifoldModel m = kind == ManifoldKind::unstable ? unstable_model(p) : stable_model(p);
    return detail::residual_order_report(
        std::string("residual-order ") + to_string(kind) + " " + detail::param_tag(p),
        [&](double t) { return detail::pointwise_residual(kind, p, m.coeff2, m.coeff3, t); });
}

inline CheckReport residual_order_check(const PeriodicPair& pr) {
    const ManifoldModel m = center_model(pr);
    return detail::residual_order_report(
        "residual-order center " + detail::pair_tag(pr),
        [&](double t) { return detail::pointwise_residual(pr, m.coeff2, m.coeff3, t); });
}

/// Verifies the change-of-coordinates identity basis * N(w) = F(basis * w)
/// over `samples` points drawn uniformly from the disk |w| <= 0.1.
inline CheckReport conjugacy_check(const Params& p, std::size_t samples, std::uint64_t seed = 42) {
    const SpectrumT s = spectrum_T(p);
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(-0.1, 0.1);
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        double xi, eta;
        do {
            xi = dist(gen);
            eta = dist(gen);
        } while (xi * xi + eta * eta > 0.01);
        const FG n = normal_nonlinearity(p, xi, eta);
        const Vec2 lhs = s.basis * Vec2{s.lambda1 * xi + n.f, s.lambda2 * eta + n.g};
        const Vec2 rhs = translated_map(p, s.basis * Vec2{xi, eta});
        worst = std::max(worst, std::max(std::abs(lhs.x - rhs.x), std::abs(lhs.y - rhs.y)));
    }
    CheckReport r;
    r.name = "conjugacy T " + detail::param_tag(p);
    r.observed = worst;
    r.expected = 0.0;
    r.tolerance = 1e-11;
    r.status = detail::status_from(worst, 0.0, r.tolerance);
    r.detail = "max |P*N(w) - F(P*w)| over " + std::to_string(samples) + " samples, |w| <= 0.1";
    return r;
}

inline CheckReport conjugacy_check(const PeriodicPair& pr, std::size_t samples,
                                   std::uint64_t seed = 42) {
    const SpectrumT2 s = spectrum_T2(pr);
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(-0.1, 0.1);
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        double xi, eta;
        do {
            xi = dist(gen);
            eta = dist(gen);
        } while (xi * xi + eta * eta > 0.01);
        const FG n = normal_nonlinearity2(pr, xi, eta);
        const Vec2 lhs = s.basis0 * Vec2{s.lambda01 * xi + n.f, eta + n.g};
        const Vec2 rhs = translated_map2(pr, s.basis0 * Vec2{xi, eta});
        worst = std::max(worst, std::max(std::abs(lhs.x - rhs.x), std::abs(lhs.y - rhs.y)));
    }
    CheckReport r;
    r.name = "conjugacy T2 " + detail::pair_tag(pr);
    r.observed = worst;
    r.expected = 0.0;
    r.tolerance = 1e-11;
    r.status = detail::status_from(worst, 0.0, r.tolerance);
    r.detail = "max |P0*N0(w) - F0(P0*w)| over " + std::to_string(samples) + " samples, |w| <= 0.1";
    return r;
}

namespace detail {
/// Linear interpolation on a gap-free trace (points ascending in x).
/// Returns NaN outside the traced range.
inline double interp_trace(const CurveTrace& tr, double x) {
    const auto& pts = tr.points;
    if (pts.empty() || x < pts.front().x || x > pts.back().x) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const auto it = std::lower_bound(pts.begin(), pts.end(), x,
                                     [](const Vec2& p, double v) { return p.x < v; });
    if (it == pts.begin()) return it->y;
    const Vec2 a = *(it - 1), b = *it;
    const double t = (x - a.x) / (b.x - a.x);
    return a.y + t * (b.y - a.y);
}
}  // namespace detail

/// Figure-style check: starts on the traced center curve, offset 1e-2 in x
/// from the base point, and verifies every even-index iterate over 2*steps
/// applications of the map stays within 1e-3 vertical distance of the
/// traced curve.
inline CheckReport trajectory_distance_check(const PeriodicPair& pr, std::size_t steps) {
    CheckReport r;
    r.name = "trajectory-distance " + detail::pair_tag(pr) + " steps=" + std::to_string(steps);
    r.expected = 0.0;
    r.tolerance = 1e-3;

    const ManifoldModel m = center_model(pr);
    const CurveTrace tr = trace_curve(m, pr.phi() - 0.5, pr.phi() + 0.5, 1001);
    if (!tr.gaps.empty()) {
        r.status = CheckStatus::FAIL;
        r.observed = std::numeric_limits<double>::infinity();
        r.detail = "curve trace has " + std::to_string(tr.gaps.size()) + " gap(s)";
        return r;
    }

    const double x0 = pr.phi() + 1e-2;
    const double y0 = detail::interp_trace(tr, x0);
    double worst = 0.0;
    try {
        const Params p(1.0, pr.beta());
        State s(x0, y0);
        for (std::size_t k = 0; k <= 2 * steps; ++k) {
            if (k % 2 == 0) {
                const double yc = detail::interp_trace(tr, s.y());
                if (std::isnan(yc)) {
                    r.status = CheckStatus::FAIL;
                    r.observed = std::numeric_limits<double>::infinity();
                    r.detail = "iterate " + std::to_string(k) + " left the traced x-range";
                    return r;
                }
                worst = std::max(worst, std::abs(s.z() - yc));
            }
            if (k < 2 * steps) s = step_T(p, s);
        }
    } catch (const std::domain_error& e) {
        r.status = CheckStatus::FAIL;
        r.observed = std::numeric_limits<double>::infinity();
        r.detail = std::string("trajectory left the domain: ") + e.what();
        return r;
    }
    r.observed = worst;
    r.status = detail::status_from(worst, 0.0, r.tolerance);
    r.detail = "max vertical distance of even-index iterates to the traced curve";
    return r;
}

/// Qualitative-regime spot check:
///   alpha > 1: 10 seeded positive starts converge to x_bar within 1e-8 by
///              n = 2000;
///   alpha = 1: even/odd subsequences converge and the limit pair satisfies
///              the period-two partner relation to 1e-6;
///   alpha < 1: a 1e-4 perturbation along v1 grows by a factor >= 10 within
///              30 steps (observed is capped at 10 so PASS iff the cap is hit).
inline CheckReport global_dynamics_check(const Params& p, std::uint64_t seed = 42) {
    CheckReport r;
    r.name = "global-dynamics " + detail::param_tag(p);
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> start(0.5, 5.0);

    if (p.alpha() > 1.0) {
        const double xb = fixed_point(p);
        double worst = 0.0;
        for (int s = 0; s < 10; ++s) {
            State st(start(gen), start(gen));
            for (int n = 0; n < 2000; ++n) st = step_T(p, st);
            worst = std::max(worst, std::max(std::abs(st.y() - xb), std::abs(st.z() - xb)));
        }
        r.observed = worst;
        r.expected = 0.0;
        r.tolerance = 1e-8;
        r.status = detail::status_from(worst, 0.0, r.tolerance);
        r.detail = "max distance to x_bar = " + format_significant(xb) +
                   " after 2000 steps from 10 seeded starts";
        return r;
    }

    if (p.alpha() == 1.0) {
        double worst_rel = 0.0;
        double worst_conv = 0.0;
        for (int s = 0; s < 10; ++s) {
            State st(start(gen), start(gen));
            // One T^2 application per loop turn, so (st.y(), st.z()) samples
            // the two parity subsequences; prev holds the previous T^2 state.
            double prev_a = st.y(), prev_b = st.z();
            double a = prev_a, b = prev_b;
            for (int n = 0; n < 2000; ++n) {
                prev_a = a;
                prev_b = b;
                st = step_T(p, st);
                st = step_T(p, st);
                a = st.y();
                b = st.z();
            }
            worst_conv =
                std::max(worst_conv, std::max(std::abs(a - prev_a), std::abs(b - prev_b)));
            try {
                worst_rel = std::max(worst_rel, std::abs(b - periodic_partner(a, p.beta())));
            } catch (const std::domain_error&) {
                worst_rel = std::numeric_limits<double>::infinity();
            }
        }
        r.observed = std::max(worst_rel, worst_conv);
        r.expected = 0.0;
        r.tolerance = 1e-6;
        r.status = std::isfinite(r.observed) ? detail::status_from(r.observed, 0.0, r.tolerance)
                                             : CheckStatus::FAIL;
        r.detail = "even/odd subsequence limits over 10 seeded starts: max partner-relation error " +
                   format_significant(worst_rel, 6) + ", max last-step movement " +
                   format_significant(worst_conv, 6);
        return r;
    }

    // alpha < 1: repulsion along the expanding direction.
    const SpectrumT s = spectrum_T(p);
    const double xb = s.x_bar;
    const Vec2 v = (1.0 / s.v1.norm()) * s.v1;
    double growth = 0.0;
    int steps_used = 0;
    try {
        State st(xb + 1e-4 * v.x, xb + 1e-4 * v.y);
        for (int n = 1; n <= 30; ++n) {
            st = step_T(p, st);
            const double d = Vec2{st.y() - xb, st.z() - xb}.norm();
            growth = std::max(growth, d / 1e-4);
            steps_used = n;
            if (growth >= 10.0) break;
        }
    } catch (const std::domain_error&) {
        // Leaving the positive quadrant is itself evidence of repulsion only
        // if the threshold was already reached; otherwise report the failure.
    }
    r.observed = std::min(growth, 10.0);
    r.expected = 10.0;
    r.tolerance = 0.0;
    r.status = detail::status_from(r.observed, r.expected, r.tolerance);
    r.detail = "1e-4 perturbation along v1 grew by factor " + format_significant(growth, 6) +
               " within " + std::to_string(steps_used) + " step(s)";
    return r;
}

/// Closed-form coefficients vs the independent series-oracle solution of
/// the same invariance equation, compared at 1e-9 absolute.
inline CheckReport oracle_equivalence_check(ManifoldKind kind, const Params& p) {
    const ManifoldModel m = kind == ManifoldKind::unstable ? unstable_model(p) : stable_model(p);
    const std::vector<double> sol = solve_invariance(kind, p, 3);
    CheckReport r;
    r.name = std::string("oracle ") + to_string(kind) + " " + detail::param_tag(p);
    r.observed = std::max(std::abs(m.coeff2 - sol[0]), std::abs(m.coeff3 - sol[1]));
    r.expected = 0.0;
    r.tolerance = 1e-9;
    r.status = detail::status_from(r.observed, 0.0, r.tolerance);
    r.detail = "closed form (" + format_significant(m.coeff2) + ", " + format_significant(m.coeff3) +
               ") vs oracle (" + format_significant(sol[0]) + ", " + format_significant(sol[1]) + ")";
    return r;
}

inline CheckReport oracle_equivalence_check(const PeriodicPair& pr) {
    const ManifoldModel m = center_model(pr);
    const std::vector<double> sol = solve_invariance(pr, 3);
    CheckReport r;
    r.name = "oracle center " + detail::pair_tag(pr);
    r.observed = std::max(std::abs(m.coeff2 - sol[0]), std::abs(m.coeff3 - sol[1]));
    r.expected = 0.0;
    r.tolerance = 1e-9;
    r.status = detail::status_from(r.observed, 0.0, r.tolerance);
    r.detail = "closed form (" + format_significant(m.coeff2) + ", " + format_significant(m.coeff3) +
               ") vs oracle (" + format_significant(sol[0]) + ", " + format_significant(sol[1]) + ")";
    return r;
}

/// Regression of every reported example value (16 polynomial rows x 4
/// coefficients, plus the 4 reported partner values) against recomputation
/// at relative tolerance 1e-7. Known-inconsistent published rows are
/// emitted with status ERRATUM, carrying both values.
inline std::vector<CheckReport> reproduce_paper_report() {
    std::vector<CheckReport> out;
    for (const ReferencePair& rp : reference_pairs) {
        CheckReport r;
        r.name = std::string(rp.name) + " partner";
        r.observed = periodic_partner(rp.phi, rp.beta);
        r.expected = rp.psi;
        r.tolerance = 1e-7 * std::abs(rp.psi);
        r.status = detail::status_from(r.observed, r.expected, r.tolerance);
        out.push_back(std::move(r));
    }
    for (const ReferenceCurve& rc : reference_curves) {
        const ManifoldModel m = reference_model(rc);
        const DisplayCoeffs d = display_coeffs(m);
        const struct {
            const char* quantity;
            double computed;
            double printed;
        } rows[] = {
            {"x-coefficient", d.x_lin, rc.x_lin},
            {"y-coefficient", d.y_lin, rc.y_lin},
            {"quadratic", d.quad, rc.quad},
            {"cubic", d.cubic, rc.cubic},
        };
        for (const auto& row : rows) {
            CheckReport r;
            r.name = std::string(rc.name) + " " + row.quantity;
            r.observed = row.computed;
            r.expected = row.printed;
            r.tolerance = 1e-7 * std::abs(row.printed);
            if (rc.erratum) {
                r.status = CheckStatus::ERRATUM;
                r.detail = "published row repeats the beta=0 values; recomputed value shown";
            } else {
                r.status = detail::status_from(r.observed, r.expected, r.tolerance);
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parameter grids and the full suite
// ---------------------------------------------------------------------------

/// Saddle-regime verification grid: the full grid is
/// alpha in {0.1, ..., 0.9} x beta in {0, 0.25, 0.5, 0.75}.
inline std::vector<Params> saddle_grid(bool fine = true) {
    std::vector<Params> out;
    if (fine) {
        for (double a : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
            for (double b : {0.0, 0.25, 0.5, 0.75}) out.emplace_back(a, b);
        }
    } else {
        for (double a : {0.2, 0.5, 0.8}) {
            for (double b : {0.0, 0.5}) out.emplace_back(a, b);
        }
    }
    return out;
}

/// Period-two verification grid: Phi in {1.5, 2.3, 2.94, 5} x beta in
/// {0, 0.5}, restricted to pairs with Phi > 1/(1-beta) (so (1.5, 0.5),
/// which has no positive partner, is excluded).
inline std::vector<PeriodicPair> center_grid(bool fine = true) {
    std::vector<PeriodicPair> out;
    const std::vector<double> phis = fine ? std::vector<double>{1.5, 2.3, 2.94, 5.0}
                                          : std::vector<double>{2.3, 2.94};
    for (double phi : phis) {
        for (double b : {0.0, 0.5}) {
            if ((1.0 - b) * phi - 1.0 > 0.0) out.emplace_back(phi, b);
        }
    }
    return out;
}

struct VerifyOptions {
    std::uint64_t seed = 42;
    bool fine_grid = true;
};

/// Runs every check over the configured grids, in a deterministic order:
/// oracle equivalence, residual order, conjugacy, global dynamics,
/// trajectory distance, then the reference regression rows.
inline std::vector<CheckReport> run_verify_suite(const VerifyOptions& opt = {}) {
    std::vector<CheckReport> out;
    const std::vector<Params> sg = saddle_grid(opt.fine_grid);
    const std::vector<PeriodicPair> cg = center_grid(opt.fine_grid);

    for (const Params& p : sg) {
        out.push_back(oracle_equivalence_check(ManifoldKind::unstable, p));
        out.push_back(oracle_equivalence_check(ManifoldKind::stable, p));
    }
    for (const PeriodicPair& pr : cg) out.push_back(oracle_equivalence_check(pr));

    for (const Params& p : sg) {
        out.push_back(residual_order_check(ManifoldKind::unstable, p));
        out.push_back(residual_order_check(ManifoldKind::stable, p));
    }
    for (const PeriodicPair& pr : cg) out.push_back(residual_order_check(pr));

    for (const Params& p : sg) out.push_back(conjugacy_check(p, 100, opt.seed));
    for (const PeriodicPair& pr : cg) out.push_back(conjugacy_check(pr, 100, opt.seed));

    out.push_back(global_dynamics_check(Params(2.0, 0.0), opt.seed));
    out.push_back(global_dynamics_check(Params(1.0, 0.0), opt.seed));
    out.push_back(global_dynamics_check(Params(1.0, 0.5), opt.seed));
    out.push_back(global_dynamics_check(Params(0.2, 0.0), opt.seed));

    out.push_back(trajectory_distance_check(PeriodicPair(2.94, 0.0), 50));
    out.push_back(trajectory_distance_check(PeriodicPair(2.3, 0.5), 50));

    std::vector<CheckReport> repro = reproduce_paper_report();
    out.insert(out.end(), std::make_move_iterator(repro.begin()),
               std::make_move_iterator(repro.end()));
    return out;
}

}  // namespace invman
