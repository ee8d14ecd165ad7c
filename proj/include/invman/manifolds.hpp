#pragma once

// Closed-form cubic models of the invariant curves:
//
//   * the local unstable and stable manifolds of the saddle fixed point of T
//     (valid for 0 <= alpha < 1), and
//   * the invariant curve through a period-two point (Phi, Psi) of the
//     alpha = 1 equation (the center-manifold curve of T^2).
//
// Each model is an implicit cubic E(x, y) = 0 built from three linear
// constants, two graph coefficients, and a base point; eval_manifold
// evaluates E, trace_curve solves E(x, y(x)) = 0 by damped Newton
// continuation, and display_coeffs/polynomial_string expand the model into
// the fully written-out polynomial.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "invman/dynamics.hpp"
#include "invman/format.hpp"
#include "invman/linalg.hpp"
#include "invman/spectral.hpp"

namespace invman {

enum class ManifoldKind { unstable, stable, center };

inline const char* to_string(ManifoldKind k) {
    switch (k) {
        case ManifoldKind::unstable: return "unstable";
        case ManifoldKind::stable: return "stable";
        case ManifoldKind::center: return "center";
    }
    return "?";
}

/// A cubic implicit model of an invariant curve.
///
/// For the saddle kinds, linear_constants = (gamma1, gamma2, gamma3) and
/// coeff2/coeff3 are (a2, a3) for the unstable kind or (b2, b3) for the
/// stable kind. For the center kind, linear_constants = (delta1, delta2,
/// delta3) and coeff2/coeff3 are (c2, c3).
///
/// tangent_slope is dy/dx at the base point for the unstable and center
/// kinds, and dx/dy for the stable kind.
struct ManifoldModel {
    ManifoldKind kind;
    Vec2 base;
    std::array<double, 3> linear_constants{};
    double coeff2 = 0.0;
    double coeff3 = 0.0;
    double tangent_slope = 0.0;
    std::variant<SpectrumT, SpectrumT2> spectrum;
};

namespace detail {
inline SpectrumT require_saddle(const Params& p) {
    const SpectrumT s = spectrum_T(p);
    if (!s.saddle) {
        throw std::domain_error(
            "fixed point is not a saddle at alpha = " + std::to_string(p.alpha()) +
            ", beta = " + std::to_string(p.beta()) + " (requires 0 <= alpha < 1)");
    }
    return s;
}

inline std::array<double, 3> gammas(const SpectrumT& s) {
    const double beta = s.params.beta();
    return {-(1.0 + beta * s.x_bar) / s.theta, (s.theta - 1.0) / (2.0 * s.theta),
            (s.theta + 1.0) / (2.0 * s.theta)};
}
}  // namespace detail

/// Local unstable manifold of the saddle: W^u is the zero set of
///   U(x, y) = g1 dx - g2 dy + a2 B^2 + a3 B^3,  B = g1 dx + g3 dy,
/// with dx = x - x_bar, dy = y - x_bar. Throws when the fixed point is not
/// a saddle (alpha >= 1).
inline ManifoldModel unstable_model(const Params& p) {
    const SpectrumT s = detail::require_saddle(p);
    const double xb = s.x_bar, th = s.theta, l1 = s.lambda1, l2 = s.lambda2;
    const double beta = p.beta();
    const double a2 = (1.0 + th + 2.0 * beta * xb) / (th * (th + 1.0) * (l1 * l1 - l2) * xb);
    const double a3 = a2 / ((l1 * l1 * l1 - l2) * xb) *
                      (l2 - l1 * l1 -
                       (1.0 + 2.0 * beta * xb) / (th * xb) * (1.0 / l1 + l1 / l2) -
                       l1 / (l2 * xb));
    return {ManifoldKind::unstable, {xb, xb}, detail::gammas(s), a2, a3, l1, s};
}

/// Local stable manifold of the saddle: W^s is the zero set of
///   S(x, y) = g1 dx + g3 dy - b2 B^2 + b3 B^3,  B = g1 dx - g2 dy.
/// tangent_slope holds dx/dy = 2 x_bar / (theta - 1) = 1 / lambda2.
inline ManifoldModel stable_model(const Params& p) {
    const SpectrumT s = detail::require_saddle(p);
    const double xb = s.x_bar, th = s.theta, l1 = s.lambda1, l2 = s.lambda2;
    const double beta = p.beta();
    const double b2 = (1.0 - th + 2.0 * beta * xb) / (th * (th - 1.0) * (l2 * l2 - l1) * xb);
    const double b3 = b2 / ((l2 * l2 * l2 - l1) * xb) *
                      (l1 - l2 * l2 +
                       (1.0 + 2.0 * beta * xb) / (th * xb) * (1.0 / l2 + l2 / l1) -
                       l2 / (l1 * xb));
    return {ManifoldKind::stable, {xb, xb}, detail::gammas(s), b2, b3, 2.0 * xb / (th - 1.0), s};
}

/// Invariant curve through the period-two point (Phi, Psi): zero set of
///   C(x, y) = d1 dx - d2 dy + c2 B^2 + c3 B^3,  B = d1 dx + d3 dy,
/// with dx = x - Phi, dy = y - Psi. The companion curve through (Psi, Phi)
/// is center_model(pair.swapped()).
inline ManifoldModel center_model(const PeriodicPair& pr) {
    const double phi = pr.phi(), psi = pr.psi();
    const double d1 = psi * psi * (phi - 1.0) / (phi * phi * (phi + psi - 1.0));
    const double d2 = psi / (phi + psi - 1.0);
    const double d3 = (phi - 1.0) / (phi + psi - 1.0);
    const double c2 = phi / ((1.0 - phi) * (phi + psi - 1.0) * (2.0 * phi * psi - phi - psi + 1.0));
    const double k1 = 3.0 * psi * psi - 4.0 * psi + 1.0;
    const double k2 = 3.0 * psi * psi * psi - 12.0 * psi * psi + 9.0 * psi - 1.0;
    const double k3 = 5.0 * psi * psi * psi - 14.0 * psi * psi + 6.0 * psi + 1.0;
    const double k4 = 2.0 * psi * psi * psi - 4.0 * psi * psi + psi + 1.0;
    const double k5 = phi * phi * (3.0 * psi * psi - 3.0 * psi + 1.0) -
                      phi * (3.0 * psi * psi - 5.0 * psi + 2.0) + (psi - 1.0) * (psi - 1.0);
    const double c3 = (phi * phi * phi * phi * k1 + phi * phi * phi * k2 - phi * phi * k3 + k4 * phi) /
                      (psi * (psi + phi - 1.0) * (1.0 - phi) * k5) * c2;
    return {ManifoldKind::center, {phi, psi}, {d1, d2, d3}, c2, c3,
            psi * (phi - 1.0) / (phi * phi), spectrum_T2(pr)};
}

namespace detail {
/// Per-kind coefficients of the affine part (l_x dx + l_y dy) and the
/// bracket (b_x dx + b_y dy), plus the signed quadratic/cubic multipliers
/// applied to the bracket powers.
struct EvalParts {
    double lx, ly, bx, by, q, c;
};

inline EvalParts eval_parts(const ManifoldModel& m) {
    const auto [k1, k2, k3] = m.linear_constants;
    switch (m.kind) {
        case ManifoldKind::unstable: return {k1, -k2, k1, k3, m.coeff2, m.coeff3};
        case ManifoldKind::stable: return {k1, k3, k1, -k2, -m.coeff2, m.coeff3};
        case ManifoldKind::center: return {k1, -k2, k1, k3, m.coeff2, m.coeff3};
    }
    throw std::logic_error("eval_parts: bad kind");
}
}  // namespace detail

/// Evaluates the implicit cubic; the zero level set is the local manifold.
inline double eval_manifold(const ManifoldModel& m, double x, double y) {
    const auto e = detail::eval_parts(m);
    const double dx = x - m.base.x, dy = y - m.base.y;
    const double B = e.bx * dx + e.by * dy;
    return e.lx * dx + e.ly * dy + e.q * B * B + e.c * B * B * B;
}

/// dE/dy of the implicit cubic, used by the Newton tracer.
inline double eval_manifold_dy(const ManifoldModel& m, double x, double y) {
    const auto e = detail::eval_parts(m);
    const double dx = x - m.base.x, dy = y - m.base.y;
    const double B = e.bx * dx + e.by * dy;
    return e.ly + (2.0 * e.q * B + 3.0 * e.c * B * B) * e.by;
}

inline double tangent_slope(const ManifoldModel& m) { return m.tangent_slope; }

/// Fully expanded display form: affine part then bracket, matching
///   E = x_lin*x + constant + y_lin*y + quad*(bx*x + bc + by*y)^2
///                                    + cubic*(bx*x + bc + by*y)^3.
/// quad and cubic carry the kind's display sign (-b2 for the stable kind).
struct DisplayCoeffs {
    double x_lin, constant, y_lin;
    double quad, cubic;
    double bracket_x, bracket_const, bracket_y;
};

inline DisplayCoeffs display_coeffs(const ManifoldModel& m) {
    const auto e = detail::eval_parts(m);
    return {e.lx,
            -(e.lx * m.base.x + e.ly * m.base.y),
            e.ly,
            e.q,
            e.c,
            e.bx,
            -(e.bx * m.base.x + e.by * m.base.y),
            e.by};
}

namespace detail {
inline void append_term(std::string& s, double v, const char* sym) {
    const bool first = s.empty();
    const double a = std::abs(v);
    if (first) {
        s += (v < 0 ? "-" : "");
    } else {
        s += (v < 0 ? " - " : " + ");
    }
    s += format_significant(a);
    if (sym[0] != '\0') {
        s += " ";
        s += sym;
    }
}

inline std::string affine_string(double cx, double c0, double cy) {
    std::string s;
    append_term(s, cx, "x");
    append_term(s, c0, "");
    append_term(s, cy, "y");
    return s;
}
}  // namespace detail

/// The model written out as display polynomial text, e.g.
/// "-0.4152... x + 0.8491... - 0.2923... y + 0.2419... (-0.4152... x - 0.3508... + 0.7076... y)^2 - ...".
inline std::string polynomial_string(const ManifoldModel& m) {
    const DisplayCoeffs d = display_coeffs(m);
    const std::string bracket =
        "(" + detail::affine_string(d.bracket_x, d.bracket_const, d.bracket_y) + ")";
    std::string s = detail::affine_string(d.x_lin, d.constant, d.y_lin);
    detail::append_term(s, d.quad, (bracket + "^2").c_str());
    detail::append_term(s, d.cubic, (bracket + "^3").c_str());
    return s;
}

/// Result of tracing the zero level set as a graph y(x).
struct CurveTrace {
    std::vector<Vec2> points;   ///< accepted samples, ascending in x
    double max_residual = 0.0;  ///< max |E(x, y)| over accepted samples
    std::vector<double> gaps;   ///< x values where Newton failed to converge
};

namespace detail {
inline std::optional<double> newton_solve_y(const ManifoldModel& m, double x, double y0) {
    double y = y0;
    double r = eval_manifold(m, x, y);
    for (int it = 0; it < 50; ++it) {
        if (std::abs(r) <= 1e-12) return y;
        const double dr = eval_manifold_dy(m, x, y);
        if (dr == 0.0 || !std::isfinite(dr)) return std::nullopt;
        const double step = r / dr;
        // Step-halving damping: back off until the residual decreases.
        double t = 1.0;
        double yn = y - step;
        double rn = eval_manifold(m, x, yn);
        while (std::abs(rn) > std::abs(r) && t > 1e-6) {
            t *= 0.5;
            yn = y - t * step;
            rn = eval_manifold(m, x, yn);
        }
        y = yn;
        r = rn;
    }
    return std::abs(r) <= 1e-12 ? std::optional<double>(y) : std::nullopt;
}

/// dy/dx of the curve at the base point (the seeding slope).
inline double graph_slope(const ManifoldModel& m) {
    return m.kind == ManifoldKind::stable ? 1.0 / m.tangent_slope : m.tangent_slope;
}
}  // namespace detail

/// Traces the zero level set over [x_lo, x_hi] at n uniformly spaced x
/// values by damped Newton (tolerance 1e-12 on the residual, at most 50
/// iterations per point). The walk starts at the sample nearest the base
/// point, seeded from the tangent line there, and continues outward in both
/// directions, each solve seeded by the previously accepted y. Failed
/// points are recorded in gaps and skipped.
inline CurveTrace trace_curve(const ManifoldModel& m, double x_lo, double x_hi, std::size_t n) {
    if (!(x_lo < x_hi) || n < 2) {
        throw std::domain_error("trace_curve: requires x_lo < x_hi and at least 2 samples");
    }
    const double h = (x_hi - x_lo) / static_cast<double>(n - 1);
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = x_lo + static_cast<double>(i) * h;

    std::size_t i0 = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(xs[i] - m.base.x) < std::abs(xs[i0] - m.base.x)) i0 = i;
    }

    const double slope = detail::graph_slope(m);
    std::vector<std::optional<double>> ys(n);
    std::vector<double> gaps;

    auto sweep = [&](std::size_t begin, bool forward, double seed) {
        std::size_t i = begin;
        while (true) {
            const auto y = detail::newton_solve_y(m, xs[i], seed);
            if (y) {
                ys[i] = *y;
                seed = *y;
            } else {
                gaps.push_back(xs[i]);
            }
            if (forward) {
                if (++i == n) break;
            } else {
                if (i-- == 0) break;
            }
        }
    };
    const double tangent_seed = m.base.y + slope * (xs[i0] - m.base.x);
    sweep(i0, true, tangent_seed);
    if (i0 > 0) {
        // Walk left from the sample adjacent to the base, seeded by the
        // base solution when it converged and by the tangent line otherwise.
        sweep(i0 - 1, false, ys[i0] ? *ys[i0] : tangent_seed);
    }

    CurveTrace out;
    out.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ys[i]) {
            out.points.push_back({xs[i], *ys[i]});
            out.max_residual = std::max(out.max_residual, std::abs(eval_manifold(m, xs[i], *ys[i])));
        }
    }
    std::sort(gaps.begin(), gaps.end());
    out.gaps = std::move(gaps);
    return out;
}

}  // namespace invman
