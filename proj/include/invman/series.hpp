#pragma once

// Truncated univariate power series arithmetic and the order-by-order
// invariance-equation solver. This module is the independent oracle for the
// closed-form manifold coefficients: it recomputes the graph coefficients
// of each invariant curve directly from the invariance equation, sharing no
// algebra with the closed forms beyond the normal-form nonlinearities
// themselves.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "invman/dynamics.hpp"
#include "invman/manifolds.hpp"
#include "invman/spectral.hpp"

namespace invman {

/// A real polynomial truncated at a fixed maximum degree (the cap). All
/// arithmetic discards terms above the cap; binary operations require both
/// operands to share the same cap.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t degree_cap = 8) : c_(degree_cap + 1, 0.0) {}

    static TruncatedSeries constant(double value, std::size_t degree_cap = 8) {
        TruncatedSeries s(degree_cap);
        s.c_[0] = value;
        return s;
    }

    static TruncatedSeries variable(std::size_t degree_cap = 8) {
        TruncatedSeries s(degree_cap);
        s.c_[1] = 1.0;
        return s;
    }

    std::size_t degree_cap() const { return c_.size() - 1; }

    double coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

    void set_coeff(std::size_t k, double v) {
        if (k >= c_.size()) {
            throw std::domain_error("TruncatedSeries::set_coeff: order " + std::to_string(k) +
                                    " exceeds cap " + std::to_string(degree_cap()));
        }
        c_[k] = v;
    }

    /// Horner evaluation at a real point.
    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

  private:
    std::vector<double> c_;
};

namespace detail {
inline void require_same_cap(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.degree_cap() != b.degree_cap()) {
        throw std::domain_error(std::string(op) + ": operands have different caps (" +
                                std::to_string(a.degree_cap()) + " vs " +
                                std::to_string(b.degree_cap()) + ")");
    }
}
}  // namespace detail

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_cap(a, b, "series_add");
    TruncatedSeries r(a.degree_cap());
    for (std::size_t k = 0; k <= a.degree_cap(); ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
}

inline TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_cap(a, b, "series_sub");
    TruncatedSeries r(a.degree_cap());
    for (std::size_t k = 0; k <= a.degree_cap(); ++k) r.set_coeff(k, a.coeff(k) - b.coeff(k));
    return r;
}

inline TruncatedSeries series_scale(const TruncatedSeries& a, double s) {
    TruncatedSeries r(a.degree_cap());
    for (std::size_t k = 0; k <= a.degree_cap(); ++k) r.set_coeff(k, s * a.coeff(k));
    return r;
}

/// Cauchy product, truncated at the shared cap.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_cap(a, b, "series_mul");
    TruncatedSeries r(a.degree_cap());
    for (std::size_t k = 0; k <= a.degree_cap(); ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) acc += a.coeff(j) * b.coeff(k - j);
        r.set_coeff(k, acc);
    }
    return r;
}

/// Long division: the unique series q with q * b = a (mod x^{cap+1}).
/// Throws std::domain_error when b has zero constant term.
inline TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_cap(a, b, "series_div");
    if (b.coeff(0) == 0.0) {
        throw std::domain_error("series_div: divisor has zero constant term");
    }
    TruncatedSeries q(a.degree_cap());
    for (std::size_t k = 0; k <= a.degree_cap(); ++k) {
        double acc = a.coeff(k);
        for (std::size_t j = 0; j < k; ++j) acc -= q.coeff(j) * b.coeff(k - j);
        q.set_coeff(k, acc / b.coeff(0));
    }
    return q;
}

/// Composition a(b(x)) by Horner's scheme. Requires the inner series to
/// have zero constant term (otherwise truncation is not well defined).
inline TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_cap(a, b, "series_compose");
    if (b.coeff(0) != 0.0) {
        throw std::domain_error("series_compose: inner series has nonzero constant term");
    }
    TruncatedSeries acc = TruncatedSeries::constant(0.0, a.degree_cap());
    for (std::size_t i = a.degree_cap() + 1; i-- > 0;) {
        acc = series_mul(acc, b);
        acc.set_coeff(0, acc.coeff(0) + a.coeff(i));
    }
    return acc;
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}
inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_div(a, b);
}
inline TruncatedSeries operator*(double s, const TruncatedSeries& a) { return series_scale(a, s); }
inline TruncatedSeries operator*(const TruncatedSeries& a, double s) { return series_scale(a, s); }

// ---------------------------------------------------------------------------
// Invariance-equation residuals and the order-by-order solver
// ---------------------------------------------------------------------------

/// Residual series of the saddle invariance equation for a candidate graph
/// w (a series in the graph variable with zero constant and linear parts):
///
///   unstable: w(lambda1 xi + f(xi, w)) - [lambda2 w + g(xi, w)],
///   stable:   w(lambda2 eta + g(w, eta)) - [lambda1 w + f(w, eta)],
///
/// with f and g the exact normal-form nonlinearities expanded as series.
inline TruncatedSeries invariance_residual(ManifoldKind kind, const Params& p,
                                           const TruncatedSeries& w) {
    if (kind == ManifoldKind::center) {
        throw std::domain_error("invariance_residual: center kind requires a PeriodicPair");
    }
    const SpectrumT s = spectrum_T(p);
    const std::size_t cap = w.degree_cap();
    const TruncatedSeries x = TruncatedSeries::variable(cap);

    // (xi, eta) in the normal-form nonlinearity: the graph variable is xi
    // for the unstable kind and eta for the stable kind.
    const TruncatedSeries& xi = (kind == ManifoldKind::unstable) ? x : w;
    const TruncatedSeries& eta = (kind == ManifoldKind::unstable) ? w : x;

    const TruncatedSeries sum = xi + eta;
    const TruncatedSeries num =
        (1.0 + 2.0 * p.beta() * s.x_bar) * (sum * sum) + s.theta * (xi * xi - eta * eta);
    const TruncatedSeries den = sum + TruncatedSeries::constant(s.x_bar, cap);
    const TruncatedSeries base = num / den;
    const TruncatedSeries f = (1.0 / (s.theta * (s.theta - 1.0))) * base;
    const TruncatedSeries g = (1.0 / (s.theta * (s.theta + 1.0))) * base;

    if (kind == ManifoldKind::unstable) {
        return series_compose(w, s.lambda1 * x + f) - (s.lambda2 * w + g);
    }
    return series_compose(w, s.lambda2 * x + g) - (s.lambda1 * w + f);
}

/// Residual series of the center invariance equation
/// w(lambda01 xi + f0(xi, w)) - [w + g0(xi, w)] at a period-two pair.
inline TruncatedSeries invariance_residual(const PeriodicPair& pr, const TruncatedSeries& w) {
    const SpectrumT2 s = spectrum_T2(pr);
    const double phi = pr.phi(), psi = pr.psi(), beta = pr.beta();
    const std::size_t cap = w.degree_cap();
    const TruncatedSeries xi = TruncatedSeries::variable(cap);

    const TruncatedSeries se = xi + w + TruncatedSeries::constant(psi, cap);
    const TruncatedSeries zden =
        se + (s.v01.x * xi + s.v02.x * w + TruncatedSeries::constant(phi, cap)) *
                 (beta * xi + beta * w + TruncatedSeries::constant(1.0 + beta * psi, cap));
    TruncatedSeries zeta = se * se / zden - TruncatedSeries::constant(psi / phi, cap);
    // The constant term vanishes identically via psi + phi + beta*phi*psi =
    // phi*psi; clear the floating-point residue so the composition below sees
    // an exact zero constant.
    zeta.set_coeff(0, 0.0);

    const TruncatedSeries f0 =
        ((phi - 1.0) / (psi + phi - 1.0)) *
        (zeta - (1.0 / (phi * psi)) * xi - ((phi + psi) / phi) * (w / se) +
         (1.0 / (phi * (1.0 - phi))) * ((xi + w) * xi / se));
    const TruncatedSeries g0 =
        (psi / (psi + phi - 1.0)) *
        (zeta - ((phi + psi) / (phi * psi)) * w - (1.0 / phi) * (xi / se) +
         ((1.0 - phi) * (phi + psi) / (phi * psi * psi)) * ((xi + w) * w / se));

    return series_compose(w, s.lambda01 * xi + f0) - (w + g0);
}

namespace detail {
template <typename Residual>
std::vector<double> solve_orders(Residual&& residual, std::size_t degree, std::size_t degree_cap) {
    if (degree < 2 || degree > degree_cap) {
        throw std::domain_error("solve_invariance: degree must lie in [2, cap], got " +
                                std::to_string(degree));
    }
    TruncatedSeries w(degree_cap);
    for (std::size_t k = 2; k <= degree; ++k) {
        w.set_coeff(k, 0.0);
        const double r0 = residual(w).coeff(k);
        w.set_coeff(k, 1.0);
        const double r1 = residual(w).coeff(k);
        const double slope = r1 - r0;
        if (std::abs(slope) < 1e-12) {
            throw std::domain_error("solve_invariance: resonance at order " + std::to_string(k) +
                                    " (affine slope " + std::to_string(slope) + ")");
        }
        w.set_coeff(k, -r0 / slope);
    }
    std::vector<double> out;
    out.reserve(degree - 1);
    for (std::size_t k = 2; k <= degree; ++k) out.push_back(w.coeff(k));
    return out;
}
}  // namespace detail

/// Solves the saddle invariance equation order by order, returning the
/// graph coefficients of orders 2..degree (so degree 3 yields {a2, a3} for
/// the unstable kind or {b2, b3} for the stable kind). At each order the
/// residual coefficient is affine in the unknown; a vanishing affine slope
/// (resonance) raises std::domain_error naming the order.
inline std::vector<double> solve_invariance(ManifoldKind kind, const Params& p, std::size_t degree,
                                            std::size_t degree_cap = 8) {
    if (kind == ManifoldKind::center) {
        throw std::domain_error("solve_invariance: center kind requires a PeriodicPair");
    }
    return detail::solve_orders(
        [&](const TruncatedSeries& w) { return invariance_residual(kind, p, w); }, degree,
        degree_cap);
}

/// Center-manifold variant: coefficients {c2, ..., c_degree} at the pair.
inline std::vector<double> solve_invariance(const PeriodicPair& pr, std::size_t degree,
                                            std::size_t degree_cap = 8) {
    return detail::solve_orders(
        [&](const TruncatedSeries& w) { return invariance_residual(pr, w); }, degree, degree_cap);
}

}  // namespace invman
