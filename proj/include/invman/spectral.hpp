#pragma once

// Linearization data and normal forms.
//
// For the map T at its positive fixed point x_bar: eigenvalues and
// eigenvectors of the Jacobian, the similarity basis P = (v1 v2), the
// origin-shifted map F, and the exact nonlinear remainder (f, g) of the
// diagonalized system.
//
// For the second iterate T^2 at a period-two point (Phi, Psi) of the
// alpha = 1 equation: the analogous quantities, with eigenvalues
// lambda01 in (0, 1) and lambda02 = 1.

#include <cmath>
#include <stdexcept>

#include "invman/dynamics.hpp"
#include "invman/linalg.hpp"

namespace invman {

/// The pair of scalar nonlinearities of a diagonalized planar system.
struct FG {
    double f = 0.0;
    double g = 0.0;
};

enum class Direction { to_normal, from_normal };

/// Applies the similarity transform between state displacements (u, v) and
/// normal coordinates (xi, eta): from_normal computes basis * w, to_normal
/// computes basis^{-1} * w.
inline Vec2 change_basis(const Mat2& basis, const Vec2& w, Direction dir) {
    return dir == Direction::from_normal ? basis * w : basis.inverse() * w;
}

// ---------------------------------------------------------------------------
// Map T at the fixed point
// ---------------------------------------------------------------------------

/// Spectral data of T at x_bar. The map is a saddle iff |lambda1| > 1 > |lambda2|.
struct SpectrumT {
    Params params;
    double x_bar = 0.0;
    double theta = 0.0;    ///< sqrt(1 + 4 x_bar + 4 beta x_bar^2)
    double lambda1 = 0.0;  ///< (-1 - theta) / (2 x_bar), the expanding eigenvalue
    double lambda2 = 0.0;  ///< (-1 + theta) / (2 x_bar)
    Vec2 v1;               ///< eigenvector (-2 x_bar / (1 + theta), 1)
    Vec2 v2;               ///< eigenvector (-2 x_bar / (1 - theta), 1)
    Mat2 basis;            ///< P = (v1 v2)
    bool saddle = false;
};

/// Jacobian of T at the fixed point: [[0, 1], [beta + 1/x_bar, -1/x_bar]].
inline Mat2 jacobian_T(const Params& p) {
    const double xb = fixed_point(p);
    return {0.0, 1.0, p.beta() + 1.0 / xb, -1.0 / xb};
}

inline SpectrumT spectrum_T(const Params& p) {
    SpectrumT s{p, 0.0, 0.0, 0.0, 0.0, {}, {}, {}, false};
    s.x_bar = fixed_point(p);
    s.theta = std::sqrt(1.0 + 4.0 * s.x_bar + 4.0 * p.beta() * s.x_bar * s.x_bar);
    s.lambda1 = (-1.0 - s.theta) / (2.0 * s.x_bar);
    s.lambda2 = (-1.0 + s.theta) / (2.0 * s.x_bar);
    s.v1 = {-2.0 * s.x_bar / (1.0 + s.theta), 1.0};
    s.v2 = {-2.0 * s.x_bar / (1.0 - s.theta), 1.0};
    s.basis = Mat2::from_columns(s.v1, s.v2);
    s.saddle = std::abs(s.lambda1) > 1.0 && std::abs(s.lambda2) < 1.0;
    return s;
}

/// The origin-shifted map F(u, v) = T(u + x_bar, v + x_bar) - (x_bar, x_bar),
/// written in the algebraically reduced form (v, beta*u + (u - v)/(v + x_bar)).
/// Throws std::domain_error when the shifted denominator v + x_bar vanishes.
inline Vec2 translated_map(const Params& p, const Vec2& uv) {
    const double xb = fixed_point(p);
    const double den = uv.y + xb;
    if (den == 0.0) {
        throw std::domain_error("translated_map: denominator v + x_bar vanishes");
    }
    return {uv.y, p.beta() * uv.x + (uv.x - uv.y) / den};
}

/// Exact nonlinear remainder of the diagonalized system at normal
/// coordinates (xi, eta):
///
///   f = [(1 + 2 beta x_bar)(xi + eta)^2 + theta (xi^2 - eta^2)]
///       / [theta (theta - 1) (xi + eta + x_bar)],
///
/// and g is the same expression with (theta + 1) in the denominator.
/// Throws std::domain_error when xi + eta + x_bar vanishes.
inline FG normal_nonlinearity(const Params& p, double xi, double eta) {
    const SpectrumT s = spectrum_T(p);
    const double den = xi + eta + s.x_bar;
    if (den == 0.0) {
        throw std::domain_error("normal_nonlinearity: denominator xi + eta + x_bar vanishes");
    }
    const double num =
        (1.0 + 2.0 * p.beta() * s.x_bar) * (xi + eta) * (xi + eta) + s.theta * (xi * xi - eta * eta);
    return {num / (s.theta * (s.theta - 1.0) * den), num / (s.theta * (s.theta + 1.0) * den)};
}

// ---------------------------------------------------------------------------
// Map T^2 at a period-two point
// ---------------------------------------------------------------------------

/// Spectral data of T^2 at (Phi, Psi): lambda01 = (1 - 1/Phi)(1 - 1/Psi)
/// lies in (0, 1) and lambda02 = 1.
struct SpectrumT2 {
    PeriodicPair pair;
    double lambda01 = 0.0;
    double lambda02 = 1.0;
    Vec2 v01;    ///< eigenvector (Phi^2 / ((Phi - 1) Psi), 1) for lambda01
    Vec2 v02;    ///< eigenvector (-Phi^2 / Psi^2, 1) for lambda02
    Mat2 basis0; ///< P0 = (v01 v02)
};

/// Jacobian of T^2 at (Phi, Psi):
/// [[beta + 1/Psi, -Phi/Psi^2], [-(beta Psi + 1)/Phi^2, beta + 1/Phi + 1/(Psi Phi)]].
inline Mat2 jacobian_T2(const PeriodicPair& pr) {
    const double phi = pr.phi(), psi = pr.psi(), beta = pr.beta();
    return {beta + 1.0 / psi, -phi / (psi * psi),
            -(beta * psi + 1.0) / (phi * phi), beta + 1.0 / phi + 1.0 / (psi * phi)};
}

inline SpectrumT2 spectrum_T2(const PeriodicPair& pr) {
    SpectrumT2 s{pr, 0.0, 1.0, {}, {}, {}};
    const double phi = pr.phi(), psi = pr.psi();
    s.lambda01 = (1.0 - 1.0 / phi) * (1.0 - 1.0 / psi);
    s.lambda02 = 1.0;
    s.v01 = {phi * phi / ((phi - 1.0) * psi), 1.0};
    s.v02 = {-phi * phi / (psi * psi), 1.0};
    s.basis0 = Mat2::from_columns(s.v01, s.v02);
    return s;
}

/// The shift of T^2 to the period-two point:
/// F0(u, v) = T^2(u + Phi, v + Psi) - (Phi, Psi), in the reduced form
///
///   F0_1 = beta u + (u + Phi)/(v + Psi) - Phi/Psi,
///   F0_2 = beta v + (v + Psi)^2 / [(v + Psi) + (u + Phi)(1 + beta v + beta Psi)] - Psi/Phi.
///
/// Throws std::domain_error when either denominator vanishes.
inline Vec2 translated_map2(const PeriodicPair& pr, const Vec2& uv) {
    const double phi = pr.phi(), psi = pr.psi(), beta = pr.beta();
    const double d1 = uv.y + psi;
    const double d2 = (uv.y + psi) + (uv.x + phi) * (1.0 + beta * uv.y + beta * psi);
    if (d1 == 0.0 || d2 == 0.0) {
        throw std::domain_error("translated_map2: a shifted denominator vanishes");
    }
    return {beta * uv.x + (uv.x + phi) / d1 - phi / psi,
            beta * uv.y + (uv.y + psi) * (uv.y + psi) / d2 - psi / phi};
}

/// Exact nonlinear remainder (f0, g0) of the diagonalized T^2 system:
///
///   f0 = (Phi - 1)/(Psi + Phi - 1) * [ zeta - xi/(Phi Psi)
///            - eta (Phi + Psi)/(Phi (xi + eta + Psi))
///            + (xi + eta) xi / (Phi (1 - Phi)(xi + eta + Psi)) ],
///   g0 = Psi/(Psi + Phi - 1) * [ zeta - eta (Phi + Psi)/(Phi Psi)
///            - xi/(Phi (xi + eta + Psi))
///            + (1 - Phi)(Phi + Psi)(xi + eta) eta / (Phi Psi^2 (xi + eta + Psi)) ],
///
/// where zeta = (xi + eta + Psi)^2 / [ xi + eta + Psi
///            + (Phi^2 xi/((Phi - 1) Psi) - Phi^2 eta/Psi^2 + Phi)
///              (1 + beta xi + beta eta + beta Psi) ] - Psi/Phi.
///
/// Throws std::domain_error when xi + eta + Psi or the zeta denominator vanishes.
inline FG normal_nonlinearity2(const PeriodicPair& pr, double xi, double eta) {
    const double phi = pr.phi(), psi = pr.psi(), beta = pr.beta();
    const double se = xi + eta + psi;
    const double zden =
        se + (phi * phi * xi / ((phi - 1.0) * psi) - phi * phi * eta / (psi * psi) + phi) *
                 (1.0 + beta * xi + beta * eta + beta * psi);
    if (se == 0.0 || zden == 0.0) {
        throw std::domain_error("normal_nonlinearity2: a denominator vanishes");
    }
    const double zeta = se * se / zden - psi / phi;
    const double f0 = (phi - 1.0) / (psi + phi - 1.0) *
                      (zeta - xi / (phi * psi) - eta * (phi + psi) / (phi * se) +
                       (xi + eta) * xi / (phi * (1.0 - phi) * se));
    const double g0 = psi / (psi + phi - 1.0) *
                      (zeta - eta * (phi + psi) / (phi * psi) - xi / (phi * se) +
                       (1.0 - phi) * (phi + psi) * (xi + eta) * eta / (phi * psi * psi * se));
    return {f0, g0};
}

}  // namespace invman
