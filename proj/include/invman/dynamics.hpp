#pragma once

// Core dynamics of the planar rational difference equation
//
//     x_{n+1} = alpha + beta * x_{n-1} + x_{n-1} / x_n,
//
// viewed as the map T(y, z) = (z, alpha + beta*y + y/z) on the open positive
// quadrant, where (y, z) = (x_{n-1}, x_n). Provides validated parameter and
// state types, the fixed point, period-two pairs at alpha = 1, single and
// double map steps, and trajectory iteration.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "invman/linalg.hpp"

namespace invman {

namespace detail {
inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be finite");
    }
}
}  // namespace detail

/// Validated parameter pair: alpha >= 0, 0 <= beta < 1.
class Params {
  public:
    Params(double alpha, double beta) : alpha_(alpha), beta_(beta) {
        detail::require_finite(alpha, "alpha");
        detail::require_finite(beta, "beta");
        if (alpha < 0.0) {
            throw std::domain_error("alpha must be >= 0, got " + std::to_string(alpha));
        }
        if (beta < 0.0 || beta >= 1.0) {
            throw std::domain_error("beta must lie in [0, 1), got " + std::to_string(beta));
        }
    }

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

  private:
    double alpha_;
    double beta_;
};

/// Convenience constructor mirroring the validation contract.
inline Params validate_params(double alpha, double beta) { return Params(alpha, beta); }

/// Strictly positive finite planar state (y, z) = (x_{n-1}, x_n).
class State {
  public:
    State(double y, double z) : y_(y), z_(z) {
        detail::require_finite(y, "state y");
        detail::require_finite(z, "state z");
        if (y <= 0.0 || z <= 0.0) {
            throw std::domain_error("state must be strictly positive, got (" +
                                    std::to_string(y) + ", " + std::to_string(z) + ")");
        }
    }

    double y() const { return y_; }
    double z() const { return z_; }
    Vec2 vec() const { return {y_, z_}; }

  private:
    double y_;
    double z_;
};

/// Unique positive fixed point x_bar = (1 + alpha) / (1 - beta).
inline double fixed_point(const Params& p) { return (1.0 + p.alpha()) / (1.0 - p.beta()); }

/// Period-two partner at alpha = 1: Psi = Phi / ((1 - beta) Phi - 1),
/// defined exactly when Phi > 1 / (1 - beta).
inline double periodic_partner(double phi, double beta) {
    detail::require_finite(phi, "phi");
    detail::require_finite(beta, "beta");
    if (beta < 0.0 || beta >= 1.0) {
        throw std::domain_error("beta must lie in [0, 1), got " + std::to_string(beta));
    }
    const double denom = (1.0 - beta) * phi - 1.0;
    if (!(denom > 0.0)) {
        throw std::domain_error("no positive period-two partner: phi = " + std::to_string(phi) +
                                " must exceed 1/(1-beta) = " + std::to_string(1.0 / (1.0 - beta)));
    }
    return phi / denom;
}

/// A period-two pair {Phi, Psi} of the alpha = 1 equation. The two members
/// satisfy 1/Phi + 1/Psi = 1 - beta; swapped() exchanges the roles.
class PeriodicPair {
  public:
    PeriodicPair(double phi, double beta) : phi_(phi), psi_(periodic_partner(phi, beta)), beta_(beta) {}

    double phi() const { return phi_; }
    double psi() const { return psi_; }
    double beta() const { return beta_; }

    PeriodicPair swapped() const { return PeriodicPair(psi_, beta_); }

  private:
    double phi_;
    double psi_;
    double beta_;
};

/// One step of the map T(y, z) = (z, alpha + beta*y + y/z).
inline State step_T(const Params& p, const State& s) {
    return State(s.z(), p.alpha() + p.beta() * s.y() + s.y() / s.z());
}

/// One step of the second-iterate map T^2, written out explicitly:
/// with w = alpha + beta*y + y/z, T^2(y, z) = (w, alpha + beta*z + z/w).
inline State step_T2(const Params& p, const State& s) {
    const double w = p.alpha() + p.beta() * s.y() + s.y() / s.z();
    return State(w, p.alpha() + p.beta() * s.z() + s.z() / w);
}

/// Iterates T from s0, returning the n+1 states s0, T(s0), ..., T^n(s0).
/// If an iterate leaves the domain (non-positive or non-finite component),
/// throws std::domain_error naming the failing index.
inline std::vector<State> iterate_trajectory(const Params& p, const State& s0, std::size_t n) {
    std::vector<State> out;
    out.reserve(n + 1);
    out.push_back(s0);
    for (std::size_t k = 1; k <= n; ++k) {
        try {
            out.push_back(step_T(p, out.back()));
        } catch (const std::domain_error& e) {
            throw std::domain_error("trajectory left the positive quadrant at step " +
                                    std::to_string(k) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace invman
