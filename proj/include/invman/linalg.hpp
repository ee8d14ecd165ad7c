#pragma once

// Minimal fixed-size linear algebra for planar maps: 2-vectors and 2x2
// matrices with an adjugate-based inverse guarded against near-singularity.

#include <cmath>
#include <stdexcept>
#include <string>

namespace invman {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return s * a; }

    /// Euclidean norm.
    double norm() const { return std::hypot(x, y); }
};

/// 2x2 matrix with row-major entries [[a, b], [c, d]].
struct Mat2 {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    static Mat2 from_columns(Vec2 c0, Vec2 c1) { return {c0.x, c1.x, c0.y, c1.y}; }

    Vec2 column(int i) const { return i == 0 ? Vec2{a, c} : Vec2{b, d}; }

    double det() const { return a * d - b * c; }

    friend Vec2 operator*(const Mat2& m, Vec2 v) {
        return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
    }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }

    /// Adjugate inverse. Throws std::domain_error when |det| < 1e-14.
    Mat2 inverse() const {
        const double dt = det();
        if (std::abs(dt) < 1e-14) {
            throw std::domain_error("Mat2::inverse: matrix is singular (|det| = " +
                                    std::to_string(std::abs(dt)) + " < 1e-14)");
        }
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
};

}  // namespace invman
