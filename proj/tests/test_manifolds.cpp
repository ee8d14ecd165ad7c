#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>

#include "invman/manifolds.hpp"
#include "invman/reference_data.hpp"

using namespace invman;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
double fd_gradient_x(const ManifoldModel& m, double x, double y, double h = 1e-6) {
    return (eval_manifold(m, x + h, y) - eval_manifold(m, x - h, y)) / (2.0 * h);
}
double fd_gradient_y(const ManifoldModel& m, double x, double y, double h = 1e-6) {
    return (eval_manifold(m, x, y + h) - eval_manifold(m, x, y - h)) / (2.0 * h);
}
}  // namespace

TEST_CASE("kind names", "[manifolds]") {
    CHECK(std::string(to_string(ManifoldKind::unstable)) == "unstable");
    CHECK(std::string(to_string(ManifoldKind::stable)) == "stable");
    CHECK(std::string(to_string(ManifoldKind::center)) == "center");
}

TEST_CASE("unstable model constants", "[manifolds]") {
    const auto m = unstable_model(Params(0.2, 0.0));
    CHECK(m.kind == ManifoldKind::unstable);
    CHECK_THAT(m.base.x, WithinAbs(1.2, 1e-14));
    CHECK_THAT(m.base.y, WithinAbs(1.2, 1e-14));
    CHECK_THAT(m.linear_constants[0], WithinAbs(-0.41522739926869984, 1e-13));
    CHECK_THAT(m.linear_constants[1], WithinAbs(0.29238630036565005, 1e-13));
    CHECK_THAT(m.linear_constants[2], WithinAbs(0.70761369963435, 1e-13));
    CHECK_THAT(m.linear_constants[1] + m.linear_constants[2], WithinAbs(1.0, 1e-14));
    CHECK_THAT(m.coeff2, WithinAbs(0.24197775649495626, 1e-13));
    CHECK_THAT(m.coeff3, WithinAbs(-0.09746005888177077, 1e-13));
    CHECK_THAT(m.tangent_slope, WithinAbs(-1.4201328815660248, 1e-13));

    const auto m8 = unstable_model(Params(0.8, 0.0));
    CHECK_THAT(m8.coeff2, WithinAbs(0.305945256699864, 1e-13));
    CHECK_THAT(m8.coeff3, WithinAbs(-0.10667168375259492, 1e-13));
}

TEST_CASE("stable model constants", "[manifolds]") {
    const auto m = stable_model(Params(0.2, 0.0));
    CHECK(m.kind == ManifoldKind::stable);
    CHECK_THAT(m.coeff2, WithinAbs(-0.19610619686192876, 1e-13));
    CHECK_THAT(m.coeff3, WithinAbs(0.09806508075958001, 1e-13));
    // dx/dy along the stable direction; equals 1/lambda2.
    CHECK_THAT(m.tangent_slope, WithinAbs(1.7041594578792294, 1e-12));
    CHECK_THAT(m.tangent_slope, WithinAbs(1.0 / 0.5867995482326914, 1e-12));

    const auto m8 = stable_model(Params(0.8, 0.0));
    CHECK_THAT(m8.coeff2, WithinAbs(-0.1446549341192188, 1e-13));
    CHECK_THAT(m8.coeff3, WithinAbs(0.052518707253653756, 1e-13));
}

TEST_CASE("center model constants", "[manifolds]") {
    const PeriodicPair pr(2.94, 0.0);
    const auto m = center_model(pr);
    CHECK(m.kind == ManifoldKind::center);
    CHECK_THAT(m.base.x, WithinAbs(2.94, 1e-14));
    CHECK_THAT(m.base.y, WithinAbs(pr.psi(), 1e-14));
    CHECK_THAT(m.linear_constants[0], WithinAbs(0.1491735783757981, 1e-12));
    CHECK_THAT(m.linear_constants[1], WithinAbs(0.4385703204248464, 1e-12));
    CHECK_THAT(m.linear_constants[2], WithinAbs(0.5614296795751538, 1e-12));
    CHECK_THAT(m.linear_constants[1] + m.linear_constants[2], WithinAbs(1.0, 1e-14));
    CHECK_THAT(m.coeff2, WithinAbs(-0.08039102211196587, 1e-13));
    CHECK_THAT(m.coeff3, WithinAbs(0.019970634790614374, 1e-13));
    CHECK_THAT(m.tangent_slope, WithinAbs(0.3401360544217687, 1e-12));

    const auto ms = center_model(pr.swapped());
    CHECK_THAT(ms.base.x, WithinAbs(pr.psi(), 1e-14));
    CHECK_THAT(ms.base.y, WithinAbs(2.94, 1e-14));
    CHECK_THAT(ms.coeff2, WithinAbs(-0.15595858289721376, 1e-12));
    CHECK_THAT(ms.coeff3, WithinAbs(0.05514400552532382, 1e-12));

    const auto m23 = center_model(PeriodicPair(2.3, 0.0));
    CHECK_THAT(m23.coeff2, WithinAbs(-0.1137137228503733, 1e-12));
    CHECK_THAT(m23.coeff3, WithinAbs(0.03453170709515442, 1e-12));
    const auto m23s = center_model(PeriodicPair(2.3, 0.0).swapped());
    CHECK_THAT(m23s.coeff2, WithinAbs(-0.14782783970549, 1e-11));
    CHECK_THAT(m23s.coeff3, WithinAbs(0.05206506984719812, 1e-12));

    const auto mb = center_model(PeriodicPair(2.94, 0.5));
    CHECK_THAT(mb.linear_constants[0], WithinAbs(1.0716183536185901, 1e-12));
    CHECK_THAT(mb.coeff2, WithinAbs(-0.006468848598231601, 1e-13));
    CHECK_THAT(mb.coeff3, WithinAbs(0.001026052614075, 1e-12));
    const auto mbs = center_model(PeriodicPair(2.94, 0.5).swapped());
    CHECK_THAT(mbs.linear_constants[0], WithinAbs(0.1416540318811984, 1e-12));
    CHECK_THAT(mbs.coeff2, WithinAbs(-0.005080796065007817, 1e-13));
    CHECK_THAT(mbs.coeff3, WithinAbs(0.0013950718063773, 1e-12));

    const auto mc = center_model(PeriodicPair(2.3, 0.5));
    CHECK_THAT(mc.linear_constants[0], WithinAbs(3.47361389445558, 1e-11));
    CHECK_THAT(mc.coeff2, WithinAbs(-0.001973405924164583, 1e-13));
    CHECK_THAT(mc.coeff3, WithinAbs(0.00014032557313357967, 1e-13));
    const auto mcs = center_model(PeriodicPair(2.3, 0.5).swapped());
    CHECK_THAT(mcs.linear_constants[0], WithinAbs(0.0193887775551102, 1e-13));
    CHECK_THAT(mcs.coeff2, WithinAbs(-0.0011932221867041665, 1e-13));
    CHECK_THAT(mcs.coeff3, WithinAbs(0.00038472855564330603, 1e-13));
}

TEST_CASE("saddle models reject non-saddle parameters", "[manifolds]") {
    CHECK_THROWS_WITH(unstable_model(Params(1.0, 0.0)), ContainsSubstring("not a saddle"));
    CHECK_THROWS_WITH(stable_model(Params(1.0, 0.0)), ContainsSubstring("not a saddle"));
    CHECK_THROWS_AS(unstable_model(Params(2.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(stable_model(Params(2.0, 0.5)), std::domain_error);
}

TEST_CASE("evaluation vanishes at the base point", "[manifolds]") {
    for (const auto& m : {unstable_model(Params(0.2, 0.0)), stable_model(Params(0.35, 0.25)),
                          center_model(PeriodicPair(2.3, 0.5))}) {
        CHECK(eval_manifold(m, m.base.x, m.base.y) == 0.0);
    }
}

TEST_CASE("evaluation at a reference point", "[manifolds]") {
    const auto m = unstable_model(Params(0.2, 0.0));
    CHECK_THAT(eval_manifold(m, 1.0, 1.0), WithinAbs(0.14236969354753112, 1e-12));
    CHECK_THAT(eval_manifold(m, 1.0, 1.0), WithinAbs(0.14237, 1e-5));
}

TEST_CASE("gradient at the base matches the linear part", "[manifolds]") {
    const auto mu = unstable_model(Params(0.2, 0.0));
    CHECK_THAT(fd_gradient_x(mu, mu.base.x, mu.base.y),
               WithinAbs(mu.linear_constants[0], 1e-7));
    CHECK_THAT(fd_gradient_y(mu, mu.base.x, mu.base.y),
               WithinAbs(-mu.linear_constants[1], 1e-7));

    const auto ms = stable_model(Params(0.2, 0.0));
    CHECK_THAT(fd_gradient_x(ms, ms.base.x, ms.base.y),
               WithinAbs(ms.linear_constants[0], 1e-7));
    CHECK_THAT(fd_gradient_y(ms, ms.base.x, ms.base.y),
               WithinAbs(ms.linear_constants[2], 1e-7));

    const auto mc = center_model(PeriodicPair(2.94, 0.0));
    CHECK_THAT(fd_gradient_x(mc, mc.base.x, mc.base.y),
               WithinAbs(mc.linear_constants[0], 1e-7));
    CHECK_THAT(fd_gradient_y(mc, mc.base.x, mc.base.y),
               WithinAbs(-mc.linear_constants[1], 1e-7));
}

TEST_CASE("tangent direction lies in the curve to second order", "[manifolds]") {
    // Moving along the tangent from the base changes the implicit value only
    // at quadratic order.
    const auto mu = unstable_model(Params(0.2, 0.0));
    const double h = 1e-5;
    CHECK_THAT(eval_manifold(mu, mu.base.x + h, mu.base.y + h * mu.tangent_slope),
               WithinAbs(0.0, 1e-8));
    const auto ms = stable_model(Params(0.2, 0.0));
    CHECK_THAT(eval_manifold(ms, ms.base.x + h * ms.tangent_slope, ms.base.y + h),
               WithinAbs(0.0, 1e-8));
    const auto mc = center_model(PeriodicPair(2.94, 0.0));
    CHECK_THAT(eval_manifold(mc, mc.base.x + h, mc.base.y + h * mc.tangent_slope),
               WithinAbs(0.0, 1e-8));
}

TEST_CASE("display coefficients at the reference parameters", "[manifolds]") {
    const auto d = display_coeffs(unstable_model(Params(0.2, 0.0)));
    CHECK_THAT(d.x_lin, WithinAbs(-0.41522739926869984, 1e-13));
    CHECK_THAT(d.y_lin, WithinAbs(-0.29238630036565005, 1e-13));
    CHECK_THAT(d.constant, WithinRel(0.8491364395607684, 1e-9));
    CHECK_THAT(d.bracket_x, WithinAbs(-0.41522739926869984, 1e-13));
    CHECK_THAT(d.bracket_y, WithinAbs(0.70761369963435, 1e-13));
    CHECK_THAT(d.bracket_const, WithinRel(-0.3508635604392317, 1e-9));
    CHECK_THAT(d.quad, WithinAbs(0.24197775649495626, 1e-13));
    CHECK_THAT(d.cubic, WithinAbs(-0.09746005888177077, 1e-13));

    // The stable display negates the quadratic coefficient.
    const auto ds = display_coeffs(stable_model(Params(0.2, 0.0)));
    CHECK_THAT(ds.quad, WithinAbs(0.19610619686192876, 1e-13));
    CHECK_THAT(ds.cubic, WithinAbs(0.09806508075958001, 1e-13));
    CHECK_THAT(ds.y_lin, WithinAbs(0.70761369963435, 1e-13));
    CHECK_THAT(ds.bracket_y, WithinAbs(-0.29238630036565005, 1e-13));
}

TEST_CASE("display expansion equals the nested evaluation", "[manifolds]") {
    for (const auto& m : {unstable_model(Params(0.35, 0.25)), stable_model(Params(0.7, 0.5)),
                          center_model(PeriodicPair(2.3, 0.5))}) {
        const auto d = display_coeffs(m);
        for (double x : {0.8, 1.3, 2.1}) {
            for (double y : {0.9, 1.7, 3.0}) {
                const double br = d.bracket_x * x + d.bracket_const + d.bracket_y * y;
                const double expanded =
                    d.x_lin * x + d.constant + d.y_lin * y + d.quad * br * br + d.cubic * br * br * br;
                CHECK_THAT(expanded, WithinAbs(eval_manifold(m, x, y), 1e-12));
            }
        }
    }
}

TEST_CASE("polynomial text rendering", "[manifolds]") {
    const std::string s = polynomial_string(unstable_model(Params(0.2, 0.0)));
    CHECK_THAT(s, ContainsSubstring("-0.415227399"));
    CHECK_THAT(s, ContainsSubstring("+ 0.849136439"));
    CHECK_THAT(s, ContainsSubstring("0.707613699"));
    CHECK_THAT(s, ContainsSubstring("- 0.350863560"));
    CHECK_THAT(s, ContainsSubstring("0.241977756"));
    CHECK_THAT(s, ContainsSubstring(")^2"));
    CHECK_THAT(s, ContainsSubstring(")^3"));
    CHECK_THAT(s, !ContainsSubstring("+-"));
    CHECK_THAT(s, !ContainsSubstring("--"));
    CHECK_THAT(s, !ContainsSubstring("+ -"));

    const std::string c = polynomial_string(center_model(PeriodicPair(2.94, 0.0)));
    CHECK_THAT(c, ContainsSubstring("0.149173578"));
    CHECK_THAT(c, ContainsSubstring("- 0.0803910221"));
}

TEST_CASE("published reference rows are reproduced", "[manifolds]") {
    for (const auto& rc : reference_curves) {
        if (rc.erratum) continue;
        INFO(rc.name);
        const auto d = display_coeffs(reference_model(rc));
        CHECK_THAT(d.x_lin, WithinRel(rc.x_lin, 1e-7));
        CHECK_THAT(d.y_lin, WithinRel(rc.y_lin, 1e-7));
        CHECK_THAT(d.quad, WithinRel(rc.quad, 1e-7));
        CHECK_THAT(d.cubic, WithinRel(rc.cubic, 1e-7));
    }
}

TEST_CASE("erratum rows differ from their stated parameters", "[manifolds]") {
    for (const auto& rc : reference_curves) {
        if (!rc.erratum) continue;
        INFO(rc.name);
        const auto d = display_coeffs(reference_model(rc));
        // Recomputing at the stated parameters moves the x-linear coefficient
        // far outside any rounding tolerance of the published row.
        CHECK_FALSE(WithinRel(rc.x_lin, 1e-3).match(d.x_lin));
    }
    const auto d = display_coeffs(reference_model(reference_curves[4]));  // U3
    CHECK_THAT(d.x_lin, WithinAbs(-0.4677675811188186, 1e-12));
}

TEST_CASE("published partner values are reproduced", "[manifolds]") {
    for (const auto& rp : reference_pairs) {
        INFO(rp.name);
        CHECK_THAT(PeriodicPair(rp.phi, rp.beta).psi(), WithinRel(rp.psi, 1e-7));
    }
}

TEST_CASE("tracing the unstable curve", "[manifolds]") {
    const auto m = unstable_model(Params(0.2, 0.0));
    const auto t = trace_curve(m, 0.9, 1.5, 121);
    REQUIRE(t.points.size() == 121);
    CHECK(t.gaps.empty());
    CHECK(t.max_residual <= 1e-12);
    for (std::size_t i = 1; i < t.points.size(); ++i) CHECK(t.points[i - 1].x < t.points[i].x);
    // The sample nearest the base point recovers the fixed point itself.
    const auto& mid = t.points[60];
    CHECK_THAT(mid.x, WithinAbs(1.2, 1e-9));
    CHECK_THAT(mid.y, WithinAbs(1.2, 1e-9));
}

TEST_CASE("traced curves leave the base along the tangent", "[manifolds]") {
    auto fd_slope = [](const ManifoldModel& m) {
        const auto t = trace_curve(m, m.base.x - 0.1, m.base.x + 0.1, 201);
        REQUIRE(t.points.size() == 201);
        const auto& lo = t.points[99];
        const auto& hi = t.points[101];
        return (hi.y - lo.y) / (hi.x - lo.x);
    };
    CHECK_THAT(fd_slope(unstable_model(Params(0.2, 0.0))),
               WithinAbs(-1.4201328815660248, 1e-4));
    CHECK_THAT(fd_slope(stable_model(Params(0.2, 0.0))),
               WithinAbs(0.5867995482326914, 1e-4));
    CHECK_THAT(fd_slope(center_model(PeriodicPair(2.94, 0.0))),
               WithinAbs(0.3401360544217687, 1e-4));
}

TEST_CASE("every requested sample is a point or a gap", "[manifolds]") {
    for (const auto& m : {unstable_model(Params(0.2, 0.0)), stable_model(Params(0.8, 0.0)),
                          center_model(PeriodicPair(2.3, 0.5))}) {
        for (std::size_t n : {2u, 7u, 64u}) {
            const auto t = trace_curve(m, m.base.x - 0.4, m.base.x + 0.4, n);
            CHECK(t.points.size() + t.gaps.size() == n);
        }
    }
}

TEST_CASE("trace input validation", "[manifolds]") {
    const auto m = unstable_model(Params(0.2, 0.0));
    CHECK_THROWS_AS(trace_curve(m, 1.5, 0.9, 10), std::domain_error);
    CHECK_THROWS_AS(trace_curve(m, 1.2, 1.2, 10), std::domain_error);
    CHECK_THROWS_AS(trace_curve(m, 0.9, 1.5, 1), std::domain_error);
    CHECK_THROWS_AS(trace_curve(m, 0.9, 1.5, 0), std::domain_error);
}
