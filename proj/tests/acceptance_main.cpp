// Acceptance gate: one line per criterion, "PASS criterion N: ..." or
// "FAIL criterion N: ...", exit code = number of failed criteria. Kept
// framework-free so the output format is stable.

#include <chrono>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "invman/invman.hpp"

namespace {
using namespace invman;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& text) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << text << "\n";
    if (!ok) ++g_failures;
}

bool rel_ok(double computed, double printed, double tol = 1e-7) {
    return std::abs(computed - printed) <= tol * std::abs(printed);
}

/// Compares the four displayed coefficients of one reference row.
int match_count(const ReferenceCurve& rc) {
    const DisplayCoeffs d = display_coeffs(reference_model(rc));
    int n = 0;
    n += rel_ok(d.x_lin, rc.x_lin);
    n += rel_ok(d.y_lin, rc.y_lin);
    n += rel_ok(d.quad, rc.quad);
    n += rel_ok(d.cubic, rc.cubic);
    return n;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    int matched = 0;
    for (const ReferenceCurve& rc : reference_curves) {
        if (rc.kind == ManifoldKind::center || rc.erratum) continue;
        matched += match_count(rc);
    }
    const double ms = ms_since(t0);
    const bool ok = matched == 16 && ms < 1000.0;
    report(1, ok,
           std::to_string(matched) +
               "/16 saddle-curve coefficients at (0.2,0) and (0.8,0) match the reference "
               "values to rel 1e-7 in " +
               format_significant(ms, 3) + " ms (budget 1000 ms)");
}

void center_criterion(int criterion, double beta, double psi1, double psi2) {
    int matched = 0, total = 0;
    for (const ReferenceCurve& rc : reference_curves) {
        if (rc.kind != ManifoldKind::center || rc.beta != beta) continue;
        matched += match_count(rc);
        total += 4;
    }
    const bool psi_ok = rel_ok(periodic_partner(2.94, beta), psi1) &&
                        rel_ok(periodic_partner(2.3, beta), psi2);
    report(criterion, matched == total && total == 16 && psi_ok,
           std::to_string(matched) + "/" + std::to_string(total) +
               " center-curve coefficients at beta=" + format_significant(beta) +
               " (both base points) and both partner values match to rel 1e-7");
}

void criterion4() {
    const auto rows = reproduce_paper_report();
    int erratum = 0, fail = 0;
    for (const auto& r : rows) {
        erratum += r.status == CheckStatus::ERRATUM;
        fail += r.status == CheckStatus::FAIL;
    }
    const double g1 = display_coeffs(unstable_model(Params(0.2, 0.5))).x_lin;
    const bool g1_ok = std::abs(g1 - (-0.4677675811188186)) <= 1e-6;

    bool recomputed_ok = true;
    for (double alpha : {0.2, 0.8}) {
        const Params p(alpha, 0.5);
        for (ManifoldKind k : {ManifoldKind::unstable, ManifoldKind::stable}) {
            recomputed_ok = recomputed_ok &&
                            oracle_equivalence_check(k, p).status == CheckStatus::PASS &&
                            residual_order_check(k, p).status == CheckStatus::PASS;
        }
    }
    report(4, erratum == 16 && fail == 0 && g1_ok && recomputed_ok,
           "the 16 inconsistent reference entries report ERRATUM (never FAIL), the "
           "recomputed x-coefficient at (0.2,0.5) is " +
               format_significant(g1) +
               ", and the recomputed (0.2,0.5)/(0.8,0.5) models pass the oracle and "
               "residual-order checks");
}

void criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    int checked = 0, passed = 0;
    for (const Params& p : saddle_grid()) {
        for (ManifoldKind k : {ManifoldKind::unstable, ManifoldKind::stable}) {
            ++checked;
            passed += oracle_equivalence_check(k, p).status == CheckStatus::PASS;
        }
    }
    for (const PeriodicPair& pr : center_grid()) {
        ++checked;
        passed += oracle_equivalence_check(pr).status == CheckStatus::PASS;
    }
    const double ms = ms_since(t0);
    report(5, passed == checked && ms < 10000.0,
           std::to_string(passed) + "/" + std::to_string(checked) +
               " closed-form coefficient pairs equal the series-oracle solution to 1e-9 in " +
               format_significant(ms, 3) + " ms (budget 10000 ms)");
}

void criterion6() {
    std::vector<CheckReport> failing;
    int checked = 0;
    for (const Params& p : saddle_grid()) {
        for (ManifoldKind k : {ManifoldKind::unstable, ManifoldKind::stable}) {
            ++checked;
            const auto r = residual_order_check(k, p);
            if (r.status != CheckStatus::PASS) failing.push_back(r);
        }
    }
    for (const PeriodicPair& pr : center_grid()) {
        ++checked;
        const auto r = residual_order_check(pr);
        if (r.status != CheckStatus::PASS) failing.push_back(r);
    }
    if (failing.empty()) {
        report(6, true,
               "|r(xi)|/xi^4 varies by < factor 4 over xi in {0.1, 0.05, 0.025, 0.0125} at "
               "all " +
                   std::to_string(checked) + " grid checks");
        return;
    }
    std::string names;
    for (const auto& r : failing) {
        if (!names.empty()) names += "; ";
        names += r.name + " (spread factor " + format_significant(r.observed, 6) + ")";
    }
    report(6, false,
           std::to_string(failing.size()) + " of " + std::to_string(checked) +
               " grid checks exceed the factor-4 spread bound: " + names +
               ". The cubic truncations are correct there (the same coefficients pass the "
               "1e-9 oracle-equivalence check); the quartic residual coefficient changes "
               "sign near alpha ~ 0.42 at beta = 0, so the xi^4-normalized ratio is "
               "dominated by the quintic term at these xi values and the factor-4 bound "
               "is unattainable at those two points");
}

void criterion7() {
    int checked = 0, passed = 0;
    for (const Params& p : saddle_grid()) {
        ++checked;
        passed += conjugacy_check(p, 100, 42).status == CheckStatus::PASS;
    }
    for (const PeriodicPair& pr : center_grid()) {
        ++checked;
        passed += conjugacy_check(pr, 100, 42).status == CheckStatus::PASS;
    }
    report(7, passed == checked,
           std::to_string(passed) + "/" + std::to_string(checked) +
               " grid points satisfy max |P*N(w) - F(P*w)| < 1e-11 over 100 seeded samples "
               "(both normal forms)");
}

void criterion8() {
    const auto conv = global_dynamics_check(Params(2.0, 0.0), 42);
    const bool conv_ok =
        conv.status == CheckStatus::PASS && std::abs(fixed_point(Params(2.0, 0.0)) - 3.0) == 0.0;
    const auto p20 = global_dynamics_check(Params(1.0, 0.0), 42);
    const auto p25 = global_dynamics_check(Params(1.0, 0.5), 42);
    const auto rep = global_dynamics_check(Params(0.2, 0.0), 42);
    report(8,
           conv_ok && p20.status == CheckStatus::PASS && p25.status == CheckStatus::PASS &&
               rep.status == CheckStatus::PASS,
           "alpha=2 converges to 3.0 within 1e-8 by n=2000 from 10 seeded starts; alpha=1 "
           "subsequence limits satisfy the partner relation to 1e-6 (beta=0 and 0.5); "
           "alpha=0.2 grows a 1e-4 unstable-direction perturbation tenfold within 30 steps");
}

void criterion9() {
    const auto r = trajectory_distance_check(PeriodicPair(2.94, 0.0), 50);
    report(9, r.status == CheckStatus::PASS,
           "trajectory started 1e-2 off the traced center curve at Phi=2.94, beta=0 keeps "
           "even-index iterates within 1e-3 vertical distance for 50 double-steps (max " +
               format_significant(r.observed, 6) + ")");
}
}  // namespace

int main() {
    criterion1();
    center_criterion(2, 0.0, 1.515463918, 1.769230769);
    center_criterion(3, 0.5, 6.255319149, 15.33333333);
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criterion(s) failed")
              << "\n";
    return g_failures;
}
