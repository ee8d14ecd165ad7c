#pragma once

// Published reference values for the regression suite: the reported
// coefficients of the displayed curve polynomials and the reported
// period-two partner values. Rows flagged `erratum` are known-inconsistent
// published rows (they duplicate the beta = 0 polynomials although their
// stated parameters have beta = 0.5); the regression report marks them
// ERRATUM and shows the recomputed values alongside.

#include "invman/manifolds.hpp"

namespace invman {

/// One published polynomial row: the x-linear, y-linear, quadratic, and
/// cubic coefficients as reported (display signs already applied).
struct ReferenceCurve {
    const char* name;
    ManifoldKind kind;
    double alpha_or_phi;  ///< alpha for saddle kinds, Phi for the center kind
    double beta;
    bool swapped;  ///< center kind only: the companion (Psi, Phi) curve
    bool erratum;
    double x_lin;
    double y_lin;
    double quad;
    double cubic;
};

inline constexpr ReferenceCurve reference_curves[] = {
    {"U1", ManifoldKind::unstable, 0.2, 0.0, false, false,
     -0.4152273992, -0.2923863004, 0.2419777563, -0.0974600586},
    {"S1", ManifoldKind::stable, 0.2, 0.0, false, false,
     -0.4152273992, 0.7076136995, 0.1961061968, 0.09806508071},
    {"U2", ManifoldKind::unstable, 0.8, 0.0, false, false,
     -0.3492151478, -0.3253924261, 0.3059452562, -0.1066716833},
    {"S2", ManifoldKind::stable, 0.8, 0.0, false, false,
     -0.3492151478, 0.6746075740, 0.1446549340, 0.0525187072},
    {"U3", ManifoldKind::unstable, 0.2, 0.5, false, true,
     -0.4152273992, -0.2923863004, 0.2419777563, -0.0974600586},
    {"S3", ManifoldKind::stable, 0.2, 0.5, false, true,
     -0.4152273992, 0.7076136995, 0.1961061968, 0.09806508071},
    {"U4", ManifoldKind::unstable, 0.8, 0.5, false, true,
     -0.3492151478, -0.3253924261, 0.3059452562, -0.1066716833},
    {"S4", ManifoldKind::stable, 0.8, 0.5, false, true,
     -0.3492151478, 0.6746075740, 0.1446549340, 0.0525187072},
    {"C1(Phi)", ManifoldKind::center, 2.94, 0.0, false, false,
     0.1491735785, -0.4385703205, -0.08039102209, 0.01997063483},
    {"C1(Psi)", ManifoldKind::center, 2.94, 0.0, true, false,
     0.5614296798, -0.8508264215, -0.1559585827, 0.05514400545},
    {"C2(Phi)", ManifoldKind::center, 2.3, 0.0, false, false,
     0.2506265664, -0.5764411027, -0.1137137228, 0.03453170706},
    {"C2(Psi)", ManifoldKind::center, 2.3, 0.0, true, false,
     0.4235588973, -0.7493734336, -0.1478278397, 0.0520650698},
    {"C3(Phi)", ManifoldKind::center, 2.94, 0.5, false, false,
     1.071618354, -0.7632795057, -0.006468848599, 0.001026052614},
    {"C3(Psi)", ManifoldKind::center, 2.94, 0.5, true, false,
     0.1416540319, -0.3587413677, -0.005080796064, 0.001395071806},
    {"C4(Phi)", ManifoldKind::center, 2.3, 0.5, false, false,
     3.473613893, -0.9218436874, -0.001973405924, 0.000140325572},
    {"C4(Psi)", ManifoldKind::center, 2.3, 0.5, true, false,
     0.01938877756, -0.1382765531, -0.001193222187, 0.0003847285557},
};

/// Reported period-two partner values Psi for given (Phi, beta).
struct ReferencePair {
    const char* name;
    double phi;
    double beta;
    double psi;
};

inline constexpr ReferencePair reference_pairs[] = {
    {"Psi(2.94,0)", 2.94, 0.0, 1.515463918},
    {"Psi(2.3,0)", 2.3, 0.0, 1.769230769},
    {"Psi(2.94,0.5)", 2.94, 0.5, 6.255319149},
    {"Psi(2.3,0.5)", 2.3, 0.5, 15.33333333},
};

/// Builds the model a reference row describes from its stated parameters.
inline ManifoldModel reference_model(const ReferenceCurve& rc) {
    if (rc.kind == ManifoldKind::center) {
        const PeriodicPair pr(rc.alpha_or_phi, rc.beta);
        return center_model(rc.swapped ? pr.swapped() : pr);
    }
    const Params p(rc.alpha_or_phi, rc.beta);
    return rc.kind == ManifoldKind::unstable ? unstable_model(p) : stable_model(p);
}

}  // namespace invman
