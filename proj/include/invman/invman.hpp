#pragma once

// Umbrella header: asymptotic invariant-curve models (stable/unstable
// manifolds of the saddle, center-manifold curves of period-two points) for
// the planar map behind x_{n+1} = alpha + beta x_{n-1} + x_{n-1}/x_n,
// together with the series oracle and the verification suite.

#include "invman/dynamics.hpp"
#include "invman/format.hpp"
#include "invman/linalg.hpp"
#include "invman/manifolds.hpp"
#include "invman/reference_data.hpp"
#include "invman/series.hpp"
#include "invman/spectral.hpp"
#include "invman/verify.hpp"
