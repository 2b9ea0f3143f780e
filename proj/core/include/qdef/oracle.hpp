#pragma once

#include <vector>

#include "qdef/quartic_poly.hpp"
#include "qdef/scalar.hpp"
#include "qdef/tensors.hpp"

namespace qdef {

enum class MinMethod { ExactCriticalPoints, GridRefine };

/// Result of an independent minimization. `argmin` holds the critical t for
/// a univariate quartic (one component) or a Euclidean unit direction on the
/// sphere (two or three components), so that re-evaluating the source form
/// at argmin reproduces min_value.
struct MinResult {
    double min_value;
    std::vector<double> argmin;
    MinMethod method;
};

/// Same, but the minimum value is carried exactly. `exact` is true only when
/// every real critical point was certified in rational arithmetic; otherwise
/// min_value is the exact evaluation at a floating-point critical point.
struct RationalMinResult {
    Rational min_value;
    std::vector<double> argmin;
    MinMethod method;
    bool exact;
};

/// Global minimum of P over the real line, from the critical points of the
/// derivative cubic. Requires a > 0.
MinResult min_quartic_exact(const QuarticPoly<double>& p);
RationalMinResult min_quartic_exact(const QuarticPoly<Rational>& p);

/// Minimum of the binary quartic form over the Euclidean unit circle. Uses
/// the line restriction P(t) rescaled by 1/(1+t^2)^2 plus the (1, 0) endpoint.
MinResult min_form2_on_sphere(const Sym4Tensor2<double>& t);

struct SphereScanOptions {
    int outer_samples = 4096;
    int refine_seeds = 8;
};

/// Minimum of the three-field potential over the unit sphere with h >= 0.
/// Outer sweep over the (p1, p2) angle; the h-mixing is minimized exactly as
/// a quadratic in h^2 under the sphere constraint; golden-section refinement
/// around the best outer cells. Deterministic for a fixed resolution.
MinResult min_potential3(const Couplings3<double>& c, const SphereScanOptions& opt = {});

} // namespace qdef
