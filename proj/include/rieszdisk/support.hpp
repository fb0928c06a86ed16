#pragma once

#include <vector>

#include "rieszdisk/fields.hpp"
#include "rieszdisk/params.hpp"
#include "rieszdisk/radial.hpp"

namespace rieszdisk {

/// Shape of the extremal support implied by the field's monotonicity/convexity.
struct SupportDecision {
    enum class Kind { full_disk, disk, ring, unknown } kind = Kind::unknown;
    enum class Rationale {
        field_convex_increasing,  // support is a disk of some radius R <= 1
        field_convex_decreasing,  // support is a ring with b = 1
        field_convex,             // support is a ring (a,b) unknown
        insufficient_hypotheses
    } rationale = Rationale::insufficient_hypotheses;
    double R = 1.0;  // for kind = disk (filled by critical_radius callers)
};

/// Numerical convexity/monotonicity test on 200 sample points (tolerance 1e-9).
SupportDecision classify_support(const RadialFunction& Q);

/// Mhaskar-Saff functional of the disk D_R:
///   F_s(D_R) = c(d,l) R^{-(d+2l-3)} { 1 + (2 sin(l pi)/pi) int_0^R Q(r)(R^2-r^2)^{l-1} r^{d-2} dr }.
double ms_functional(const RadialFunction& Q, const RieszParams& params, double R, int n = 48);

/// w(R) = int_0^R Q'(r) (R^2-r^2)^{lambda-1} r^{d-1} dr (increasing for convex increasing Q).
double radius_equation_lhs(const RadialFunction& Q, const RieszParams& params, double R,
                           int n = 48);

/// Support radius of a convex increasing field: the root of
/// w(R) = pi (d+2 lambda-3)/(2 sin(lambda pi)) on (0,1], or 1 if none exists.
double critical_radius(const RadialFunction& Q, const RieszParams& params, double tol = 1e-12);

/// Critical-height data of a point charge.
struct CriticalHeight {
    double h_minus = 0.0;
    std::vector<double> h_plus_candidates;  // all sign-change roots found on the scan grid
    double h_plus = 0.0;                    // largest candidate (0 if none found)
    double threshold = 0.0;                 // max(h_minus, h_plus)
    bool root_found = false;
};

/// Scans p(h) on a log grid over [1e-3, 1e3], bisects every sign change,
/// and reports threshold = max(h_-, largest root). Uses the elementary
/// Newtonian evaluator when d = 2m+4, lambda = 1/2, m >= 2.
CriticalHeight critical_height(const PointChargeField& field, const RieszParams& params);

}  // namespace rieszdisk
