#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "rieszdisk/params.hpp"

namespace rieszdisk {

/// Natural cubic spline through strictly increasing knots.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const;
    double deriv(double x) const;
    double deriv2(double x) const;
    bool empty() const { return x_.empty(); }
    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }

private:
    int interval(double x) const;
    std::vector<double> x_, y_, c2_;  // c2_: second derivatives at knots
};

/**
 * Radial density on a ring [a,b] (disk when a = 0), stored as
 *   f(t) = smooth(t) * (t^2-a^2)^{inner_exp} * (b^2-t^2)^{outer_exp}.
 * Keeping the edge exponents analytic lets downstream quadratures absorb them
 * into Gauss-Jacobi weights.
 */
struct RadialDensity {
    double a = 0.0, b = 1.0;
    double inner_exp = 0.0;  // 0 when the density is regular at a
    double outer_exp = 0.0;
    std::function<double(double)> smooth;

    double operator()(double t) const;
};

/// Samples (t, f(t)) with the grid used to produce them.
struct DensityGrid {
    std::vector<double> r;
    std::vector<double> f;
};

/// integral over the support of f(t) t^{d-2} dt (radial part of the measure's mass).
double radial_mass(const RadialDensity& dens, int d, int n = 48);

/// total measure mass: omega_{d-1} * radial_mass.
double measure_mass(const RadialDensity& dens, int d, int n = 48);

/// surface area of S^{d-1}
double sphere_area(int d);

}  // namespace rieszdisk
