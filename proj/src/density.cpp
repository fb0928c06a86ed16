#include "rieszdisk/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rieszdisk/quadrature.hpp"
#include "rieszdisk/specfun.hpp"

namespace rieszdisk {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    size_t n = x_.size();
    if (n < 3 || y_.size() != n) throw std::domain_error("CubicSpline: need >= 3 knots");
    for (size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw std::domain_error("CubicSpline: knots must increase");
    // natural ends: tridiagonal solve for second derivatives
    std::vector<double> u(n, 0.0);
    c2_.assign(n, 0.0);
    for (size_t i = 1; i + 1 < n; ++i) {
        double sig = (x_[i] - x_[i - 1]) / (x_[i + 1] - x_[i - 1]);
        double p = sig * c2_[i - 1] + 2.0;
        c2_[i] = (sig - 1.0) / p;
        u[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]) -
               (y_[i] - y_[i - 1]) / (x_[i] - x_[i - 1]);
        u[i] = (6.0 * u[i] / (x_[i + 1] - x_[i - 1]) - sig * u[i - 1]) / p;
    }
    for (size_t i = n - 1; i-- > 0;) c2_[i] = c2_[i] * c2_[i + 1] + u[i];
}

int CubicSpline::interval(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    int i = static_cast<int>(it - x_.begin()) - 1;
    return std::clamp(i, 0, static_cast<int>(x_.size()) - 2);
}

double CubicSpline::operator()(double x) const {
    // clamp outside the knot range (constant extension)
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    int i = interval(x);
    double h = x_[i + 1] - x_[i];
    double A = (x_[i + 1] - x) / h, B = (x - x_[i]) / h;
    return A * y_[i] + B * y_[i + 1] +
           ((A * A * A - A) * c2_[i] + (B * B * B - B) * c2_[i + 1]) * h * h / 6.0;
}

double CubicSpline::deriv(double x) const {
    if (x <= x_.front() || x >= x_.back()) return 0.0;
    int i = interval(x);
    double h = x_[i + 1] - x_[i];
    double A = (x_[i + 1] - x) / h, B = (x - x_[i]) / h;
    return (y_[i + 1] - y_[i]) / h +
           ((3.0 * B * B - 1.0) * c2_[i + 1] - (3.0 * A * A - 1.0) * c2_[i]) * h / 6.0;
}

double CubicSpline::deriv2(double x) const {
    if (x <= x_.front() || x >= x_.back()) return 0.0;
    int i = interval(x);
    double h = x_[i + 1] - x_[i];
    double A = (x_[i + 1] - x) / h, B = (x - x_[i]) / h;
    return A * c2_[i] + B * c2_[i + 1];
}

double RadialDensity::operator()(double t) const {
    double v = smooth(t);
    if (inner_exp != 0.0) v *= std::pow(std::max(t * t - a * a, 0.0), inner_exp);
    if (outer_exp != 0.0) v *= std::pow(std::max(b * b - t * t, 0.0), outer_exp);
    return v;
}

double radial_mass(const RadialDensity& dens, int d, int n) {
    auto g = [&](double t) {
        double v = dens.smooth(t) * std::pow(t, d - 2);
        if (dens.inner_exp != 0.0) v *= std::pow(t + dens.a, dens.inner_exp);
        if (dens.outer_exp != 0.0) v *= std::pow(dens.b + t, dens.outer_exp);
        return v;
    };
    return integrate_singular(g, dens.a, dens.b, dens.inner_exp, dens.outer_exp, -1.0, -1.0, n);
}

double sphere_area(int d) {
    return 2.0 * std::pow(M_PI, d / 2.0) / gamma_fn(d / 2.0);
}

double measure_mass(const RadialDensity& dens, int d, int n) {
    return sphere_area(d - 1) * radial_mass(dens, d, n);
}

}  // namespace rieszdisk
