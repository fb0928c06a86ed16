#pragma once

#include <functional>
#include <stdexcept>

#include "rieszdisk/params.hpp"

namespace rieszdisk {

/// Radial profile Q(r) on [lo,hi] with optional derivatives. Callbacks must be
/// free of hidden mutable state (they may be invoked concurrently).
struct RadialFunction {
    std::function<double(double)> eval;
    std::function<double(double)> deriv1;  // may be empty
    std::function<double(double)> deriv2;  // may be empty
    double lo = 0.0, hi = 1.0;

    void require_deriv1(const char* who) const {
        if (!deriv1) throw std::domain_error(std::string(who) + ": first derivative required");
    }
    void require_deriv2(const char* who) const {
        if (!deriv2) throw std::domain_error(std::string(who) + ": second derivative required");
    }
};

/// S(t) = integral_t^upper f(rho) rho (rho^2-t^2)^{-lambda} drho.
/// upper_exp: pass e when f carries an algebraic edge f ~ (upper-rho)^e so the
/// factor is folded into the quadrature weight (0 for bounded f).
double abel_forward(const RadialFunction& f, const RieszParams& params, double t, double upper,
                    int n = 64, double upper_exp = 0.0);

/// Inverse of abel_forward:
///   f(t) = -(2 sin(lambda pi)/pi) (1/t) d/dt integral_t^upper S(rho) rho (rho^2-t^2)^{lambda-1} drho,
/// evaluated through the identity
///   (1/t) d/dt I(t) = (U^2-t^2)^{-1} integral_t^U [S'(rho)(U^2-rho^2) - 2 lambda rho S(rho)]
///                                                 (rho^2-t^2)^{lambda-1} drho,
/// which cancels the 1/t factor and differentiates only smooth data (needs S').
double abel_invert(const RadialFunction& S, const RieszParams& params, double t, double upper,
                   int n = 64);

/// g(r) = r^{-(d+2 lambda-4)} d/dr integral_0^r Q(u) u^{d-2} (r^2-u^2)^{lambda-1} du  (needs Q').
double field_to_g(const RadialFunction& Q, const RieszParams& params, double r, int n = 64);

/// dg/dr (needs Q'').
double field_to_g_deriv(const RadialFunction& Q, const RieszParams& params, double r, int n = 64);

/// The outer transform of the disk theorem applied to an already-computed g
/// (used with spline-backed g to avoid re-running the inner pipeline).
double F_transform_of_g(const RadialFunction& g, const RieszParams& params, double t, double R,
                        int n = 64);

/// F(t) of the disk theorem: the lambda-fractional transform of g with the
/// normalizing constant sin(lambda pi) Gamma((d+2 lambda-3)/2) / (pi^{(d+1)/2} Gamma(lambda)).
/// Needs Q' and Q''. The t -> 0 limit is taken at t = 1e-6 R.
double field_to_F(const RadialFunction& Q, const RieszParams& params, double t, double R,
                  int n = 64);

}  // namespace rieszdisk
