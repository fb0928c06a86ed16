#include "rieszdisk/radial.hpp"

#include <cmath>

#include "rieszdisk/quadrature.hpp"
#include "rieszdisk/specfun.hpp"

namespace rieszdisk {

double abel_forward(const RadialFunction& f, const RieszParams& params, double t, double upper,
                    int n, double upper_exp) {
    if (t < 0.0 || t >= upper) throw std::domain_error("abel_forward: need 0 <= t < upper");
    double lam = params.lambda;
    auto peeled = [&](double rho) {
        double v = f.eval(rho);
        if (upper_exp != 0.0) v *= std::pow(upper - rho, -upper_exp);
        return v;
    };
    double I;
    if (t == 0.0) {
        // kernel rho (rho^2)^{-lambda} = rho^{1-2 lambda}: fold the full power
        I = integrate_singular(peeled, 0.0, upper, 1.0 - 2.0 * lam, upper_exp, -1.0, -1.0, n);
    } else {
        auto g = [&](double rho) { return peeled(rho) * rho * std::pow(rho + t, -lam); };
        I = integrate_singular(g, t, upper, -lam, upper_exp, 2.0 * t, -1.0, n);
    }
    if (!std::isfinite(I)) throw std::domain_error("abel_forward: integrand unbounded");
    return I;
}

double abel_invert(const RadialFunction& S, const RieszParams& params, double t, double upper,
                   int n) {
    if (t <= 0.0 || t >= upper) throw std::domain_error("abel_invert: need 0 < t < upper");
    S.require_deriv1("abel_invert");
    double lam = params.lambda;
    double U2 = upper * upper;
    auto g = [&](double rho) {
        return (S.deriv1(rho) * (U2 - rho * rho) - 2.0 * lam * rho * S.eval(rho)) *
               std::pow(rho + t, lam - 1.0);
    };
    // S' is typically only Hoelder at rho = upper; refine geometrically there
    double I = integrate_singular(g, t, upper, lam - 1.0, 0.0, 2.0 * t, 1e-6 * (upper - t), n);
    return -(2.0 * params.sin_lpi() / M_PI) / (U2 - t * t) * I;
}

namespace {

// integral_0^1 q(r sqrt(1-w)) (1-w)^mu w^{lambda-1} dw
double g_core(const std::function<double(double)>& q, double r, double mu, double lam, int n) {
    auto f = [&](double w) { return q(r * std::sqrt(1.0 - w)); };
    return integrate_singular(f, 0.0, 1.0, lam - 1.0, mu, -1.0, -1.0, n);
}

}  // namespace

double field_to_g(const RadialFunction& Q, const RieszParams& params, double r, int n) {
    if (r <= 0.0) throw std::domain_error("field_to_g: r must be positive");
    Q.require_deriv1("field_to_g");
    double d = params.d, lam = params.lambda;
    double I1 = g_core(Q.eval, r, (d - 3.0) / 2.0, lam, n);
    // Q'(u) is odd in u for smooth radial profiles; integrate Q'(u)/u against
    // the (d-1)/2 weight so the integrand stays analytic in w
    auto dq_over_u = [&](double u) { return Q.deriv1(u) / u; };
    double I2t = g_core(dq_over_u, r, (d - 1.0) / 2.0, lam, n);
    return 0.5 * (d + 2.0 * lam - 3.0) * I1 + 0.5 * r * r * I2t;
}

double field_to_g_deriv(const RadialFunction& Q, const RieszParams& params, double r, int n) {
    Q.require_deriv2("field_to_g_deriv");
    double d = params.d, lam = params.lambda;
    auto dq_over_u = [&](double u) { return Q.deriv1(u) / u; };
    double I2t = g_core(dq_over_u, r, (d - 1.0) / 2.0, lam, n);
    double I3 = g_core(Q.deriv2, r, (d - 1.0) / 2.0, lam, n);
    return 0.5 * (d + 2.0 * lam - 2.0) * r * I2t + 0.5 * r * I3;
}

double F_transform_of_g(const RadialFunction& g, const RieszParams& params, double t, double R,
                        int n) {
    if (t < 0.0 || t >= R) throw std::domain_error("field_to_F: need 0 <= t < R");
    g.require_deriv1("F_transform_of_g");
    double lam = params.lambda, d = params.d;
    if (t < 1e-6 * R) t = 1e-6 * R;  // finite limit; naive expression is 0/0 at t = 0
    double R2 = R * R;
    auto integrand = [&](double rho) {
        return (g.deriv1(rho) * (R2 - rho * rho) - 2.0 * lam * rho * g.eval(rho)) *
               std::pow(rho + t, lam - 1.0);
    };
    double I = integrate_singular(integrand, t, R, lam - 1.0, 0.0, 2.0 * t, -1.0, n);
    double KF = params.sin_lpi() * gamma_fn((d + 2.0 * lam - 3.0) / 2.0) /
                (std::pow(M_PI, (d + 1.0) / 2.0) * gamma_fn(lam));
    return KF / (R2 - t * t) * I;
}

double field_to_F(const RadialFunction& Q, const RieszParams& params, double t, double R, int n) {
    Q.require_deriv1("field_to_F");
    Q.require_deriv2("field_to_F");
    RadialFunction g{[&Q, &params, n](double r) { return field_to_g(Q, params, r, n); },
                     [&Q, &params, n](double r) { return field_to_g_deriv(Q, params, r, n); },
                     nullptr, 0.0, R};
    return F_transform_of_g(g, params, t, R, n);
}

}  // namespace rieszdisk
