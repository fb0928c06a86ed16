#include "rieszdisk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "rieszdisk/quadrature.hpp"
#include "rieszdisk/specfun.hpp"

namespace rieszdisk {

double reduced_kernel_hypergeometric(double r, double rho, const RieszParams& params) {
    if (r == rho) throw std::domain_error("reduced_kernel: r = rho (kernel unbounded)");
    double d = params.d, s = params.s;
    double mx = std::max(r, rho), mn = std::min(r, rho);
    double pref = 2.0 * std::pow(M_PI, (d - 1.0) / 2.0) / gamma_fn((d - 1.0) / 2.0);
    return pref * std::pow(rho, d - 2.0) * std::pow(mx, -s) *
           gauss_2f1(s / 2.0, params.lambda, (d - 1.0) / 2.0, (mn / mx) * (mn / mx));
}

double reduced_kernel_direct(double r, double rho, const RieszParams& params, double tol) {
    if (r == rho) throw std::domain_error("reduced_kernel: r = rho (kernel unbounded)");
    double d = params.d, s = params.s;
    auto f = [&](double xi) {
        return std::pow(std::sin(xi), d - 3.0) *
               std::pow(r * r + rho * rho - 2.0 * r * rho * std::cos(xi), -s / 2.0);
    };
    double I = adaptive_gl(f, 0.0, M_PI, tol);
    return std::pow(rho, d - 2.0) * 2.0 * std::pow(M_PI, (d - 2.0) / 2.0) /
           gamma_fn((d - 2.0) / 2.0) * I;
}

double reduced_kernel_copson(double r, double rho, const RieszParams& params, int n) {
    if (r == rho) throw std::domain_error("reduced_kernel: r = rho (kernel unbounded)");
    double d = params.d, lam = params.lambda;
    double mx = std::max(r, rho), mn = std::min(r, rho);
    // int_0^mn t^{d+2l-4} (mn^2-t^2)^{-l} (mx^2-t^2)^{-l} dt
    auto f = [&](double t) {
        return std::pow(mn + t, -lam) * std::pow(mx * mx - t * t, -lam);
    };
    double I = integrate_singular(f, 0.0, mn, d + 2.0 * lam - 4.0, -lam, -1.0,
                                  mx - mn < mn ? (mx - mn) : -1.0, n);
    double pref = std::pow(rho, d - 2.0) * 2.0 * std::pow(M_PI, (d - 2.0) / 2.0) /
                  gamma_fn((d - 2.0) / 2.0);
    double lemma = 2.0 * params.sin_lpi() * gamma_fn(lam) * gamma_fn(d / 2.0 - 1.0) /
                   (std::sqrt(M_PI) * gamma_fn((d - 3.0) / 2.0 + lam)) *
                   std::pow(r * rho, 3.0 - d);
    return pref * lemma * I;
}

namespace {

// S_f(t) = int_{max(t,a)}^b f(rho) rho (rho^2-t^2)^{-lambda} drho
double S_of_density(const RadialDensity& dens, const RieszParams& params, double t, int n) {
    double a = dens.a, b = dens.b, lam = params.lambda;
    if (t >= b) return 0.0;
    if (t >= a) {
        auto f = [&](double x) {
            double v = dens.smooth(x) * x * std::pow(x + t, -lam);
            if (dens.inner_exp != 0.0)
                v *= std::pow(x - a, dens.inner_exp) * std::pow(x + a, dens.inner_exp);
            if (dens.outer_exp != 0.0) v *= std::pow(b + x, dens.outer_exp);
            return v;
        };
        double scale_lo = std::min(2.0 * t, (t - a > 0.0) ? (t - a) : 2.0 * t);
        if (t == a) scale_lo = 2.0 * t;
        return integrate_singular(f, t, b, -lam, dens.outer_exp, scale_lo, -1.0, n);
    }
    // t below the inner edge: kernel smooth on [a,b], fold only the density edges
    auto f = [&](double x) {
        double v = dens.smooth(x) * x * std::pow(x * x - t * t, -lam);
        if (dens.inner_exp != 0.0) v *= std::pow(x + a, dens.inner_exp);
        if (dens.outer_exp != 0.0) v *= std::pow(b + x, dens.outer_exp);
        return v;
    };
    return integrate_singular(f, a, b, dens.inner_exp, dens.outer_exp, a - t, -1.0, n);
}

}  // namespace

double potential_of_density(const RadialDensity& dens, const RieszParams& params, double r,
                            int n) {
    double d = params.d, lam = params.lambda;
    double a = dens.a, b = dens.b;
    if (r < 0.0) throw std::domain_error("potential_of_density: r must be >= 0");
    if (d - 3.0 + 2.0 * lam >= d - 1.0)
        throw std::domain_error("potential_of_density: non-integrable parameters");
    double C3 = 4.0 * params.sin_lpi() * std::pow(M_PI, (d - 3.0) / 2.0) * gamma_fn(lam) /
                gamma_fn((d + 2.0 * lam - 3.0) / 2.0);
    if (r < 1e-12) {
        // U(0) directly from the kernel's r -> 0 limit, U(0) = pref int f rho^{d-2-s} drho
        double pref = 2.0 * std::pow(M_PI, (d - 1.0) / 2.0) / gamma_fn((d - 1.0) / 2.0);
        double kpow = d - 2.0 - params.s;  // = 1 - 2 lambda
        if (a > 0.0) {
            auto f = [&](double rho) {
                double v = dens.smooth(rho) * std::pow(rho, kpow);
                if (dens.inner_exp != 0.0) v *= std::pow(rho + a, dens.inner_exp);
                if (dens.outer_exp != 0.0) v *= std::pow(b + rho, dens.outer_exp);
                return v;
            };
            return pref *
                   integrate_singular(f, a, b, dens.inner_exp, dens.outer_exp, -1.0, -1.0, n);
        }
        auto f = [&](double rho) {
            double v = dens.smooth(rho);
            if (dens.outer_exp != 0.0) v *= std::pow(b + rho, dens.outer_exp);
            return v;
        };
        return pref * integrate_singular(f, 0.0, b, 2.0 * dens.inner_exp + kpow,
                                         dens.outer_exp, -1.0, -1.0, n);
    }
    auto S = [&](double t) { return S_of_density(dens, params, t, n); };
    double tm = std::min(r, b);
    double I = 0.0;
    bool split = (a > 0.0 && a < tm);  // S(t) has a logarithmic kink at t = a
    double p = d + 2.0 * lam - 4.0;    // t-power at the origin
    if (split) {
        // [0, a]: kernel factor smooth here since t <= a < r
        auto g = [&](double t) { return S(t) * std::pow(r * r - t * t, -lam); };
        I += integrate_singular(g, 0.0, a, p, 0.0, -1.0, 1e-6 * (b - a), n);
    }
    double lo2 = split ? a : 0.0;
    double beta_lo = split ? 0.0 : p;
    double scale_lo = split ? 1e-6 * (b - a) : -1.0;
    if (r <= b) {
        auto g = [&](double t) {
            double v = S(t) * std::pow(r + t, -lam);
            if (split) v *= std::pow(t, p);
            return v;
        };
        I += integrate_singular(g, lo2, tm, beta_lo, -lam, scale_lo, -1.0, n);
    } else {
        auto g = [&](double t) {
            double v = S(t) * std::pow(r * r - t * t, -lam);
            if (split) v *= std::pow(t, p);
            return v;
        };
        I += integrate_singular(g, lo2, b, beta_lo, 0.0, scale_lo, 1e-4 * (b - a), n);
    }
    return C3 * std::pow(r, 3.0 - d) * I;
}

double energy_of_density(const RadialDensity& dens, const RieszParams& params, int n) {
    double omega = sphere_area(params.d - 1);
    int d = params.d;
    auto f = [&](double t) {
        double v = potential_of_density(dens, params, t, n) * dens.smooth(t) *
                   std::pow(t, d - 2.0);
        if (dens.inner_exp != 0.0) v *= std::pow(t + dens.a, dens.inner_exp);
        if (dens.outer_exp != 0.0) v *= std::pow(dens.b + t, dens.outer_exp);
        return v;
    };
    return omega *
           integrate_singular(f, dens.a, dens.b, dens.inner_exp, dens.outer_exp, -1.0, -1.0, n);
}

RadialDensity resample_density(const RadialDensity& dens, int knots) {
    std::vector<double> x(knots), y(knots);
    double a = dens.a, b = dens.b;
    for (int i = 0; i < knots; ++i) {
        double th = M_PI * i / (knots - 1.0);
        x[i] = a + (b - a) * 0.5 * (1.0 - std::cos(th));
        y[i] = dens.smooth(std::min(std::max(x[i], a), b));
    }
    auto spl = std::make_shared<CubicSpline>(std::move(x), std::move(y));
    RadialDensity out = dens;
    out.smooth = [spl](double t) { return (*spl)(t); };
    return out;
}

std::string VerificationReport::to_json() const {
    std::ostringstream os;
    os.precision(15);
    os << "{\"max_potential_deviation_on_support\":" << max_potential_deviation_on_support
       << ",\"min_inequality_slack_off_support\":" << min_inequality_slack_off_support
       << ",\"mass_error\":" << mass_error << ",\"min_density\":" << min_density
       << ",\"passed\":" << (passed ? "true" : "false") << "}";
    return os.str();
}

VerificationReport verify(const RadialDensity& dens_in, double F_Q, const RadialFunction& Q,
                          const RieszParams& params, const VerificationTolerances& tol) {
    VerificationReport rep;
    RadialDensity dens = resample_density(dens_in);
    double a = dens.a, b = dens.b;
    double collar = 1e-3 * std::max(b - a, 0.1);

    // on-support deviation |U+Q-F_Q|/|F_Q|
    double lo = (a > 0.0) ? a + 0.02 * (b - a) : 0.02 * b;
    double hi = b - std::max(0.05 * (b - a), collar);
    double dev = 0.0, minf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < tol.n_on; ++i) {
        double r = lo + (hi - lo) * i / (tol.n_on - 1.0);
        double u = potential_of_density(dens, params, r) + Q.eval(r);
        dev = std::max(dev, std::abs(u - F_Q) / std::abs(F_Q));
    }
    rep.max_potential_deviation_on_support = dev;

    // off-support slack U+Q-F_Q >= 0 (conductor is the unit disk)
    double slack = std::numeric_limits<double>::infinity();
    if (b < 1.0) {
        double s0 = b + collar;
        for (int i = 0; i < tol.n_off; ++i) {
            double r = s0 + (1.0 - s0) * i / (tol.n_off - 1.0);
            double u = potential_of_density(dens, params, r) + Q.eval(r);
            slack = std::min(slack, u - F_Q);
        }
    }
    if (a > 0.0) {
        double s1 = a - collar;
        for (int i = 0; i < tol.n_off; ++i) {
            double r = s1 * i / (tol.n_off - 1.0);
            double u = potential_of_density(dens, params, r) + Q.eval(r);
            slack = std::min(slack, u - F_Q);
        }
    }
    rep.min_inequality_slack_off_support =
        std::isfinite(slack) ? slack : 0.0;

    rep.mass_error = measure_mass(dens, params.d) - 1.0;
    double minr = (a > 0.0) ? a + 1e-4 * (b - a) : 0.0;
    for (int i = 0; i < 64; ++i) {
        double r = minr + (b * (1.0 - 1e-9) - minr) * i / 63.0;
        minf = std::min(minf, dens(r));
    }
    rep.min_density = minf;
    rep.passed = (rep.max_potential_deviation_on_support < tol.tol_on) &&
                 (rep.min_inequality_slack_off_support > -tol.tol_off) &&
                 (std::abs(rep.mass_error) < tol.tol_mass) && (rep.min_density > -tol.tol_pos);
    return rep;
}

VerificationReport verify(const EquilibriumResult& result, const RadialFunction& Q,
                          const VerificationTolerances& tol) {
    return verify(result.density, result.F_Q, Q, result.params, tol);
}

VerificationReport verify(const RingSolution& result, const VerificationTolerances& tol) {
    VerificationTolerances t = tol;
    t.tol_on = std::max(t.tol_on, 5e-4);  // ring recovery is first-order at the inner edge
    return verify(result.density, result.F_Q, result.field, result.params, t);
}

}  // namespace rieszdisk
