#include "rieszdisk/ring.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <limits>

#include "rieszdisk/quadrature.hpp"
#include "rieszdisk/specfun.hpp"

namespace rieszdisk {

namespace {

double fred_const(const RieszParams& p) {
    return gamma_fn((p.d + 2.0 * p.lambda - 3.0) / 2.0) * gamma_fn(3.0 - 2.0 * p.lambda) /
           (2.0 * gamma_fn((p.d - 2.0 * p.lambda + 3.0) / 2.0));
}

double rhs_const(const RieszParams& p) {
    return gamma_fn((p.d + 2.0 * p.lambda - 3.0) / 2.0) /
           (2.0 * std::pow(M_PI, (p.d - 1.0) / 2.0) * gamma_fn(p.lambda));
}

// kernel-term prefactor of the output variable r:
//   (2 sin(l pi)/pi)^2 * cfred * r^{5-d-2l} (r^2-a^2)^{l-1}
double kernel_pref(double r, double a, const RieszParams& p) {
    double kap = 2.0 * p.sin_lpi() / M_PI;
    return kap * kap * fred_const(p) * std::pow(r, 5.0 - p.d - 2.0 * p.lambda) *
           std::pow(r * r - a * a, p.lambda - 1.0);
}

}  // namespace

double ring_kernel(double u, double r, double a, const RieszParams& params) {
    if (a == 0.0) return 0.0;  // prefactor a^{d-2l+1} vanishes
    if (u <= a || r <= a) throw std::domain_error("ring_kernel: need u, r > a");
    double d = params.d, lam = params.lambda;
    double A = (d + 2.0 * lam - 3.0) / 2.0, B = (d - 2.0 * lam + 3.0) / 2.0;
    double apow = std::pow(a, d - 2.0 * lam + 1.0);
    if (std::abs(u - r) < 1e-6 * std::max(u, r)) {
        double x = 0.5 * (u + r), z = (a / x) * (a / x);
        return apow / (x * x * x * x) *
               (gauss_2f1(1.0, A, B, z) + A / B * z * gauss_2f1(2.0, A + 1.0, B + 1.0, z));
    }
    auto phi = [&](double x) { return gauss_2f1(1.0, A, B, (a / x) * (a / x)) / (x * x); };
    return apow * (phi(r) - phi(u)) / (u * u - r * r);
}

double ring_rhs_A(double r, double a, const RieszParams& params) {
    double d = params.d, lam = params.lambda;
    double beta_term = 0.5 * (d + 2.0 * lam - 3.0);
    double z = (a == 0.0) ? 1.0 : 1.0 - (a / r) * (a / r);
    beta_term *= incomplete_beta(z, lam, (d - 1.0) / 2.0);
    double edge = (a == 0.0) ? 0.0
                             : std::pow(a, d - 1.0) * std::pow(r, 3.0 - d - 2.0 * lam) *
                                   std::pow(r * r - a * a, lam - 1.0);
    return rhs_const(params) * (beta_term + edge);
}

double ring_rhs_B(const RadialFunction& Q, const RieszParams& params, double a, double r, int n) {
    Q.require_deriv1("ring_rhs_B");
    double d = params.d, lam = params.lambda;
    auto psi = [&](double rho) { return Q.eval(rho) * std::pow(rho, d - 3.0); };
    auto dpsi = [&](double rho) {
        double t = Q.deriv1(rho) * std::pow(rho, d - 3.0);
        if (d != 3) t += (d - 3.0) * Q.eval(rho) * std::pow(rho, d - 4.0);
        return t;
    };
    auto f = [&](double rho) {
        return (2.0 * lam * rho * psi(rho) + dpsi(rho) * (rho * rho - a * a)) *
               std::pow(rho + r, lam - 1.0);
    };
    double I = integrate_singular(f, a, r, 0.0, lam - 1.0, -1.0, std::min(2.0 * r, r - a), n);
    return rhs_const(params) * std::pow(r, 5.0 - d - 2.0 * lam) / (r * r - a * a) * I;
}

double recover_density(const CubicSpline& G, const RieszParams& params, double a, double b,
                       double t) {
    double lam = params.lambda;
    double b2 = b * b;
    auto g = [&](double rho) {
        return (G.deriv(rho) * (b2 - rho * rho) - 2.0 * lam * rho * G(rho)) *
               std::pow(rho + t, lam - 1.0);
    };
    // G' blows up like 1/(rho-a) toward the inner edge; keep the first panel
    // inside that scale as well
    double scale = 2.0 * t;
    if (a > 0.0 && t > a) scale = std::min(scale, std::max(t - a, 1e-13 * (b - a)));
    double I = integrate_singular(g, t, b, lam - 1.0, 0.0, scale, -1.0, 48);
    return -(2.0 * params.sin_lpi() / M_PI) / (b2 - t * t) * I;
}

namespace {

struct NystromSystem {
    std::vector<double> nodes, wfold;  // wfold absorbs (u-a)^{lambda-1}
    Eigen::MatrixXd lhs;               // I + M
    Eigen::PartialPivLU<Eigen::MatrixXd> lu;
    double cond = 0.0;
};

NystromSystem assemble(const RieszParams& params, double a, double b,
                       const NystromConfig& config) {
    int n = config.n_nodes;
    double lam = params.lambda;
    NystromSystem sys;
    double L = b - a;
    if (config.rule == NystromConfig::Rule::gauss_jacobi) {
        // composite graded rule: Gauss-Jacobi on the first panel (absorbing the
        // (u-a)^{lambda-1} weight), geometric Gauss-Legendre panels after it;
        // the grading resolves the solution's logarithmic inner-edge structure
        std::vector<double> bnds{a};
        for (double x = 1e-4 * L; x < 0.5 * L; x *= 3.0) bnds.push_back(a + x);
        bnds.push_back(a + 0.5 * L);
        bnds.push_back(b);
        int panels = static_cast<int>(bnds.size()) - 1;
        int nsub = std::max(10, n / panels);
        for (int p = 0; p < panels; ++p) {
            double lo = bnds[p], hi = bnds[p + 1], h = 0.5 * (hi - lo);
            if (p == 0) {
                const QuadratureRule& rule = gauss_jacobi(nsub, 0.0, lam - 1.0);
                for (int j = 0; j < nsub; ++j) {
                    sys.nodes.push_back(lo + (rule.nodes[j] + 1.0) * h);
                    sys.wfold.push_back(rule.weights[j] * std::pow(h, lam));
                }
            } else {
                const QuadratureRule& rule = gauss_legendre(nsub);
                for (int j = 0; j < nsub; ++j) {
                    double u = lo + (rule.nodes[j] + 1.0) * h;
                    sys.nodes.push_back(u);
                    sys.wfold.push_back(rule.weights[j] * h * std::pow(u - a, lam - 1.0));
                }
            }
        }
        n = static_cast<int>(sys.nodes.size());
    } else {
        sys.nodes.resize(n);
        sys.wfold.resize(n);
        double half = 0.5 * L;
        const QuadratureRule& rule = gauss_legendre(n);
        for (int j = 0; j < n; ++j) {
            sys.nodes[j] = a + (rule.nodes[j] + 1.0) * half;
            sys.wfold[j] = rule.weights[j] * half * std::pow(sys.nodes[j] - a, lam - 1.0);
        }
    }
    sys.lhs = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i) {
        double r = sys.nodes[i];
        double pref = kernel_pref(r, a, params);
        for (int j = 0; j < n; ++j) {
            double u = sys.nodes[j];
            double uu = u;
            if (config.diag == NystromConfig::DiagRegularization::epsilon_shift && i == j)
                uu = u + config.epsilon * std::max(a, b - a);
            double K = ring_kernel(uu, r, a, params);
            sys.lhs(i, j) += pref * sys.wfold[j] * u * std::pow(u + a, lam - 1.0) * K;
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.lhs);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    sys.cond = (smin > 0.0) ? svd.singularValues()(0) / smin
                            : std::numeric_limits<double>::infinity();
    if (sys.cond > config.cond_limit)
        throw IllConditionedError("ring_solve: Nystrom system condition " +
                                  std::to_string(sys.cond) + " exceeds limit");
    sys.lu.compute(sys.lhs);
    return sys;
}

// Nystrom interpolation: G(r) = rhs(r) - sum_j M(r,u_j) G_j
double interp_G(const NystromSystem& sys, const RieszParams& params, double a,
                const Eigen::VectorXd& G, const std::function<double(double)>& rhs, double r) {
    double acc = rhs(r);
    double pref = kernel_pref(r, a, params);
    double lam = params.lambda;
    for (size_t j = 0; j < sys.nodes.size(); ++j) {
        double u = sys.nodes[j];
        acc -= pref * sys.wfold[j] * u * std::pow(u + a, lam - 1.0) *
               ring_kernel(u, r, a, params) * G(static_cast<int>(j));
    }
    return acc;
}

std::vector<double> cheb_grid(double lo, double hi, int n) {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i)
        x[i] = lo + (hi - lo) * 0.5 * (1.0 - std::cos(M_PI * i / (n - 1.0)));
    return x;
}

}  // namespace

RingSolution ring_solve(const RadialFunction& Q, const RieszParams& params, double a, double b,
                        const NystromConfig& config) {
    config.validate();
    if (!(a >= 0.0 && a < b && b <= 1.0))
        throw std::domain_error("ring_solve: need 0 <= a < b <= 1");
    double lam = params.lambda;

    NystromSystem sys = assemble(params, a, b, config);
    int n = static_cast<int>(sys.nodes.size());
    Eigen::VectorXd Av(n), Bv(n);
    for (int i = 0; i < n; ++i) {
        Av(i) = ring_rhs_A(sys.nodes[i], a, params);
        Bv(i) = ring_rhs_B(Q, params, a, sys.nodes[i]);
    }
    Eigen::VectorXd GA = sys.lu.solve(Av);
    Eigen::VectorXd GB = sys.lu.solve(Bv);

    auto rhsA = [&](double r) { return ring_rhs_A(r, a, params); };
    auto rhsB = [&](double r) { return ring_rhs_B(Q, params, a, r); };

    // splined G on [a + collar, b]; inside the collar the Nystrom interpolant
    // suffers (r-a)^{lambda-1} cancellation between rhs and kernel term
    double L = b - a;
    auto Ggrid = cheb_grid(a + 0.5e-4 * L, b, 480);
    std::vector<double> GAs(Ggrid.size()), GBs(Ggrid.size());
    for (size_t i = 0; i < Ggrid.size(); ++i) {
        GAs[i] = interp_G(sys, params, a, GA, rhsA, Ggrid[i]);
        GBs[i] = interp_G(sys, params, a, GB, rhsB, Ggrid[i]);
    }
    CubicSpline splA(Ggrid, GAs), splB(Ggrid, GBs);

    // densities via w-splines: w = f * (t^2-a^2)^{1-l} (b^2-t^2)^{1-l}  (inner factor only for a>0)
    double inner_exp = (a > 0.0) ? lam - 1.0 : 0.0;
    auto make_w = [&](const CubicSpline& spl) {
        double t0 = (a > 0.0) ? a + 1e-4 * L : 1e-4 * b;
        auto tt = cheb_grid(t0, b * (1.0 - 1e-9) + a * 1e-9, 280);
        std::vector<double> wv(tt.size());
        for (size_t i = 0; i < tt.size(); ++i) {
            double f = recover_density(spl, params, a, b, tt[i]);
            double v = f * std::pow(b * b - tt[i] * tt[i], 1.0 - lam);
            if (a > 0.0) v *= std::pow(tt[i] * tt[i] - a * a, 1.0 - lam);
            wv[i] = v;
        }
        return CubicSpline(tt, wv);
    };
    CubicSpline wA = make_w(splA), wB = make_w(splB);

    RadialDensity densA{a, b, inner_exp, lam - 1.0, [wA](double t) { return wA(t); }};
    RadialDensity densB{a, b, inner_exp, lam - 1.0, [wB](double t) { return wB(t); }};
    double mA = radial_mass(densA, params.d);
    double mB = radial_mass(densB, params.d);
    if (std::abs(mA) < 1e-14)
        throw std::domain_error("ring_solve: degenerate mass, F_Q undetermined");
    double omega = sphere_area(params.d - 1);
    double F_Q = (1.0 / omega + mB) / mA;

    RingSolution sol;
    sol.params = params;
    sol.a = a;
    sol.b = b;
    sol.F_Q = F_Q;
    sol.nodes = sys.nodes;
    sol.condition = sys.cond;
    sol.field = Q;
    sol.G_grid.resize(n);
    for (int i = 0; i < n; ++i) sol.G_grid[i] = F_Q * GA(i) - GB(i);

    // combined G spline and density
    std::vector<double> Gc(Ggrid.size());
    for (size_t i = 0; i < Ggrid.size(); ++i) Gc[i] = F_Q * GAs[i] - GBs[i];
    sol.G_spline = CubicSpline(Ggrid, Gc);
    sol.G_A_spline = splA;
    sol.G_B_spline = splB;
    sol.density = RadialDensity{a, b, inner_exp, lam - 1.0,
                                [wA, wB, F_Q](double t) { return F_Q * wA(t) - wB(t); }};
    sol.mass = omega * radial_mass(sol.density, params.d);

    auto fgrid = cheb_grid(a + (b - a) * 2e-4, b * (1.0 - 1e-9), 200);
    sol.grid.r = fgrid;
    sol.grid.f.resize(fgrid.size());
    double minf = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < fgrid.size(); ++i) {
        sol.grid.f[i] = sol.density(fgrid[i]);
        minf = std::min(minf, sol.grid.f[i]);
    }
    sol.min_density = minf;
    sol.nonnegative = minf >= -1e-9;

    // discrete system residual of the combined solution
    Eigen::VectorXd Gcomb = F_Q * GA - GB;
    Eigen::VectorXd rhs = F_Q * Av - Bv;
    double scale = std::max(1.0, rhs.lpNorm<Eigen::Infinity>());
    sol.residual_norm = (sys.lhs * Gcomb - rhs).lpNorm<Eigen::Infinity>() / scale;
    return sol;
}

double ring_equation_residual(const RingSolution& sol, double r, int n) {
    const RieszParams& p = sol.params;
    double a = sol.a, b = sol.b, lam = p.lambda;
    auto f = [&](double u) {
        return sol.G_spline(u) * u * std::pow(u + a, lam - 1.0) *
               ring_kernel(u, r, a, p);
    };
    double I = integrate_singular(f, a, b, lam - 1.0, 0.0, 1e-5 * (b - a), -1.0, n);
    double lhs = sol.G_spline(r) + kernel_pref(r, a, p) * I;
    double rhs = sol.F_Q * ring_rhs_A(r, a, p) - ring_rhs_B(sol.field, p, a, r);
    return lhs - rhs;
}

}  // namespace rieszdisk
