#include "rieszdisk/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "rieszdisk/specfun.hpp"

namespace rieszdisk {

namespace {

std::mutex g_rule_mutex;
std::map<std::tuple<int, double, double>, QuadratureRule> g_rule_cache;

QuadratureRule build_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw std::domain_error("gauss_jacobi: n must be >= 1");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::domain_error("gauss_jacobi: exponents must be > -1");
    // Golub-Welsch: eigendecomposition of the symmetric tridiagonal recurrence matrix
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    double ab = alpha + beta;
    for (int k = 0; k < n; ++k) {
        if (k == 0)
            diag[0] = (beta - alpha) / (ab + 2.0);
        else
            diag[k] = (beta * beta - alpha * alpha) /
                      ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double b2;
        if (k == 1)
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) /
                 ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                 ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0));
        sub[k - 1] = std::sqrt(b2);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi: eigen decomposition failed");
    double mu0 = std::pow(2.0, ab + 1.0) * beta_fn(alpha + 1.0, beta + 1.0);
    QuadratureRule rule;
    rule.alpha = alpha;
    rule.beta = beta;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()[i];
        double v = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v * v;
    }
    return rule;
}

}  // namespace

const QuadratureRule& gauss_jacobi(int n, double alpha, double beta) {
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto key = std::make_tuple(n, alpha, beta);
    auto it = g_rule_cache.find(key);
    if (it == g_rule_cache.end())
        it = g_rule_cache.emplace(key, build_jacobi(n, alpha, beta)).first;
    return it->second;
}

double gj_panel(const std::function<double(double)>& f, double lo, double hi, double alpha_hi,
                double beta_lo, int n) {
    const QuadratureRule& rule = gauss_jacobi(n, alpha_hi, beta_lo);
    double h = 0.5 * (hi - lo);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(lo + (rule.nodes[i] + 1.0) * h);
    return acc * std::pow(h, alpha_hi + beta_lo + 1.0);
}

double integrate_singular(const std::function<double(double)>& f, double lo, double hi,
                          double beta_lo, double alpha_hi, double scale_lo, double scale_hi,
                          int n) {
    double L = hi - lo;
    if (L <= 0.0) return 0.0;
    auto clamp_scale = [&](double s) {
        if (s < 0.0) return L;  // no off-interval singularity at this end
        return std::max(std::min(s, L), L * 1e-13);
    };
    double sl = clamp_scale(scale_lo);
    double sh = clamp_scale(scale_hi);
    if (sl >= L && sh >= L) return gj_panel(f, lo, hi, alpha_hi, beta_lo, n);

    // panel boundaries, geometric from each end toward the midpoint
    std::vector<double> bnds;
    bnds.push_back(lo);
    for (double x = sl; x < 0.5 * L; x *= 3.0) bnds.push_back(lo + x);
    std::vector<double> right;
    right.push_back(hi);
    for (double x = sh; x < 0.5 * L; x *= 3.0) right.push_back(hi - x);
    for (auto it = right.rbegin(); it != right.rend(); ++it)
        if (*it > bnds.back()) bnds.push_back(*it);
    if (bnds.back() != hi) bnds.push_back(hi);

    double total = 0.0;
    for (size_t i = 0; i + 1 < bnds.size(); ++i) {
        double p0 = bnds[i], p1 = bnds[i + 1];
        double be = (i == 0) ? beta_lo : 0.0;
        double ae = (i + 2 == bnds.size()) ? alpha_hi : 0.0;
        auto g = [&](double x) {
            double v = f(x);
            if (be != beta_lo) v *= std::pow(x - lo, beta_lo);
            if (ae != alpha_hi) v *= std::pow(hi - x, alpha_hi);
            return v;
        };
        total += gj_panel(g, p0, p1, ae, be, n);
    }
    return total;
}

namespace {

double gl_sum(const std::function<double(double)>& f, double lo, double hi, int n) {
    const QuadratureRule& rule = gauss_legendre(n);
    double h = 0.5 * (hi - lo), acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(lo + (rule.nodes[i] + 1.0) * h);
    return acc * h;
}

double adaptive_rec(const std::function<double(double)>& f, double lo, double hi, double tol,
                    double whole, int depth, int max_depth) {
    double mid = 0.5 * (lo + hi);
    double left = gl_sum(f, lo, mid, 21), right = gl_sum(f, mid, hi, 21);
    if (depth >= max_depth) return left + right;
    if (std::abs(left + right - whole) <= tol * std::max(1.0, std::abs(left + right)))
        return left + right;
    return adaptive_rec(f, lo, mid, tol, left, depth + 1, max_depth) +
           adaptive_rec(f, mid, hi, tol, right, depth + 1, max_depth);
}

}  // namespace

double adaptive_gl(const std::function<double(double)>& f, double lo, double hi, double tol,
                   int max_depth) {
    if (hi <= lo) return 0.0;
    return adaptive_rec(f, lo, hi, tol, gl_sum(f, lo, hi, 21), 0, max_depth);
}

}  // namespace rieszdisk
