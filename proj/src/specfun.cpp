#include "rieszdisk/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace rieszdisk {

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
const double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x, double tol = 1e-12) {
    return x <= tol && std::abs(x - std::round(x)) < tol * std::max(1.0, std::abs(x));
}

double lanczos_series(double x) {
    // valid for x >= 0.5; returns Gamma(x)
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1 + i);
    double t = x + 6.5;
    return std::sqrt(2 * M_PI) * std::pow(t, x - 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("gamma_fn: pole at non-positive integer x=" + std::to_string(x));
    if (x < 0.5) {
        // reflection Gamma(x)Gamma(1-x) = pi/sin(pi x)
        return M_PI / (std::sin(M_PI * x) * lanczos_series(1.0 - x));
    }
    return lanczos_series(x);
}

double lgamma_fn(double x, int* sign) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("lgamma_fn: pole at non-positive integer");
    if (x >= 0.5) {
        if (sign) *sign = 1;
        return std::log(lanczos_series(x));
    }
    double s = std::sin(M_PI * x);
    if (sign) *sign = (s > 0) ? 1 : -1;
    return std::log(M_PI / std::abs(s)) - std::log(lanczos_series(1.0 - x));
}

double digamma(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("digamma: pole at non-positive integer");
    if (x < 0.5)
        return digamma(1.0 - x) - M_PI / std::tan(M_PI * x);
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double inv2 = 1.0 / (x * x);
    acc += std::log(x) - 0.5 / x -
           inv2 * (1.0 / 12 -
                   inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 / 132.0))));
    return acc;
}

double pochhammer(double a, int n) {
    if (n < 0) throw std::domain_error("pochhammer: n must be >= 0");
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
}

double beta_fn(double a, double b) {
    if (a <= 0.0 || b <= 0.0) throw std::domain_error("beta_fn: arguments must be positive");
    return std::exp(lgamma_fn(a) + lgamma_fn(b) - lgamma_fn(a + b));
}

namespace {

// Continued fraction for the regularized incomplete Beta (Lentz's algorithm).
double beta_cf(double a, double b, double x) {
    const double tiny = 1e-300;
    const int kMaxIter = 500;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) return h;
    }
    throw ConvergenceError("incomplete_beta: continued fraction did not converge");
}

}  // namespace

double incomplete_beta(double z, double a, double b) {
    if (a <= 0.0 || b <= 0.0)
        throw std::domain_error("incomplete_beta: a and b must be positive");
    if (z < 0.0 || z > 1.0) throw std::domain_error("incomplete_beta: z out of [0,1]");
    if (z == 0.0) return 0.0;
    if (z == 1.0) return beta_fn(a, b);
    double front = std::exp(a * std::log(z) + b * std::log1p(-z));
    if (z < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, z) / a;
    return beta_fn(a, b) - front * beta_cf(b, a, 1.0 - z) / b;
}

namespace {

// direct Gauss series, |z| <= ~0.6
double series_2f1(double a, double b, double c, double z, const AccuracyPolicy& pol) {
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < pol.max_terms; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (std::abs(term) < pol.rel_tol * std::max(1.0, std::abs(sum)) && n > 2) return sum;
    }
    throw ConvergenceError("gauss_2f1: series did not converge");
}

double terminating_2f1(double a, double b, double c, double z) {
    // a or b is a non-positive integer; exact finite sum
    int N;
    if (is_nonpositive_integer(a) && (!is_nonpositive_integer(b) || a >= b))
        N = static_cast<int>(std::lround(-a));
    else
        N = static_cast<int>(std::lround(-b));
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < N; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
    }
    return sum;
}

double gamma_ratio(double num1, double num2, double den1, double den2) {
    // Gamma(num1)Gamma(num2) / (Gamma(den1)Gamma(den2)) via lgamma with signs;
    // a denominator pole makes the ratio vanish
    if (is_nonpositive_integer(den1) || is_nonpositive_integer(den2)) return 0.0;
    int s1, s2, s3, s4;
    double lg = lgamma_fn(num1, &s1) + lgamma_fn(num2, &s2) - lgamma_fn(den1, &s3) -
                lgamma_fn(den2, &s4);
    return s1 * s2 * s3 * s4 * std::exp(lg);
}

double hyp2f1_impl(double a, double b, double c, double z, const AccuracyPolicy& pol, int depth);

// z -> 1-z connection, c-a-b not an integer
double connection_1mz(double a, double b, double c, double z, const AccuracyPolicy& pol,
                      int depth) {
    double s = c - a - b, w = 1.0 - z;
    double t1 = gamma_ratio(c, s, c - a, c - b) * hyp2f1_impl(a, b, a + b - c + 1.0, w, pol, depth + 1);
    double t2 = std::pow(w, s) * gamma_ratio(c, -s, a, b) *
                hyp2f1_impl(c - a, c - b, s + 1.0, w, pol, depth + 1);
    return t1 + t2;
}

// c = a+b+m with integer m >= 0: logarithmic connection (A&S 15.3.10 / 15.3.11)
double connection_log_pos(double a, double b, double c, int m, double z,
                          const AccuracyPolicy& pol) {
    double w = 1.0 - z, lw = std::log(w);
    double sum = 0.0;
    if (m > 0) {
        // finite part
        double term = 1.0;
        double fsum = 0.0;
        for (int k = 0; k < m; ++k) {
            if (k > 0) term *= (a + k - 1) * (b + k - 1) / (static_cast<double>(k) * (k - m)) * w;
            fsum += term;
        }
        sum += gamma_fn(m) * gamma_ratio(c, 1.0, a + m, b + m) * fsum;
    }
    // series part; (-w)^m = (-1)^m w^m
    double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    double pref = -sgn * std::pow(w, static_cast<double>(m)) * gamma_ratio(c, 1.0, a, b);
    double am = a + m, bm = b + m;
    double coeff = 1.0 / gamma_fn(m + 1.0);  // k=0: 1/(0! m!)
    double psi_acc = lw - digamma(1.0) - digamma(m + 1.0) + digamma(am) + digamma(bm);
    double psum = coeff * psi_acc;
    double pa = am, pb = bm;  // running (a+m+k), (b+m+k)
    double cterm = coeff;
    for (int k = 1; k < pol.max_terms; ++k) {
        cterm *= (pa) * (pb) / (static_cast<double>(k) * (k + m)) * w;
        pa = am + k;
        pb = bm + k;
        psi_acc += -1.0 / k - 1.0 / (k + m) + 1.0 / (am + k - 1.0) + 1.0 / (bm + k - 1.0);
        double add = cterm * psi_acc;
        psum += add;
        if (std::abs(add) < pol.rel_tol * std::max(1.0, std::abs(psum)) && k > 4) break;
        if (k == pol.max_terms - 1)
            throw ConvergenceError("gauss_2f1: logarithmic series did not converge");
    }
    return sum + pref * psum;
}

// c = a+b-m with integer m > 0 (A&S 15.3.12)
double connection_log_neg(double a, double b, double c, int m, double z,
                          const AccuracyPolicy& pol) {
    double w = 1.0 - z, lw = std::log(w);
    double sum = 0.0;
    {
        double term = 1.0, fsum = 0.0;
        for (int k = 0; k < m; ++k) {
            if (k > 0) term *= (a - m + k - 1) * (b - m + k - 1) / (static_cast<double>(k) * (k - m)) * w;
            fsum += term;
        }
        sum += gamma_fn(m) * gamma_ratio(c, 1.0, a, b) * std::pow(w, -static_cast<double>(m)) * fsum;
    }
    if (is_nonpositive_integer(a - m) || is_nonpositive_integer(b - m)) return sum;
    double pref = -((m % 2 == 0) ? 1.0 : -1.0) * gamma_ratio(c, 1.0, a - m, b - m);
    double coeff = 1.0 / gamma_fn(m + 1.0);
    double psi_acc = lw - digamma(1.0) - digamma(m + 1.0) + digamma(a) + digamma(b);
    double psum = coeff * psi_acc;
    double cterm = coeff;
    for (int k = 1; k < pol.max_terms; ++k) {
        cterm *= (a + k - 1.0) * (b + k - 1.0) / (static_cast<double>(k) * (k + m)) * w;
        psi_acc += -1.0 / k - 1.0 / (k + m) + 1.0 / (a + k - 1.0) + 1.0 / (b + k - 1.0);
        double add = cterm * psi_acc;
        psum += add;
        if (std::abs(add) < pol.rel_tol * std::max(1.0, std::abs(psum)) && k > 4) break;
        if (k == pol.max_terms - 1)
            throw ConvergenceError("gauss_2f1: logarithmic series did not converge");
    }
    return sum + pref * psum;
}

double hyp2f1_impl(double a, double b, double c, double z, const AccuracyPolicy& pol, int depth) {
    if (depth > 4) throw ConvergenceError("gauss_2f1: transformation recursion too deep");
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
        // terminating polynomial; must terminate before any pole of c
        if (is_nonpositive_integer(c)) {
            int nc = static_cast<int>(std::lround(-c));
            int na = is_nonpositive_integer(a) ? static_cast<int>(std::lround(-a))
                                               : std::numeric_limits<int>::max();
            int nb = is_nonpositive_integer(b) ? static_cast<int>(std::lround(-b))
                                               : std::numeric_limits<int>::max();
            if (std::min(na, nb) > nc)
                throw std::domain_error("gauss_2f1: c is a non-positive integer");
        }
        return terminating_2f1(a, b, c, z);
    }
    if (is_nonpositive_integer(c))
        throw std::domain_error("gauss_2f1: c is a non-positive integer");
    // degenerate binomial cases
    double cscale = std::max(1.0, std::abs(c));
    if (std::abs(c - b) < 1e-14 * cscale) return std::pow(1.0 - z, -a);
    if (std::abs(c - a) < 1e-14 * cscale) return std::pow(1.0 - z, -b);
    if (z == 1.0) {
        if (c - a - b <= 0.0)
            throw std::domain_error("gauss_2f1: divergent at z=1 (c-a-b <= 0)");
        return gamma_ratio(c, c - a - b, c - a, c - b);
    }
    if (z < 0.0) {
        // Pfaff z -> z/(z-1); pick the variant whose prefactor exponent is smaller
        if (std::abs(a) <= std::abs(b))
            return std::pow(1.0 - z, -a) * hyp2f1_impl(a, c - b, c, z / (z - 1.0), pol, depth + 1);
        return std::pow(1.0 - z, -b) * hyp2f1_impl(c - a, b, c, z / (z - 1.0), pol, depth + 1);
    }
    if (z <= 0.5) return series_2f1(a, b, c, z, pol);
    // 0.5 < z < 1
    double s = c - a - b;
    double sr = std::round(s);
    if (std::abs(s - sr) < 1e-7) {
        int m = static_cast<int>(sr);
        if (m >= 0) return connection_log_pos(a, b, c, m, z, pol);
        return connection_log_neg(a, b, c, -m, z, pol);
    }
    return connection_1mz(a, b, c, z, pol, depth);
}

}  // namespace

double gauss_2f1(const HypergeometricArgs& args, const AccuracyPolicy& policy) {
    if (policy.rel_tol <= 0.0 || policy.max_terms < 1)
        throw std::domain_error("gauss_2f1: invalid AccuracyPolicy");
    if (args.z > 1.0)
        throw std::domain_error("gauss_2f1: z > 1 not supported (real-axis evaluation)");
    return hyp2f1_impl(args.a, args.b, args.c, args.z, policy, 0);
}

}  // namespace rieszdisk
