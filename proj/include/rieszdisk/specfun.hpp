#pragma once

#include <stdexcept>

namespace rieszdisk {

/// Termination policy for series evaluations.
struct AccuracyPolicy {
    double rel_tol = 1e-13;
    int max_terms = 10000;
};

/// Thrown when a series fails to converge within AccuracyPolicy::max_terms.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arguments of the Gauss hypergeometric function, real axis only (z <= 1).
struct HypergeometricArgs {
    double a, b, c, z;
};

double gamma_fn(double x);
/// log|Gamma(x)|; *sign receives the sign of Gamma(x).
double lgamma_fn(double x, int* sign = nullptr);
double digamma(double x);
/// (a)_n = a(a+1)...(a+n-1), n >= 0.
double pochhammer(double a, int n);
double beta_fn(double a, double b);
/// Lower incomplete Beta B(z;a,b) = int_0^z t^{a-1}(1-t)^{b-1} dt (not regularized).
double incomplete_beta(double z, double a, double b);

double gauss_2f1(const HypergeometricArgs& args, const AccuracyPolicy& policy = {});
inline double gauss_2f1(double a, double b, double c, double z,
                        const AccuracyPolicy& policy = {}) {
    return gauss_2f1(HypergeometricArgs{a, b, c, z}, policy);
}

}  // namespace rieszdisk
