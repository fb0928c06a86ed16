#pragma once

#include <cmath>
#include <stdexcept>

namespace rieszdisk {

/// Riesz kernel parameters on the hyperdisk in R^d.
/// The admissible window d-3 < s < d-1 is parametrized by s = d-3+2*lambda
/// with lambda in (0,1); most formulas are cleaner in lambda.
struct RieszParams {
    int d;          ///< ambient dimension, >= 3
    double lambda;  ///< in (0,1)
    double s;       ///< Riesz exponent, = d-3+2*lambda

    static RieszParams from_lambda(int d, double lambda) {
        if (d < 3) throw std::domain_error("RieszParams: d must be >= 3");
        if (!(lambda > 0.0 && lambda < 1.0))
            throw std::domain_error("RieszParams: lambda out of (0,1)");
        return RieszParams{d, lambda, d - 3 + 2.0 * lambda};
    }

    static RieszParams from_s(int d, double s) {
        return from_lambda(d, (s - d + 3.0) / 2.0);
    }

    double sin_lpi() const { return std::sin(lambda * M_PI); }
};

}  // namespace rieszdisk
