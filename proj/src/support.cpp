#include "rieszdisk/support.hpp"

#include <cmath>

#include "rieszdisk/quadrature.hpp"
#include "rieszdisk/specfun.hpp"

namespace rieszdisk {

SupportDecision classify_support(const RadialFunction& Q) {
    const int N = 200;
    const double tol = 1e-9;
    std::vector<double> v(N + 1);
    double scale = 0.0;
    for (int i = 0; i <= N; ++i) {
        v[i] = Q.eval(static_cast<double>(i) / N);
        scale = std::max(scale, std::abs(v[i]));
    }
    double eps = tol * std::max(1.0, scale);
    bool convex = true, increasing = true, decreasing = true, constant = true;
    for (int i = 1; i < N; ++i)
        if (v[i + 1] - 2.0 * v[i] + v[i - 1] < -eps) convex = false;
    for (int i = 0; i < N; ++i) {
        double df = v[i + 1] - v[i];
        if (df < -eps) increasing = false;
        if (df > eps) decreasing = false;
        if (std::abs(df) > eps) constant = false;
    }
    SupportDecision out;
    if (!convex) {
        out.kind = SupportDecision::Kind::unknown;
        out.rationale = SupportDecision::Rationale::insufficient_hypotheses;
        return out;
    }
    if (constant) {
        out.kind = SupportDecision::Kind::full_disk;
        out.rationale = SupportDecision::Rationale::field_convex_increasing;
    } else if (increasing) {
        out.kind = SupportDecision::Kind::disk;
        out.rationale = SupportDecision::Rationale::field_convex_increasing;
    } else if (decreasing) {
        out.kind = SupportDecision::Kind::ring;  // b = 1
        out.rationale = SupportDecision::Rationale::field_convex_decreasing;
    } else {
        out.kind = SupportDecision::Kind::ring;
        out.rationale = SupportDecision::Rationale::field_convex;
    }
    return out;
}

double ms_functional(const RadialFunction& Q, const RieszParams& params, double R, int n) {
    if (!(R > 0.0 && R <= 1.0)) throw std::domain_error("ms_functional: need 0 < R <= 1");
    double d = params.d, lam = params.lambda;
    double c = M_PI * gamma_fn((d + 2.0 * lam - 1.0) / 2.0) /
               (params.sin_lpi() * gamma_fn(lam) * gamma_fn((d - 1.0) / 2.0));
    auto f = [&](double r) {
        return Q.eval(r) * std::pow(r, d - 2.0) * std::pow(R + r, lam - 1.0);
    };
    double I = integrate_singular(f, 0.0, R, 0.0, lam - 1.0, -1.0, -1.0, n);
    return c / std::pow(R, d + 2.0 * lam - 3.0) * (1.0 + 2.0 * params.sin_lpi() / M_PI * I);
}

double radius_equation_lhs(const RadialFunction& Q, const RieszParams& params, double R, int n) {
    Q.require_deriv1("critical_radius");
    double d = params.d, lam = params.lambda;
    auto f = [&](double r) {
        return Q.deriv1(r) * std::pow(r, d - 1.0) * std::pow(R + r, lam - 1.0);
    };
    return integrate_singular(f, 0.0, R, 0.0, lam - 1.0, -1.0, -1.0, n);
}

double critical_radius(const RadialFunction& Q, const RieszParams& params, double tol) {
    auto decision = classify_support(Q);
    if (decision.kind != SupportDecision::Kind::disk &&
        decision.kind != SupportDecision::Kind::full_disk)
        throw std::domain_error("critical_radius: field is not convex increasing");
    double target = M_PI * (params.d + 2.0 * params.lambda - 3.0) / (2.0 * params.sin_lpi());
    auto delta = [&](double R) { return target - radius_equation_lhs(Q, params, R); };
    if (delta(1.0) > 0.0) return 1.0;  // no interior solution: support is the whole disk
    double lo = 1e-8, hi = 1.0;
    if (delta(lo) < 0.0) return lo;  // degenerate; w(0+) = 0 so this should not occur
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (delta(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

CriticalHeight critical_height(const PointChargeField& field, const RieszParams& params) {
    field.validate();
    CriticalHeight out;
    out.h_minus = h_minus(field, params);

    // use the elementary Newtonian evaluator on its special case
    int m = (params.d - 4) / 2;
    bool newtonian = (params.d % 2 == 0) && params.d >= 8 &&
                     std::abs(params.lambda - 0.5) < 1e-14;
    auto p = [&](double h) {
        return newtonian ? newtonian_p(m, field.q, h) : p_of_h(field, params, h);
    };

    const int N = 240;
    double prev_h = 1e-3, prev_p = p(prev_h);
    for (int i = 1; i <= N; ++i) {
        double h = 1e-3 * std::pow(1e6, static_cast<double>(i) / N);
        double ph = p(h);
        if ((prev_p < 0.0) != (ph < 0.0)) {
            double lo = prev_h, hi = h;
            for (int it = 0; it < 100 && hi - lo > 1e-12 * hi; ++it) {
                double mid = 0.5 * (lo + hi);
                ((p(mid) < 0.0) == (prev_p < 0.0) ? lo : hi) = mid;
            }
            out.h_plus_candidates.push_back(0.5 * (lo + hi));
        }
        prev_h = h;
        prev_p = ph;
    }
    if (!out.h_plus_candidates.empty()) {
        out.root_found = true;
        out.h_plus = out.h_plus_candidates.back();
    }
    out.threshold = std::max(out.h_minus, out.h_plus);
    return out;
}

}  // namespace rieszdisk
