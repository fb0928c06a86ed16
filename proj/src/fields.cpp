#include "rieszdisk/fields.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rieszdisk/quadrature.hpp"
#include "rieszdisk/specfun.hpp"

namespace rieszdisk {

// ---------------------------------------------------------------------------
// field objects

TabulatedField::TabulatedField(std::vector<double> r, std::vector<double> q) {
    spline_ = std::make_shared<CubicSpline>(std::move(r), std::move(q));
}

TabulatedField TabulatedField::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("table field: cannot open " + path);
    std::vector<double> r, q;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        unsigned char c0 = static_cast<unsigned char>(line[0]);
        if (!(std::isdigit(c0) || c0 == '-' || c0 == '+' || c0 == '.')) continue;  // header
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double rv, qv;
        if (ls >> rv >> qv) {
            r.push_back(rv);
            q.push_back(qv);
        }
    }
    if (r.size() < 3) throw std::runtime_error("table field: need at least 3 rows");
    return TabulatedField(std::move(r), std::move(q));
}

RadialFunction TabulatedField::to_radial() const {
    auto s = spline_;
    return RadialFunction{[s](double r) { return (*s)(r); },
                          [s](double r) { return s->deriv(r); },
                          [s](double r) { return s->deriv2(r); }, s->x_front(), s->x_back()};
}

RadialFunction zero_field() {
    return RadialFunction{[](double) { return 0.0; }, [](double) { return 0.0; },
                          [](double) { return 0.0; }};
}

RadialFunction to_radial(const MonomialField& f) {
    f.validate();
    double q = f.q, a = f.alpha;
    return RadialFunction{
        [q, a](double r) { return q * std::pow(r, a); },
        [q, a](double r) { return q * a * std::pow(r, a - 1.0); },
        [q, a](double r) { return a == 1.0 ? 0.0 : q * a * (a - 1.0) * std::pow(r, a - 2.0); }};
}

RadialFunction to_radial(const PointChargeField& f, const RieszParams& params) {
    f.validate();
    double q = f.q, h = f.h, s = params.s;
    return RadialFunction{
        [q, h, s](double r) { return q * std::pow(r * r + h * h, -s / 2.0); },
        [q, h, s](double r) { return -q * s * r * std::pow(r * r + h * h, -s / 2.0 - 1.0); },
        [q, h, s](double r) {
            double u = r * r + h * h;
            return q * s * std::pow(u, -s / 2.0 - 2.0) * ((s + 1.0) * r * r - h * h);
        }};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    FieldSpec spec;
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    if (head == "zero") {
        spec.kind = Kind::zero;
        return spec;
    }
    if (head == "table") {
        if (colon == std::string::npos)
            throw std::domain_error("field spec: table requires a path");
        spec.kind = Kind::table;
        spec.table = std::make_shared<TabulatedField>(
            TabulatedField::from_csv(text.substr(colon + 1)));
        return spec;
    }
    if (head != "monomial" && head != "point")
        throw std::domain_error("field spec: unknown field '" + head + "'");
    if (colon == std::string::npos)
        throw std::domain_error("field spec: missing parameters in '" + text + "'");
    double q = NAN, alpha = NAN, h = NAN;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("field spec: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        double val = std::stod(item.substr(eq + 1));
        if (key == "q") q = val;
        else if (key == "alpha") alpha = val;
        else if (key == "h") h = val;
        else throw std::domain_error("field spec: unknown key '" + key + "'");
    }
    if (head == "monomial") {
        if (std::isnan(q) || std::isnan(alpha))
            throw std::domain_error("field spec: monomial needs q and alpha");
        spec.kind = Kind::monomial;
        spec.monomial = MonomialField{q, alpha};
        spec.monomial.validate();
    } else {
        if (std::isnan(q) || std::isnan(h))
            throw std::domain_error("field spec: point needs q and h");
        spec.kind = Kind::point_charge;
        spec.point = PointChargeField{q, h};
        spec.point.validate();
    }
    return spec;
}

RadialFunction FieldSpec::to_radial(const RieszParams& params) const {
    switch (kind) {
        case Kind::zero: return zero_field();
        case Kind::monomial: return rieszdisk::to_radial(monomial);
        case Kind::point_charge: return rieszdisk::to_radial(point, params);
        case Kind::table: return table->to_radial();
    }
    throw std::logic_error("FieldSpec: bad kind");
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::zero: os << "zero"; break;
        case Kind::monomial:
            os << "monomial:q=" << monomial.q << ",alpha=" << monomial.alpha;
            break;
        case Kind::point_charge: os << "point:q=" << point.q << ",h=" << point.h; break;
        case Kind::table: os << "table"; break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// monomial closed forms

double monomial_support_radius(const MonomialField& field, const RieszParams& params) {
    field.validate();
    double d = params.d, lam = params.lambda, q = field.q, a = field.alpha;
    double num = (d + 2.0 * lam - 3.0) * M_PI * gamma_fn((d + a + 2.0 * lam - 1.0) / 2.0);
    double den = q * a * params.sin_lpi() * gamma_fn(lam) * gamma_fn((d + a - 1.0) / 2.0);
    double R = std::pow(num / den, 1.0 / (d + a + 2.0 * lam - 3.0));
    return std::min(R, 1.0);
}

double monomial_F(const MonomialField& field, const RieszParams& params, double R, double r) {
    field.validate();
    double d = params.d, lam = params.lambda, q = field.q, a = field.alpha;
    double w = 1.0 - (r / R) * (r / R);
    double pref = q * params.sin_lpi() * gamma_fn((d + a - 1.0) / 2.0) *
                  gamma_fn((d + 2.0 * lam - 3.0) / 2.0) /
                  (std::pow(M_PI, (d + 1.0) / 2.0) * gamma_fn((d + a + 2.0 * lam - 3.0) / 2.0));
    double brace = -gauss_2f1(-a / 2.0, 1.0, lam + 1.0, w) +
                   a / (2.0 * lam * (lam + 1.0)) * w * gauss_2f1(1.0 - a / 2.0, 2.0, lam + 2.0, w);
    return pref * std::pow(R, a) * std::pow(R * R - r * r, lam - 1.0) * brace;
}

double monomial_CQ(const MonomialField& field, const RieszParams& params, double R) {
    field.validate();
    double d = params.d, lam = params.lambda, q = field.q, a = field.alpha;
    double t1 = std::pow(R, -(d + 2.0 * lam - 3.0));
    double t2 = q * params.sin_lpi() * gamma_fn((d + a - 1.0) / 2.0) * gamma_fn(lam) /
                (M_PI * gamma_fn((d + a + 2.0 * lam - 1.0) / 2.0)) * std::pow(R, a);
    return gamma_fn((d + 2.0 * lam - 1.0) / 2.0) /
           (std::pow(M_PI, (d - 1.0) / 2.0) * gamma_fn(lam)) * (t1 + t2);
}

double monomial_density(const MonomialField& field, const RieszParams& params, double R_star,
                        double r) {
    if (r < 0.0 || r >= R_star)
        throw std::domain_error("monomial_density: need 0 <= r < R_star");
    return monomial_CQ(field, params, R_star) * std::pow(R_star * R_star - r * r, params.lambda - 1.0) +
           monomial_F(field, params, R_star, r);
}

// ---------------------------------------------------------------------------
// point charge closed forms

double point_charge_F(const PointChargeField& field, const RieszParams& params, double r) {
    if (r < 0.0 || r >= 1.0) throw std::domain_error("point_charge_F: need 0 <= r < 1");
    field.validate();
    double d = params.d, lam = params.lambda, q = field.q, h = field.h;
    double pref = -q * params.sin_lpi() * gamma_fn((d - 1.0) / 2.0) /
                  std::pow(M_PI, (d + 1.0) / 2.0) * std::pow(h, 2.0 * (1.0 - lam));
    double t1 = 0.5 * (d - 2.0 * lam - 1.0) *
                std::pow(h * h + r * r, -(d - 2.0 * lam + 1.0) / 2.0) *
                incomplete_beta((1.0 - r * r) / (1.0 + h * h), lam, (d - 2.0 * lam - 1.0) / 2.0);
    double t2 = std::pow(1.0 - r * r, lam - 1.0) /
                (std::pow(1.0 + h * h, (d - 3.0) / 2.0) * (h * h + r * r));
    return pref * (t1 + t2);
}

double point_charge_c(const RieszParams& params, double h) {
    double d = params.d, lam = params.lambda;
    double xi = 1.0 / (1.0 + h * h);
    auto integrand = [&](double t) {
        return std::pow(t, d - 2.0) * std::pow(h * h + t * t, -(d - 2.0 * lam + 1.0) / 2.0) *
               incomplete_beta((1.0 - t * t) * xi, lam, (d - 2.0 * lam - 1.0) / 2.0);
    };
    double I = adaptive_gl(integrand, 0.0, 1.0, 1e-12);
    double t2 = gamma_fn(lam) * gamma_fn((d - 1.0) / 2.0) /
                (2.0 * gamma_fn((d - 1.0) / 2.0 + lam)) * std::pow(1.0 + h * h, -(d - 1.0) / 2.0) *
                gauss_2f1(1.0, lam, (d + 2.0 * lam - 1.0) / 2.0, xi);
    double pref = params.sin_lpi() * gamma_fn((d - 1.0) / 2.0) / std::pow(M_PI, (d + 1.0) / 2.0) *
                  std::pow(h, 2.0 * (1.0 - lam));
    return pref * (0.5 * (d - 2.0 * lam - 1.0) * I + t2);
}

double point_charge_CQ(const PointChargeField& field, const RieszParams& params) {
    field.validate();
    double d = params.d, lam = params.lambda;
    return 2.0 * gamma_fn((d - 1.0) / 2.0 + lam) / (gamma_fn(lam) * gamma_fn((d - 1.0) / 2.0)) *
           (gamma_fn((d - 1.0) / 2.0) / (2.0 * std::pow(M_PI, (d - 1.0) / 2.0)) +
            field.q * point_charge_c(params, field.h));
}

double point_charge_density(const PointChargeField& field, const RieszParams& params, double r) {
    return point_charge_CQ(field, params) * std::pow(1.0 - r * r, params.lambda - 1.0) +
           point_charge_F(field, params, r);
}

double h_minus(const PointChargeField& field, const RieszParams& params) {
    field.validate();
    double d = params.d, lam = params.lambda, q = field.q;
    double num = q * std::pow((1.0 - lam) * (d - 2.0 * lam + 1.0) + 1.0, 2.0) * params.sin_lpi() *
                 beta_fn(lam, (d - 1.0) / 2.0);
    double den = 8.0 * M_PI * (d + 2.0 * lam - 1.0) * (1.0 - lam);
    return std::pow(num / den, 1.0 / (d + 2.0 * lam - 3.0));
}

double p_of_h(const PointChargeField& field, const RieszParams& params, double h) {
    if (!(h > 0.0)) throw std::domain_error("p_of_h: h must be positive");
    PointChargeField at_h{field.q, h};
    return point_charge_CQ(at_h, params) + point_charge_F(at_h, params, 0.0);
}

// ---------------------------------------------------------------------------
// d = 3, lambda = 1/2 Coulomb case.  The corollary's printed C_Q-term carries a
// spurious h/sqrt(1+h^2) factor (it fails the unit-mass check); the value used
// here, c = q atan(1/h)/pi^2, restores mass one and matches the general theorem.

double coulomb3d_p(double q, double h) {
    if (!(h > 0.0) || !(q > 0.0)) throw std::domain_error("coulomb3d_p: need q, h > 0");
    return 0.5 / M_PI * (1.0 + 2.0 * q * std::atan(1.0 / h) / M_PI) - q / (M_PI * M_PI * h) -
           q * std::atan(1.0 / h) / (M_PI * M_PI * h * h);
}

double coulomb3d_density(double q, double h, double r) {
    if (r < 0.0 || r >= 1.0) throw std::domain_error("coulomb3d_density: need 0 <= r < 1");
    double c1 = 0.5 / M_PI * (1.0 + 2.0 * q * std::atan(1.0 / h) / M_PI);
    double w = std::sqrt(1.0 - r * r);
    return c1 / w - q * h / (M_PI * M_PI * (h * h + r * r) * w) -
           q * h / (M_PI * M_PI) * std::pow(h * h + r * r, -1.5) *
               std::atan(std::sqrt((1.0 - r * r) / (h * h + r * r)));
}

// ---------------------------------------------------------------------------
// Newtonian even dimensions: d = 2m+4, s = d-2, i.e. lambda = 1/2.
// The incomplete Beta with half-integer parameters reduces to the finite sum
//   B(w; 1/2, m+1) = 2 sum_{n<=m} (-m)_n/((2n+1) n!) w^{n+1/2};
// the remaining hypergeometric pieces reduce through the quadratic
// transformation to terminating sums (the corollary's printed double sum does
// not reproduce the general theorem and is replaced by this reduction).

namespace {

void check_newtonian_m(int m) {
    if (m < 2) throw std::domain_error("newtonian: m must be >= 2");
}

double fact(int n) { return gamma_fn(n + 1.0); }

// sum_{n<=m} (-m)_n / ((2n+1) n!) x^n
double beta_half_sum(int m, double x) {
    double acc = 0.0;
    for (int n = 0; n <= m; ++n)
        acc += pochhammer(-m, n) / ((2.0 * n + 1.0) * fact(n)) * std::pow(x, n);
    return acc;
}

// 2F1(m+2, m+3/2; n+m+3; -1/h^2) as a terminating sum (quadratic transformation
// z -> (1-sqrt(1-z))/(1+sqrt(1-z)) followed by an Euler transformation).
double T_algebraic(int m, int n, double h) {
    double sq = std::sqrt(1.0 + h * h);
    double v = (h - sq) / (h + sq);
    double pref = std::pow((h + sq) / (2.0 * h), -(2.0 * m + 3.0)) *
                  std::pow(1.0 - v, 2.0 * n - 2.0 * m - 1.0);
    double S = 0.0;
    for (int k = 0; k <= m - n; ++k)
        S += pochhammer(n - m, k) * pochhammer(2.0 * n + 2.0, k) /
             (pochhammer(n + m + 3.0, k) * fact(k)) * std::pow(v, k);
    return pref * S;
}

}  // namespace

double newtonian_h_minus(int m, double q) {
    check_newtonian_m(m);
    return std::pow(q * (m + 2.0) * gamma_fn(m + 1.5) / (8.0 * std::sqrt(M_PI) * fact(m + 1)),
                    1.0 / (2.0 * (m + 1.0)));
}

double newtonian_c(int m, double h) {
    check_newtonian_m(m);
    double sq = std::sqrt(1.0 + h * h);
    double xi = 1.0 / (1.0 + h * h);
    double u = (sq - h) / (sq + h);
    double I = 0.0;
    for (int n = 0; n <= m; ++n) {
        double Jn = 0.5 * std::pow(h, -2.0 * (m + 2.0)) * beta_fn(m + 1.5, n + 1.5) *
                    T_algebraic(m, n, h);
        I += 2.0 * pochhammer(-m, n) / ((2.0 * n + 1.0) * fact(n)) * std::pow(xi, n + 0.5) * Jn;
    }
    double S2 = 0.0;
    for (int n = 0; n <= m; ++n)
        S2 += pochhammer(-m, n) / fact(m + n + 1) * std::pow(u, n);
    double term2 = std::sqrt(M_PI) * gamma_fn(m + 1.5) * std::pow(1.0 + h * h, -(m + 1.0)) /
                   (h + sq) * S2;
    return gamma_fn(m + 1.5) / std::pow(M_PI, m + 2.5) * h * ((m + 1.0) * I + term2);
}

double newtonian_CQ(int m, double q, double h) {
    check_newtonian_m(m);
    return 2.0 * fact(m + 1) / (std::sqrt(M_PI) * gamma_fn(m + 1.5)) *
           (gamma_fn(m + 1.5) / (2.0 * std::pow(M_PI, m + 1.5)) + q * newtonian_c(m, h));
}

double newtonian_F(int m, double q, double h, double r) {
    check_newtonian_m(m);
    double w = (1.0 - r * r) / (1.0 + h * h);
    double S = beta_half_sum(m, w) * std::sqrt(w);
    return -q * h * gamma_fn(m + 1.5) / std::pow(M_PI, m + 2.5) *
           (2.0 * (m + 1.0) * std::pow(h * h + r * r, -(m + 2.0)) * S +
            1.0 / (std::sqrt(1.0 - r * r) * (h * h + r * r) * std::pow(1.0 + h * h, m + 0.5)));
}

double newtonian_p(int m, double q, double h) {
    return newtonian_CQ(m, q, h) + newtonian_F(m, q, h, 0.0);
}

double newtonian_density(int m, double q, double h, double r) {
    return newtonian_CQ(m, q, h) / std::sqrt(1.0 - r * r) + newtonian_F(m, q, h, r);
}

}  // namespace rieszdisk
