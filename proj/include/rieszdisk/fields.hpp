#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rieszdisk/density.hpp"
#include "rieszdisk/params.hpp"
#include "rieszdisk/radial.hpp"

namespace rieszdisk {

/// Q(r) = q r^alpha.
struct MonomialField {
    double q;      // > 0
    double alpha;  // >= 1
    void validate() const {
        if (!(q > 0.0)) throw std::domain_error("monomial field: q must be positive");
        if (!(alpha >= 1.0)) throw std::domain_error("monomial field: alpha must be >= 1");
    }
};

/// Field of a positive point charge q at height h on the polar axis:
/// Q(r) = q / (r^2+h^2)^{s/2}.
struct PointChargeField {
    double q;  // > 0
    double h;  // > 0
    void validate() const {
        if (!(q > 0.0)) throw std::domain_error("point charge field: q must be positive");
        if (!(h > 0.0)) throw std::domain_error("point charge field: h must be positive");
    }
};

/// Field tabulated as (r, Q) samples; C^2-completed by a natural cubic spline.
class TabulatedField {
public:
    TabulatedField(std::vector<double> r, std::vector<double> q);
    static TabulatedField from_csv(const std::string& path);
    RadialFunction to_radial() const;

private:
    std::shared_ptr<CubicSpline> spline_;
};

RadialFunction zero_field();
RadialFunction to_radial(const MonomialField& f);
RadialFunction to_radial(const PointChargeField& f, const RieszParams& params);

/// CLI field grammar: zero | monomial:q=<f>,alpha=<f> | point:q=<f>,h=<f> | table:<path.csv>
struct FieldSpec {
    enum class Kind { zero, monomial, point_charge, table };
    Kind kind = Kind::zero;
    MonomialField monomial{1.0, 2.0};
    PointChargeField point{1.0, 1.0};
    std::shared_ptr<TabulatedField> table;

    static FieldSpec parse(const std::string& text);
    RadialFunction to_radial(const RieszParams& params) const;
    std::string describe() const;
};

// ---- monomial closed forms -------------------------------------------------

/// Support radius min(R_*, 1) with
/// R_* = ((d+2l-3) pi G((d+a+2l-1)/2) / (q a sin(l pi) G(l) G((d+a-1)/2)))^{1/(d+a+2l-3)}.
double monomial_support_radius(const MonomialField& field, const RieszParams& params);
double monomial_F(const MonomialField& field, const RieszParams& params, double R, double r);
double monomial_CQ(const MonomialField& field, const RieszParams& params, double R);
double monomial_density(const MonomialField& field, const RieszParams& params, double R_star,
                        double r);

// ---- point charge closed forms (support = unit disk) -----------------------

double point_charge_F(const PointChargeField& field, const RieszParams& params, double r);
/// c_{d,lambda}(h): the incomplete-Beta integral plus hypergeometric term.
double point_charge_c(const RieszParams& params, double h);
double point_charge_CQ(const PointChargeField& field, const RieszParams& params);
double point_charge_density(const PointChargeField& field, const RieszParams& params, double r);

/// h_-: sufficient height bound for the monotonicity argument.
double h_minus(const PointChargeField& field, const RieszParams& params);
/// p(h) = f(0) of the candidate full-disk density at height h.
double p_of_h(const PointChargeField& field, const RieszParams& params, double h);

// ---- d = 3, lambda = 1/2 Coulomb case (elementary functions only) ----------

double coulomb3d_p(double q, double h);
double coulomb3d_density(double q, double h, double r);

// ---- Newtonian even dimensions d = 2m+4, s = d-2 (lambda = 1/2) ------------

double newtonian_h_minus(int m, double q);
double newtonian_c(int m, double h);
double newtonian_CQ(int m, double q, double h);
double newtonian_F(int m, double q, double h, double r);
double newtonian_p(int m, double q, double h);
double newtonian_density(int m, double q, double h, double r);

}  // namespace rieszdisk
