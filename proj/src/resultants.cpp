#include "nanoshell/resultants.hpp"

#include <cmath>
#include <stdexcept>

namespace nanoshell {

namespace {

double poly_eval(const std::vector<double>& c, double x, int order) {
    if (order < 0) throw std::invalid_argument("polynomial field: order must be >= 0");
    double acc = 0.0;
    for (int k = static_cast<int>(c.size()) - 1; k >= order; --k) {
        double f = 1.0;
        for (int j = 0; j < order; ++j) f *= static_cast<double>(k - j);
        acc = acc * x + f * c[static_cast<std::size_t>(k)];
    }
    return acc;
}

} // namespace

PolynomialField::PolynomialField(std::vector<double> w_coeffs, std::vector<double> a1_coeffs,
                                 std::vector<double> a2_coeffs)
    : cw_(std::move(w_coeffs)), ca1_(std::move(a1_coeffs)), ca2_(std::move(a2_coeffs)) {}

double PolynomialField::w(double x1, int order) const { return poly_eval(cw_, x1, order); }
double PolynomialField::a1(double x1, int order) const { return poly_eval(ca1_, x1, order); }
double PolynomialField::a2(double x1, int order) const { return poly_eval(ca2_, x1, order); }

MembraneStrain strain_components(const AxisymmetricField& f, double x1, double zeta,
                                 const ShellGeometry& g) {
    if (std::abs(zeta) >= g.rho0)
        throw std::invalid_argument("strain components: |zeta| must stay below rho0");
    const double stretch = 1.0 + zeta / g.rho0;
    MembraneStrain e;
    e.e11 = f.a1(x1, 1) - zeta * f.w(x1, 2);
    e.e22 = f.w(x1, 0) / (g.rho0 * stretch);
    e.e12 = 0.5 * stretch * f.a2(x1, 1);
    return e;
}

double log_thickness_factor(double h) {
    if (!(h > 0.0 && h < 1.0))
        throw std::invalid_argument("log thickness factor: h must lie in (0,1)");
    return (std::log1p(h) - std::log1p(-h)) / (2.0 * h);
}

ResultantSample resultants(const PlaneCoefficients& pc, const ShellGeometry& g,
                           const KinematicSample& kin) {
    const double e = g.eps, r = g.rho0, h = g.thickness_ratio();
    const double lam = log_thickness_factor(h);
    const double e3r = 2.0 / 3.0 * e * e * e / r;  // moment scale of curvature terms
    const double shear_w = e * (1.0 + h * h / 3.0); // weighted shear thickness

    ResultantSample s;
    s.F11 = 2.0 * e * pc.a11 * kin.a1p + shear_w * pc.c11 * kin.a2p +
            2.0 * e / r * pc.b11 * kin.w - e3r * pc.a11 * kin.wpp;
    s.F21 = 2.0 * e * pc.a12 * kin.a1p + shear_w * pc.c12 * kin.a2p +
            2.0 * e / r * pc.b12 * kin.w - e3r * pc.a12 * kin.wpp;
    s.F22 = 2.0 * e * pc.a22 * kin.a1p + e * pc.c22 * kin.a2p +
            2.0 * e / r * lam * pc.b22 * kin.w;
    s.F12 = 2.0 * e * pc.a12 * kin.a1p + e * pc.c12 * kin.a2p +
            2.0 * e / r * lam * pc.b12 * kin.w;

    s.M11 = e3r * pc.a11 * kin.a1p + e3r * pc.c11 * kin.a2p -
            2.0 / 3.0 * e * e * e * pc.a11 * kin.wpp;
    s.M21 = e3r * pc.a12 * kin.a1p + e3r * pc.c12 * kin.a2p -
            2.0 / 3.0 * e * e * e * pc.a12 * kin.wpp;
    s.M12 = e * e * e / (3.0 * r) * pc.c12 * kin.a2p +
            2.0 * e * (1.0 - lam) * pc.b12 * kin.w -
            2.0 / 3.0 * e * e * e * pc.a12 * kin.wpp;
    s.M22 = e * e * e / (3.0 * r) * pc.c22 * kin.a2p +
            2.0 * e * (1.0 - lam) * pc.b22 * kin.w -
            2.0 / 3.0 * e * e * e * pc.a22 * kin.wpp;
    return s;
}

ResultantField::ResultantField(const AxisymmetricField& f, const PlaneCoefficients& pc,
                               const ShellGeometry& g)
    : f_(f), pc_(pc), g_(g) {}

ResultantSample ResultantField::at(double x1) const {
    const KinematicSample kin{f_.a1(x1, 1), f_.a2(x1, 1), f_.w(x1, 0), f_.w(x1, 2)};
    return resultants(pc_, g_, kin);
}

namespace {

// 5-point central first and second derivatives of a resultant component.
template <class Get>
double diff1(const ResultantField& rf, Get get, double x, double h) {
    return (get(rf.at(x - 2 * h)) - 8.0 * get(rf.at(x - h)) + 8.0 * get(rf.at(x + h)) -
            get(rf.at(x + 2 * h))) /
           (12.0 * h);
}

template <class Get>
double diff2(const ResultantField& rf, Get get, double x, double h) {
    return (-get(rf.at(x - 2 * h)) + 16.0 * get(rf.at(x - h)) - 30.0 * get(rf.at(x)) +
            16.0 * get(rf.at(x + h)) - get(rf.at(x + 2 * h))) /
           (12.0 * h * h);
}

} // namespace

double ResultantField::d_F11(double x1) const {
    const double h = g_.half_length * 1e-4;
    return diff1(*this, [](const ResultantSample& s) { return s.F11; }, x1, h);
}

double ResultantField::d_shear(double x1) const {
    const double h = g_.half_length * 1e-4;
    const double r = g_.rho0;
    return diff1(*this, [r](const ResultantSample& s) { return s.F21 + s.M21 / r; }, x1, h);
}

double ResultantField::dd_M11(double x1) const {
    const double h = g_.half_length * 1e-4;
    return diff2(*this, [](const ResultantSample& s) { return s.M11; }, x1, h);
}

double ResultantField::d_M11(double x1) const {
    const double h = g_.half_length * 1e-4;
    return diff1(*this, [](const ResultantSample& s) { return s.M11; }, x1, h);
}

EquilibriumResidual equilibrium_residual(const ResultantField& rf,
                                         const EquilibriumLoads& loads, double x1) {
    const double r = rf.geometry().rho0;
    EquilibriumResidual res;
    res.r1 = rf.d_F11(x1) + loads.qo1;
    res.r2 = rf.d_shear(x1) + loads.qo2 + loads.ro2 / r;
    res.r3 = rf.dd_M11(x1) - rf.at(x1).F22 / r + loads.qo3;
    return res;
}

std::array<double, 4> boundary_residual(const ResultantField& rf, double t) {
    const double l = rf.geometry().half_length;
    const double r = rf.geometry().rho0;
    const ResultantSample s = rf.at(l);
    return {s.F11, s.M11, rf.d_M11(l), s.F21 + s.M21 / r - t};
}

} // namespace nanoshell
