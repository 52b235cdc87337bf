#include "nanoshell/elasticity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nanoshell {

ElasticModuli::ElasticModuli(double E1_, double E2_, double G_, double nu12_, double nu21_)
    : E1(E1_), E2(E2_), G(G_), nu12(nu12_), nu21(nu21_) {
    if (!(E1 > 0.0) || !(E2 > 0.0) || !(G > 0.0))
        throw std::invalid_argument("elastic moduli: E1, E2, G must be positive");
    if (!(delta() > 0.0))
        throw std::invalid_argument(
            "elastic moduli: 1 - nu12*nu21 must be positive for a stable sheet");
    // Reciprocal relation, 2% slack for rounded experimental inputs.
    const double lhs = E1 * nu21, rhs = E2 * nu12;
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale > 0.0 && std::abs(lhs - rhs) > 0.02 * scale)
        throw std::invalid_argument(
            "elastic moduli: E1*nu21 = " + std::to_string(lhs) +
            " and E2*nu12 = " + std::to_string(rhs) +
            " violate the reciprocal relation beyond 2%");
}

ElasticModuli ElasticModuli::isotropic(double E, double nu) {
    return ElasticModuli(E, E, E / (2.0 * (1.0 + nu)), nu, nu);
}

Eigen::Matrix<double, 6, 6> StiffnessTensor::mandel() const {
    // Slot order: 11, 22, 33, 23, 13, 12.
    static constexpr int idx[6][2] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};
    const double s2 = std::sqrt(2.0);
    Eigen::Matrix<double, 6, 6> m;
    for (int r = 0; r < 6; ++r) {
        for (int s = 0; s < 6; ++s) {
            const double f = (r >= 3 ? s2 : 1.0) * (s >= 3 ? s2 : 1.0);
            m(r, s) = f * (*this)(idx[r][0], idx[r][1], idx[s][0], idx[s][1]);
        }
    }
    return m;
}

Eigen::Matrix3d StiffnessTensor::apply(const Eigen::Matrix3d& strain) const {
    Eigen::Matrix3d s = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int h = 0; h < 3; ++h)
                for (int k = 0; k < 3; ++k) acc += (*this)(i, j, h, k) * strain(h, k);
            s(i, j) = acc;
        }
    return s;
}

StiffnessTensor orthotropic_stiffness(const ElasticModuli& moduli) {
    StiffnessTensor c;
    const double d = moduli.delta();
    c(0, 0, 0, 0) = moduli.E1 / d;
    c(1, 1, 1, 1) = moduli.E2 / d;
    c(0, 0, 1, 1) = moduli.eta() / d;
    c(1, 1, 0, 0) = moduli.eta() / d;
    c(0, 1, 0, 1) = moduli.G;
    c(0, 1, 1, 0) = moduli.G;
    c(1, 0, 0, 1) = moduli.G;
    c(1, 0, 1, 0) = moduli.G;
    return c;
}

Eigen::Matrix3d rotation_about_axis(double psi) {
    Eigen::Matrix3d q;
    const double cs = std::cos(psi), sn = std::sin(psi);
    q << cs, -sn, 0.0, sn, cs, 0.0, 0.0, 0.0, 1.0;
    return q;
}

StiffnessTensor conjugate(const StiffnessTensor& c, double psi) {
    const Eigen::Matrix3d q = rotation_about_axis(psi);
    // Contract one leg at a time; note the transpose placement matches
    // Ct_ijhk = Q_li Q_mj Q_nh Q_pk C_lmnp.
    StiffnessTensor t1, t2, t3, t4;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int h = 0; h < 3; ++h)
                for (int k = 0; k < 3; ++k) {
                    double acc = 0.0;
                    for (int l = 0; l < 3; ++l) acc += q(l, i) * c(l, j, h, k);
                    t1(i, j, h, k) = acc;
                }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int h = 0; h < 3; ++h)
                for (int k = 0; k < 3; ++k) {
                    double acc = 0.0;
                    for (int m = 0; m < 3; ++m) acc += q(m, j) * t1(i, m, h, k);
                    t2(i, j, h, k) = acc;
                }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int h = 0; h < 3; ++h)
                for (int k = 0; k < 3; ++k) {
                    double acc = 0.0;
                    for (int n = 0; n < 3; ++n) acc += q(n, h) * t2(i, j, n, k);
                    t3(i, j, h, k) = acc;
                }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int h = 0; h < 3; ++h)
                for (int k = 0; k < 3; ++k) {
                    double acc = 0.0;
                    for (int p = 0; p < 3; ++p) acc += q(p, k) * t3(i, j, h, p);
                    t4(i, j, h, k) = acc;
                }
    return t4;
}

PlaneCoefficients plane_coefficients(const StiffnessTensor& c) {
    PlaneCoefficients pc;
    pc.a11 = c(0, 0, 0, 0);
    pc.a22 = c(1, 1, 0, 0);
    pc.a12 = c(0, 1, 0, 0);
    pc.b11 = c(0, 0, 1, 1);
    pc.b22 = c(1, 1, 1, 1);
    pc.b12 = c(0, 1, 1, 1);
    pc.c11 = 2.0 * c(0, 0, 0, 1);
    pc.c22 = 2.0 * c(1, 1, 0, 1);
    pc.c12 = 2.0 * c(0, 1, 0, 1);
    return pc;
}

double strain_energy_density(const StiffnessTensor& c, const Eigen::Matrix3d& strain) {
    const Eigen::Matrix3d s = c.apply(strain);
    return 0.5 * s.cwiseProduct(strain).sum();
}

} // namespace nanoshell
