#pragma once

#include <Eigen/Dense>

#include <array>

namespace nanoshell {

// Surface moduli of the orthotropic sheet, GPa (interpreted per unit
// thickness 2*eps elsewhere). nu12/nu21 obey the reciprocal relation
// E1 nu21 = E2 nu12 up to input tolerance.
struct ElasticModuli {
    double E1;
    double E2;
    double G;
    double nu12;
    double nu21;

    ElasticModuli(double E1_, double E2_, double G_, double nu12_, double nu21_);

    double delta() const { return 1.0 - nu12 * nu21; }
    double eta() const { return E1 * nu21; } // coupling modulus, = E2 nu12

    static ElasticModuli isotropic(double E, double nu);
};

// Fourth-order stiffness with minor and major symmetries enforced by
// construction, indices 0..2. The e3 direction carries no stiffness.
class StiffnessTensor {
public:
    double operator()(int i, int j, int h, int k) const {
        return c_[((i * 3 + j) * 3 + h) * 3 + k];
    }
    double& operator()(int i, int j, int h, int k) {
        return c_[((i * 3 + j) * 3 + h) * 3 + k];
    }

    // Orthonormal 6x6 matrix representation (sqrt(2) scaling on mixed
    // slots), so rotations act as similarity transforms on it.
    Eigen::Matrix<double, 6, 6> mandel() const;

    // S = C[E] for a symmetric 3x3 strain.
    Eigen::Matrix3d apply(const Eigen::Matrix3d& strain) const;

private:
    std::array<double, 81> c_{};
};

// In-plane coefficient triples feeding the shell resultants:
// a = C(.,.,1,1), b = C(.,.,2,2), c = 2 C(.,.,1,2) slots.
struct PlaneCoefficients {
    double a11, a22, a12;
    double b11, b22, b12;
    double c11, c22, c12;
};

StiffnessTensor orthotropic_stiffness(const ElasticModuli& moduli);

// Rotation by psi about e3.
Eigen::Matrix3d rotation_about_axis(double psi);

// Push-forward of the stiffness under rotation_about_axis(psi):
// Ct_ijhk = Q_li Q_mj Q_nh Q_pk C_lmnp.
StiffnessTensor conjugate(const StiffnessTensor& c, double psi);

PlaneCoefficients plane_coefficients(const StiffnessTensor& c);

double strain_energy_density(const StiffnessTensor& c, const Eigen::Matrix3d& strain);

} // namespace nanoshell
