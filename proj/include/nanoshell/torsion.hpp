#pragma once

#include "nanoshell/elasticity.hpp"
#include "nanoshell/geometry.hpp"
#include "nanoshell/resultants.hpp"

#include <complex>
#include <string>
#include <vector>

namespace nanoshell {

// Raised when the reduced problem degenerates (vanishing pivots, repeated
// characteristic roots, ill-conditioned end conditions).
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// c1 w'''' + c2 w'' + c3 w + c4 t = 0 on (-l, l).
struct OdeCoefficients {
    double c1, c2, c3, c4;
};

// In-plane gradients recovered from the radial field. With wh the decaying
// part of w (full w minus the constant particular solution):
// a1' = A1 wh'' + B1 wh + C1 t,  a2' = A2 wh'' + B2 wh + C2 t.
// C1, C2 are the far-field slopes per unit traction; the torsion descriptors
// read off them directly.
struct GradientCoefficients {
    double A1, B1, C1;
    double A2, B2, C2;
};

// Axial moment as a linear form, M11 = m_wpp w'' + m_w w + m_t t.
// Natural end conditions are this form and its first derivative.
struct MomentForm {
    double m_wpp, m_w, m_t;
};

struct DerivedCoefficients {
    OdeCoefficients ode;
    GradientCoefficients grad;
    MomentForm m11;
};

// Eliminates a1', a2' from the axial force and shear balances, leaving the
// fourth-order radial equation. Inputs: plane coefficients of the rotated
// stiffness and the shell geometry.
DerivedCoefficients derive_coefficients(const PlaneCoefficients& pc, const ShellGeometry& g);

// Both characteristic exponents alpha with Re(alpha) >= 0; residual_scaled
// reports |c1 a^4 + c2 a^2 + c3| relative to the term magnitudes.
struct CharacteristicRoots {
    std::complex<double> alpha1, alpha2;
    double residual_scaled;
};

CharacteristicRoots characteristic_roots(const OdeCoefficients& ode);

struct TorsionProblem {
    ChiralIndices indices;
    ElasticModuli moduli;   // GPa
    ShellGeometry geometry; // nm
    double t;               // applied shear traction resultant, nN/nm
};

// Closed-form solution of the end-loaded torsion problem. Every field scales
// linearly in t by construction. Derivative orders: w 0..4, a1/a2 0..2.
class TorsionSolution final : public AxisymmetricField {
public:
    double w(double x1, int order) const override;
    double a1(double x1, int order) const override;
    double a2(double x1, int order) const override;

    double torsion_angle() const;     // twist rate a2'(x)/rho0, rad/nm
    double torsion_stiffness() const; // torque / twist rate, nN nm^2
    double axial_strain() const;      // uniform a1'
    double torque() const;            // 2 pi rho0^2 t, nN nm

    const ChiralIndices& indices() const { return indices_; }
    const ShellGeometry& geometry() const { return geometry_; }
    const PlaneCoefficients& plane() const { return pc_; }
    const DerivedCoefficients& coefficients() const { return coeffs_; }
    const CharacteristicRoots& roots() const { return roots_; }
    double applied_traction() const { return t_; }
    double rotation_angle() const { return psi_; }
    double particular_w_over_t() const { return wp_over_t_; }
    std::complex<double> amplitude(int i) const { return kappa_[i]; }

private:
    friend TorsionSolution solve(const TorsionProblem& problem);
    TorsionSolution(const ChiralIndices& idx, const ShellGeometry& g);

    ChiralIndices indices_;
    ShellGeometry geometry_;
    double psi_ = 0.0;
    double t_ = 0.0;
    PlaneCoefficients pc_{};
    DerivedCoefficients coeffs_{};
    CharacteristicRoots roots_{};
    std::complex<double> kappa_[2]{}; // t-normalized end-layer amplitudes
    double wp_over_t_ = 0.0;
};

TorsionSolution solve(const TorsionProblem& problem);

// One tube of a chirality sweep; error is empty on success, otherwise the
// row is reported and the sweep continues.
struct SweepRow {
    int n, m;
    double psi = 0.0;
    double rho0 = 0.0;
    double torsion_angle = 0.0;
    double torsion_stiffness = 0.0;
    double axial_strain = 0.0;
    std::string error;
};

struct SweepRequest {
    int n;
    int m_lo, m_hi;
    ElasticModuli moduli;
    double bond_length_nm;
    double eps_nm;
    double slenderness;
    double t;
};

std::vector<SweepRow> sweep(const SweepRequest& req);

} // namespace nanoshell
