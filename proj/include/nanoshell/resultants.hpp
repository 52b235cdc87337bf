#pragma once

#include "nanoshell/elasticity.hpp"
#include "nanoshell/geometry.hpp"

#include <array>
#include <vector>

namespace nanoshell {

// Axisymmetric displacement data on the midsurface: axial a1, circumferential
// a2, radial w, each a function of the axial coordinate x1 in [-l, l].
// order selects the derivative (0 = value). Implementations support order
// 0..4 for w and 0..2 for a1/a2.
struct AxisymmetricField {
    virtual ~AxisymmetricField() = default;
    virtual double w(double x1, int order) const = 0;
    virtual double a1(double x1, int order) const = 0;
    virtual double a2(double x1, int order) const = 0;
};

// Power-basis polynomial field, mainly for tests and quadrature studies.
class PolynomialField final : public AxisymmetricField {
public:
    PolynomialField(std::vector<double> w_coeffs, std::vector<double> a1_coeffs,
                    std::vector<double> a2_coeffs);

    double w(double x1, int order) const override;
    double a1(double x1, int order) const override;
    double a2(double x1, int order) const override;

private:
    std::vector<double> cw_, ca1_, ca2_;
};

// Pointwise kinematic input to the resultant formulas.
struct KinematicSample {
    double a1p;  // a1'
    double a2p;  // a2'
    double w;
    double wpp;  // w''
};

// Through-thickness strain components at offset zeta from the midsurface,
// |zeta| < rho0.
struct MembraneStrain {
    double e11;
    double e22;
    double e12;
};

MembraneStrain strain_components(const AxisymmetricField& f, double x1, double zeta,
                                 const ShellGeometry& g);

// Force and moment resultants per unit midsurface width, nN/nm and nN.
struct ResultantSample {
    double F11, F22, F12, F21;
    double M11, M22, M12, M21;
};

// (1/(2h)) log((1+h)/(1-h)) for h in (0,1); the curvature weight of the
// circumferential thickness integrals.
double log_thickness_factor(double h);

// Closed-form thickness integrals of the stress resultants for the
// axisymmetric torsion kinematics.
ResultantSample resultants(const PlaneCoefficients& pc, const ShellGeometry& g,
                           const KinematicSample& kin);

// Resultants along the axis for a given displacement field.
class ResultantField {
public:
    ResultantField(const AxisymmetricField& f, const PlaneCoefficients& pc,
                   const ShellGeometry& g);

    ResultantSample at(double x1) const;
    // d/dx1 of selected combinations via 5-point central differences,
    // step h = half_length * 1e-4.
    double d_F11(double x1) const;
    double d_shear(double x1) const;   // d/dx1 (F21 + M21/rho0)
    double dd_M11(double x1) const;
    double d_M11(double x1) const;

    const ShellGeometry& geometry() const { return g_; }

private:
    const AxisymmetricField& f_;
    PlaneCoefficients pc_;
    ShellGeometry g_;
};

// Constant distributed loads entering the axisymmetric balance equations.
struct EquilibriumLoads {
    double qo1 = 0.0;
    double qo2 = 0.0;
    double qo3 = 0.0;
    double ro2 = 0.0;
};

struct EquilibriumResidual {
    double r1; // F11' + qo1
    double r2; // (F21 + M21/rho0)' + qo2 + ro2/rho0
    double r3; // M11'' - F22/rho0 + qo3
};

EquilibriumResidual equilibrium_residual(const ResultantField& rf,
                                         const EquilibriumLoads& loads, double x1);

// End conditions of the torsion problem at x1 = +l:
// {F11, M11, M11', F21 + M21/rho0 - t}.
std::array<double, 4> boundary_residual(const ResultantField& rf, double t);

} // namespace nanoshell
