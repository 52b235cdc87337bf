#pragma once

#include "nanoshell/torsion.hpp"

#include <functional>
#include <vector>

namespace nanoshell {

// Finite-difference weights for the given derivative order at x = 0 on the
// integer-offset stencil, exact rational construction (Fornberg recursion),
// then scaled by h^order.
std::vector<double> fd_weights(const std::vector<int>& offsets, int order, double h);

// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule gauss_legendre(int n);

// Thickness integrals of the stress resultants evaluated numerically from
// the rotated stiffness, for cross-checking the closed forms.
ResultantSample quadrature_resultants(const AxisymmetricField& f, const StiffnessTensor& c,
                                      const ShellGeometry& g, double x1, int points = 32);

// Second-order solve of c1 w'''' + c2 w'' + c3 w = f(x) on [-l, l] with the
// natural end conditions g0 = m_wpp w'' + m_w w and g1 = g0' prescribed:
// rows are (g0, g1) at -l and (g1, g0) at +l. n odd. One-sided boundary
// stencils are fourth order so the global order stays two. Assembly and the
// banded LU run in extended precision; the grid values return as double.
std::vector<double> solve_linear_bvp(const OdeCoefficients& ode, const MomentForm& m11,
                                     double half_length, int n,
                                     const std::function<double(double)>& rhs, double d0_left,
                                     double d1_left, double d1_right, double d0_right);

struct FdSolution {
    std::vector<double> x;
    std::vector<double> w;
    std::vector<double> a1;
    std::vector<double> a2;
};

// Full finite-difference reference solution of the torsion problem from the
// reduced coefficients: radial BVP, then gradient recovery a' = A w'' + B w
// + C t integrated by the trapezoid rule from the center node. n odd, >= 201.
FdSolution fd_solve(const DerivedCoefficients& coeffs, const ShellGeometry& g, double t,
                    int n);

struct FieldComparison {
    double raw_rel;     // rel Linf of the plain n-point solve
    double refined_rel; // rel Linf after eliminating the h^2 term between grids
    double order;       // observed order between the two plain solves; NaN when
                        // both deviations sit at rounding level
};

struct OracleComparison {
    FieldComparison w, a1, a2;
    int n_fine;
    int n_coarse;
};

// Compares the closed-form solution against fd_solve at n points and at the
// embedded (n+1)/2 grid. Requires n % 4 == 1 so the coarse grid nests.
OracleComparison compare_with_oracle(const TorsionSolution& sol, int n);

} // namespace nanoshell
