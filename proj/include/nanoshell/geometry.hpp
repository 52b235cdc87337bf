#pragma once

#include <array>

namespace nanoshell {

// Chiral indices of a single-wall tube. Valid range: n >= 1, 0 <= m <= n.
struct ChiralIndices {
    int n;
    int m;

    ChiralIndices(int n_, int m_);

    bool zigzag() const { return m == 0; }
    bool armchair() const { return m == n; }
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Hexagonal lattice bookkeeping. Unit conventions: lengths in nm.
// Lattice vectors have equal length sqrt(3)*s and meet at 60 degrees,
// with a1 along +x.
struct LatticeGeometry {
    double bond_length_nm = 0.142;

    double lattice_constant() const;
    Vec2 a1() const;
    Vec2 a2() const;
    Vec2 chiral_vector(const ChiralIndices& idx) const;      // n a1 + m a2
    Vec2 translation_vector(const ChiralIndices& idx) const; // t1 a1 + t2 a2
};

// Integer components of the axial (translation) vector in the a1/a2 basis.
struct AxialIndices {
    int t1;
    int t2;
};

// Cylinder midsurface data for the continuum shell model.
// rho0: midsurface radius, eps: half thickness, half_length: l.
// Requires 0 < eps < rho0 and half_length > 0.
struct ShellGeometry {
    double rho0;
    double eps;
    double half_length;

    ShellGeometry(double rho0_, double eps_, double half_length_);

    double thickness_ratio() const { return eps / rho0; } // eps/rho0 in (0,1)
};

// Angle between the chiral vector and a1, in [0, pi/6].
double chiral_angle(const ChiralIndices& idx);

// Rotation carrying the material axes onto the cylinder axes.
// 0 for zigzag, pi/2 for armchair, arctan(sqrt(3)(n+m)/(n-m)) between;
// equals pi/3 + chiral_angle for every m > 0.
double rotation_angle_psi(const ChiralIndices& idx);

// t1 = (n+2m)/d_R, t2 = -(2n+m)/d_R with d_R = gcd(2n+m, n+2m).
// The resulting vector is orthogonal to the chiral vector.
AxialIndices axial_vector(const ChiralIndices& idx);

// rho0 = (sqrt(3)/2pi) n sqrt(1 + m/n + (m/n)^2) s.
double nominal_radius(const ChiralIndices& idx, double bond_length_nm);

// Rolled-up geometry: radius from the indices, half length from the
// slenderness ratio rho0/l. Throws if eps >= rho0.
ShellGeometry effective_geometry(const ChiralIndices& idx, double bond_length_nm,
                                 double eps_nm, double slenderness);

} // namespace nanoshell
