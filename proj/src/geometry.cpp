#include "nanoshell/geometry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nanoshell {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

} // namespace

ChiralIndices::ChiralIndices(int n_, int m_) : n(n_), m(m_) {
    require(n >= 1, "chiral indices: n must be >= 1, got n=" + std::to_string(n));
    require(m >= 0 && m <= n,
            "chiral indices: m must satisfy 0 <= m <= n, got (n,m)=(" +
                std::to_string(n) + "," + std::to_string(m) + ")");
}

double LatticeGeometry::lattice_constant() const {
    return std::sqrt(3.0) * bond_length_nm;
}

Vec2 LatticeGeometry::a1() const {
    return {lattice_constant(), 0.0};
}

Vec2 LatticeGeometry::a2() const {
    const double a = lattice_constant();
    return {0.5 * a, 0.5 * std::sqrt(3.0) * a};
}

Vec2 LatticeGeometry::chiral_vector(const ChiralIndices& idx) const {
    const Vec2 u = a1(), v = a2();
    return {idx.n * u.x + idx.m * v.x, idx.n * u.y + idx.m * v.y};
}

Vec2 LatticeGeometry::translation_vector(const ChiralIndices& idx) const {
    const AxialIndices t = axial_vector(idx);
    const Vec2 u = a1(), v = a2();
    return {t.t1 * u.x + t.t2 * v.x, t.t1 * u.y + t.t2 * v.y};
}

ShellGeometry::ShellGeometry(double rho0_, double eps_, double half_length_)
    : rho0(rho0_), eps(eps_), half_length(half_length_) {
    require(rho0 > 0.0, "shell geometry: midsurface radius must be positive");
    require(eps > 0.0, "shell geometry: half thickness must be positive");
    require(eps < rho0, "shell geometry: half thickness " + std::to_string(eps) +
                            " nm must stay below the midsurface radius " +
                            std::to_string(rho0) + " nm");
    require(half_length > 0.0, "shell geometry: half length must be positive");
}

double chiral_angle(const ChiralIndices& idx) {
    return std::atan(std::sqrt(3.0) * idx.m / (2.0 * idx.n + idx.m));
}

double rotation_angle_psi(const ChiralIndices& idx) {
    if (idx.m == 0) return 0.0;
    if (idx.m == idx.n) return std::numbers::pi / 2.0;
    return std::atan(std::sqrt(3.0) * (idx.n + idx.m) / (idx.n - idx.m));
}

AxialIndices axial_vector(const ChiralIndices& idx) {
    const int p = 2 * idx.n + idx.m;
    const int q = idx.n + 2 * idx.m;
    const int d = std::gcd(p, q);
    return {q / d, -p / d};
}

double nominal_radius(const ChiralIndices& idx, double bond_length_nm) {
    require(bond_length_nm > 0.0, "nominal radius: bond length must be positive");
    const double r = static_cast<double>(idx.m) / idx.n;
    return std::sqrt(3.0) / (2.0 * std::numbers::pi) * idx.n *
           std::sqrt(1.0 + r + r * r) * bond_length_nm;
}

ShellGeometry effective_geometry(const ChiralIndices& idx, double bond_length_nm,
                                 double eps_nm, double slenderness) {
    require(slenderness > 0.0, "effective geometry: slenderness must be positive");
    const double rho0 = nominal_radius(idx, bond_length_nm);
    if (eps_nm >= rho0) {
        throw std::invalid_argument(
            "effective geometry: half thickness " + std::to_string(eps_nm) +
            " nm does not fit inside a tube of radius " + std::to_string(rho0) +
            " nm; (n,m)=(" + std::to_string(idx.n) + "," + std::to_string(idx.m) + ")");
    }
    return ShellGeometry(rho0, eps_nm, rho0 / slenderness);
}

} // namespace nanoshell
