#include "nanoshell/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace nanoshell {

namespace {

using cplx = std::complex<double>;

// Linear form of a resultant in the kinematic slots (a1', a2', w, w'').
using Form = std::array<double, 4>;

template <class Get>
Form resultant_form(const PlaneCoefficients& pc, const ShellGeometry& g, Get get) {
    static constexpr KinematicSample basis[4] = {
        {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    Form f;
    for (int i = 0; i < 4; ++i) f[i] = get(resultants(pc, g, basis[i]));
    return f;
}

double plane_scale(const PlaneCoefficients& pc) {
    return std::max({std::abs(pc.a11), std::abs(pc.a22), std::abs(pc.a12),
                     std::abs(pc.b11), std::abs(pc.b22), std::abs(pc.b12),
                     std::abs(pc.c11), std::abs(pc.c22), std::abs(pc.c12)});
}

// cosh(a x)/cosh(a l) and sinh(a x)/cosh(a l), overflow-safe for Re(a) >= 0
// and |x| <= l (and mildly beyond, as used by difference stencils).
cplx cosh_ratio(cplx a, double x, double l) {
    return (std::exp(a * (x - l)) + std::exp(-a * (x + l))) / (1.0 + std::exp(-2.0 * a * l));
}

cplx sinh_ratio(cplx a, double x, double l) {
    return (std::exp(a * (x - l)) - std::exp(-a * (x + l))) / (1.0 + std::exp(-2.0 * a * l));
}

// tanh without overflow for Re(z) >= 0.
cplx tanh_safe(cplx z) {
    const cplx e = std::exp(-2.0 * z);
    return (1.0 - e) / (1.0 + e);
}

} // namespace

DerivedCoefficients derive_coefficients(const PlaneCoefficients& pc, const ShellGeometry& g) {
    const double r = g.rho0;
    const double scale = g.eps * plane_scale(pc);

    const Form shear =
        resultant_form(pc, g, [r](const ResultantSample& s) { return s.F21 + s.M21 / r; });
    const Form f11 = resultant_form(pc, g, [](const ResultantSample& s) { return s.F11; });
    const Form m11 = resultant_form(pc, g, [](const ResultantSample& s) { return s.M11; });
    const Form f22 = resultant_form(pc, g, [](const ResultantSample& s) { return s.F22; });

    // Shear balance integrates to F21 + M21/rho0 = t; solve it for a2'.
    const double piv_shear = shear[1];
    if (std::abs(piv_shear) <= 1e-14 * scale)
        throw SolverError("coefficient elimination: shear pivot vanishes (c12 ~ 0)");
    const double s_a1p = -shear[0] / piv_shear;
    const double s_w = -shear[2] / piv_shear;
    const double s_wpp = -shear[3] / piv_shear;
    const double s_t = 1.0 / piv_shear;

    // Axial balance integrates to F11 = 0; substitute a2' and solve for a1'.
    const double piv_axial = f11[0] + f11[1] * s_a1p;
    if (std::abs(piv_axial) <= 1e-14 * scale)
        throw SolverError("coefficient elimination: axial pivot vanishes");

    GradientCoefficients gc;
    gc.A1 = -(f11[3] + f11[1] * s_wpp) / piv_axial;
    gc.B1 = -(f11[2] + f11[1] * s_w) / piv_axial;
    gc.C1 = -(f11[1] * s_t) / piv_axial;
    gc.A2 = s_wpp + s_a1p * gc.A1;
    gc.B2 = s_w + s_a1p * gc.B1;
    gc.C2 = s_t + s_a1p * gc.C1;

    // Remaining resultants become linear forms in (w'', w, t).
    const auto reduce = [&gc](const Form& f) {
        return std::array<double, 3>{f[3] + f[0] * gc.A1 + f[1] * gc.A2,
                                     f[2] + f[0] * gc.B1 + f[1] * gc.B2,
                                     f[0] * gc.C1 + f[1] * gc.C2};
    };
    const auto m = reduce(m11);
    const auto q = reduce(f22);

    DerivedCoefficients d;
    d.m11 = {m[0], m[1], m[2]};
    d.ode.c1 = m[0];
    d.ode.c2 = m[1] - q[0] / r;
    d.ode.c3 = -q[1] / r;
    d.ode.c4 = -q[2] / r;
    if (!(std::abs(d.ode.c1) > 0.0) || !(std::abs(d.ode.c3) > 0.0))
        throw SolverError("coefficient elimination: degenerate radial equation");

    // Far-field convention: fold the constant particular solution into the
    // gradient constants, so a_alpha' tends to C_alpha t away from the ends
    // and the gradient relations hold against the decaying part of w alone.
    const double wp_over_t = -d.ode.c4 / d.ode.c3;
    gc.C1 += gc.B1 * wp_over_t;
    gc.C2 += gc.B2 * wp_over_t;
    d.grad = gc;
    return d;
}

CharacteristicRoots characteristic_roots(const OdeCoefficients& ode) {
    if (ode.c1 == 0.0)
        throw SolverError("characteristic roots: leading coefficient vanishes");
    // z^2 + (c2/c1) z + (c3/c1) = 0 for z = alpha^2, stable two-branch form.
    const cplx disc = std::sqrt(cplx(ode.c2 * ode.c2 - 4.0 * ode.c1 * ode.c3, 0.0));
    const cplx sq = (ode.c2 >= 0.0) ? disc : -disc;
    const cplx qq = -0.5 * (ode.c2 + sq);
    const cplx z1 = qq / ode.c1;
    const cplx z2 = (qq != cplx(0.0)) ? ode.c3 / qq
                                      : -0.5 * (ode.c2 - sq) / ode.c1;
    if (std::abs(z1 - z2) <= 1e-8 * (std::abs(z1) + std::abs(z2)))
        throw SolverError("characteristic roots: (near-)repeated roots, end-layer basis degenerates");

    CharacteristicRoots cr;
    cr.alpha1 = std::sqrt(z1); // principal branch keeps Re >= 0
    cr.alpha2 = std::sqrt(z2);
    const auto residual = [&](cplx a) {
        const cplx a2 = a * a;
        const double num = std::abs(ode.c1 * a2 * a2 + ode.c2 * a2 + ode.c3);
        const double den = std::abs(ode.c1 * a2 * a2) + std::abs(ode.c2 * a2) + std::abs(ode.c3);
        return num / den;
    };
    cr.residual_scaled = std::max(residual(cr.alpha1), residual(cr.alpha2));
    return cr;
}

TorsionSolution::TorsionSolution(const ChiralIndices& idx, const ShellGeometry& g)
    : indices_(idx), geometry_(g) {}

TorsionSolution solve(const TorsionProblem& problem) {
    TorsionSolution sol(problem.indices, problem.geometry);
    sol.t_ = problem.t;
    sol.psi_ = rotation_angle_psi(problem.indices);
    sol.pc_ = plane_coefficients(
        conjugate(orthotropic_stiffness(problem.moduli), sol.psi_));
    sol.coeffs_ = derive_coefficients(sol.pc_, problem.geometry);
    sol.roots_ = characteristic_roots(sol.coeffs_.ode);
    sol.wp_over_t_ = -sol.coeffs_.ode.c4 / sol.coeffs_.ode.c3;

    // Natural end conditions at x = +l (even symmetry covers -l):
    // sum_i kappa_i u_i = -(m_t + m_w wp/t), sum_i kappa_i v_i = 0.
    const MomentForm& mf = sol.coeffs_.m11;
    const double l = problem.geometry.half_length;
    const cplx alpha[2] = {sol.roots_.alpha1, sol.roots_.alpha2};
    cplx u[2], v[2];
    for (int i = 0; i < 2; ++i) {
        u[i] = mf.m_wpp * alpha[i] * alpha[i] + mf.m_w;
        v[i] = alpha[i] * tanh_safe(alpha[i] * l) * u[i];
    }
    const cplx det = u[0] * v[1] - u[1] * v[0];
    const double cancel = std::abs(u[0] * v[1]) + std::abs(u[1] * v[0]);
    if (std::abs(det) <= 1e-12 * cancel) {
        char cond[32];
        std::snprintf(cond, sizeof cond, "%.3g", cancel / std::max(std::abs(det), 1e-300));
        throw SolverError(
            std::string("end conditions: near-singular 2x2 system for the layer "
                        "amplitudes, condition estimate ") +
            cond);
    }
    const double b1 = -(mf.m_t + mf.m_w * sol.wp_over_t_);
    sol.kappa_[0] = b1 * v[1] / det;
    sol.kappa_[1] = -b1 * v[0] / det;

    // The radial field must come out real; complex parts are rounding dust.
    double max_re = 0.0, max_im = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double x = -l + 2.0 * l * k / 20.0;
        cplx acc = 0.0;
        for (int i = 0; i < 2; ++i) acc += sol.kappa_[i] * cosh_ratio(alpha[i], x, l);
        acc += sol.wp_over_t_;
        max_re = std::max(max_re, std::abs(acc.real()));
        max_im = std::max(max_im, std::abs(acc.imag()));
    }
    if (max_im > 1e-10 * (max_re + 1e-300))
        throw SolverError("end conditions: radial field has a non-vanishing imaginary part");
    return sol;
}

double TorsionSolution::w(double x1, int order) const {
    if (order < 0 || order > 4)
        throw std::invalid_argument("torsion solution: w supports orders 0..4");
    const double l = geometry_.half_length;
    const cplx alpha[2] = {roots_.alpha1, roots_.alpha2};
    cplx acc = 0.0;
    for (int i = 0; i < 2; ++i) {
        cplx an = 1.0;
        for (int k = 0; k < order; ++k) an *= alpha[i];
        const cplx basis = (order % 2 == 0) ? cosh_ratio(alpha[i], x1, l)
                                            : sinh_ratio(alpha[i], x1, l);
        acc += kappa_[i] * an * basis;
    }
    if (order == 0) acc += wp_over_t_;
    return t_ * acc.real();
}

namespace {

double gradient_field(const TorsionSolution& sol, double x1, int order, double A, double B,
                      double C) {
    const double l = sol.geometry().half_length;
    const cplx alpha[2] = {sol.roots().alpha1, sol.roots().alpha2};
    cplx acc = 0.0;
    for (int i = 0; i < 2; ++i) {
        const cplx amp = sol.amplitude(i) * (A * alpha[i] * alpha[i] + B);
        switch (order) {
            case 0: acc += amp * sinh_ratio(alpha[i], x1, l) / alpha[i]; break;
            case 1: acc += amp * cosh_ratio(alpha[i], x1, l); break;
            case 2: acc += amp * alpha[i] * sinh_ratio(alpha[i], x1, l); break;
            default:
                throw std::invalid_argument("torsion solution: a fields support orders 0..2");
        }
    }
    if (order == 0) acc += C * x1;
    if (order == 1) acc += C;
    return sol.applied_traction() * acc.real();
}

} // namespace

double TorsionSolution::a1(double x1, int order) const {
    return gradient_field(*this, x1, order, coeffs_.grad.A1, coeffs_.grad.B1, coeffs_.grad.C1);
}

double TorsionSolution::a2(double x1, int order) const {
    return gradient_field(*this, x1, order, coeffs_.grad.A2, coeffs_.grad.B2, coeffs_.grad.C2);
}

double TorsionSolution::torsion_angle() const {
    return t_ * coeffs_.grad.C2 / geometry_.rho0;
}

double TorsionSolution::torsion_stiffness() const {
    return 2.0 * std::numbers::pi * std::pow(geometry_.rho0, 3) / coeffs_.grad.C2;
}

double TorsionSolution::axial_strain() const { return t_ * coeffs_.grad.C1; }

double TorsionSolution::torque() const {
    return 2.0 * std::numbers::pi * geometry_.rho0 * geometry_.rho0 * t_;
}

std::vector<SweepRow> sweep(const SweepRequest& req) {
    if (req.m_lo < 0 || req.m_hi < req.m_lo || req.m_hi > req.n)
        throw std::invalid_argument("sweep: m range must satisfy 0 <= lo <= hi <= n");
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(req.m_hi - req.m_lo + 1));
    for (int m = req.m_lo; m <= req.m_hi; ++m) {
        SweepRow row;
        row.n = req.n;
        row.m = m;
        const ChiralIndices idx(req.n, m);
        row.psi = rotation_angle_psi(idx);
        row.rho0 = nominal_radius(idx, req.bond_length_nm);
        try {
            const ShellGeometry g =
                effective_geometry(idx, req.bond_length_nm, req.eps_nm, req.slenderness);
            const TorsionSolution sol = solve({idx, req.moduli, g, req.t});
            row.torsion_angle = sol.torsion_angle();
            row.torsion_stiffness = sol.torsion_stiffness();
            row.axial_strain = sol.axial_strain();
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace nanoshell
