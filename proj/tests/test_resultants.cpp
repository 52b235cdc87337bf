#include "nanoshell/resultants.hpp"

#include "nanoshell/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace nanoshell;

namespace {

const ElasticModuli kSheet{784.0, 832.0, 424.0, 0.242, 0.260};

} // namespace

TEST_CASE("polynomial field derivatives") {
    // w = 2 - x + 3x^3, a1 = x^2, a2 = 5x
    const PolynomialField f({2.0, -1.0, 0.0, 3.0}, {0.0, 0.0, 1.0}, {0.0, 5.0});
    CHECK(f.w(0.5, 0) == doctest::Approx(2.0 - 0.5 + 3.0 * 0.125).epsilon(1e-15));
    CHECK(f.w(0.5, 1) == doctest::Approx(-1.0 + 9.0 * 0.25).epsilon(1e-15));
    CHECK(f.w(0.5, 2) == doctest::Approx(18.0 * 0.5).epsilon(1e-15));
    CHECK(f.w(0.5, 3) == doctest::Approx(18.0).epsilon(1e-15));
    CHECK(f.w(0.5, 4) == 0.0);
    CHECK(f.a1(2.0, 1) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(f.a2(2.0, 1) == 5.0);
    CHECK(f.a2(2.0, 2) == 0.0);
}

TEST_CASE("strain components") {
    const ShellGeometry g(0.4, 0.2, 1.0);
    const PolynomialField f({0.01, 0.0, 0.002}, {0.0, 1e-3}, {0.0, 2e-3});
    const double x = 0.3, zeta = 0.1;
    const MembraneStrain e = strain_components(f, x, zeta, g);
    const double stretch = 1.0 + zeta / 0.4;
    CHECK(e.e11 == doctest::Approx(1e-3 - zeta * 0.004).epsilon(1e-14));
    CHECK(e.e22 == doctest::Approx(f.w(x, 0) / (0.4 * stretch)).epsilon(1e-14));
    CHECK(e.e12 == doctest::Approx(0.5 * stretch * 2e-3).epsilon(1e-14));
    CHECK_THROWS_AS(strain_components(f, x, 0.5, g), std::invalid_argument);
}

TEST_CASE("log thickness factor") {
    CHECK(log_thickness_factor(0.5) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
    // small-h expansion 1 + h^2/3 + h^4/5 + h^6/7
    for (const double h : {1e-3, 1e-2, 0.1}) {
        const double h2 = h * h;
        const double series = 1.0 + h2 / 3.0 + h2 * h2 / 5.0 + h2 * h2 * h2 / 7.0;
        CHECK(log_thickness_factor(h) == doctest::Approx(series).epsilon(1e-8));
    }
    CHECK(log_thickness_factor(0.3) > 1.0);
    CHECK_THROWS_AS(log_thickness_factor(0.0), std::invalid_argument);
    CHECK_THROWS_AS(log_thickness_factor(1.0), std::invalid_argument);
}

TEST_CASE("closed-form resultants match thickness quadrature") {
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const StiffnessTensor c0 = orthotropic_stiffness(kSheet);
    for (int trial = 0; trial < 25; ++trial) {
        const double rho = 0.25 + 1.25 * unit(rng);
        const double h = 0.1 + 0.7 * unit(rng);
        const ShellGeometry g(rho, h * rho, 4.0 * rho);
        const double psi = 1.5707963267948966 * unit(rng);
        const StiffnessTensor ct = conjugate(c0, psi);
        const PlaneCoefficients pc = plane_coefficients(ct);

        std::vector<double> cw(4), ca1(4), ca2(4);
        for (auto* v : {&cw, &ca1, &ca2})
            for (double& x : *v) x = 2e-3 * (unit(rng) - 0.5);
        const PolynomialField f(cw, ca1, ca2);
        const double x1 = (2.0 * unit(rng) - 1.0) * g.half_length;

        const ResultantSample num = quadrature_resultants(f, ct, g, x1);
        const KinematicSample kin{f.a1(x1, 1), f.a2(x1, 1), f.w(x1, 0), f.w(x1, 2)};
        const ResultantSample ref = resultants(pc, g, kin);

        const double scale = std::max({std::abs(ref.F11), std::abs(ref.F22), std::abs(ref.F12),
                                       std::abs(ref.F21), std::abs(ref.M11), std::abs(ref.M22),
                                       std::abs(ref.M12), std::abs(ref.M21), 1e-300});
        CHECK(std::abs(num.F11 - ref.F11) <= 1e-11 * scale);
        CHECK(std::abs(num.F22 - ref.F22) <= 1e-11 * scale);
        CHECK(std::abs(num.F12 - ref.F12) <= 1e-11 * scale);
        CHECK(std::abs(num.F21 - ref.F21) <= 1e-11 * scale);
        CHECK(std::abs(num.M11 - ref.M11) <= 1e-11 * scale);
        CHECK(std::abs(num.M22 - ref.M22) <= 1e-11 * scale);
        CHECK(std::abs(num.M12 - ref.M12) <= 1e-11 * scale);
        CHECK(std::abs(num.M21 - ref.M21) <= 1e-11 * scale);
    }
}

TEST_CASE("flat-limit resultants drop the curvature corrections") {
    // as h -> 0 the weighted and unweighted shear integrals coincide
    const StiffnessTensor ct = conjugate(orthotropic_stiffness(kSheet), 0.9);
    const PlaneCoefficients pc = plane_coefficients(ct);
    const KinematicSample kin{1e-3, 2e-3, 0.0, 0.0};
    const ShellGeometry thin(100.0, 0.194, 10.0);
    const ResultantSample s = resultants(pc, thin, kin);
    CHECK(s.F12 == doctest::Approx(s.F21).epsilon(1e-5));
    CHECK(s.F11 == doctest::Approx(2.0 * 0.194 * (pc.a11 * 1e-3 + 0.5 * pc.c11 * 2e-3))
                       .epsilon(1e-5));
}

TEST_CASE("torque combination matches its own thickness integral") {
    // F21 + M21/rho equals the (1 + z/rho)^2 weighted shear integral, the
    // quantity the end torque pins down
    const StiffnessTensor ct = conjugate(orthotropic_stiffness(kSheet), 1.1);
    const PlaneCoefficients pc = plane_coefficients(ct);
    const ShellGeometry g(0.31, 0.194, 1.2);
    const KinematicSample kin{0.0, 3e-3, 0.0, 0.0};
    const ResultantSample s = resultants(pc, g, kin);
    const double h = g.thickness_ratio();
    const double expected = g.eps * (1.0 + h * h) * pc.c12 * 3e-3;
    CHECK(s.F21 + s.M21 / g.rho0 == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("resultant field and equilibrium residual on a manufactured field") {
    const StiffnessTensor ct = conjugate(orthotropic_stiffness(kSheet), 0.6);
    const PlaneCoefficients pc = plane_coefficients(ct);
    const ShellGeometry g(0.5, 0.2, 2.0);
    const PolynomialField f({1e-3, 2e-4, -3e-4}, {0.0, 5e-4}, {0.0, -2e-4, 1e-4});
    const ResultantField rf(f, pc, g);

    const double x = 0.7;
    const KinematicSample kin{f.a1(x, 1), f.a2(x, 1), f.w(x, 0), f.w(x, 2)};
    const ResultantSample direct = resultants(pc, g, kin);
    const ResultantSample via = rf.at(x);
    CHECK(via.F11 == doctest::Approx(direct.F11).epsilon(1e-14));
    CHECK(via.M21 == doctest::Approx(direct.M21).epsilon(1e-14));

    // F11 for this field is linear in x with hand-computable slope
    const double slope_fd = rf.d_F11(x);
    const KinematicSample dkin{f.a1(x, 2), f.a2(x, 2), f.w(x, 1), f.w(x, 3)};
    const ResultantSample dres = resultants(pc, g, dkin);
    CHECK(slope_fd == doctest::Approx(dres.F11).epsilon(1e-9));

    const EquilibriumResidual r = equilibrium_residual(rf, {}, x);
    CHECK(r.r1 == doctest::Approx(dres.F11).epsilon(1e-9));

    // constant loads shift the residuals exactly
    const EquilibriumResidual rl = equilibrium_residual(rf, {0.5, -0.25, 1.5, 2.0}, x);
    CHECK(rl.r1 - r.r1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rl.r2 - r.r2 == doctest::Approx(-0.25 + 2.0 / g.rho0).epsilon(1e-12));
    CHECK(rl.r3 - r.r3 == doctest::Approx(1.5).epsilon(1e-12));
}
