#include "nanoshell/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace nanoshell;

namespace {

const ElasticModuli kSheet{784.0, 832.0, 424.0, 0.242, 0.260};

TorsionProblem reference_problem(int n, int m, double t = 0.1) {
    const ChiralIndices idx(n, m);
    return {idx, kSheet, effective_geometry(idx, 0.142, 0.194, 0.25), t};
}

} // namespace

TEST_CASE("finite-difference weights reproduce classic stencils") {
    const auto c3 = fd_weights({-1, 0, 1}, 2, 1.0);
    CHECK(c3[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c3[1] == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(c3[2] == doctest::Approx(1.0).epsilon(1e-14));

    const auto c5 = fd_weights({-2, -1, 0, 1, 2}, 4, 1.0);
    const double ref5[5] = {1.0, -4.0, 6.0, -4.0, 1.0};
    for (int i = 0; i < 5; ++i) CHECK(c5[i] == doctest::Approx(ref5[i]).epsilon(1e-13));

    // one-sided second derivative, six points
    const auto c6 = fd_weights({0, 1, 2, 3, 4, 5}, 2, 1.0);
    const double ref6[6] = {45.0 / 12.0, -154.0 / 12.0, 214.0 / 12.0,
                            -156.0 / 12.0, 61.0 / 12.0, -10.0 / 12.0};
    for (int i = 0; i < 6; ++i) CHECK(c6[i] == doctest::Approx(ref6[i]).epsilon(1e-12));

    // five-point first derivative
    const auto d5 = fd_weights({-2, -1, 0, 1, 2}, 1, 0.5);
    const double refd[5] = {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, 1.0 / -12};
    for (int i = 0; i < 5; ++i)
        CHECK(d5[i] == doctest::Approx(refd[i] / 0.5).epsilon(1e-13));
}

TEST_CASE("finite-difference weights annihilate low monomials") {
    // sum_k w_k (k h)^p = p! delta_{p,order} for p < stencil size
    const std::vector<int> offsets{0, -1, -2, -3, -4, -5, -6};
    const double h = 0.013;
    for (int order = 1; order <= 3; ++order) {
        const auto w = fd_weights(offsets, order, h);
        for (int p = 0; p < 7; ++p) {
            double acc = 0.0;
            for (std::size_t k = 0; k < offsets.size(); ++k)
                acc += w[k] * std::pow(offsets[k] * h, p);
            double expect = 0.0;
            if (p == order) {
                expect = 1.0;
                for (int q = 2; q <= p; ++q) expect *= q;
            }
            CHECK(std::abs(acc - expect) <= 1e-8 * std::max(1.0, std::abs(w[0]) * std::pow(h, p)));
        }
    }
}

TEST_CASE("gauss-legendre rule") {
    const QuadratureRule r = gauss_legendre(32);
    double sum = 0.0;
    for (const double w : r.weights) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        CHECK(r.nodes[i] == doctest::Approx(-r.nodes[r.nodes.size() - 1 - i]).epsilon(1e-14));
        CHECK(r.nodes[i] > -1.0);
        CHECK(r.nodes[i] < 1.0);
    }
    // exact for polynomials up to degree 63; check a few even powers
    for (const int p : {2, 8, 16, 24}) {
        double acc = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            acc += r.weights[i] * std::pow(r.nodes[i], p);
        CHECK(acc == doctest::Approx(2.0 / (p + 1.0)).epsilon(1e-13));
    }
    // near-pole rational integrand at the worst admissible thickness ratio
    const double c = 0.85;
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] / (1.0 + c * r.nodes[i]);
    const double exact = (std::log1p(c) - std::log1p(-c)) / c;
    CHECK(acc == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("manufactured solution converges at second order") {
    const TorsionProblem p = reference_problem(6, 3);
    const double psi = rotation_angle_psi(p.indices);
    const PlaneCoefficients pc = plane_coefficients(conjugate(orthotropic_stiffness(kSheet), psi));
    const DerivedCoefficients d = derive_coefficients(pc, p.geometry);
    const OdeCoefficients& oc = d.ode;
    const MomentForm& mf = d.m11;
    const double l = p.geometry.half_length;

    // w* = sin(1.3 x) + 0.4 cosh(0.9 x) + 0.05 x^2
    const auto wex = [](double x, int k) {
        const double s = std::sin(1.3 * x), c = std::cos(1.3 * x);
        const double ch = std::cosh(0.9 * x), sh = std::sinh(0.9 * x);
        switch (k) {
            case 0: return s + 0.4 * ch + 0.05 * x * x;
            case 1: return 1.3 * c + 0.36 * sh + 0.1 * x;
            case 2: return -1.69 * s + 0.324 * ch + 0.1;
            case 3: return -2.197 * c + 0.2916 * sh;
            default: return 2.8561 * s + 0.26244 * ch;
        }
    };
    const auto rhs = [&](double x) {
        return oc.c1 * wex(x, 4) + oc.c2 * wex(x, 2) + oc.c3 * wex(x, 0);
    };
    const auto g0 = [&](double x) { return mf.m_wpp * wex(x, 2) + mf.m_w * wex(x, 0); };
    const auto g1 = [&](double x) { return mf.m_wpp * wex(x, 3) + mf.m_w * wex(x, 1); };

    double prev_err = 0.0;
    std::vector<int> sizes{401, 801};
    std::vector<double> errs;
    for (const int n : sizes) {
        const std::vector<double> w =
            solve_linear_bvp(oc, mf, l, n, rhs, g0(-l), g1(-l), g1(l), g0(l));
        const double h = 2.0 * l / (n - 1);
        double emax = 0.0, scale = 0.0;
        for (int i = 0; i < n; ++i) {
            const double xi = -l + h * i;
            emax = std::max(emax, std::abs(w[static_cast<std::size_t>(i)] - wex(xi, 0)));
            scale = std::max(scale, std::abs(wex(xi, 0)));
        }
        errs.push_back(emax / scale);
        prev_err = emax / scale;
    }
    CHECK(errs[0] <= 5e-4);
    CHECK(prev_err <= errs[0]);
    const double order = std::log2(errs[0] / errs[1]);
    CHECK(order >= 1.8);
    CHECK(order <= 2.2);
}

TEST_CASE("bvp solver rejects bad grids") {
    const TorsionProblem p = reference_problem(6, 3);
    const double psi = rotation_angle_psi(p.indices);
    const PlaneCoefficients pc = plane_coefficients(conjugate(orthotropic_stiffness(kSheet), psi));
    const DerivedCoefficients d = derive_coefficients(pc, p.geometry);
    CHECK_THROWS_AS(fd_solve(d, p.geometry, 0.1, 200), std::invalid_argument);
    CHECK_THROWS_AS(fd_solve(d, p.geometry, 0.1, 199), std::invalid_argument);
    const TorsionSolution sol = solve(p);
    CHECK_THROWS_AS(compare_with_oracle(sol, 2003), std::invalid_argument);
}

TEST_CASE("grid solution approaches the closed form") {
    const TorsionSolution sol = solve(reference_problem(6, 3));
    const FdSolution fd = fd_solve(sol.coefficients(), sol.geometry(), 0.1, 1001);
    double emax = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < fd.x.size(); ++i) {
        emax = std::max(emax, std::abs(fd.w[i] - sol.w(fd.x[i], 0)));
        scale = std::max(scale, std::abs(sol.w(fd.x[i], 0)));
    }
    CHECK(emax / scale <= 1e-5); // second order at h = 2l/1000
    CHECK(emax / scale >= 1e-7); // and not spuriously exact

    double e1 = 0.0, s1 = 0.0, e2 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < fd.x.size(); ++i) {
        e1 = std::max(e1, std::abs(fd.a1[i] - sol.a1(fd.x[i], 0)));
        s1 = std::max(s1, std::abs(sol.a1(fd.x[i], 0)));
        e2 = std::max(e2, std::abs(fd.a2[i] - sol.a2(fd.x[i], 0)));
        s2 = std::max(s2, std::abs(sol.a2(fd.x[i], 0)));
    }
    CHECK(e1 / s1 <= 1e-5);
    CHECK(e2 / s2 <= 1e-5);
}

TEST_CASE("oracle comparison: refinement sharpens and order is two") {
    const TorsionSolution sol = solve(reference_problem(6, 3));
    const OracleComparison oc = compare_with_oracle(sol, 2001);
    CHECK(oc.n_fine == 2001);
    CHECK(oc.n_coarse == 1001);
    CHECK(oc.w.raw_rel <= 1.2e-6);
    CHECK(oc.w.refined_rel <= 1e-7);
    CHECK(oc.w.refined_rel < oc.w.raw_rel);
    CHECK(oc.w.order >= 1.9);
    CHECK(oc.w.order <= 2.1);
    CHECK(oc.a1.refined_rel <= 1e-6);
    CHECK(oc.a2.refined_rel <= 1e-6);

    // zigzag: every field the oracle matches is essentially exact
    const TorsionSolution zz = solve(reference_problem(6, 0));
    const OracleComparison zc = compare_with_oracle(zz, 1001);
    CHECK(zc.w.raw_rel == 0.0);
    CHECK(zc.w.refined_rel == 0.0);
    CHECK(std::isnan(zc.w.order));
    CHECK(zc.a2.raw_rel <= 1e-12);
}
