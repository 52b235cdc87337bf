#include "nanoshell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nanoshell {

namespace {

// Fornberg's recursion on integer offsets; entries stay rational with small
// denominators, so extended precision holds them essentially exactly.
std::vector<long double> fd_weights_ld(const std::vector<int>& offsets, int order) {
    const int n = static_cast<int>(offsets.size());
    if (order < 0 || n < order + 1)
        throw std::invalid_argument("fd weights: need at least order+1 stencil points");
    const int m = order;
    std::vector<long double> wtab(static_cast<std::size_t>(n) * (m + 1), 0.0L);
    const auto at = [&](int i, int k) -> long double& {
        return wtab[static_cast<std::size_t>(i) * (m + 1) + k];
    };
    long double c1 = 1.0L;
    long double c4 = offsets[0];
    at(0, 0) = 1.0L;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        long double c2 = 1.0L;
        const long double c5 = c4;
        c4 = offsets[i];
        for (int j = 0; j < i; ++j) {
            const long double c3 = offsets[i] - offsets[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    at(i, k) = c1 * (k * at(i - 1, k - 1) - c5 * at(i - 1, k)) / c2;
                at(i, 0) = -c1 * c5 * at(i - 1, 0) / c2;
            }
            for (int k = mn; k >= 1; --k) at(j, k) = (c4 * at(j, k) - k * at(j, k - 1)) / c3;
            at(j, 0) = c4 * at(j, 0) / c3;
        }
        c1 = c2;
    }
    std::vector<long double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = at(i, m);
    return out;
}

// Band storage with kl extra upper diagonals for pivoting fill,
// A(i,j) <-> data[(i - j + kl + ku) * n + j].
class BandedMatrix {
public:
    BandedMatrix(int n, int kl, int ku)
        : n_(n), kl_(kl), ku_(ku),
          data_(static_cast<std::size_t>(2 * kl + ku + 1) * n, 0.0L), piv_(n, 0) {}

    long double& at(int i, int j) {
        return data_[static_cast<std::size_t>(i - j + kl_ + ku_) * n_ + j];
    }

    bool in_band(int i, int j) const {
        const int d = i - j;
        return d <= kl_ && d >= -(kl_ + ku_);
    }

    void factor() {
        for (int k = 0; k < n_; ++k) {
            const int last_row = std::min(n_ - 1, k + kl_);
            int p = k;
            long double best = std::abs(at(k, k));
            for (int i = k + 1; i <= last_row; ++i) {
                const long double v = std::abs(at(i, k));
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
            if (best == 0.0L) throw SolverError("banded solve: singular matrix");
            piv_[static_cast<std::size_t>(k)] = p;
            const int last_col = std::min(n_ - 1, k + kl_ + ku_);
            if (p != k)
                for (int j = k; j <= last_col; ++j) std::swap(at(k, j), at(p, j));
            for (int i = k + 1; i <= last_row; ++i) {
                const long double mult = at(i, k) / at(k, k);
                at(i, k) = mult;
                for (int j = k + 1; j <= last_col; ++j) at(i, j) -= mult * at(k, j);
            }
        }
    }

    void solve(std::vector<long double>& b) const {
        auto& self = const_cast<BandedMatrix&>(*this);
        for (int k = 0; k < n_; ++k) {
            const int p = piv_[static_cast<std::size_t>(k)];
            if (p != k) std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(p)]);
            const int last_row = std::min(n_ - 1, k + kl_);
            for (int i = k + 1; i <= last_row; ++i)
                b[static_cast<std::size_t>(i)] -= self.at(i, k) * b[static_cast<std::size_t>(k)];
        }
        for (int k = n_ - 1; k >= 0; --k) {
            const int last_col = std::min(n_ - 1, k + kl_ + ku_);
            long double acc = b[static_cast<std::size_t>(k)];
            for (int j = k + 1; j <= last_col; ++j)
                acc -= self.at(k, j) * b[static_cast<std::size_t>(j)];
            b[static_cast<std::size_t>(k)] = acc / self.at(k, k);
        }
    }

private:
    int n_, kl_, ku_;
    std::vector<long double> data_;
    std::vector<int> piv_;
};

} // namespace

std::vector<double> fd_weights(const std::vector<int>& offsets, int order, double h) {
    const auto w = fd_weights_ld(offsets, order);
    long double hm = 1.0L;
    for (int k = 0; k < order; ++k) hm *= static_cast<long double>(h);
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = static_cast<double>(w[i] / hm);
    return out;
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss-legendre: need at least one point");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

ResultantSample quadrature_resultants(const AxisymmetricField& f, const StiffnessTensor& c,
                                      const ShellGeometry& g, double x1, int points) {
    const QuadratureRule rule = gauss_legendre(points);
    ResultantSample s{};
    for (int k = 0; k < points; ++k) {
        const double zeta = g.eps * rule.nodes[static_cast<std::size_t>(k)];
        const double wq = g.eps * rule.weights[static_cast<std::size_t>(k)];
        const MembraneStrain e = strain_components(f, x1, zeta, g);
        Eigen::Matrix3d strain = Eigen::Matrix3d::Zero();
        strain(0, 0) = e.e11;
        strain(1, 1) = e.e22;
        strain(0, 1) = strain(1, 0) = e.e12;
        const Eigen::Matrix3d stress = c.apply(strain);
        const double stretch = 1.0 + zeta / g.rho0;
        s.F11 += wq * stretch * stress(0, 0);
        s.F21 += wq * stretch * stress(1, 0);
        s.F22 += wq * stress(1, 1);
        s.F12 += wq * stress(0, 1);
        s.M11 += wq * zeta * stretch * stress(0, 0);
        s.M21 += wq * zeta * stretch * stress(1, 0);
        s.M22 += wq * zeta * stress(1, 1);
        s.M12 += wq * zeta * stress(0, 1);
    }
    return s;
}

std::vector<double> solve_linear_bvp(const OdeCoefficients& ode, const MomentForm& m11,
                                     double half_length, int n,
                                     const std::function<double(double)>& rhs, double d0_left,
                                     double d1_left, double d1_right, double d0_right) {
    if (n < 9 || n % 2 == 0)
        throw std::invalid_argument("bvp solve: node count must be odd and >= 9");
    const double l = half_length;
    const double h = 2.0 * l / (n - 1);
    const int kl = 6, ku = 6;
    BandedMatrix a(n, kl, ku);
    std::vector<long double> b(static_cast<std::size_t>(n), 0.0L);

    const auto scaled = [&](const std::vector<int>& offsets, int order,
                            long double factor) {
        auto w = fd_weights_ld(offsets, order);
        long double hm = 1.0L;
        for (int k = 0; k < order; ++k) hm *= static_cast<long double>(h);
        for (auto& v : w) v = v / hm * factor;
        return w;
    };
    const auto combine = [](std::vector<long double> lhs, const std::vector<long double>& r) {
        for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] += r[k];
        return lhs;
    };

    // Boundary operators: g0 uses a 6-point w'' stencil, g1 a 7-point w'''
    // plus w' stencil; both fourth order.
    const std::vector<int> fwd6{0, 1, 2, 3, 4, 5};
    const std::vector<int> fwd7{0, 1, 2, 3, 4, 5, 6};
    const std::vector<int> bwd6{0, -1, -2, -3, -4, -5};
    const std::vector<int> bwd7{0, -1, -2, -3, -4, -5, -6};

    auto g0_left = scaled(fwd6, 2, m11.m_wpp);
    g0_left[0] += m11.m_w;
    auto g0_right = scaled(bwd6, 2, m11.m_wpp);
    g0_right[0] += m11.m_w;
    const auto g1_left = combine(scaled(fwd7, 3, m11.m_wpp), scaled(fwd7, 1, m11.m_w));
    const auto g1_right = combine(scaled(bwd7, 3, m11.m_wpp), scaled(bwd7, 1, m11.m_w));

    const auto anchored_row = [&](int row, int anchor, const std::vector<int>& offsets,
                                  const std::vector<long double>& weights) {
        for (std::size_t k = 0; k < offsets.size(); ++k)
            a.at(row, anchor + offsets[k]) += weights[k];
    };

    anchored_row(0, 0, fwd6, g0_left);
    b[0] = d0_left;
    anchored_row(1, 0, fwd7, g1_left);
    b[1] = d1_left;
    anchored_row(n - 2, n - 1, bwd7, g1_right);
    b[static_cast<std::size_t>(n - 2)] = d1_right;
    anchored_row(n - 1, n - 1, bwd6, g0_right);
    b[static_cast<std::size_t>(n - 1)] = d0_right;

    const auto w4 = scaled({-2, -1, 0, 1, 2}, 4, ode.c1);
    const auto w2 = scaled({-1, 0, 1}, 2, ode.c2);
    for (int i = 2; i <= n - 3; ++i) {
        anchored_row(i, i, {-2, -1, 0, 1, 2}, w4);
        anchored_row(i, i, {-1, 0, 1}, w2);
        a.at(i, i) += ode.c3;
        b[static_cast<std::size_t>(i)] = rhs(-l + h * i);
    }

    // Row equilibration keeps the boundary rows on the same scale as the
    // h^-4 interior rows.
    for (int i = 0; i < n; ++i) {
        long double m = 0.0L;
        for (int j = std::max(0, i - kl); j <= std::min(n - 1, i + ku); ++j)
            m = std::max(m, std::abs(a.at(i, j)));
        if (m == 0.0L) throw SolverError("bvp solve: empty row in assembly");
        for (int j = std::max(0, i - kl); j <= std::min(n - 1, i + ku); ++j) a.at(i, j) /= m;
        b[static_cast<std::size_t>(i)] /= m;
    }

    a.factor();
    a.solve(b);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = static_cast<double>(b[static_cast<std::size_t>(i)]);
    return out;
}

FdSolution fd_solve(const DerivedCoefficients& coeffs, const ShellGeometry& g, double t,
                    int n) {
    if (n < 201 || n % 2 == 0)
        throw std::invalid_argument("fd solve: node count must be odd and >= 201");
    const double l = g.half_length;
    const double h = 2.0 * l / (n - 1);
    const OdeCoefficients& ode = coeffs.ode;
    const MomentForm& mf = coeffs.m11;

    FdSolution sol;
    sol.x.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sol.x[static_cast<std::size_t>(i)] = -l + h * i;

    const double d0 = -mf.m_t * t;
    sol.w = solve_linear_bvp(ode, mf, l, n, [&](double) { return -ode.c4 * t; }, d0, 0.0,
                             0.0, d0);

    // w'' on the grid: central interior, fourth-order one-sided at the ends.
    std::vector<double> wpp(static_cast<std::size_t>(n));
    const auto end6 = fd_weights({0, 1, 2, 3, 4, 5}, 2, h);
    for (int i = 1; i < n - 1; ++i)
        wpp[static_cast<std::size_t>(i)] =
            (sol.w[static_cast<std::size_t>(i - 1)] - 2.0 * sol.w[static_cast<std::size_t>(i)] +
             sol.w[static_cast<std::size_t>(i + 1)]) /
            (h * h);
    wpp[0] = 0.0;
    wpp[static_cast<std::size_t>(n - 1)] = 0.0;
    for (int k = 0; k < 6; ++k) {
        wpp[0] += end6[static_cast<std::size_t>(k)] * sol.w[static_cast<std::size_t>(k)];
        wpp[static_cast<std::size_t>(n - 1)] +=
            end6[static_cast<std::size_t>(k)] * sol.w[static_cast<std::size_t>(n - 1 - k)];
    }

    // Gradient recovery, trapezoid from the center node outward. The gradient
    // relations act on the decaying part of w; C already carries the rest.
    const GradientCoefficients& gc = coeffs.grad;
    const double w_part = -ode.c4 / ode.c3 * t;
    std::vector<double> a1p(static_cast<std::size_t>(n)), a2p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double wh = sol.w[static_cast<std::size_t>(i)] - w_part;
        const double wp = wpp[static_cast<std::size_t>(i)];
        a1p[static_cast<std::size_t>(i)] = gc.A1 * wp + gc.B1 * wh + gc.C1 * t;
        a2p[static_cast<std::size_t>(i)] = gc.A2 * wp + gc.B2 * wh + gc.C2 * t;
    }
    sol.a1.assign(static_cast<std::size_t>(n), 0.0);
    sol.a2.assign(static_cast<std::size_t>(n), 0.0);
    const int c = (n - 1) / 2;
    for (int i = c + 1; i < n; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        sol.a1[s] = sol.a1[s - 1] + 0.5 * h * (a1p[s - 1] + a1p[s]);
        sol.a2[s] = sol.a2[s - 1] + 0.5 * h * (a2p[s - 1] + a2p[s]);
    }
    for (int i = c - 1; i >= 0; --i) {
        const std::size_t s = static_cast<std::size_t>(i);
        sol.a1[s] = sol.a1[s + 1] - 0.5 * h * (a1p[s] + a1p[s + 1]);
        sol.a2[s] = sol.a2[s + 1] - 0.5 * h * (a2p[s] + a2p[s + 1]);
    }
    return sol;
}

namespace {

FieldComparison compare_field(const std::vector<double>& fine, const std::vector<double>& coarse,
                              const std::vector<double>& exact_fine,
                              const std::vector<double>& exact_coarse) {
    const auto rel = [](const std::vector<double>& got, const std::vector<double>& want) {
        double emax = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < got.size(); ++i) {
            emax = std::max(emax, std::abs(got[i] - want[i]));
            scale = std::max(scale, std::abs(want[i]));
        }
        return emax / (scale + 1e-300);
    };
    FieldComparison fc;
    fc.raw_rel = rel(fine, exact_fine);
    const double raw_coarse = rel(coarse, exact_coarse);
    // One Richardson step on the nested coarse nodes removes the h^2 term.
    std::vector<double> refined(coarse.size());
    for (std::size_t i = 0; i < coarse.size(); ++i)
        refined[i] = (4.0 * fine[2 * i] - coarse[i]) / 3.0;
    fc.refined_rel = rel(refined, exact_coarse);
    fc.order = (fc.raw_rel > 1e-12 && raw_coarse > 1e-12)
                   ? std::log2(raw_coarse / fc.raw_rel)
                   : std::numeric_limits<double>::quiet_NaN();
    return fc;
}

} // namespace

OracleComparison compare_with_oracle(const TorsionSolution& sol, int n) {
    if (n < 401 || n % 4 != 1)
        throw std::invalid_argument(
            "oracle comparison: need n >= 401 with n % 4 == 1 so the embedded coarse grid "
            "keeps >= 201 nodes");
    const int nc = (n + 1) / 2;
    const FdSolution fine = fd_solve(sol.coefficients(), sol.geometry(), sol.applied_traction(), n);
    const FdSolution coarse =
        fd_solve(sol.coefficients(), sol.geometry(), sol.applied_traction(), nc);

    const auto sample = [&](const std::vector<double>& x, auto&& get) {
        std::vector<double> out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = get(x[i]);
        return out;
    };
    OracleComparison oc;
    oc.n_fine = n;
    oc.n_coarse = nc;
    oc.w = compare_field(fine.w, coarse.w,
                         sample(fine.x, [&](double x) { return sol.w(x, 0); }),
                         sample(coarse.x, [&](double x) { return sol.w(x, 0); }));
    oc.a1 = compare_field(fine.a1, coarse.a1,
                          sample(fine.x, [&](double x) { return sol.a1(x, 0); }),
                          sample(coarse.x, [&](double x) { return sol.a1(x, 0); }));
    oc.a2 = compare_field(fine.a2, coarse.a2,
                          sample(fine.x, [&](double x) { return sol.a2(x, 0); }),
                          sample(coarse.x, [&](double x) { return sol.a2(x, 0); }));
    return oc;
}

} // namespace nanoshell
