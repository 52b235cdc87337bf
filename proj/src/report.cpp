#include "nanoshell/report.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace nanoshell {

std::string format_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "n,m,psi_rad,rho0_nm,torsion_angle_rad_per_nm,torsion_stiffness_nN_nm2,axial_strain\n";
    for (const auto& r : rows) {
        if (!r.error.empty()) continue;
        os << r.n << ',' << r.m << ',' << format_sig(r.psi) << ',' << format_sig(r.rho0)
           << ',' << format_sig(r.torsion_angle) << ',' << format_sig(r.torsion_stiffness)
           << ',' << format_sig(r.axial_strain) << '\n';
    }
    return os.str();
}

namespace {

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void svg_panel(std::ostringstream& os, const std::vector<SweepRow>& rows, int panel,
               const char* title, double SweepRow::* field) {
    const int width = 640, panel_h = 210, ml = 80, mr = 20, mt = 28, mb = 36;
    const int top = panel * panel_h;
    const double x0 = ml, x1 = width - mr;
    const double y0 = top + mt, y1 = top + panel_h - mb;

    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows)
        if (r.error.empty()) pts.emplace_back(static_cast<double>(r.m), r.*field);

    os << "<text x=\"" << ml << "\" y=\"" << top + 18
       << "\" font-family=\"monospace\" font-size=\"13\">" << title << "</text>\n";
    os << "<rect x=\"" << fmt2(x0) << "\" y=\"" << fmt2(y0) << "\" width=\"" << fmt2(x1 - x0)
       << "\" height=\"" << fmt2(y1 - y0) << "\" fill=\"none\" stroke=\"#888\"/>\n";
    if (pts.empty()) {
        os << "<text x=\"" << fmt2(0.5 * (x0 + x1)) << "\" y=\"" << fmt2(0.5 * (y0 + y1))
           << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">no "
              "solved rows</text>\n";
        return;
    }
    double mx0 = pts.front().first, mx1 = pts.back().first;
    double v0 = pts.front().second, v1 = v0;
    for (const auto& p : pts) {
        v0 = std::min(v0, p.second);
        v1 = std::max(v1, p.second);
    }
    if (mx1 == mx0) {
        mx0 -= 0.5;
        mx1 += 0.5;
    }
    const double pad = (v1 - v0 == 0.0) ? std::abs(v0) * 0.1 + 1e-12 : (v1 - v0) * 0.05;
    const double lo = v0 - pad, hi = v1 + pad;
    const auto px = [&](double m) { return x0 + (m - mx0) / (mx1 - mx0) * (x1 - x0); };
    const auto py = [&](double v) { return y1 - (v - lo) / (hi - lo) * (y1 - y0); };

    os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ' ';
        os << fmt2(px(pts[i].first)) << ',' << fmt2(py(pts[i].second));
    }
    os << "\"/>\n";
    for (const auto& p : pts)
        os << "<circle cx=\"" << fmt2(px(p.first)) << "\" cy=\"" << fmt2(py(p.second))
           << "\" r=\"2.5\" fill=\"#1f77b4\"/>\n";
    os << "<text x=\"" << ml - 6 << "\" y=\"" << fmt2(py(v1) + 4)
       << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" << fmt6(v1)
       << "</text>\n";
    os << "<text x=\"" << ml - 6 << "\" y=\"" << fmt2(py(v0) + 4)
       << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" << fmt6(v0)
       << "</text>\n";
    for (const auto& p : pts)
        os << "<text x=\"" << fmt2(px(p.first)) << "\" y=\"" << fmt2(y1 + 16)
           << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">"
           << fmt6(p.first) << "</text>\n";
    os << "<text x=\"" << fmt2(0.5 * (x0 + x1)) << "\" y=\"" << fmt2(y1 + 30)
       << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">m</text>\n";
}

} // namespace

std::string sweep_svg(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    const int width = 640, height = 3 * 210;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg_panel(os, rows, 0, "torsion_angle_rad_per_nm", &SweepRow::torsion_angle);
    svg_panel(os, rows, 1, "torsion_stiffness_nN_nm2", &SweepRow::torsion_stiffness);
    svg_panel(os, rows, 2, "axial_strain", &SweepRow::axial_strain);
    os << "</svg>\n";
    return os.str();
}

std::string fields_csv(const TorsionSolution& sol, int points) {
    std::ostringstream os;
    os << "x_nm,w_nm,a1_nm,a2_nm\n";
    const double l = sol.geometry().half_length;
    for (int i = 0; i < points; ++i) {
        const double x = -l + 2.0 * l * i / (points - 1);
        os << format_sig(x) << ',' << format_sig(sol.w(x, 0)) << ','
           << format_sig(sol.a1(x, 0)) << ',' << format_sig(sol.a2(x, 0)) << '\n';
    }
    return os.str();
}

ResidualReport residual_report(const TorsionSolution& sol, int samples) {
    const ResultantField rf(sol, sol.plane(), sol.geometry());
    const double l = sol.geometry().half_length;
    const double r = sol.geometry().rho0;
    const double ts = std::abs(sol.applied_traction()) > 0.0 ? std::abs(sol.applied_traction()) : 1.0;
    ResidualReport rep{0.0, 0.0, 0.0, {0.0, 0.0, 0.0, 0.0}};
    for (int i = 0; i < samples; ++i) {
        const double x = -l + 2.0 * l * i / (samples - 1);
        const EquilibriumResidual res = equilibrium_residual(rf, {}, x);
        rep.r1 = std::max(rep.r1, std::abs(res.r1) * l / ts);
        rep.r2 = std::max(rep.r2, std::abs(res.r2) * l / ts);
        rep.r3 = std::max(rep.r3, std::abs(res.r3) * r / ts);
    }
    const auto br = boundary_residual(rf, sol.applied_traction());
    rep.boundary = {std::abs(br[0]) / ts, std::abs(br[1]) / (ts * r),
                    std::abs(br[2]) * l / (ts * r), std::abs(br[3]) / ts};
    return rep;
}

nlohmann::json moduli_json(const ElasticModuli& gpa, ModuliUnits units) {
    const double f = units == ModuliUnits::tpa ? 1e-3 : 1.0;
    return {{"E1", gpa.E1 * f}, {"E2", gpa.E2 * f},   {"G", gpa.G * f},
            {"nu12", gpa.nu12}, {"nu21", gpa.nu21}};
}

nlohmann::json tensor_json(const ChiralIndices& idx, const RunConfig& cfg,
                           const ElasticModuli& gpa) {
    const double psi = rotation_angle_psi(idx);
    const StiffnessTensor ct = conjugate(orthotropic_stiffness(gpa), psi);
    const PlaneCoefficients pc = plane_coefficients(ct);
    const AxialIndices ax = axial_vector(idx);
    const double f = cfg.units == ModuliUnits::tpa ? 1e-3 : 1.0;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es(ct.mandel());
    std::vector<double> eig(6);
    for (int i = 0; i < 6; ++i) eig[static_cast<std::size_t>(i)] = es.eigenvalues()(i) * f;
    std::sort(eig.begin(), eig.end());

    nlohmann::json j;
    j["n"] = idx.n;
    j["m"] = idx.m;
    j["psi_rad"] = psi;
    j["chiral_angle_rad"] = chiral_angle(idx);
    j["rho0_nm"] = nominal_radius(idx, cfg.bond_length);
    j["axial_vector"] = {{"t1", ax.t1}, {"t2", ax.t2}};
    j["units"] = to_string(cfg.units);
    j["moduli"] = moduli_json(gpa, cfg.units);

    // 21 independent components, upper triangle in slot order 11,22,33,23,13,12
    constexpr int slot[6][2] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};
    nlohmann::json stiff;
    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b) {
            const std::string key = "c" + std::to_string(slot[a][0] + 1) +
                                    std::to_string(slot[a][1] + 1) +
                                    std::to_string(slot[b][0] + 1) +
                                    std::to_string(slot[b][1] + 1);
            stiff[key] = ct(slot[a][0], slot[a][1], slot[b][0], slot[b][1]) * f;
        }
    j["stiffness"] = stiff;
    j["plane_coefficients"] = {{"a11", pc.a11 * f}, {"a22", pc.a22 * f}, {"a12", pc.a12 * f},
                               {"b11", pc.b11 * f}, {"b22", pc.b22 * f}, {"b12", pc.b12 * f},
                               {"c11", pc.c11 * f}, {"c22", pc.c22 * f}, {"c12", pc.c12 * f}};
    j["mandel_eigenvalues"] = eig;
    return j;
}

nlohmann::json torsion_json(const TorsionSolution& sol, const ResidualReport& res,
                            const OracleComparison* verify, const ElasticModuli& gpa,
                            ModuliUnits units) {
    nlohmann::json j;
    j["n"] = sol.indices().n;
    j["m"] = sol.indices().m;
    j["psi_rad"] = sol.rotation_angle();
    j["rho0_nm"] = sol.geometry().rho0;
    j["eps_nm"] = sol.geometry().eps;
    j["half_length_nm"] = sol.geometry().half_length;
    j["t_nN_per_nm"] = sol.applied_traction();
    j["units"] = to_string(units);
    j["moduli"] = moduli_json(gpa, units);
    const OdeCoefficients& oc = sol.coefficients().ode;
    const GradientCoefficients& gc = sol.coefficients().grad;
    const MomentForm& mf = sol.coefficients().m11;
    j["ode"] = {{"c1", oc.c1}, {"c2", oc.c2}, {"c3", oc.c3}, {"c4", oc.c4}};
    j["gradients"] = {{"A1", gc.A1}, {"B1", gc.B1}, {"C1", gc.C1},
                      {"A2", gc.A2}, {"B2", gc.B2}, {"C2", gc.C2}};
    j["moment_form"] = {{"m_wpp", mf.m_wpp}, {"m_w", mf.m_w}, {"m_t", mf.m_t}};
    j["roots"] = {{"alpha1_re", sol.roots().alpha1.real()},
                  {"alpha1_im", sol.roots().alpha1.imag()},
                  {"alpha2_re", sol.roots().alpha2.real()},
                  {"alpha2_im", sol.roots().alpha2.imag()},
                  {"residual_scaled", sol.roots().residual_scaled}};
    j["descriptors"] = {{"torsion_angle_rad_per_nm", sol.torsion_angle()},
                        {"torsion_stiffness_nN_nm2", sol.torsion_stiffness()},
                        {"axial_strain", sol.axial_strain()},
                        {"torque_nN_nm", sol.torque()}};
    j["residuals"] = {{"r1_scaled", res.r1},
                      {"r2_scaled", res.r2},
                      {"r3_scaled", res.r3},
                      {"boundary_scaled", res.boundary}};
    if (verify) {
        const auto field = [](const FieldComparison& fc) {
            nlohmann::json v = {{"raw_rel", fc.raw_rel}, {"refined_rel", fc.refined_rel}};
            if (std::isnan(fc.order))
                v["order"] = nullptr;
            else
                v["order"] = fc.order;
            return v;
        };
        j["verification"] = {{"n_fine", verify->n_fine},
                             {"n_coarse", verify->n_coarse},
                             {"w", field(verify->w)},
                             {"a1", field(verify->a1)},
                             {"a2", field(verify->a2)}};
    }
    return j;
}

} // namespace nanoshell
