#pragma once

#include "nanoshell/config.hpp"
#include "nanoshell/oracle.hpp"
#include "nanoshell/torsion.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace nanoshell {

// Fixed 12-significant-digit rendering used by every text artifact.
std::string format_sig(double v);

// Column contract:
// n,m,psi_rad,rho0_nm,torsion_angle_rad_per_nm,torsion_stiffness_nN_nm2,axial_strain
// Rows that failed to solve are omitted here and reported separately.
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Quick-look artifact: the three descriptor columns against m, stacked panels.
std::string sweep_svg(const std::vector<SweepRow>& rows);

// Sampled midsurface fields, header x_nm,w_nm,a1_nm,a2_nm.
std::string fields_csv(const TorsionSolution& sol, int points = 201);

// Scaled interior and end-condition residual maxima.
struct ResidualReport {
    double r1, r2, r3;
    std::array<double, 4> boundary;
};

ResidualReport residual_report(const TorsionSolution& sol, int samples = 101);

nlohmann::json moduli_json(const ElasticModuli& gpa, ModuliUnits units);
nlohmann::json tensor_json(const ChiralIndices& idx, const RunConfig& cfg,
                           const ElasticModuli& gpa);
nlohmann::json torsion_json(const TorsionSolution& sol, const ResidualReport& res,
                            const OracleComparison* verify, const ElasticModuli& gpa,
                            ModuliUnits units);

} // namespace nanoshell
