#include "nanoshell/config.hpp"
#include "nanoshell/oracle.hpp"
#include "nanoshell/report.hpp"
#include "nanoshell/torsion.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace nanoshell;

namespace {

struct Overrides {
    std::optional<double> E1, E2, G, nu12, nu21;
    std::optional<double> bond_length, eps, slenderness, t;
    std::optional<double> verify_tol, residual_tol;
    std::optional<int> oracle_points;
    std::optional<std::string> units;
};

struct CommonArgs {
    std::optional<std::string> config_path;
    std::optional<std::string> out_path;
    Overrides ov;
    bool isotropic = false;
    bool dump_config = false;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "config file with key = value lines");
    cmd->add_option("--out", args.out_path, "write the primary artifact here instead of stdout");
    cmd->add_option("--E1", args.ov.E1, "axial sheet modulus");
    cmd->add_option("--E2", args.ov.E2, "circumferential sheet modulus");
    cmd->add_option("--G", args.ov.G, "sheet shear modulus");
    cmd->add_option("--nu12", args.ov.nu12, "major Poisson ratio");
    cmd->add_option("--nu21", args.ov.nu21, "minor Poisson ratio");
    cmd->add_option("--bond-length", args.ov.bond_length, "bond length, nm");
    cmd->add_option("--eps", args.ov.eps, "half thickness, nm");
    cmd->add_option("--slenderness", args.ov.slenderness, "radius to half-length ratio");
    cmd->add_option("--t", args.ov.t, "applied shear traction resultant, nN/nm");
    cmd->add_option("--units", args.ov.units, "moduli units for input and echo: gpa or tpa");
    cmd->add_option("--verify-tol", args.ov.verify_tol, "oracle deviation tolerance");
    cmd->add_option("--residual-tol", args.ov.residual_tol, "equilibrium residual tolerance");
    cmd->add_flag("--isotropic", args.isotropic,
                  "replace the sheet by its isotropic average before solving");
    cmd->add_flag("--dump-config", args.dump_config,
                  "print the effective config to stdout and exit");
}

RunConfig merge_config(const CommonArgs& args) {
    RunConfig cfg = args.config_path ? load_config(*args.config_path) : RunConfig{};
    const Overrides& o = args.ov;
    if (o.E1) cfg.E1 = *o.E1;
    if (o.E2) cfg.E2 = *o.E2;
    if (o.G) cfg.G = *o.G;
    if (o.nu12) cfg.nu12 = *o.nu12;
    if (o.nu21) cfg.nu21 = *o.nu21;
    if (o.bond_length) cfg.bond_length = *o.bond_length;
    if (o.eps) cfg.eps = *o.eps;
    if (o.slenderness) cfg.slenderness = *o.slenderness;
    if (o.t) cfg.t = *o.t;
    if (o.verify_tol) cfg.verify_tol = *o.verify_tol;
    if (o.residual_tol) cfg.residual_tol = *o.residual_tol;
    if (o.oracle_points) cfg.oracle_points = *o.oracle_points;
    if (o.units) cfg.units = parse_units(*o.units);
    validate(cfg);
    return cfg;
}

void write_text(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + *path + "'");
    f << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + path + "'");
    f << text;
}

// Linearized response assumes the traction stays comparable to the half
// thickness in this unit system. Advisory only.
void warn_if_traction_large(const RunConfig& cfg) {
    if (std::abs(cfg.t) > cfg.eps)
        std::cerr << "warning: applied traction " << format_sig(cfg.t)
                  << " nN/nm exceeds the half thickness " << format_sig(cfg.eps)
                  << " nm in magnitude; the linearized response may be inaccurate\n";
}

int parse_full_int(const std::string& s) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError("expected an integer, got '" + s + "'");
    return v;
}

std::pair<int, int> parse_m_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = parse_full_int(s);
        return {v, v};
    }
    return {parse_full_int(s.substr(0, dots)), parse_full_int(s.substr(dots + 2))};
}

int run_tensor(const CommonArgs& args, int n, int m) {
    const RunConfig cfg = merge_config(args);
    if (args.dump_config) {
        std::cout << dump_config(cfg);
        return 0;
    }
    const ChiralIndices idx(n, m);
    const ElasticModuli mod = args.isotropic ? cfg.isotropic_moduli() : cfg.moduli();
    write_text(args.out_path, tensor_json(idx, cfg, mod).dump(2) + "\n");
    return 0;
}

int run_torsion(const CommonArgs& args, int n, int m, bool verify,
                const std::optional<std::string>& fields_path) {
    const RunConfig cfg = merge_config(args);
    if (args.dump_config) {
        std::cout << dump_config(cfg);
        return 0;
    }
    warn_if_traction_large(cfg);
    const ChiralIndices idx(n, m);
    const ShellGeometry g = effective_geometry(idx, cfg.bond_length, cfg.eps, cfg.slenderness);
    const ElasticModuli mod = args.isotropic ? cfg.isotropic_moduli() : cfg.moduli();
    const TorsionSolution sol = solve({idx, mod, g, cfg.t});
    const ResidualReport rr = residual_report(sol);

    std::optional<OracleComparison> oc;
    std::string failure;
    if (verify) {
        oc = compare_with_oracle(sol, cfg.oracle_points);
        const auto check = [&](const char* name, const FieldComparison& fc) {
            if (!(fc.refined_rel <= cfg.verify_tol))
                failure += std::string(failure.empty() ? "" : "; ") + name +
                           " deviates from the grid oracle by " + format_sig(fc.refined_rel);
        };
        check("w", oc->w);
        check("a1", oc->a1);
        check("a2", oc->a2);
        for (const double b : rr.boundary)
            if (!(b <= cfg.residual_tol)) {
                failure += std::string(failure.empty() ? "" : "; ") +
                           "end condition residual " + format_sig(b);
                break;
            }
        if (!(rr.r1 <= cfg.residual_tol && rr.r2 <= cfg.residual_tol &&
              rr.r3 <= cfg.residual_tol))
            failure += std::string(failure.empty() ? "" : "; ") + "equilibrium residuals " +
                       format_sig(std::max({rr.r1, rr.r2, rr.r3}));
    }

    write_text(args.out_path,
               torsion_json(sol, rr, oc ? &*oc : nullptr, mod, cfg.units).dump(2) + "\n");
    if (fields_path) write_file(*fields_path, fields_csv(sol));
    if (!failure.empty()) {
        std::cerr << "verification failed: " << failure << "\n";
        return 4;
    }
    return 0;
}

int run_sweep(const CommonArgs& args, int n, const std::string& m_range,
              const std::optional<std::string>& svg_path) {
    const RunConfig cfg = merge_config(args);
    if (args.dump_config) {
        std::cout << dump_config(cfg);
        return 0;
    }
    warn_if_traction_large(cfg);
    const auto [m_lo, m_hi] = parse_m_range(m_range);
    if (m_lo < 0 || m_hi < m_lo || m_hi > n)
        throw ConfigError("sweep: --m range must satisfy 0 <= lo <= hi <= n, got '" +
                          m_range + "' with n=" + std::to_string(n));
    const ElasticModuli mod = args.isotropic ? cfg.isotropic_moduli() : cfg.moduli();
    const SweepRequest req{n,       m_lo,    m_hi,           mod,
                           cfg.bond_length, cfg.eps, cfg.slenderness, cfg.t};
    const std::vector<SweepRow> rows = sweep(req);

    write_text(args.out_path, sweep_csv(rows));
    if (svg_path) write_file(*svg_path, sweep_svg(rows));

    int failed = 0;
    for (const auto& r : rows)
        if (!r.error.empty()) {
            ++failed;
            std::cerr << "warning: (" << r.n << "," << r.m << ") skipped: " << r.error << "\n";
        }
    return failed > 0 ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthotropic cylindrical shell torsion toolkit"};
    app.require_subcommand(1);

    CommonArgs tensor_args, torsion_args, sweep_args;
    int tensor_n = 0, tensor_m = 0;
    int torsion_n = 0, torsion_m = 0;
    int sweep_n = 0;
    std::string sweep_m;
    bool verify = false;
    std::optional<std::string> fields_path, svg_path;
    std::optional<int> oracle_points_torsion;

    CLI::App* tensor_cmd =
        app.add_subcommand("tensor", "rotated stiffness and plane coefficients for one tube");
    tensor_cmd->add_option("--n", tensor_n, "first chiral index")->required();
    tensor_cmd->add_option("--m", tensor_m, "second chiral index")->required();
    add_common_options(tensor_cmd, tensor_args);

    CLI::App* torsion_cmd =
        app.add_subcommand("torsion", "closed-form end-loaded torsion solution for one tube");
    torsion_cmd->add_option("--n", torsion_n, "first chiral index")->required();
    torsion_cmd->add_option("--m", torsion_m, "second chiral index")->required();
    torsion_cmd->add_flag("--verify", verify,
                          "cross-check against the finite-difference oracle, exit 4 on failure");
    torsion_cmd->add_option("--fields", fields_path, "also write sampled fields as CSV here");
    torsion_cmd->add_option("--oracle-points", oracle_points_torsion,
                            "oracle grid size used by --verify");
    add_common_options(torsion_cmd, torsion_args);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "descriptor table over a range of m at fixed n");
    sweep_cmd->add_option("--n", sweep_n, "first chiral index")->required();
    sweep_cmd->add_option("--m", sweep_m, "m value or LO..HI range")->required();
    sweep_cmd->add_option("--svg", svg_path, "also write a quick-look SVG here");
    add_common_options(sweep_cmd, sweep_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tensor_cmd->parsed()) return run_tensor(tensor_args, tensor_n, tensor_m);
        if (torsion_cmd->parsed()) {
            if (oracle_points_torsion) torsion_args.ov.oracle_points = oracle_points_torsion;
            return run_torsion(torsion_args, torsion_n, torsion_m, verify, fields_path);
        }
        if (sweep_cmd->parsed()) return run_sweep(sweep_args, sweep_n, sweep_m, svg_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
