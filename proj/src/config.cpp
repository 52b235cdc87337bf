#include "nanoshell/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nanoshell {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects a number, got '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    int v = 0;
    const auto* first = value.data();
    const auto* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw ConfigError("config: key '" + key + "' expects an integer, got '" + value + "'");
    return v;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string to_string(ModuliUnits u) {
    return u == ModuliUnits::gpa ? "gpa" : "tpa";
}

ModuliUnits parse_units(const std::string& s) {
    if (s == "gpa") return ModuliUnits::gpa;
    if (s == "tpa") return ModuliUnits::tpa;
    throw ConfigError("config: units must be 'gpa' or 'tpa', got '" + s + "'");
}

ElasticModuli RunConfig::moduli() const {
    const double f = units == ModuliUnits::tpa ? 1000.0 : 1.0;
    try {
        return ElasticModuli(E1 * f, E2 * f, G * f, nu12, nu21);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

ElasticModuli RunConfig::isotropic_moduli() const {
    const double f = units == ModuliUnits::tpa ? 1000.0 : 1.0;
    const double E = 0.5 * (E1 + E2) * f;
    const double nu = 0.5 * (nu12 + nu21);
    try {
        return ElasticModuli::isotropic(E, nu);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

void apply_assignment(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "E1") cfg.E1 = parse_double(key, value);
    else if (key == "E2") cfg.E2 = parse_double(key, value);
    else if (key == "G") cfg.G = parse_double(key, value);
    else if (key == "nu12") cfg.nu12 = parse_double(key, value);
    else if (key == "nu21") cfg.nu21 = parse_double(key, value);
    else if (key == "bond_length") cfg.bond_length = parse_double(key, value);
    else if (key == "eps") cfg.eps = parse_double(key, value);
    else if (key == "slenderness") cfg.slenderness = parse_double(key, value);
    else if (key == "t") cfg.t = parse_double(key, value);
    else if (key == "units") cfg.units = parse_units(value);
    else if (key == "verify_tol") cfg.verify_tol = parse_double(key, value);
    else if (key == "residual_tol") cfg.residual_tol = parse_double(key, value);
    else if (key == "oracle_points") cfg.oracle_points = parse_int(key, value);
    else throw ConfigError("config: unknown key '" + key + "'");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                              ": expected key = value");
        apply_assignment(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    validate(cfg);
    return cfg;
}

std::string dump_config(const RunConfig& cfg) {
    std::ostringstream os;
    os << "# sheet moduli (" << to_string(cfg.units) << ")\n";
    os << "E1 = " << fmt(cfg.E1) << "\n";
    os << "E2 = " << fmt(cfg.E2) << "\n";
    os << "G = " << fmt(cfg.G) << "\n";
    os << "nu12 = " << fmt(cfg.nu12) << "\n";
    os << "nu21 = " << fmt(cfg.nu21) << "\n";
    os << "units = " << to_string(cfg.units) << "\n";
    os << "# geometry (nm)\n";
    os << "bond_length = " << fmt(cfg.bond_length) << "\n";
    os << "eps = " << fmt(cfg.eps) << "\n";
    os << "slenderness = " << fmt(cfg.slenderness) << "\n";
    os << "# loading (nN/nm)\n";
    os << "t = " << fmt(cfg.t) << "\n";
    os << "# verification\n";
    os << "verify_tol = " << fmt(cfg.verify_tol) << "\n";
    os << "residual_tol = " << fmt(cfg.residual_tol) << "\n";
    os << "oracle_points = " << cfg.oracle_points << "\n";
    return os.str();
}

void validate(const RunConfig& cfg) {
    (void)cfg.moduli();
    if (!(cfg.bond_length > 0.0)) throw ConfigError("config: bond_length must be positive");
    if (!(cfg.eps > 0.0)) throw ConfigError("config: eps must be positive");
    if (!(cfg.slenderness > 0.0)) throw ConfigError("config: slenderness must be positive");
    if (!std::isfinite(cfg.t)) throw ConfigError("config: t must be finite");
    if (!(cfg.verify_tol > 0.0)) throw ConfigError("config: verify_tol must be positive");
    if (!(cfg.residual_tol > 0.0)) throw ConfigError("config: residual_tol must be positive");
    if (cfg.oracle_points < 401 || cfg.oracle_points % 4 != 1)
        throw ConfigError("config: oracle_points must be >= 401 with remainder 1 mod 4");
}

} // namespace nanoshell
