#pragma once

#include "nanoshell/elasticity.hpp"

#include <stdexcept>
#include <string>

namespace nanoshell {

// Bad input: malformed config file, out-of-range values, unusable units.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ModuliUnits { gpa, tpa };

// Tunables of a run, defaults match the reference graphene sheet.
// Moduli are stored in the units named by `units`; lengths are nm and the
// applied traction is nN/nm throughout.
struct RunConfig {
    double E1 = 784.0;
    double E2 = 832.0;
    double G = 424.0;
    double nu12 = 0.242;
    double nu21 = 0.260;
    double bond_length = 0.142;
    double eps = 0.194;
    double slenderness = 0.25;
    double t = 0.1;
    ModuliUnits units = ModuliUnits::gpa;
    double verify_tol = 1e-6;
    double residual_tol = 1e-8;
    int oracle_points = 2001;

    // Moduli converted to GPa, validated.
    ElasticModuli moduli() const;
    // Same sheet replaced by its isotropic average: E = (E1+E2)/2,
    // nu = (nu12+nu21)/2, G = E/(2(1+nu)).
    ElasticModuli isotropic_moduli() const;
};

// Flat key = value file, '#' starts a comment, blank lines ignored.
// Unknown keys and unparsable values throw ConfigError.
RunConfig load_config(const std::string& path);

// Applies one key = value assignment (same keys as the file).
void apply_assignment(RunConfig& cfg, const std::string& key, const std::string& value);

// Serialization that load_config reads back to the identical config.
std::string dump_config(const RunConfig& cfg);

void validate(const RunConfig& cfg);

std::string to_string(ModuliUnits u);
ModuliUnits parse_units(const std::string& s);

} // namespace nanoshell
