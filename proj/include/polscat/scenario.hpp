#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polscat/elements.hpp"

namespace polscat {

enum class Configuration { LinPerpLin, SigmaPlusMinus, Custom };

std::string configuration_name(Configuration c);

/// One scan axis. Values are generated as an even subdivision of
/// [min, max]; the endpoint is included only when `endpoint` is set.
struct GridSpec {
    int count = 1;
    double min = 0.0;
    double max = 0.0;
    bool endpoint = false;

    std::vector<double> points() const;
};

/// Declarative description of beams, elements, atom and scan grids.
struct Scenario {
    int schema_version = 1;
    Configuration configuration = Configuration::LinPerpLin;

    double j_ground = 0.5;
    double j_excited = 1.5;
    Complex zeta0{1e-4, 0.0};
    double dzeta0_dk_imag = 0.0;

    double beam_amplitude = 1.0;
    double wavenumber = 1.0;
    double tau_p = 1.0;

    GridSpec x_grid;  // values are k*x (dimensionless)
    GridSpec v_grid;  // values are v/c

    // Custom configuration only.
    std::vector<Element> elements;
    Eigen::Vector2cd input_b{1.0, 0.0};
    Eigen::Vector2cd input_c{0.0, 0.0};

    LevelScheme scheme() const;

    /// Canonical serialization used for hashing and determinism checks.
    std::string canonical_json() const;
};

struct ParseResult {
    std::optional<Scenario> scenario;
    std::vector<std::string> errors;
    bool ok() const { return scenario.has_value() && errors.empty(); }
};

/// Parse and fully validate a scenario document (JSON, UTF-8). On failure the
/// result carries every validation error, not just the first.
ParseResult parse_scenario(const std::string& text);

}  // namespace polscat
