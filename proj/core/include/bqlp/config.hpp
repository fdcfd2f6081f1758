#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "bqlp/grid.hpp"
#include "bqlp/initial_condition.hpp"
#include "bqlp/ledger.hpp"
#include "bqlp/monitor.hpp"
#include "bqlp/solver.hpp"

namespace bqlp {

struct OutputSettings {
    std::filesystem::path directory = "bqlp_out";
    /// Write a snapshot every N diagnostic samples; 0 writes only the final state.
    int snapshot_stride = 0;
    bool csv = true;
    bool svg = true;
};

/// Fully validated run description; see docs/config_schema.md.
struct RunConfig {
    GridSpec grid;
    double nu = 0.0;
    double kappa = 0.0;
    double c = 1.0;
    double s = 0.5;
    double sigma = -0.25;
    double dt = 0.0;
    double t_end = 0.0;
    int diagnostics_stride = 10;
    double cfl_limit = 0.5;
    double hs_half_ceiling = std::numeric_limits<double>::infinity();
    bool compute_fluxes = true;
    InitialCondition initial;
    OutputSettings output;
    std::uint64_t seed = 1;
    std::optional<GronwallConstants> gronwall;

    SolverParams solver_params() const;
    DiagnosticsSettings diagnostics_settings() const;
};

/// Parses and validates JSON text. Throws ConfigError naming the failing
/// field ("physics.nu", "exponents.sigma", ...) or "<parse>" on bad JSON.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace bqlp
