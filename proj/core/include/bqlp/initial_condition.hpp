#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bqlp/solver.hpp"

namespace bqlp {

enum class InitialKind {
    taylor_green,    // TG vortex; optional thermal bubble of theta_amplitude
    random_band,     // random solenoidal velocity in the band; optional random theta
    thermal_bubble,  // fluid at rest, Gaussian bubble of `amplitude`
    zero_theta_ns,   // random solenoidal velocity, theta identically zero
};

std::string to_string(InitialKind kind);
std::optional<InitialKind> parse_initial_kind(std::string_view name);

struct InitialCondition {
    InitialKind kind = InitialKind::taylor_green;
    double amplitude = 1.0;
    /// Shell k_lo <= |k| <= k_hi used by the random kinds.
    std::array<double, 2> band{1.0, 4.0};
    double theta_amplitude = 0.0;
    double bubble_radius = 0.5;
    std::array<double, 3> bubble_center{3.141592653589793, 3.141592653589793, 3.141592653589793};
    std::uint64_t seed = 1;

    /// Throws ConfigError naming "initial_condition.*".
    void validate(const GridSpec& grid) const;
};

/// Dealiased, solenoidal initial state at t = 0. Random kinds are scaled so
/// the root-mean-square velocity (resp. temperature) equals the amplitude.
SolverState make_initial_state(const GridSpec& grid, const InitialCondition& ic);

}  // namespace bqlp
