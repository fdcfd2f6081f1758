#pragma once

#include <functional>
#include <optional>
#include <limits>
#include <string>

#include "bqlp/field.hpp"
#include "bqlp/grid.hpp"

namespace bqlp {

struct SolverParams {
    double nu = 0.1;
    double kappa = 0.1;
    double dt = 1e-3;
    double t_end = 1.0;
    double cfl_limit = 0.5;
    int diagnostics_stride = 10;
    /// CFL rejections halve dt down to dt * dt_floor_ratio, then give up.
    double dt_floor_ratio = 1.0 / 64.0;
    /// Blow-up guard on ||u||_{H^{1/2}}; infinite disables it.
    double hs_half_ceiling = std::numeric_limits<double>::infinity();
    /// Drop advection and buoyancy, leaving pure diffusion. Test hook.
    bool linear_only = false;

    /// Throws ConfigError naming the offending "physics.*" / "time.*" entry.
    void validate() const;
};

struct SolverState {
    VectorField u;
    ScalarField theta;
    double t = 0.0;

    const GridSpec& grid() const noexcept { return theta.grid(); }
    bool all_finite() const noexcept { return u.all_finite() && theta.all_finite(); }
};

struct Tendencies {
    VectorField du;
    ScalarField dtheta;
};

/// -P[(u . grad) u], dealiased.
VectorField nonlinear_term_velocity(const VectorField& u);
/// P[(0, 0, theta)].
VectorField buoyancy_term(const ScalarField& theta);
/// -(u . grad) theta, dealiased.
ScalarField nonlinear_term_temperature(const VectorField& u, const ScalarField& theta);
/// Everything except diffusion, which the integrating factor treats exactly.
Tendencies rhs(const SolverState& state);

/// dt * max|u| / dx on the base grid.
double advective_cfl(const VectorField& u, double dt);

/// Integrating-factor RK4 (Lawson). Diffusion is exact per mode; caches the
/// factors for the most recent step size.
class Stepper {
public:
    Stepper(const GridSpec& grid, const SolverParams& params);

    /// Advances by h. Throws CflError when the advective CFL exceeds the limit.
    SolverState step(const SolverState& state, double h);

private:
    void prepare(double h);
    Tendencies evaluate(const VectorField& u, const ScalarField& theta) const;

    GridSpec grid_;
    SolverParams params_;
    double cached_h_ = -1.0;
    std::vector<double> k2_;
    std::vector<double> eu_full_, eu_half_, et_full_, et_half_;
};

/// One step of size params.dt.
SolverState step(const SolverState& state, const SolverParams& params);

enum class RunStatus {
    completed,
    numerical_blowup,   // non-finite coefficients appeared
    blowup_guard,       // ||u||_{H^{1/2}} exceeded the ceiling
    cfl_failure,        // dt halved to the floor without satisfying the CFL
};

std::string to_string(RunStatus status);

struct RunResult {
    SolverState final_state;
    RunStatus status = RunStatus::completed;
    long steps = 0;
    int dt_halvings = 0;
    double final_dt = 0.0;
    std::string message;
};

/// Called with an immutable snapshot at step 0, every diagnostics_stride
/// steps, and at the final state.
using StateSink = std::function<void(const SolverState& state, long step)>;

/// Integrates from `initial` to params.t_end. t_end <= initial.t returns the
/// initial state without invoking the sink. On non-finite values the last
/// valid state is returned.
RunResult run(const SolverParams& params, const SolverState& initial, const StateSink& sink = {});

}  // namespace bqlp
