#pragma once

#include <span>
#include <vector>

#include "bqlp/solver.hpp"

namespace bqlp {

/// Quantities entering the two energy identities
///   d/dt 1/2 ||u||^2     = -nu ||grad u||^2 + (theta e3, u)
///   d/dt 1/2 ||theta||^2 = -kappa ||grad theta||^2
struct EnergySample {
    double t = 0.0;
    double energy_u = 0.0;
    double energy_theta = 0.0;
    double dissipation_u = 0.0;
    double dissipation_theta = 0.0;
    double buoyancy_work = 0.0;
};

EnergySample energy_sample(const SolverState& state, double nu, double kappa);

struct EnergyResidual {
    double t0 = 0.0;
    double t1 = 0.0;
    /// Energy change minus trapezoid of the flux over [t0, t1].
    double velocity = 0.0;
    double temperature = 0.0;
    /// |residual| / ((t1 - t0) * (E_u + E_theta at t0)): relative, per unit time.
    double velocity_relative = 0.0;
    double temperature_relative = 0.0;
};

/// One residual per consecutive pair of samples; empty for fewer than two.
std::vector<EnergyResidual> energy_balance_residual(std::span<const EnergySample> history);

}  // namespace bqlp
