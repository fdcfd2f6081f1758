#include "bqlp/energy_balance.hpp"

#include <cmath>
#include <limits>

#include "bqlp/spectral_ops.hpp"

namespace bqlp {

namespace {

double gradient_energy(const ScalarField& f) {
    // ||grad f||^2 = sum |k|^2 |f_k|^2 = -(f, lap f)
    return -inner_product(f, laplacian(f));
}

}  // namespace

EnergySample energy_sample(const SolverState& state, double nu, double kappa) {
    EnergySample s;
    s.t = state.t;
    s.energy_u = 0.5 * inner_product(state.u, state.u);
    s.energy_theta = 0.5 * inner_product(state.theta, state.theta);
    s.dissipation_u = nu * (gradient_energy(state.u[0]) + gradient_energy(state.u[1]) + gradient_energy(state.u[2]));
    s.dissipation_theta = kappa * gradient_energy(state.theta);
    s.buoyancy_work = inner_product(state.theta, state.u[2]);
    return s;
}

std::vector<EnergyResidual> energy_balance_residual(std::span<const EnergySample> history) {
    std::vector<EnergyResidual> out;
    if (history.size() < 2) return out;
    out.reserve(history.size() - 1);
    for (std::size_t i = 0; i + 1 < history.size(); ++i) {
        const EnergySample& a = history[i];
        const EnergySample& b = history[i + 1];
        const double dt = b.t - a.t;
        const double flux_u = 0.5 * dt * ((-a.dissipation_u + a.buoyancy_work) + (-b.dissipation_u + b.buoyancy_work));
        const double flux_t = 0.5 * dt * (-a.dissipation_theta - b.dissipation_theta);
        EnergyResidual r;
        r.t0 = a.t;
        r.t1 = b.t;
        r.velocity = (b.energy_u - a.energy_u) - flux_u;
        r.temperature = (b.energy_theta - a.energy_theta) - flux_t;
        const double scale = dt * (a.energy_u + a.energy_theta);
        const double denom = scale > 0.0 ? scale : std::numeric_limits<double>::min();
        r.velocity_relative = std::abs(r.velocity) / denom;
        r.temperature_relative = std::abs(r.temperature) / denom;
        out.push_back(r);
    }
    return out;
}

}  // namespace bqlp
