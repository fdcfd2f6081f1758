#include "bqlp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "bqlp/errors.hpp"
#include "bqlp/littlewood_paley.hpp"
#include "bqlp/spectral_ops.hpp"
#include "bqlp/transform.hpp"

namespace bqlp {

CflError::CflError(double cfl, double limit)
    : Error("advective CFL " + std::to_string(cfl) + " exceeds limit " + std::to_string(limit)),
      cfl_(cfl),
      limit_(limit) {}

void SolverParams::validate() const {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw ConfigError("physics.nu", "must be finite and >= 0");
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw ConfigError("physics.kappa", "must be finite and >= 0");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("time.dt", "must be > 0");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("time.t_end", "must be finite and >= 0");
    if (!(cfl_limit > 0.0 && cfl_limit <= 1.0)) throw ConfigError("time.cfl_limit", "must lie in (0, 1]");
    if (diagnostics_stride < 1) throw ConfigError("time.diagnostics_stride", "must be >= 1");
    if (!(dt_floor_ratio > 0.0 && dt_floor_ratio <= 1.0)) throw ConfigError("time.dt_floor_ratio", "must lie in (0, 1]");
    if (!(hs_half_ceiling > 0.0)) throw ConfigError("guard.hs_half_ceiling", "must be > 0");
}

namespace {

void scale_by(ScalarField& f, const std::vector<double>& factor) {
    auto c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= factor[i];
}

void scale_by(VectorField& v, const std::vector<double>& factor) {
    for (auto& comp : v.components) scale_by(comp, factor);
}

Tendencies tendencies_from_physical(const VectorField& u, const ScalarField& theta) {
    const PhysicalVector up = to_physical(u);
    VectorField adv(advect(up, u[0]), advect(up, u[1]), advect(up, u[2]));
    adv *= -1.0;
    adv[2] += theta;
    VectorField du = leray_project(adv);
    ScalarField dtheta = advect(up, theta);
    dtheta *= -1.0;
    return {std::move(du), std::move(dtheta)};
}

}  // namespace

VectorField nonlinear_term_velocity(const VectorField& u) {
    VectorField adv = advect(u, u);
    adv *= -1.0;
    return leray_project(adv);
}

VectorField buoyancy_term(const ScalarField& theta) {
    VectorField v(theta.grid());
    v[2] = theta;
    return leray_project(v);
}

ScalarField nonlinear_term_temperature(const VectorField& u, const ScalarField& theta) {
    ScalarField out = advect(u, theta);
    out *= -1.0;
    return out;
}

Tendencies rhs(const SolverState& state) { return tendencies_from_physical(state.u, state.theta); }

double advective_cfl(const VectorField& u, double dt) {
    const double umax = linf_norm(u, 1);
    return dt * umax / u.grid().dx();
}

Stepper::Stepper(const GridSpec& grid, const SolverParams& params)
    : grid_(grid), params_(params), k2_(grid.spectral_size()) {
    for_each_mode(grid_, [&](std::size_t idx, int kx, int ky, int kz) {
        k2_[idx] = static_cast<double>(kx * kx + ky * ky + kz * kz);
    });
}

void Stepper::prepare(double h) {
    if (h == cached_h_) return;
    const std::size_t size = k2_.size();
    eu_full_.resize(size);
    eu_half_.resize(size);
    et_full_.resize(size);
    et_half_.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
        eu_full_[i] = std::exp(-params_.nu * k2_[i] * h);
        eu_half_[i] = std::exp(-params_.nu * k2_[i] * 0.5 * h);
        et_full_[i] = std::exp(-params_.kappa * k2_[i] * h);
        et_half_[i] = std::exp(-params_.kappa * k2_[i] * 0.5 * h);
    }
    cached_h_ = h;
}

Tendencies Stepper::evaluate(const VectorField& u, const ScalarField& theta) const {
    if (params_.linear_only) {
        return {VectorField(grid_), ScalarField(grid_)};
    }
    return tendencies_from_physical(u, theta);
}

SolverState Stepper::step(const SolverState& state, double h) {
    if (!params_.linear_only) {
        const double cfl = advective_cfl(state.u, h);
        if (cfl > params_.cfl_limit) throw CflError(cfl, params_.cfl_limit);
    }
    prepare(h);

    const VectorField& u = state.u;
    const ScalarField& th = state.theta;

    // Stage 1
    const Tendencies a = evaluate(u, th);

    // Stage 2: E_half (v + h/2 a)
    VectorField u2 = u;
    u2.add_scaled(0.5 * h, a.du);
    scale_by(u2, eu_half_);
    ScalarField t2 = th;
    t2.add_scaled(0.5 * h, a.dtheta);
    scale_by(t2, et_half_);
    const Tendencies b = evaluate(u2, t2);

    // Stage 3: E_half v + h/2 b
    VectorField u_half = u;
    scale_by(u_half, eu_half_);
    ScalarField t_half = th;
    scale_by(t_half, et_half_);
    VectorField u3 = u_half;
    u3.add_scaled(0.5 * h, b.du);
    ScalarField t3 = t_half;
    t3.add_scaled(0.5 * h, b.dtheta);
    const Tendencies c = evaluate(u3, t3);

    // Stage 4: E v + h E_half c
    VectorField u_full = u;
    scale_by(u_full, eu_full_);
    ScalarField t_full = th;
    scale_by(t_full, et_full_);
    VectorField cu = c.du;
    scale_by(cu, eu_half_);
    ScalarField ct = c.dtheta;
    scale_by(ct, et_half_);
    VectorField u4 = u_full;
    u4.add_scaled(h, cu);
    ScalarField t4 = t_full;
    t4.add_scaled(h, ct);
    const Tendencies d = evaluate(u4, t4);

    // Combine: E v + h/6 (E a + 2 E_half (b + c) + d)
    VectorField ea = a.du;
    scale_by(ea, eu_full_);
    VectorField bc = b.du + c.du;
    scale_by(bc, eu_half_);
    VectorField incr_u = ea;
    incr_u.add_scaled(2.0, bc);
    incr_u += d.du;

    ScalarField eat = a.dtheta;
    scale_by(eat, et_full_);
    ScalarField bct = b.dtheta + c.dtheta;
    scale_by(bct, et_half_);
    ScalarField incr_t = eat;
    incr_t.add_scaled(2.0, bct);
    incr_t += d.dtheta;

    SolverState next;
    next.u = std::move(u_full);
    next.u.add_scaled(h / 6.0, incr_u);
    next.theta = std::move(t_full);
    next.theta.add_scaled(h / 6.0, incr_t);
    if (!params_.linear_only) {
        next.u = leray_project(next.u);
        dealias_in_place(next.u);
        dealias_in_place(next.theta);
    }
    next.t = state.t + h;
    return next;
}

SolverState step(const SolverState& state, const SolverParams& params) {
    Stepper stepper(state.grid(), params);
    return stepper.step(state, params.dt);
}

std::string to_string(RunStatus status) {
    switch (status) {
        case RunStatus::completed: return "completed";
        case RunStatus::numerical_blowup: return "numerical_blowup";
        case RunStatus::blowup_guard: return "blowup_guard";
        case RunStatus::cfl_failure: return "cfl_failure";
    }
    return "unknown";
}

RunResult run(const SolverParams& params, const SolverState& initial, const StateSink& sink) {
    params.validate();
    RunResult result;
    result.final_state = initial;
    result.final_dt = params.dt;
    if (!(params.t_end > initial.t)) {
        result.message = "t_end <= initial time; nothing to integrate";
        return result;
    }

    const GridSpec& grid = initial.grid();
    Stepper stepper(grid, params);
    std::optional<lp::DyadicSymbolFamily> family;
    if (std::isfinite(params.hs_half_ceiling)) family.emplace(grid);

    SolverState state = initial;
    double dt = params.dt;
    const double dt_floor = params.dt * params.dt_floor_ratio;
    long steps = 0;
    long last_sampled = -1;
    auto sample = [&](const SolverState& s, long k) {
        if (sink) sink(s, k);
        last_sampled = k;
    };
    sample(state, 0);

    // Treat a remainder below this as having reached t_end.
    const double slack = 1e-9 * params.dt;
    while (params.t_end - state.t > slack) {
        const double remaining = params.t_end - state.t;
        const double h = remaining <= dt * (1.0 + 1e-9) ? remaining : dt;
        SolverState next;
        try {
            next = stepper.step(state, h);
        } catch (const CflError& e) {
            if (0.5 * dt >= dt_floor * (1.0 - 1e-12)) {
                dt *= 0.5;
                ++result.dt_halvings;
                continue;
            }
            result.status = RunStatus::cfl_failure;
            result.message = e.what();
            break;
        }
        if (!next.all_finite()) {
            result.status = RunStatus::numerical_blowup;
            result.message = "non-finite coefficient at t = " + std::to_string(next.t);
            break;
        }
        state = std::move(next);
        ++steps;
        if (steps % params.diagnostics_stride == 0) sample(state, steps);
        if (family) {
            const double hs = lp::sobolev_norm(*family, state.u, 0.5);
            if (hs > params.hs_half_ceiling) {
                result.status = RunStatus::blowup_guard;
                result.message = "||u||_H^1/2 = " + std::to_string(hs) + " exceeds ceiling";
                break;
            }
        }
    }
    if (last_sampled != steps) sample(state, steps);

    result.final_state = std::move(state);
    result.steps = steps;
    result.final_dt = dt;
    if (result.status == RunStatus::completed) result.message = "reached t_end";
    return result;
}

}  // namespace bqlp
