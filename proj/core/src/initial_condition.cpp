#include "bqlp/initial_condition.hpp"

#include <cmath>
#include <random>

#include "bqlp/errors.hpp"
#include "bqlp/spectral_ops.hpp"
#include "bqlp/transform.hpp"

namespace bqlp {

std::string to_string(InitialKind kind) {
    switch (kind) {
        case InitialKind::taylor_green: return "taylor_green";
        case InitialKind::random_band: return "random_band";
        case InitialKind::thermal_bubble: return "thermal_bubble";
        case InitialKind::zero_theta_ns: return "zero_theta_ns";
    }
    return "unknown";
}

std::optional<InitialKind> parse_initial_kind(std::string_view name) {
    if (name == "taylor_green") return InitialKind::taylor_green;
    if (name == "random_band") return InitialKind::random_band;
    if (name == "thermal_bubble") return InitialKind::thermal_bubble;
    if (name == "zero_theta_ns") return InitialKind::zero_theta_ns;
    return std::nullopt;
}

void InitialCondition::validate(const GridSpec& grid) const {
    if (!std::isfinite(amplitude) || amplitude < 0.0) {
        throw ConfigError("initial_condition.amplitude", "must be finite and >= 0");
    }
    if (!std::isfinite(theta_amplitude) || theta_amplitude < 0.0) {
        throw ConfigError("initial_condition.theta_amplitude", "must be finite and >= 0");
    }
    if (!(band[0] > 0.0 && band[1] >= band[0] && std::isfinite(band[1]))) {
        throw ConfigError("initial_condition.band", "requires 0 < k_lo <= k_hi");
    }
    if (kind == InitialKind::random_band || kind == InitialKind::zero_theta_ns) {
        if (band[0] > grid.dealias_cutoff()) {
            throw ConfigError("initial_condition.band", "k_lo lies beyond the dealiasing cutoff");
        }
    }
    if (!(bubble_radius > 0.0) || !std::isfinite(bubble_radius)) {
        throw ConfigError("initial_condition.bubble_radius", "must be > 0");
    }
}

namespace {

constexpr double kTwoPi = GridSpec::box_length;

double periodic_offset(double x, double c) {
    double d = std::fmod(x - c, kTwoPi);
    if (d > 0.5 * kTwoPi) d -= kTwoPi;
    if (d < -0.5 * kTwoPi) d += kTwoPi;
    return d;
}

ScalarField sample(const GridSpec& grid, auto&& fn) {
    PhysicalField p(grid.n);
    for (int i = 0; i < grid.n; ++i)
        for (int j = 0; j < grid.n; ++j)
            for (int k = 0; k < grid.n; ++k)
                p.at(i, j, k) = fn(p.coordinate(i), p.coordinate(j), p.coordinate(k));
    return dealias(forward_transform(p, grid));
}

ScalarField band_limited_noise(const GridSpec& grid, std::mt19937_64& rng, double k_lo, double k_hi) {
    std::normal_distribution<double> normal(0.0, 1.0);
    PhysicalField p(grid.n);
    for (double& v : p.values) v = normal(rng);
    ScalarField f = forward_transform(p, grid);
    auto c = f.coefficients();
    for_each_mode(grid, [&](std::size_t idx, int kx, int ky, int kz) {
        const double k = std::sqrt(static_cast<double>(kx * kx + ky * ky + kz * kz));
        if (k < k_lo || k > k_hi || !within_dealias_cutoff(grid, kx, ky, kz)) c[idx] = Complex{};
    });
    return f;
}

double rms(double l2) { return l2 / std::sqrt(kTwoPi * kTwoPi * kTwoPi); }

VectorField random_velocity(const GridSpec& grid, std::mt19937_64& rng, const InitialCondition& ic) {
    VectorField u(band_limited_noise(grid, rng, ic.band[0], ic.band[1]),
                  band_limited_noise(grid, rng, ic.band[0], ic.band[1]),
                  band_limited_noise(grid, rng, ic.band[0], ic.band[1]));
    u = leray_project(u);
    const double r = rms(l2_norm(u));
    if (r > 0.0) u *= ic.amplitude / r;
    return u;
}

ScalarField bubble(const GridSpec& grid, const InitialCondition& ic, double amplitude) {
    const double inv = 1.0 / (2.0 * ic.bubble_radius * ic.bubble_radius);
    return sample(grid, [&](double x, double y, double z) {
        const double dx = periodic_offset(x, ic.bubble_center[0]);
        const double dy = periodic_offset(y, ic.bubble_center[1]);
        const double dz = periodic_offset(z, ic.bubble_center[2]);
        return amplitude * std::exp(-(dx * dx + dy * dy + dz * dz) * inv);
    });
}

}  // namespace

SolverState make_initial_state(const GridSpec& grid, const InitialCondition& ic) {
    grid.validate();
    ic.validate(grid);
    SolverState state{VectorField(grid), ScalarField(grid), 0.0};
    std::mt19937_64 rng(ic.seed);

    switch (ic.kind) {
        case InitialKind::taylor_green: {
            const double a = ic.amplitude;
            state.u = VectorField(
                sample(grid, [a](double x, double y, double z) { return a * std::sin(x) * std::cos(y) * std::cos(z); }),
                sample(grid, [a](double x, double y, double z) { return -a * std::cos(x) * std::sin(y) * std::cos(z); }),
                ScalarField(grid));
            if (ic.theta_amplitude > 0.0) state.theta = bubble(grid, ic, ic.theta_amplitude);
            break;
        }
        case InitialKind::random_band: {
            state.u = random_velocity(grid, rng, ic);
            if (ic.theta_amplitude > 0.0) {
                state.theta = band_limited_noise(grid, rng, ic.band[0], ic.band[1]);
                // The k = 0 mode never enters the band, so theta has zero mean.
                const double r = rms(l2_norm(state.theta));
                if (r > 0.0) state.theta *= ic.theta_amplitude / r;
            }
            break;
        }
        case InitialKind::thermal_bubble:
            state.theta = bubble(grid, ic, ic.amplitude);
            break;
        case InitialKind::zero_theta_ns:
            state.u = random_velocity(grid, rng, ic);
            break;
    }
    return state;
}

}  // namespace bqlp
