#include "bqlp/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bqlp/spectral_ops.hpp"

namespace bqlp::lp {

namespace {

double bump_exp(double x) noexcept { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

void check_block(const DyadicSymbolFamily& family, int q) {
    if (!family.contains(q)) {
        throw std::out_of_range("block index " + std::to_string(q) + " outside [-1, " +
                                std::to_string(family.q_max()) + "]");
    }
}

/// psi(|k| / 2^(Q+1)) on the storage layout.
std::vector<double> low_pass_table(const DyadicSymbolFamily& family, int Q) {
    const auto mag = family.magnitude();
    std::vector<double> table(mag.size());
    const double scale = 1.0 / lambda(Q + 1);
    for (std::size_t i = 0; i < mag.size(); ++i) table[i] = psi(mag[i] * scale);
    return table;
}

template <class Field>
BlockSet<Field> decompose_impl(const DyadicSymbolFamily& family, const Field& f) {
    BlockSet<Field> out;
    out.q_max = family.q_max();
    out.blocks.reserve(static_cast<std::size_t>(family.block_count()));
    for (int q = -1; q <= family.q_max(); ++q) {
        out.blocks.push_back(apply_multiplier(f, family.multiplier(q)));
    }
    return out;
}

template <class Field>
Field low_modes_impl(const DyadicSymbolFamily& family, const Field& f, int Q) {
    if (Q >= family.q_max()) return f;
    if (Q < -1) {
        Field zero = f;
        zero.set_zero();
        return zero;
    }
    return apply_multiplier(f, low_pass_table(family, Q));
}

template <class Field>
Field tilde_impl(const BlockSet<Field>& blocks, int q) {
    if (!blocks.contains(q)) throw std::out_of_range("tilde_block index " + std::to_string(q));
    Field out = blocks.block(q);
    if (blocks.contains(q - 1)) out += blocks.block(q - 1);
    if (blocks.contains(q + 1)) out += blocks.block(q + 1);
    return out;
}

/// sum_q lambda_q^{2s} phi_q(|k|)^2 at every storage index.
std::vector<double> sobolev_weights(const DyadicSymbolFamily& family, double s) {
    const std::size_t size = family.magnitude().size();
    std::vector<double> w(size, 0.0);
    for (int q = -1; q <= family.q_max(); ++q) {
        const double lq = std::pow(lambda(q), 2.0 * s);
        const auto m = family.multiplier(q);
        for (std::size_t i = 0; i < size; ++i) w[i] += lq * m[i] * m[i];
    }
    return w;
}

double weighted_energy(const ScalarField& f, std::span<const double> w) {
    const GridSpec& grid = f.grid();
    const int nz = grid.nz_half();
    auto c = f.coefficients();
    double sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (w[i] == 0.0) continue;
        const int iz = static_cast<int>(i % static_cast<std::size_t>(nz));
        sum += hermitian_weight(grid, iz) * w[i] * std::norm(c[i]);
    }
    const double volume = std::pow(GridSpec::box_length, 3);
    return volume * sum;
}

template <class Field>
std::vector<double> block_sups_impl(const DyadicSymbolFamily& family, const Field& f) {
    std::vector<double> sups;
    sups.reserve(static_cast<std::size_t>(family.block_count()));
    for (int q = -1; q <= family.q_max(); ++q) {
        sups.push_back(linf_norm(apply_multiplier(f, family.multiplier(q))));
    }
    return sups;
}

}  // namespace

double smooth_step(double x) noexcept {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double a = bump_exp(x);
    const double b = bump_exp(1.0 - x);
    return a / (a + b);
}

double psi(double r) noexcept {
    r = std::abs(r);
    if (r <= 0.75) return 1.0;
    if (r >= 1.0) return 0.0;
    return smooth_step((1.0 - r) / 0.25);
}

double phi(double r) noexcept { return psi(0.5 * r) - psi(r); }

double lambda(int q) noexcept { return std::ldexp(1.0, q); }

double block_symbol(int q, double r) noexcept {
    if (q < 0) return psi(r);
    return phi(r / lambda(q));
}

int covering_q_max(const GridSpec& grid) noexcept {
    const double corner = std::numbers::sqrt3 * grid.k_max();
    int q = -1;
    while (0.75 * lambda(q + 1) < corner) ++q;
    return q;
}

DyadicSymbolFamily::DyadicSymbolFamily(const GridSpec& grid)
    : grid_(grid), q_max_(covering_q_max(grid)), magnitude_(grid.spectral_size()) {
    for_each_mode(grid_, [&](std::size_t idx, int kx, int ky, int kz) {
        magnitude_[idx] = std::sqrt(static_cast<double>(kx * kx + ky * ky + kz * kz));
    });
    tables_.reserve(static_cast<std::size_t>(block_count()));
    for (int q = -1; q <= q_max_; ++q) {
        std::vector<double> t(magnitude_.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = block_symbol(q, magnitude_[i]);
        tables_.push_back(std::move(t));
    }
    for_each_mode(grid_, [&](std::size_t idx, int kx, int ky, int kz) {
        if (!within_dealias_cutoff(grid_, kx, ky, kz)) return;
        for (int q = populated_q_max_ + 1; q <= q_max_; ++q) {
            if (tables_[static_cast<std::size_t>(q + 1)][idx] > 0.0) populated_q_max_ = q;
        }
    });
}

std::span<const double> DyadicSymbolFamily::multiplier(int q) const {
    if (!contains(q)) {
        throw std::out_of_range("block index " + std::to_string(q) + " outside [-1, " +
                                std::to_string(q_max_) + "]");
    }
    return tables_[static_cast<std::size_t>(q + 1)];
}

DyadicSymbolFamily build_symbols(const GridSpec& grid) { return DyadicSymbolFamily(grid); }

ScalarField apply_multiplier(const ScalarField& f, std::span<const double> multiplier) {
    ScalarField out = f;
    auto c = out.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= multiplier[i];
    return out;
}

VectorField apply_multiplier(const VectorField& v, std::span<const double> multiplier) {
    return VectorField(apply_multiplier(v[0], multiplier), apply_multiplier(v[1], multiplier),
                       apply_multiplier(v[2], multiplier));
}

ScalarField project_block(const DyadicSymbolFamily& family, const ScalarField& f, int q) {
    check_block(family, q);
    return apply_multiplier(f, family.multiplier(q));
}

VectorField project_block(const DyadicSymbolFamily& family, const VectorField& v, int q) {
    check_block(family, q);
    return apply_multiplier(v, family.multiplier(q));
}

ScalarBlocks decompose(const DyadicSymbolFamily& family, const ScalarField& f) {
    return decompose_impl(family, f);
}

VectorBlocks decompose(const DyadicSymbolFamily& family, const VectorField& v) {
    return decompose_impl(family, v);
}

ScalarField low_modes(const DyadicSymbolFamily& family, const ScalarField& f, int Q) {
    return low_modes_impl(family, f, Q);
}

VectorField low_modes(const DyadicSymbolFamily& family, const VectorField& v, int Q) {
    return low_modes_impl(family, v, Q);
}

ScalarField high_modes(const DyadicSymbolFamily& family, const ScalarField& f, int Q) {
    return f - low_modes(family, f, Q - 1);
}

VectorField high_modes(const DyadicSymbolFamily& family, const VectorField& v, int Q) {
    return v - low_modes(family, v, Q - 1);
}

ScalarField tilde_block(const ScalarBlocks& blocks, int q) { return tilde_impl(blocks, q); }
VectorField tilde_block(const VectorBlocks& blocks, int q) { return tilde_impl(blocks, q); }

double sobolev_norm(const DyadicSymbolFamily& family, const ScalarField& f, double s) {
    const auto w = sobolev_weights(family, s);
    return std::sqrt(weighted_energy(f, w));
}

double sobolev_norm(const DyadicSymbolFamily& family, const VectorField& v, double s) {
    const auto w = sobolev_weights(family, s);
    return std::sqrt(weighted_energy(v[0], w) + weighted_energy(v[1], w) + weighted_energy(v[2], w));
}

std::vector<double> block_sup_norms(const DyadicSymbolFamily& family, const ScalarField& f) {
    return block_sups_impl(family, f);
}

std::vector<double> block_sup_norms(const DyadicSymbolFamily& family, const VectorField& v) {
    return block_sups_impl(family, v);
}

double besov_from_sups(std::span<const double> sups, int Q) {
    double best = 0.0;
    const int top = std::min(Q, static_cast<int>(sups.size()) - 2);
    for (int q = -1; q <= top; ++q) {
        best = std::max(best, lambda(q) * sups[static_cast<std::size_t>(q + 1)]);
    }
    return best;
}

double besov_b1_inf_inf(const DyadicSymbolFamily& family, const ScalarField& f) {
    return besov_from_sups(block_sup_norms(family, f), family.q_max());
}

double besov_b1_inf_inf(const DyadicSymbolFamily& family, const VectorField& v) {
    return besov_from_sups(block_sup_norms(family, v), family.q_max());
}

double besov_low_modes(const DyadicSymbolFamily& family, const ScalarField& f, int Q) {
    return besov_from_sups(block_sup_norms(family, f), Q);
}

double besov_low_modes(const DyadicSymbolFamily& family, const VectorField& v, int Q) {
    return besov_from_sups(block_sup_norms(family, v), Q);
}

}  // namespace bqlp::lp
