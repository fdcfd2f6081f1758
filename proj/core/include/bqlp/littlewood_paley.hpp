#pragma once

#include <span>
#include <vector>

#include "bqlp/field.hpp"
#include "bqlp/grid.hpp"

namespace bqlp::lp {

/// C-infinity step: 0 for x <= 0, 1 for x >= 1, built from exp(-1/x).
double smooth_step(double x) noexcept;

/// Radial bump: 1 on |xi| <= 3/4, 0 on |xi| >= 1, smooth and monotone between.
double psi(double r) noexcept;

/// phi(r) = psi(r / 2) - psi(r); supported in 3/4 < r < 2.
double phi(double r) noexcept;

/// Dyadic wavenumber 2^q (so lambda(-1) = 1/2).
double lambda(int q) noexcept;

/// phi_q(r): psi(r) for q = -1, phi(r / 2^q) for q >= 0.
double block_symbol(int q, double r) noexcept;

/// Smallest q_max for which blocks -1..q_max cover every wavevector the grid
/// can represent, i.e. psi(|k| / 2^(q_max + 1)) == 1 for all |k_i| <= n/2.
int covering_q_max(const GridSpec& grid) noexcept;

/// The multipliers phi_q tabulated on the grid's half-spectrum storage.
/// Immutable after construction; safe to share between threads.
class DyadicSymbolFamily {
public:
    explicit DyadicSymbolFamily(const GridSpec& grid);

    const GridSpec& grid() const noexcept { return grid_; }
    static constexpr int q_min() noexcept { return -1; }
    int q_max() const noexcept { return q_max_; }
    int block_count() const noexcept { return q_max_ + 2; }
    bool contains(int q) const noexcept { return q >= q_min() && q <= q_max_; }
    /// Highest block whose annulus meets the dealiased spectrum; blocks above
    /// it vanish on every dealiased field.
    int populated_q_max() const noexcept { return populated_q_max_; }

    /// Tabulated phi_q(|k|); throws std::out_of_range for q outside [-1, q_max].
    std::span<const double> multiplier(int q) const;
    /// |k| at each storage index.
    std::span<const double> magnitude() const noexcept { return magnitude_; }

private:
    GridSpec grid_;
    int q_max_;
    int populated_q_max_ = -1;
    std::vector<double> magnitude_;
    std::vector<std::vector<double>> tables_;
};

DyadicSymbolFamily build_symbols(const GridSpec& grid);

/// Littlewood-Paley pieces u_q for q = -1 .. q_max of one source field.
template <class Field>
struct BlockSet {
    int q_max = -1;
    std::vector<Field> blocks;

    /// Block q; throws std::out_of_range outside [-1, q_max].
    const Field& block(int q) const { return blocks.at(static_cast<std::size_t>(q + 1)); }
    bool contains(int q) const noexcept { return q >= -1 && q <= q_max; }
};

using ScalarBlocks = BlockSet<ScalarField>;
using VectorBlocks = BlockSet<VectorField>;

ScalarField apply_multiplier(const ScalarField& f, std::span<const double> multiplier);
VectorField apply_multiplier(const VectorField& v, std::span<const double> multiplier);

/// Delta_q f. Throws std::out_of_range when q is outside [-1, q_max].
ScalarField project_block(const DyadicSymbolFamily& family, const ScalarField& f, int q);
VectorField project_block(const DyadicSymbolFamily& family, const VectorField& v, int q);

ScalarBlocks decompose(const DyadicSymbolFamily& family, const ScalarField& f);
VectorBlocks decompose(const DyadicSymbolFamily& family, const VectorField& v);

/// u_{<=Q} = sum_{q=-1}^{Q} u_q, applied as the single multiplier
/// psi(|k| / 2^(Q+1)). Identity for Q >= q_max; zero for Q < -1 (empty sum).
ScalarField low_modes(const DyadicSymbolFamily& family, const ScalarField& f, int Q);
VectorField low_modes(const DyadicSymbolFamily& family, const VectorField& v, int Q);

/// u_{>=Q} = f - u_{<=Q-1}.
ScalarField high_modes(const DyadicSymbolFamily& family, const ScalarField& f, int Q);
VectorField high_modes(const DyadicSymbolFamily& family, const VectorField& v, int Q);

/// u_{q-1} + u_q + u_{q+1}; neighbours outside the block range count as zero.
ScalarField tilde_block(const ScalarBlocks& blocks, int q);
VectorField tilde_block(const VectorBlocks& blocks, int q);

/// (sum_q lambda_q^{2s} ||u_q||_2^2)^{1/2} over q = -1 .. q_max.
double sobolev_norm(const DyadicSymbolFamily& family, const ScalarField& f, double s);
double sobolev_norm(const DyadicSymbolFamily& family, const VectorField& v, double s);

/// Per-block sup norms ||u_q||_inf for q = -1 .. q_max (index q + 1).
std::vector<double> block_sup_norms(const DyadicSymbolFamily& family, const ScalarField& f);
std::vector<double> block_sup_norms(const DyadicSymbolFamily& family, const VectorField& v);

/// sup_{q >= -1} lambda_q ||u_q||_inf.
double besov_b1_inf_inf(const DyadicSymbolFamily& family, const ScalarField& f);
double besov_b1_inf_inf(const DyadicSymbolFamily& family, const VectorField& v);

/// sup_{-1 <= q <= Q} lambda_q ||u_q||_inf, i.e. the B^1_{inf,inf} norm of u_{<=Q}
/// measured blockwise. Zero for Q < -1.
double besov_low_modes(const DyadicSymbolFamily& family, const ScalarField& f, int Q);
double besov_low_modes(const DyadicSymbolFamily& family, const VectorField& v, int Q);

/// Same sups from precomputed block sup norms.
double besov_from_sups(std::span<const double> sups, int Q);

}  // namespace bqlp::lp
