#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bqlp/solver.hpp"

namespace bqlp {

/// Binary snapshot, format "BQLP" version 1 (docs/snapshot_format.md).
/// All integers and floats are little-endian; 64-bit IEEE doubles.
struct Snapshot {
    SolverState state;
    double nu = 0.0;
    double kappa = 0.0;
};

inline constexpr char kSnapshotMagic[4] = {'B', 'Q', 'L', 'P'};
inline constexpr std::uint32_t kSnapshotVersion = 1;

std::vector<unsigned char> encode_snapshot(const SolverState& state, double nu, double kappa);
/// Throws SnapshotError on bad magic, unsupported version, truncation, or a
/// grid size different from `expected_n` when given.
Snapshot decode_snapshot(const std::vector<unsigned char>& bytes, std::optional<int> expected_n = std::nullopt,
                         const GridSpec& grid_template = {});

void save_snapshot(const SolverState& state, double nu, double kappa, const std::filesystem::path& path);
/// The returned state's grid takes n from the file and dealias/oversample
/// settings from `grid_template`.
Snapshot load_snapshot(const std::filesystem::path& path, std::optional<int> expected_n = std::nullopt,
                       const GridSpec& grid_template = {});

}  // namespace bqlp
