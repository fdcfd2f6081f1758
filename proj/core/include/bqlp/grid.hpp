#pragma once

#include <cstddef>
#include <numbers>

namespace bqlp {

/// Periodic cube [0, 2pi)^3 sampled on n^3 points. Wavenumbers are integers.
struct GridSpec {
    int n = 32;
    double dealias_fraction = 2.0 / 3.0;
    int oversample_factor = 2;

    static constexpr double box_length = 2.0 * std::numbers::pi;

    /// Throws ConfigError naming "grid.*" when an invariant is violated.
    void validate() const;

    int k_max() const noexcept { return n / 2; }
    double dealias_cutoff() const noexcept { return dealias_fraction * k_max(); }

    /// Extent of the last (half-spectrum) dimension.
    int nz_half() const noexcept { return n / 2 + 1; }
    std::size_t spectral_size() const noexcept {
        return static_cast<std::size_t>(n) * n * nz_half();
    }
    std::size_t physical_size() const noexcept {
        return static_cast<std::size_t>(n) * n * n;
    }
    double dx() const noexcept { return box_length / n; }

    /// Signed wavenumber of storage index i along a full dimension.
    int wavenumber(int i) const noexcept { return i <= n / 2 ? i : i - n; }
    bool is_nyquist(int i) const noexcept { return i == n / 2; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

bool is_power_of_two(int v) noexcept;

}  // namespace bqlp
