#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bqlp/grid.hpp"

namespace bqlp {

using Complex = std::complex<double>;

/// Real-valued samples on an m^3 uniform grid of the periodic box, z fastest.
struct PhysicalField {
    int m = 0;
    std::vector<double> values;

    PhysicalField() = default;
    explicit PhysicalField(int points) : m(points), values(static_cast<std::size_t>(points) * points * points, 0.0) {}

    double& at(int ix, int iy, int iz) noexcept { return values[index(ix, iy, iz)]; }
    double at(int ix, int iy, int iz) const noexcept { return values[index(ix, iy, iz)]; }
    std::size_t index(int ix, int iy, int iz) const noexcept {
        return (static_cast<std::size_t>(ix) * m + iy) * m + iz;
    }
    /// Coordinate of sample i along any axis.
    double coordinate(int i) const noexcept { return GridSpec::box_length * i / m; }
};

/// Fourier coefficients of a real scalar field, f(x) = sum_k c_k exp(i k.x).
///
/// Storage is the real-to-complex half spectrum: n x n x (n/2 + 1) with the
/// z wavenumber non-negative. Coefficients with k_z < 0 are implied by
/// Hermitian symmetry c_{-k} = conj(c_k).
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const GridSpec& grid) : grid_(grid), coeffs_(grid.spectral_size()) {}

    const GridSpec& grid() const noexcept { return grid_; }
    std::span<Complex> coefficients() noexcept { return coeffs_; }
    std::span<const Complex> coefficients() const noexcept { return coeffs_; }

    std::size_t index(int ix, int iy, int iz) const noexcept {
        return (static_cast<std::size_t>(ix) * grid_.n + iy) * grid_.nz_half() + iz;
    }
    Complex& at(int ix, int iy, int iz) noexcept { return coeffs_[index(ix, iy, iz)]; }
    const Complex& at(int ix, int iy, int iz) const noexcept { return coeffs_[index(ix, iy, iz)]; }

    /// Coefficient for an arbitrary signed wavevector with |k_i| < n/2,
    /// resolving k_z < 0 through Hermitian symmetry.
    Complex mode(int kx, int ky, int kz) const noexcept;
    void set_mode(int kx, int ky, int kz, Complex value) noexcept;

    ScalarField& operator+=(const ScalarField& other);
    ScalarField& operator-=(const ScalarField& other);
    ScalarField& operator*=(double scale) noexcept;
    /// this += scale * other
    ScalarField& add_scaled(double scale, const ScalarField& other);

    void set_zero() noexcept;
    bool all_finite() const noexcept;

private:
    GridSpec grid_{};
    std::vector<Complex> coeffs_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);

/// Three scalar components sharing one grid.
struct VectorField {
    std::array<ScalarField, 3> components;

    VectorField() = default;
    explicit VectorField(const GridSpec& grid) : components{ScalarField(grid), ScalarField(grid), ScalarField(grid)} {}
    VectorField(ScalarField x, ScalarField y, ScalarField z)
        : components{std::move(x), std::move(y), std::move(z)} {}

    const GridSpec& grid() const noexcept { return components[0].grid(); }
    ScalarField& operator[](std::size_t i) noexcept { return components[i]; }
    const ScalarField& operator[](std::size_t i) const noexcept { return components[i]; }

    VectorField& operator+=(const VectorField& other);
    VectorField& operator-=(const VectorField& other);
    VectorField& operator*=(double scale) noexcept;
    VectorField& add_scaled(double scale, const VectorField& other);

    void set_zero() noexcept;
    bool all_finite() const noexcept;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double s, VectorField a);

/// Multiplicity of a half-spectrum z index in the full spectrum.
inline double hermitian_weight(const GridSpec& grid, int iz) noexcept {
    return (iz == 0 || iz == grid.n / 2) ? 1.0 : 2.0;
}

/// Visits every stored coefficient with its storage index and signed
/// wavevector: fn(index, kx, ky, kz).
template <class Fn>
void for_each_mode(const GridSpec& grid, Fn&& fn) {
    const int n = grid.n;
    const int nz = grid.nz_half();
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix) {
        const int kx = grid.wavenumber(ix);
        for (int iy = 0; iy < n; ++iy) {
            const int ky = grid.wavenumber(iy);
            for (int iz = 0; iz < nz; ++iz, ++idx) {
                fn(idx, kx, ky, iz);
            }
        }
    }
}

}  // namespace bqlp
