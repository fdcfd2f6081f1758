#include "bqlp/field.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace bqlp {

namespace {

int storage_index(int k, int n) { return ((k % n) + n) % n; }

void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (a.n != b.n) {
        throw std::invalid_argument("field grid mismatch");
    }
}

}  // namespace

Complex ScalarField::mode(int kx, int ky, int kz) const noexcept {
    const int n = grid_.n;
    if (kz < 0) {
        return std::conj(at(storage_index(-kx, n), storage_index(-ky, n), -kz));
    }
    return at(storage_index(kx, n), storage_index(ky, n), kz);
}

void ScalarField::set_mode(int kx, int ky, int kz, Complex value) noexcept {
    const int n = grid_.n;
    if (kz < 0) {
        kx = -kx;
        ky = -ky;
        kz = -kz;
        value = std::conj(value);
    }
    at(storage_index(kx, n), storage_index(ky, n), kz) = value;
    // The kz = 0 plane stores both k and -k explicitly.
    if (kz == 0) {
        at(storage_index(-kx, n), storage_index(-ky, n), 0) = std::conj(value);
    }
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
    require_same_grid(grid_, other.grid_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
    require_same_grid(grid_, other.grid_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

ScalarField& ScalarField::operator*=(double scale) noexcept {
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

ScalarField& ScalarField::add_scaled(double scale, const ScalarField& other) {
    require_same_grid(grid_, other.grid_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += scale * other.coeffs_[i];
    return *this;
}

void ScalarField::set_zero() noexcept { std::fill(coeffs_.begin(), coeffs_.end(), Complex{}); }

bool ScalarField::all_finite() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) {
        return std::isfinite(c.real()) && std::isfinite(c.imag());
    });
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

VectorField& VectorField::operator+=(const VectorField& other) {
    for (std::size_t i = 0; i < 3; ++i) components[i] += other.components[i];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
    for (std::size_t i = 0; i < 3; ++i) components[i] -= other.components[i];
    return *this;
}

VectorField& VectorField::operator*=(double scale) noexcept {
    for (auto& c : components) c *= scale;
    return *this;
}

VectorField& VectorField::add_scaled(double scale, const VectorField& other) {
    for (std::size_t i = 0; i < 3; ++i) components[i].add_scaled(scale, other.components[i]);
    return *this;
}

void VectorField::set_zero() noexcept {
    for (auto& c : components) c.set_zero();
}

bool VectorField::all_finite() const noexcept {
    return std::all_of(components.begin(), components.end(),
                       [](const ScalarField& c) { return c.all_finite(); });
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double s, VectorField a) { return a *= s; }

}  // namespace bqlp
