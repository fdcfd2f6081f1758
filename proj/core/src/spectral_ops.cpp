#include "bqlp/spectral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "bqlp/transform.hpp"

namespace bqlp {

namespace {

constexpr Complex kI{0.0, 1.0};

/// Wavenumber used for differentiation: zero at Nyquist so i k f stays real.
int derivative_wavenumber(const GridSpec& grid, int k) noexcept {
    return std::abs(k) == grid.n / 2 ? 0 : k;
}

int axis_wavenumber(int axis, int kx, int ky, int kz) noexcept {
    return axis == 0 ? kx : (axis == 1 ? ky : kz);
}

}  // namespace

ScalarField partial(const ScalarField& f, int axis) {
    const GridSpec& grid = f.grid();
    ScalarField out(grid);
    auto src = f.coefficients();
    auto dst = out.coefficients();
    for_each_mode(grid, [&](std::size_t idx, int kx, int ky, int kz) {
        const int k = derivative_wavenumber(grid, axis_wavenumber(axis, kx, ky, kz));
        dst[idx] = kI * static_cast<double>(k) * src[idx];
    });
    return out;
}

VectorField gradient(const ScalarField& f) {
    return VectorField(partial(f, 0), partial(f, 1), partial(f, 2));
}

ScalarField divergence(const VectorField& v) {
    ScalarField out = partial(v[0], 0);
    out += partial(v[1], 1);
    out += partial(v[2], 2);
    return out;
}

VectorField curl(const VectorField& v) {
    return VectorField(partial(v[2], 1) - partial(v[1], 2),
                       partial(v[0], 2) - partial(v[2], 0),
                       partial(v[1], 0) - partial(v[0], 1));
}

ScalarField laplacian(const ScalarField& f) {
    const GridSpec& grid = f.grid();
    ScalarField out(grid);
    auto src = f.coefficients();
    auto dst = out.coefficients();
    for_each_mode(grid, [&](std::size_t idx, int kx, int ky, int kz) {
        const double k2 = static_cast<double>(kx * kx + ky * ky + kz * kz);
        dst[idx] = -k2 * src[idx];
    });
    return out;
}

VectorField leray_project(const VectorField& v) {
    const GridSpec& grid = v.grid();
    VectorField out = v;
    auto a = out[0].coefficients();
    auto b = out[1].coefficients();
    auto c = out[2].coefficients();
    for_each_mode(grid, [&](std::size_t idx, int kx, int ky, int kz) {
        // Use the same wavevector the divergence operator sees.
        const double k0 = derivative_wavenumber(grid, kx);
        const double k1 = derivative_wavenumber(grid, ky);
        const double k2 = derivative_wavenumber(grid, kz);
        const double kk = k0 * k0 + k1 * k1 + k2 * k2;
        if (kk == 0.0) return;
        const Complex kdotv = (k0 * a[idx] + k1 * b[idx] + k2 * c[idx]) / kk;
        a[idx] -= k0 * kdotv;
        b[idx] -= k1 * kdotv;
        c[idx] -= k2 * kdotv;
    });
    return out;
}

bool within_dealias_cutoff(const GridSpec& grid, int kx, int ky, int kz) noexcept {
    const double cutoff = grid.dealias_cutoff();
    const int kmax = std::max({std::abs(kx), std::abs(ky), std::abs(kz)});
    return static_cast<double>(kmax) <= cutoff;
}

void dealias_in_place(ScalarField& f) noexcept {
    const GridSpec& grid = f.grid();
    auto c = f.coefficients();
    for_each_mode(grid, [&](std::size_t idx, int kx, int ky, int kz) {
        if (!within_dealias_cutoff(grid, kx, ky, kz)) c[idx] = Complex{};
    });
}

void dealias_in_place(VectorField& v) noexcept {
    for (auto& comp : v.components) dealias_in_place(comp);
}

ScalarField dealias(ScalarField f) {
    dealias_in_place(f);
    return f;
}

VectorField dealias(VectorField v) {
    dealias_in_place(v);
    return v;
}

double linf_norm(const ScalarField& f, int oversample) {
    const PhysicalField p = inverse_transform(f, oversample);
    double m = 0.0;
    for (double x : p.values) m = std::max(m, std::abs(x));
    return m;
}

double linf_norm(const ScalarField& f) { return linf_norm(f, f.grid().oversample_factor); }

double linf_norm(const VectorField& v, int oversample) {
    const PhysicalField x = inverse_transform(v[0], oversample);
    const PhysicalField y = inverse_transform(v[1], oversample);
    const PhysicalField z = inverse_transform(v[2], oversample);
    double m2 = 0.0;
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        const double s = x.values[i] * x.values[i] + y.values[i] * y.values[i] + z.values[i] * z.values[i];
        m2 = std::max(m2, s);
    }
    return std::sqrt(m2);
}

double linf_norm(const VectorField& v) { return linf_norm(v, v.grid().oversample_factor); }

double inner_product(const ScalarField& f, const ScalarField& g) {
    const GridSpec& grid = f.grid();
    auto a = f.coefficients();
    auto b = g.coefficients();
    const int nz = grid.nz_half();
    double sum = 0.0;
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
        const int iz = static_cast<int>(idx % static_cast<std::size_t>(nz));
        sum += hermitian_weight(grid, iz) * (a[idx] * std::conj(b[idx])).real();
    }
    const double volume = GridSpec::box_length * GridSpec::box_length * GridSpec::box_length;
    return volume * sum;
}

double inner_product(const VectorField& v, const VectorField& w) {
    return inner_product(v[0], w[0]) + inner_product(v[1], w[1]) + inner_product(v[2], w[2]);
}

double l2_norm(const ScalarField& f) { return std::sqrt(std::max(0.0, inner_product(f, f))); }
double l2_norm(const VectorField& v) { return std::sqrt(std::max(0.0, inner_product(v, v))); }

double quadrature_l2_norm(const PhysicalField& f) {
    double sum = 0.0;
    for (double x : f.values) sum += x * x;
    const double h = GridSpec::box_length / f.m;
    return std::sqrt(sum * h * h * h);
}

PhysicalVector to_physical(const VectorField& v) {
    return {inverse_transform(v[0]), inverse_transform(v[1]), inverse_transform(v[2])};
}

ScalarField product(const ScalarField& f, const ScalarField& g) {
    PhysicalField a = inverse_transform(f);
    const PhysicalField b = inverse_transform(g);
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] *= b.values[i];
    ScalarField out = forward_transform(a, f.grid());
    dealias_in_place(out);
    return out;
}

ScalarField advect(const PhysicalVector& a, const ScalarField& f) {
    PhysicalField acc(f.grid().n);
    for (int j = 0; j < 3; ++j) {
        const PhysicalField df = inverse_transform(partial(f, j));
        const auto& aj = a[static_cast<std::size_t>(j)].values;
        for (std::size_t i = 0; i < acc.values.size(); ++i) acc.values[i] += aj[i] * df.values[i];
    }
    ScalarField out = forward_transform(acc, f.grid());
    dealias_in_place(out);
    return out;
}

ScalarField advect(const VectorField& a, const ScalarField& f) { return advect(to_physical(a), f); }

VectorField advect(const VectorField& a, const VectorField& v) {
    const PhysicalVector ap = to_physical(a);
    return VectorField(advect(ap, v[0]), advect(ap, v[1]), advect(ap, v[2]));
}

}  // namespace bqlp
