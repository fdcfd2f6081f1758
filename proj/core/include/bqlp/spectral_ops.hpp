#pragma once

#include <array>

#include "bqlp/field.hpp"

namespace bqlp {

/// Physical-space samples of the three velocity components on the base grid.
using PhysicalVector = std::array<PhysicalField, 3>;

/// Component j carries i k_j f_k. Nyquist wavenumbers differentiate to zero.
VectorField gradient(const ScalarField& f);
ScalarField partial(const ScalarField& f, int axis);
ScalarField divergence(const VectorField& v);
VectorField curl(const VectorField& v);
ScalarField laplacian(const ScalarField& f);

/// v_k - k (k . v_k) / |k|^2; the k = 0 mode passes through.
VectorField leray_project(const VectorField& v);

/// Zeroes every coefficient with max_i |k_i| > dealias_fraction * n/2.
ScalarField dealias(ScalarField f);
VectorField dealias(VectorField v);
void dealias_in_place(ScalarField& f) noexcept;
void dealias_in_place(VectorField& v) noexcept;
bool within_dealias_cutoff(const GridSpec& grid, int kx, int ky, int kz) noexcept;

/// Max of |f| on the grid refined by the grid's oversample_factor.
double linf_norm(const ScalarField& f);
double linf_norm(const ScalarField& f, int oversample);
/// Max of the pointwise Euclidean magnitude |v(x)|.
double linf_norm(const VectorField& v);
double linf_norm(const VectorField& v, int oversample);

/// Torus integral of f g over [0, 2pi)^3 evaluated from coefficients.
double inner_product(const ScalarField& f, const ScalarField& g);
double inner_product(const VectorField& v, const VectorField& w);
double l2_norm(const ScalarField& f);
double l2_norm(const VectorField& v);
/// Same integral by grid quadrature of physical samples.
double quadrature_l2_norm(const PhysicalField& f);

PhysicalVector to_physical(const VectorField& v);

/// Dealiased pseudospectral product f * g.
ScalarField product(const ScalarField& f, const ScalarField& g);
/// Dealiased (a . grad) f with `a` given by its physical samples.
ScalarField advect(const PhysicalVector& a, const ScalarField& f);
ScalarField advect(const VectorField& a, const ScalarField& f);
/// Dealiased (a . grad) v componentwise.
VectorField advect(const VectorField& a, const VectorField& v);

}  // namespace bqlp
