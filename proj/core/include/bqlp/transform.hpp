#pragma once

#include "bqlp/field.hpp"
#include "bqlp/grid.hpp"

namespace bqlp {

/// Physical samples on the grid's n^3 points to Fourier coefficients,
/// normalised so that a constant field c maps to coefficient c at k = 0.
/// Throws ConfigError when the sample count does not match the grid.
ScalarField forward_transform(const PhysicalField& physical, const GridSpec& grid);

/// Samples on an (oversample * n)^3 grid obtained by zero-padding the
/// spectrum. Nyquist coefficients are split symmetrically so the result is
/// the real trigonometric interpolant.
PhysicalField inverse_transform(const ScalarField& field, int oversample = 1);

/// Worker threads handed to FFTW; read once from BQLP_THREADS (default 1).
int transform_threads();

}  // namespace bqlp
