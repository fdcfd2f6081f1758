#pragma once

#include "bqlp/diagnostics.hpp"
#include "bqlp/field.hpp"
#include "bqlp/littlewood_paley.hpp"

namespace bqlp {

/// Blockwise flux terms of the weighted H^s / H^sigma energy identity and the
/// paraproduct split of the temperature transport term.
///
///   i1 = sum_q l_q^{2s}     int Delta_q(u . grad u) . u_q
///   i2 = -sum_q l_q^{2s}    int Delta_q(theta e3) . u_q
///   i3 = sum_q l_q^{2sigma} int Delta_q(u . grad theta) theta_q
///
/// i3 is evaluated directly; i31 + i32 + i33 is the low-high / high-low /
/// high-high split, and i311 + i312 + i313 the commutator split of i31.
struct FluxDecomposition {
    double i1 = 0.0;
    double i2 = 0.0;
    double i3 = 0.0;
    double i31 = 0.0;
    double i32 = 0.0;
    double i33 = 0.0;
    double i311 = 0.0;
    double i312 = 0.0;
    double i313 = 0.0;
    double s = 0.0;
    double sigma = 0.0;
};

/// Inputs are dealiased first; all products are dealiased pseudospectral
/// products, so the splits hold to round-off.
FluxDecomposition flux_terms(const lp::DyadicSymbolFamily& family, const VectorField& u, const ScalarField& theta,
                             const ValidatedExponents& exponents);
/// Validates (s, sigma) first; throws ParameterError when out of range.
FluxDecomposition flux_terms(const lp::DyadicSymbolFamily& family, const VectorField& u, const ScalarField& theta,
                             double s, double sigma);

/// l_q^{2sigma} int ([Delta_q, u_{<=p-2} . grad] theta_p) theta_q.
double commutator_piece(const lp::DyadicSymbolFamily& family, const VectorField& u, const ScalarField& theta, int q,
                        int p, double sigma);

/// |i312| divided by its Cauchy-Schwarz bound
/// sum_q l_q^{2sigma} ||u_{<=q-2} . grad theta_q||_2 ||theta_q||_2, so the
/// result lies in [0, 1] and does not depend on the field amplitudes.
/// Vanishes for solenoidal u; zero when every term is zero.
double verify_i312_vanishes(const lp::DyadicSymbolFamily& family, const VectorField& u, const ScalarField& theta,
                            double sigma);

}  // namespace bqlp
