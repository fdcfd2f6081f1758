#pragma once

#include <span>
#include <string>
#include <vector>

#include "bqlp/field.hpp"
#include "bqlp/littlewood_paley.hpp"

namespace bqlp {

/// An exponent pair (s, sigma) with 1/2 <= s < 1 and s - 1 < sigma < 0.
/// Only regularity_monitor() constructs one.
class ValidatedExponents {
public:
    double s() const noexcept { return s_; }
    double sigma() const noexcept { return sigma_; }

private:
    ValidatedExponents(double s, double sigma) noexcept : s_(s), sigma_(sigma) {}
    friend ValidatedExponents regularity_monitor(double s, double sigma);

    double s_;
    double sigma_;
};

/// Accepts iff 1/2 <= s < 1 and s - 1 < sigma < 0 (these imply 2s < 2 sigma + 2).
/// Throws ParameterError whose message names the violated inequality.
ValidatedExponents regularity_monitor(double s, double sigma);
bool exponents_admissible(double s, double sigma) noexcept;

enum class CutoffStatus {
    resolved,    // Q(t) found inside [0, q_max]
    unresolved,  // condition fails up to the highest populated block: grid ends in the inertial range
    undefined,   // c * min{nu, kappa} == 0
};

std::string to_string(CutoffStatus status);

/// Dissipation wave number Q(t) and Lambda(t) = 2^Q.
struct DissipationCutoff {
    CutoffStatus status = CutoffStatus::undefined;
    int q_value = 0;
    double lambda_value = 1.0;
    double threshold = 0.0;
    /// lambda_p^{-1} ||u_p||_inf for p = -1 .. q_max (index p + 1).
    std::vector<double> scaled_sups;

    bool defined() const noexcept { return status != CutoffStatus::undefined; }
    /// Upper index of the low modes entering f(t). Throws UndefinedCutoffError
    /// when undefined.
    int low_mode_limit() const;
};

/// Q(t) = min{ q >= 0 : lambda_p^{-1} ||u_p||_inf < c min{nu, kappa} for all p > q }.
DissipationCutoff dissipation_wavenumber(const lp::DyadicSymbolFamily& family, const VectorField& u,
                                         double nu, double kappa, double c);
/// Same scan from precomputed block sup norms ||u_p||_inf (index p + 1).
/// `populated_q_max` is the highest block that can carry energy.
DissipationCutoff dissipation_cutoff_from_sups(std::span<const double> sups, int populated_q_max, double nu,
                                               double kappa, double c);

struct CriterionValue {
    double f = 0.0;           // ||u_{<=Q}||_{B^1_{inf,inf}}
    double besov_full = 0.0;  // ||u||_{B^1_{inf,inf}}
};

/// f(t) = sup_{-1 <= q <= Q(t)} lambda_q ||u_q||_inf. The q = -1 block is included.
/// Throws UndefinedCutoffError for an undefined cutoff.
CriterionValue criterion_integrand(const lp::DyadicSymbolFamily& family, const VectorField& u,
                                   const DissipationCutoff& cutoff);
CriterionValue criterion_from_sups(std::span<const double> sups, const DissipationCutoff& cutoff);

/// ||curl u||_inf, the classical vorticity integrand.
double bkm_integrand(const VectorField& u);

}  // namespace bqlp
