#include "bqlp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bqlp/errors.hpp"
#include "bqlp/spectral_ops.hpp"

namespace bqlp {

namespace {

std::string format_pair(double s, double sigma) {
    std::ostringstream os;
    os << "(s, sigma) = (" << s << ", " << sigma << ")";
    return os.str();
}

}  // namespace

ValidatedExponents regularity_monitor(double s, double sigma) {
    if (!std::isfinite(s) || !std::isfinite(sigma)) {
        throw ParameterError(format_pair(s, sigma) + ": exponents must be finite");
    }
    if (s < 0.5) {
        throw ParameterError(format_pair(s, sigma) + ": violates s >= 1/2 (require 1/2 <= s < 1)");
    }
    if (s >= 1.0) {
        throw ParameterError(format_pair(s, sigma) + ": violates s < 1 (require 1/2 <= s < 1)");
    }
    if (sigma >= 0.0) {
        throw ParameterError(format_pair(s, sigma) + ": violates sigma < 0 (require s - 1 < sigma < 0)");
    }
    // Both forms are tested so that rounding in s - 1 cannot admit a pair
    // with 2s == 2 sigma + 2.
    if (!(sigma > s - 1.0) || !(2.0 * s < 2.0 * sigma + 2.0)) {
        throw ParameterError(format_pair(s, sigma) + ": violates sigma > s - 1 (require s - 1 < sigma < 0)");
    }
    return ValidatedExponents(s, sigma);
}

bool exponents_admissible(double s, double sigma) noexcept {
    return std::isfinite(s) && std::isfinite(sigma) && s >= 0.5 && s < 1.0 && sigma < 0.0 && sigma > s - 1.0 &&
           2.0 * s < 2.0 * sigma + 2.0;
}

std::string to_string(CutoffStatus status) {
    switch (status) {
        case CutoffStatus::resolved: return "resolved";
        case CutoffStatus::unresolved: return "unresolved";
        case CutoffStatus::undefined: return "undefined";
    }
    return "unknown";
}

int DissipationCutoff::low_mode_limit() const {
    if (status == CutoffStatus::undefined) {
        throw UndefinedCutoffError("dissipation wave number undefined: c * min{nu, kappa} = 0");
    }
    return q_value;
}

DissipationCutoff dissipation_cutoff_from_sups(std::span<const double> sups, int populated_q_max, double nu,
                                               double kappa, double c) {
    if (!(c > 0.0)) throw ParameterError("dissipation constant c must be > 0");
    DissipationCutoff out;
    const int q_max = static_cast<int>(sups.size()) - 2;
    out.scaled_sups.resize(sups.size());
    for (int p = -1; p <= q_max; ++p) {
        const auto i = static_cast<std::size_t>(p + 1);
        out.scaled_sups[i] = sups[i] / lp::lambda(p);
    }
    out.threshold = c * std::min(nu, kappa);
    if (!(out.threshold > 0.0)) {
        out.status = CutoffStatus::undefined;
        out.q_value = 0;
        out.lambda_value = std::nan("");
        return out;
    }
    // Q is the largest p >= 1 that still fails the strict inequality (or 0).
    int q = 0;
    for (int p = q_max; p >= 1; --p) {
        if (!(out.scaled_sups[static_cast<std::size_t>(p + 1)] < out.threshold)) {
            q = p;
            break;
        }
    }
    out.q_value = q;
    out.lambda_value = lp::lambda(q);
    out.status = (q > 0 && q >= populated_q_max) ? CutoffStatus::unresolved : CutoffStatus::resolved;
    return out;
}

DissipationCutoff dissipation_wavenumber(const lp::DyadicSymbolFamily& family, const VectorField& u, double nu,
                                         double kappa, double c) {
    const auto sups = lp::block_sup_norms(family, u);
    return dissipation_cutoff_from_sups(sups, family.populated_q_max(), nu, kappa, c);
}

CriterionValue criterion_from_sups(std::span<const double> sups, const DissipationCutoff& cutoff) {
    const int Q = cutoff.low_mode_limit();
    const int q_max = static_cast<int>(sups.size()) - 2;
    return {lp::besov_from_sups(sups, Q), lp::besov_from_sups(sups, q_max)};
}

CriterionValue criterion_integrand(const lp::DyadicSymbolFamily& family, const VectorField& u,
                                   const DissipationCutoff& cutoff) {
    cutoff.low_mode_limit();
    return criterion_from_sups(lp::block_sup_norms(family, u), cutoff);
}

double bkm_integrand(const VectorField& u) { return linf_norm(curl(u)); }

}  // namespace bqlp
