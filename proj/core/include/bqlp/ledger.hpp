#pragma once

#include <optional>
#include <vector>

#include "bqlp/diagnostics.hpp"
#include "bqlp/flux.hpp"

namespace bqlp {

/// Everything measured at one sample time.
struct DiagnosticsRecord {
    double t = 0.0;
    double energy_u = 0.0;      // 1/2 ||u||_2^2
    double energy_theta = 0.0;  // 1/2 ||theta||_2^2
    double hs_u = 0.0;          // ||u||_{H^s}
    double hsigma_theta = 0.0;  // ||theta||_{H^sigma}
    CutoffStatus cutoff_status = CutoffStatus::undefined;
    int q_value = 0;
    double lambda_value = 0.0;
    double f = 0.0;             // NaN when the cutoff is undefined
    double besov_full = 0.0;
    double bkm = 0.0;           // ||curl u||_inf
    FluxDecomposition flux;
};

/// Constants of the differential inequality y' <= C (f + 1) y + S used to draw
/// a Gronwall bound. The analysis leaves them unspecified; the overlay is
/// informational and never used as a pass/fail test.
struct GronwallConstants {
    double rate = 1.0;
    double source = 0.0;
};

/// Running integrals of f(t) and of the vorticity sup norm over the samples.
struct CriterionLedger {
    std::vector<DiagnosticsRecord> samples;
    /// Trapezoid integrals up to each sample (same length as samples).
    std::vector<double> integral_f_history;
    std::vector<double> integral_bkm_history;
    std::vector<double> gronwall_bound;

    std::optional<GronwallConstants> gronwall;

    double integral_f = 0.0;
    double integral_bkm = 0.0;
    /// False once a sample with undefined f has been skipped in integral_f.
    bool f_integrable_samples_only = true;

    bool empty() const noexcept { return samples.empty(); }
};

/// Appends a record and advances the trapezoid integrals. Throws
/// SequencingError unless record.t is strictly greater than the previous t.
void update_ledger(CriterionLedger& ledger, const DiagnosticsRecord& record);

/// Trapezoid integral of f over consecutive (t, f) samples, skipping
/// intervals where either endpoint is NaN.
double trapezoid(const std::vector<double>& t, const std::vector<double>& f);

}  // namespace bqlp
