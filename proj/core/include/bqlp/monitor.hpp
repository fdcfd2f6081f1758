#pragma once

#include <functional>
#include <optional>

#include "bqlp/diagnostics.hpp"
#include "bqlp/ledger.hpp"
#include "bqlp/littlewood_paley.hpp"
#include "bqlp/solver.hpp"

namespace bqlp {

/// What to measure at each sample.
struct DiagnosticsSettings {
    double nu = 0.1;
    double kappa = 0.1;
    double c = 1.0;
    double s = 0.5;
    double sigma = -0.25;
    bool compute_fluxes = true;
    std::optional<GronwallConstants> gronwall;
};

/// Computes a full DiagnosticsRecord for one state. Validates (s, sigma).
DiagnosticsRecord compute_record(const lp::DyadicSymbolFamily& family, const SolverState& state,
                                 const DiagnosticsSettings& settings);

struct MonitoredRun {
    RunResult run;
    CriterionLedger ledger;
};

/// Invoked after each record is appended to the ledger.
using RecordObserver = std::function<void(const SolverState&, const DiagnosticsRecord&, long step)>;

/// Integrates with bqlp::run and feeds every sampled state into the ledger.
MonitoredRun run_monitored(const SolverParams& params, const SolverState& initial,
                           const DiagnosticsSettings& settings, const RecordObserver& observer = {});

}  // namespace bqlp
