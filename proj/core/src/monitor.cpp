#include "bqlp/monitor.hpp"

#include <cmath>

#include "bqlp/flux.hpp"
#include "bqlp/spectral_ops.hpp"

namespace bqlp {

DiagnosticsRecord compute_record(const lp::DyadicSymbolFamily& family, const SolverState& state,
                                 const DiagnosticsSettings& settings) {
    const ValidatedExponents exponents = regularity_monitor(settings.s, settings.sigma);
    DiagnosticsRecord r;
    r.t = state.t;
    r.energy_u = 0.5 * inner_product(state.u, state.u);
    r.energy_theta = 0.5 * inner_product(state.theta, state.theta);
    r.hs_u = lp::sobolev_norm(family, state.u, exponents.s());
    r.hsigma_theta = lp::sobolev_norm(family, state.theta, exponents.sigma());

    const auto sups = lp::block_sup_norms(family, state.u);
    const DissipationCutoff cutoff =
        dissipation_cutoff_from_sups(sups, family.populated_q_max(), settings.nu, settings.kappa, settings.c);
    r.cutoff_status = cutoff.status;
    r.q_value = cutoff.q_value;
    r.lambda_value = cutoff.lambda_value;
    r.besov_full = lp::besov_from_sups(sups, family.q_max());
    r.f = cutoff.defined() ? criterion_from_sups(sups, cutoff).f : std::nan("");
    r.bkm = bkm_integrand(state.u);
    if (settings.compute_fluxes) r.flux = flux_terms(family, state.u, state.theta, exponents);
    r.flux.s = exponents.s();
    r.flux.sigma = exponents.sigma();
    return r;
}

MonitoredRun run_monitored(const SolverParams& params, const SolverState& initial,
                           const DiagnosticsSettings& settings, const RecordObserver& observer) {
    regularity_monitor(settings.s, settings.sigma);
    const lp::DyadicSymbolFamily family(initial.grid());
    MonitoredRun out;
    out.ledger.gronwall = settings.gronwall;
    auto sink = [&](const SolverState& state, long step) {
        const DiagnosticsRecord record = compute_record(family, state, settings);
        update_ledger(out.ledger, record);
        if (observer) observer(state, record, step);
    };
    out.run = run(params, initial, sink);
    return out;
}

}  // namespace bqlp
