#include "bqlp/ledger.hpp"

#include <cmath>
#include <string>

#include "bqlp/errors.hpp"

namespace bqlp {

namespace {

double interval_integral(double fa, double fb, double dt) {
    if (std::isnan(fa) || std::isnan(fb)) return 0.0;
    return 0.5 * (fa + fb) * dt;
}

}  // namespace

void update_ledger(CriterionLedger& ledger, const DiagnosticsRecord& record) {
    if (!ledger.samples.empty()) {
        const DiagnosticsRecord& prev = ledger.samples.back();
        if (!(record.t > prev.t)) {
            throw SequencingError("ledger sample at t = " + std::to_string(record.t) +
                                  " does not follow t = " + std::to_string(prev.t));
        }
        const double dt = record.t - prev.t;
        ledger.integral_f += interval_integral(prev.f, record.f, dt);
        ledger.integral_bkm += interval_integral(prev.bkm, record.bkm, dt);
        if (ledger.gronwall && !ledger.gronwall_bound.empty()) {
            const GronwallConstants& g = *ledger.gronwall;
            const double growth_integral = interval_integral(prev.f + 1.0, record.f + 1.0, dt);
            const double factor = std::exp(g.rate * growth_integral);
            ledger.gronwall_bound.push_back(factor * ledger.gronwall_bound.back() + g.source * dt * 0.5 * (1.0 + factor));
        }
    } else if (ledger.gronwall) {
        ledger.gronwall_bound.push_back(record.hs_u * record.hs_u + record.hsigma_theta * record.hsigma_theta);
    }
    if (std::isnan(record.f)) ledger.f_integrable_samples_only = false;
    ledger.samples.push_back(record);
    ledger.integral_f_history.push_back(ledger.integral_f);
    ledger.integral_bkm_history.push_back(ledger.integral_bkm);
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < t.size() && i + 1 < f.size(); ++i) {
        sum += interval_integral(f[i], f[i + 1], t[i + 1] - t[i]);
    }
    return sum;
}

}  // namespace bqlp
