// Acceptance runner: evaluates each criterion, prints one PASS/FAIL line per
// criterion, and exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bqlp/config.hpp"
#include "bqlp/diagnostics.hpp"
#include "bqlp/energy_balance.hpp"
#include "bqlp/errors.hpp"
#include "bqlp/flux.hpp"
#include "bqlp/initial_condition.hpp"
#include "bqlp/littlewood_paley.hpp"
#include "bqlp/monitor.hpp"
#include "bqlp/snapshot.hpp"
#include "bqlp/solver.hpp"
#include "bqlp/spectral_ops.hpp"
#include "bqlp/timeseries.hpp"
#include "bqlp_cli/cli.hpp"
#include "oracles.hpp"
#include "support/fields.hpp"

using namespace bqlp;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Detail {
public:
    template <class T>
    Detail& add(const std::string& key, T value) {
        if (!text_.empty()) text_ += ' ';
        std::ostringstream os;
        os.precision(3);
        os << key << '=' << value;
        text_ += os.str();
        return *this;
    }
    std::string str() const { return text_; }

private:
    std::string text_;
};

GridSpec grid_of(int n) {
    GridSpec g;
    g.n = n;
    return g;
}

// ---------------------------------------------------------------------------
// 1. Littlewood-Paley reconstruction and partition of unity.
Outcome lp_exactness() {
    const GridSpec g = grid_of(32);
    const lp::DyadicSymbolFamily fam(g);
    double worst_recon = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const double k_hi = 2.0 + static_cast<double>(seed % 9);
        const ScalarField f = random_field(g, 1000 + seed, k_hi);
        const auto blocks = lp::decompose(fam, f);
        ScalarField sum(g);
        for (const auto& b : blocks.blocks) sum += b;
        worst_recon = std::max(worst_recon, relative_l2(sum, f));
    }
    // Telescoping uses the reference symbols, evaluated at every stored |xi|.
    const double reach = 0.75 * std::ldexp(1.0, fam.q_max() + 1);
    double worst_pou = 0.0, worst_pou_oracle = 0.0;
    const auto mags = fam.magnitude();
    for (std::size_t i = 0; i < mags.size(); ++i) {
        if (mags[i] > reach) continue;
        double sum = 0.0, sum_oracle = 0.0;
        for (int q = -1; q <= fam.q_max(); ++q) {
            sum += fam.multiplier(q)[i];
            sum_oracle += oracle::phi_q(q, mags[i]);
        }
        worst_pou = std::max(worst_pou, std::abs(sum - 1.0));
        worst_pou_oracle = std::max(worst_pou_oracle, std::abs(sum_oracle - 1.0));
    }
    Outcome o;
    o.pass = worst_recon <= 1e-12 && worst_pou <= 1e-14 && worst_pou_oracle <= 1e-14;
    o.detail = Detail()
                   .add("fields", 100)
                   .add("max_recon_rel_l2", worst_recon)
                   .add("max_partition_err", worst_pou)
                   .add("oracle_partition_err", worst_pou_oracle)
                   .str();
    return o;
}

// ---------------------------------------------------------------------------
// 2. Paraproduct and commutator identities.
Outcome bony_identities() {
    const GridSpec g = grid_of(16);
    const lp::DyadicSymbolFamily fam(g);
    const std::pair<double, double> exps[] = {{0.5, -0.25}, {0.75, -0.1}, {0.9, -0.05}};
    double worst_i3 = 0.0, worst_i31 = 0.0, worst_i312 = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const VectorField u = random_solenoidal(g, 500 + seed);
        const ScalarField th = random_field(g, 900 + seed);
        for (const auto& [s, sigma] : exps) {
            const FluxDecomposition d = flux_terms(fam, u, th, s, sigma);
            const double scale3 = std::max({std::abs(d.i3), std::abs(d.i31), std::abs(d.i32), std::abs(d.i33)});
            const double scale31 = std::max({std::abs(d.i31), std::abs(d.i311), std::abs(d.i312), std::abs(d.i313)});
            worst_i3 = std::max(worst_i3, std::abs(d.i3 - (d.i31 + d.i32 + d.i33)) / scale3);
            worst_i31 = std::max(worst_i31, std::abs(d.i31 - (d.i311 + d.i312 + d.i313)) / scale31);
            worst_i312 = std::max(worst_i312, verify_i312_vanishes(fam, u, th, sigma));
        }
    }
    Outcome o;
    o.pass = worst_i3 <= 1e-9 && worst_i31 <= 1e-9 && worst_i312 <= 1e-10;
    o.detail = Detail()
                   .add("pairs", 20)
                   .add("exponent_sets", 3)
                   .add("max_rel_I3_split", worst_i3)
                   .add("max_rel_I31_split", worst_i31)
                   .add("max_I312_normalized", worst_i312)
                   .str();
    return o;
}

// ---------------------------------------------------------------------------
// 3. Dissipation cutoff against a brute-force scan.
//
// Each synthetic field is a sum of terms a_j cos(k_j . x) with a_j a constant
// vector orthogonal to k_j. The oracle's block sup norms are |a_j| phi_q(|k_j|),
// summed over terms whose block supports are disjoint by construction.
struct Term {
    std::array<double, 3> a;
    std::array<int, 3> k;
};
struct CutoffCase {
    std::string name;
    std::vector<Term> terms;
    double nu = 0.1, kappa = 0.1, c = 1.0;
};

int oracle_populated_q_max(const GridSpec& g) {
    const int cut = static_cast<int>(std::floor(g.dealias_cutoff()));
    double r_max = 0.0;
    for (int x = -cut; x <= cut; ++x)
        for (int y = -cut; y <= cut; ++y)
            for (int z = -cut; z <= cut; ++z) r_max = std::max(r_max, std::sqrt(double(x * x + y * y + z * z)));
    int q = -1;
    while (0.75 * std::ldexp(1.0, q + 1) < r_max) ++q;
    return q;
}

Outcome cutoff_correctness() {
    const GridSpec g = grid_of(32);
    const lp::DyadicSymbolFamily fam(g);
    const std::vector<CutoffCase> cases = {
        {"zero", {}},
        {"block0_strong", {{{0, 5, 0}, {1, 0, 0}}}},
        {"block1_above", {{{0, 0.3, 0}, {2, 0, 0}}}},
        {"block1_below", {{{0, 0.1, 0}, {2, 0, 0}}}},
        {"block2_above", {{{0, 0.5, 0}, {4, 0, 0}}}},
        {"block2_below", {{{0, 0.3, 0}, {4, 0, 0}}}},
        {"block3_above", {{{0, 1.0, 0}, {8, 0, 0}}}},
        {"block3_below", {{{0, 0.7, 0}, {8, 0, 0}}}},
        {"block3_small_c", {{{0, 0.7, 0}, {8, 0, 0}}}, 0.1, 0.1, 0.5},
        {"blocks1_3", {{{0, 1.0, 0}, {2, 0, 0}}, {{0, 0, 0.9}, {8, 0, 0}}}},
        {"blocks0_2", {{{0, 0.05, 0}, {1, 0, 0}}, {{0, 0, 0.45}, {0, 4, 0}}}},
        {"blocks1_2_kappa", {{{0, 0.4, 0}, {3, 0, 0}}, {{0.45, 0, 0}, {0, 6, 0}}}, 0.2, 0.05, 1.0},
        {"diagonal_blocks2_3", {{{1.0, -1.0, 0}, {4, 4, 4}}}, 0.05, 0.05, 1.0},
        {"unresolved", {{{0, 0, 6.0}, {10, 10, 0}}}},
        {"undefined", {{{0, 1.0, 0}, {2, 0, 0}}}, 0.0, 0.1, 1.0},
    };
    const int populated = oracle_populated_q_max(g);
    int matched = 0, unresolved_seen = 0;
    std::string mismatches;
    for (const auto& c : cases) {
        VectorField u(g);
        std::vector<double> sups(static_cast<std::size_t>(fam.q_max() + 2), 0.0);
        std::vector<int> owner(sups.size(), -1);
        for (std::size_t j = 0; j < c.terms.size(); ++j) {
            const Term& t = c.terms[j];
            for (int comp = 0; comp < 3; ++comp) {
                if (t.a[comp] == 0.0) continue;
                // set_mode writes the conjugate partner as well.
                u[comp].set_mode(t.k[0], t.k[1], t.k[2], u[comp].mode(t.k[0], t.k[1], t.k[2]) + 0.5 * t.a[comp]);
            }
            const double r = std::sqrt(double(t.k[0] * t.k[0] + t.k[1] * t.k[1] + t.k[2] * t.k[2]));
            const double amp = std::sqrt(t.a[0] * t.a[0] + t.a[1] * t.a[1] + t.a[2] * t.a[2]);
            for (int q = -1; q <= fam.q_max(); ++q) {
                const double w = oracle::phi_q(q, r);
                if (w == 0.0) continue;
                if (owner[q + 1] != -1) throw std::logic_error("cutoff case " + c.name + " overlaps blocks");
                owner[q + 1] = static_cast<int>(j);
                sups[q + 1] = amp * w;
            }
        }
        std::vector<double> scaled(sups.size());
        for (int q = -1; q <= fam.q_max(); ++q) scaled[q + 1] = sups[q + 1] / std::ldexp(1.0, q);
        const double threshold = c.c * std::min(c.nu, c.kappa);

        const DissipationCutoff got = dissipation_wavenumber(fam, u, c.nu, c.kappa, c.c);
        bool ok;
        if (threshold == 0.0) {
            ok = got.status == CutoffStatus::undefined;
        } else {
            const int q_expect = oracle::brute_force_cutoff(scaled, threshold);
            const bool unresolved = q_expect > 0 && q_expect >= populated;
            ok = got.q_value == q_expect &&
                 got.status == (unresolved ? CutoffStatus::unresolved : CutoffStatus::resolved);
            if (unresolved && ok) ++unresolved_seen;
        }
        if (ok) {
            ++matched;
        } else {
            mismatches += " " + c.name;
        }
    }
    Outcome o;
    o.pass = matched == static_cast<int>(cases.size()) && cases.size() >= 10 && unresolved_seen >= 1;
    Detail d;
    d.add("cases", cases.size()).add("matched", matched).add("unresolved_cases", unresolved_seen);
    if (!mismatches.empty()) d.add("mismatch", mismatches);
    o.detail = d.str();
    return o;
}

// ---------------------------------------------------------------------------
// 4. Solver physics.
Outcome solver_physics() {
    const GridSpec g = grid_of(32);
    Detail d;
    bool pass = true;

    // (a) Diffusion-only steps against exp(-nu |k|^2 dt).
    {
        SolverParams p;
        p.nu = 0.05;
        p.kappa = 0.02;
        p.dt = 0.01;
        p.linear_only = true;
        SolverState s;
        s.u = random_vector(g, 71);
        s.theta = random_field(g, 72);
        double worst = 0.0;
        Stepper stepper(g, p);
        for (int n = 0; n < 5; ++n) {
            const SolverState next = stepper.step(s, p.dt);
            for_each_mode(g, [&](std::size_t idx, int kx, int ky, int kz) {
                const double k2 = double(kx * kx + ky * ky + kz * kz);
                const double fu = std::exp(-p.nu * k2 * p.dt), ft = std::exp(-p.kappa * k2 * p.dt);
                for (int c = 0; c < 3; ++c)
                    worst = std::max(worst, std::abs(next.u[c].coefficients()[idx] - fu * s.u[c].coefficients()[idx]));
                worst = std::max(worst, std::abs(next.theta.coefficients()[idx] - ft * s.theta.coefficients()[idx]));
            });
            s = next;
        }
        pass = pass && worst <= 1e-12;
        d.add("a_max_decay_err", worst);
    }

    // (b) Navier-Stokes reduction.
    {
        SolverParams p;
        p.nu = 0.05;
        p.kappa = 0.05;
        p.dt = 0.005;
        p.t_end = 0.25;
        p.diagnostics_stride = 1;
        InitialCondition ic;
        ic.kind = InitialKind::zero_theta_ns;
        ic.seed = 19;
        double worst = 0.0;
        const RunResult r = run(p, make_initial_state(g, ic), [&](const SolverState& s, long) {
            worst = std::max(worst, max_abs(s.theta));
        });
        pass = pass && r.status == RunStatus::completed && worst == 0.0;
        d.add("b_max_theta", worst);
    }

    // (c) + (d) Energy balance and incompressibility on Taylor-Green with a
    // thermal bubble.
    {
        SolverParams p;
        p.nu = 0.05;
        p.kappa = 0.05;
        p.dt = 1e-3;
        p.t_end = 1.0;
        p.diagnostics_stride = 1;
        InitialCondition ic;
        ic.kind = InitialKind::taylor_green;
        ic.theta_amplitude = 1.0;
        ic.bubble_radius = 0.6;
        ic.bubble_center = {3.141592653589793, 3.141592653589793, 2.0};
        std::vector<EnergySample> hist;
        double worst_div = 0.0;
        const RunResult r = run(p, make_initial_state(g, ic), [&](const SolverState& s, long) {
            hist.push_back(energy_sample(s, p.nu, p.kappa));
            worst_div = std::max(worst_div, l2_norm(divergence(s.u)) / l2_norm(s.u));
        });
        double worst_u = 0.0, worst_t = 0.0;
        for (const auto& res : energy_balance_residual(hist)) {
            worst_u = std::max(worst_u, res.velocity_relative);
            worst_t = std::max(worst_t, res.temperature_relative);
        }
        pass = pass && r.status == RunStatus::completed && hist.size() >= 2 && worst_u <= 1e-4 &&
               worst_t <= 1e-4 && worst_div <= 1e-10;
        d.add("c_max_resid_u", worst_u).add("c_max_resid_theta", worst_t).add("d_max_div_rel", worst_div);
    }
    return {pass, d.str()};
}

// ---------------------------------------------------------------------------
// 5. Temporal order by Richardson extrapolation.
Outcome temporal_order() {
    const GridSpec g = grid_of(32);
    InitialCondition ic;
    ic.kind = InitialKind::random_band;
    ic.amplitude = 2.0;
    ic.band = {1.0, 4.0};
    ic.theta_amplitude = 1.0;
    ic.seed = 3;
    const SolverState s0 = make_initial_state(g, ic);
    auto final_state = [&](double dt) {
        SolverParams p;
        p.nu = 0.01;
        p.kappa = 0.01;
        p.dt = dt;
        p.t_end = 0.2;
        p.diagnostics_stride = 1 << 30;
        return run(p, s0).final_state;
    };
    const SolverState a = final_state(4e-3), b = final_state(2e-3), c = final_state(1e-3);
    auto distance = [](const SolverState& x, const SolverState& y) {
        const double du = l2_norm(x.u - y.u);
        const double dt = l2_norm(x.theta - y.theta);
        return std::sqrt(du * du + dt * dt);
    };
    const double e1 = distance(a, b), e2 = distance(b, c);
    const double order = std::log2(e1 / e2);
    Outcome o;
    o.pass = std::abs(order - 4.0) <= 0.5;
    o.detail = Detail().add("diff_4e-3_2e-3", e1).add("diff_2e-3_1e-3", e2).add("observed_order", order).str();
    return o;
}

// ---------------------------------------------------------------------------
// 6. Criterion ledger on a decaying run.
RunConfig regular_run_config() {
    RunConfig cfg;
    cfg.grid = grid_of(32);
    cfg.nu = 0.1;
    cfg.kappa = 0.1;
    cfg.dt = 0.01;
    cfg.t_end = 2.0;
    cfg.diagnostics_stride = 10;
    cfg.initial.kind = InitialKind::taylor_green;
    cfg.initial.theta_amplitude = 1.0;
    cfg.initial.bubble_radius = 0.6;
    return cfg;
}

Outcome regular_ledger() {
    const RunConfig cfg = regular_run_config();
    auto once = [&] {
        return run_monitored(cfg.solver_params(), make_initial_state(cfg.grid, cfg.initial),
                             cfg.diagnostics_settings());
    };
    const MonitoredRun first = once();
    const MonitoredRun second = once();
    const auto& samples = first.ledger.samples;
    bool ordered = true;
    double max_hs = 0.0, max_hsigma = 0.0;
    for (const auto& r : samples) {
        ordered = ordered && r.cutoff_status != CutoffStatus::undefined && r.f <= r.besov_full;
        max_hs = std::max(max_hs, r.hs_u);
        max_hsigma = std::max(max_hsigma, r.hsigma_theta);
    }
    const double hs0 = samples.empty() ? 0.0 : samples.front().hs_u;
    const double hsigma0 = samples.empty() ? 0.0 : samples.front().hsigma_theta;
    const bool bounded = std::isfinite(max_hs) && std::isfinite(max_hsigma) && max_hs <= 10.0 * hs0 &&
                         max_hsigma <= 10.0 * hsigma0;
    const bool identical =
        format_timeseries(first.ledger) == format_timeseries(second.ledger) &&
        encode_snapshot(first.run.final_state, cfg.nu, cfg.kappa) ==
            encode_snapshot(second.run.final_state, cfg.nu, cfg.kappa);
    const bool completed =
        first.run.status == RunStatus::completed && std::abs(first.run.final_state.t - cfg.t_end) < 1e-9;
    Outcome o;
    o.pass = completed && std::isfinite(first.ledger.integral_f) && ordered && bounded && identical;
    o.detail = Detail()
                   .add("status", to_string(first.run.status))
                   .add("samples", samples.size())
                   .add("int_f", first.ledger.integral_f)
                   .add("f_le_besov", ordered ? "yes" : "no")
                   .add("max_hs_over_initial", max_hs / hs0)
                   .add("max_hsigma_over_initial", max_hsigma / hsigma0)
                   .add("byte_identical", identical ? "yes" : "no")
                   .str();
    return o;
}

// ---------------------------------------------------------------------------
// 7. Exponent gate.
Outcome exponent_gate() {
    struct Probe {
        double s, sigma;
        bool expect;
    };
    const std::vector<Probe> probes = {
        {0.5, -0.25, true},   {0.5, -0.49, true},   {0.5, -0.5, false},  {0.5, -0.01, true},
        {1.0, -0.5, false},   {1.0, -0.01, false},  {0.9, -0.05, true},  {0.9, -0.1, false},
        {0.75, 0.0, false},   {0.75, -0.25, false}, {0.75, -0.2, true},  {0.75, 0.1, false},
        {0.49, -0.25, false}, {0.999, -0.0005, true}, {0.6, -0.4, false}, {0.6, -0.39, true},
        {0.7, -0.3, false},   {0.7, -0.29, true},   {0.3, -0.5, false},  {0.99, -0.02, false},
    };
    int agree = 0;
    std::string bad;
    for (const auto& p : probes) {
        bool accepted = true;
        try {
            regularity_monitor(p.s, p.sigma);
        } catch (const ParameterError&) {
            accepted = false;
        }
        if (accepted == p.expect) {
            ++agree;
        } else {
            bad += " (" + std::to_string(p.s) + "," + std::to_string(p.sigma) + ")";
        }
    }
    Outcome o;
    o.pass = agree == static_cast<int>(probes.size());
    Detail d;
    d.add("probes", probes.size()).add("agree", agree);
    if (!bad.empty()) d.add("disagree", bad);
    o.detail = d.str();
    return o;
}

// ---------------------------------------------------------------------------
// 8. Persistence: snapshots, CSV re-ingestion, offline analysis.
std::map<std::string, std::string> parse_kv_line(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos) kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

double rel_diff(double a, double b) {
    if (a == b) return 0.0;
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

Outcome persistence() {
    const fs::path dir = fs::temp_directory_path() / "bqlp_acceptance_persistence";
    fs::remove_all(dir);
    fs::create_directories(dir);

    RunConfig cfg = regular_run_config();
    cfg.grid = grid_of(16);
    cfg.t_end = 0.5;
    cfg.diagnostics_stride = 5;
    cfg.initial.kind = InitialKind::random_band;
    cfg.initial.seed = 23;

    std::vector<DiagnosticsRecord> in_run;
    std::vector<fs::path> paths;
    bool snapshot_exact = true;
    const MonitoredRun mr = run_monitored(
        cfg.solver_params(), make_initial_state(cfg.grid, cfg.initial), cfg.diagnostics_settings(),
        [&](const SolverState& s, const DiagnosticsRecord& r, long step) {
            const fs::path p = dir / ("s" + std::to_string(step) + ".bqlp");
            save_snapshot(s, cfg.nu, cfg.kappa, p);
            const Snapshot back = load_snapshot(p, cfg.grid.n);
            snapshot_exact = snapshot_exact && back.state.t == s.t && max_abs_diff(back.state.u, s.u) == 0.0 &&
                             max_abs_diff(back.state.theta, s.theta) == 0.0 &&
                             encode_snapshot(back.state, back.nu, back.kappa) ==
                                 encode_snapshot(s, cfg.nu, cfg.kappa);
            in_run.push_back(r);
            paths.push_back(p);
        });

    write_timeseries(mr.ledger, dir / "timeseries.csv");
    const auto rows = read_timeseries(dir / "timeseries.csv");
    std::vector<double> t, f, bkm;
    for (const auto& r : rows) {
        t.push_back(r.t);
        f.push_back(r.f);
        bkm.push_back(r.bkm);
    }
    const double csv_err = std::max(rel_diff(oracle::trapezoid(t, f), mr.ledger.integral_f),
                                    rel_diff(oracle::trapezoid(t, bkm), mr.ledger.integral_bkm));

    double analyze_err = 0.0;
    bool analyze_ok = true;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        std::vector<std::string> args = {"bqlp", "analyze", paths[i].string(), "--s", "0.5", "--sigma", "-0.25",
                                         "--c", "1"};
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
        analyze_ok = analyze_ok && code == 0;
        const auto kv = parse_kv_line(out.str().substr(0, out.str().find('\n')));
        const DiagnosticsRecord& r = in_run[i];
        const std::pair<const char*, double> fields[] = {
            {"t", r.t},       {"energy_u", r.energy_u}, {"energy_theta", r.energy_theta},
            {"hs_u", r.hs_u}, {"hsigma_theta", r.hsigma_theta}, {"f", r.f},
            {"besov", r.besov_full}, {"bkm", r.bkm}, {"i1", r.flux.i1},
            {"i2", r.flux.i2}, {"i3", r.flux.i3},
        };
        for (const auto& [key, value] : fields) {
            const auto it = kv.find(key);
            if (it == kv.end()) {
                analyze_ok = false;
                continue;
            }
            analyze_err = std::max(analyze_err, rel_diff(std::stod(it->second), value));
        }
        analyze_ok = analyze_ok && kv.count("Q") && kv.at("Q") == std::to_string(r.q_value);
    }
    Outcome o;
    o.pass = snapshot_exact && csv_err <= 1e-12 && analyze_ok && analyze_err <= 1e-12 && paths.size() >= 2;
    o.detail = Detail()
                   .add("snapshots", paths.size())
                   .add("bit_exact", snapshot_exact ? "yes" : "no")
                   .add("csv_integral_rel_err", csv_err)
                   .add("analyze_max_rel_err", analyze_err)
                   .str();
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> fn;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "littlewood-paley exactness", 30.0, lp_exactness},
        {2, "bony decomposition identities", 60.0, bony_identities},
        {3, "dissipation cutoff correctness", 5.0, cutoff_correctness},
        {4, "solver physics", 180.0, solver_physics},
        {5, "temporal order", 180.0, temporal_order},
        {6, "criterion ledger on a regular run", 180.0, regular_ledger},
        {7, "exponent gate", 1.0, exponent_gate},
        {8, "persistence and formats", 10.0, persistence},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = secs <= c.budget_seconds;
        const bool pass = o.pass && in_budget;
        if (!pass) ++failures;
        std::printf("%s [%d] %s: %s runtime=%.2fs budget=%.0fs%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.budget_seconds, in_budget ? "" : " (over budget)");
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
