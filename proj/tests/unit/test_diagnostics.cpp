#include <doctest.h>

#include <cmath>
#include <limits>

#include "bqlp/diagnostics.hpp"
#include "bqlp/errors.hpp"
#include "bqlp/flux.hpp"
#include "bqlp/ledger.hpp"
#include "bqlp/spectral_ops.hpp"
#include "oracles.hpp"
#include "support/fields.hpp"

using namespace bqlp;
using namespace testing_support;

namespace {
GridSpec grid_of(int n) {
    GridSpec g;
    g.n = n;
    return g;
}
ScalarField single_cos(const GridSpec& g, int kx, int ky, int kz, double a) {
    ScalarField f(g);
    f.set_mode(kx, ky, kz, 0.5 * a);
    return f;
}
DiagnosticsRecord record_at(double t, double f, double bkm = 0.0) {
    DiagnosticsRecord r;
    r.t = t;
    r.f = f;
    r.bkm = bkm;
    return r;
}
}  // namespace

TEST_SUITE("diagnostics") {

TEST_CASE("exponent gate examples") {
    CHECK_NOTHROW(regularity_monitor(0.5, -0.25));
    CHECK_NOTHROW(regularity_monitor(0.9, -0.05));
    try {
        regularity_monitor(1.0, -0.5);
        FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
        CHECK(std::string(e.what()).find("s < 1") != std::string::npos);
    }
    try {
        regularity_monitor(0.75, -0.3);
        FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
        CHECK(std::string(e.what()).find("sigma > s - 1") != std::string::npos);
    }
    CHECK_THROWS_AS(regularity_monitor(0.4, -0.1), ParameterError);
    CHECK_THROWS_AS(regularity_monitor(0.6, 0.0), ParameterError);
    CHECK_THROWS_AS(regularity_monitor(std::nan(""), -0.1), ParameterError);
}

TEST_CASE("every accepted pair satisfies 2s < 2 sigma + 2") {
    for (double s = 0.3; s <= 1.1; s += 0.013) {
        for (double sigma = -0.8; sigma <= 0.1; sigma += 0.011) {
            if (exponents_admissible(s, sigma)) {
                const auto e = regularity_monitor(s, sigma);
                CHECK(2.0 * e.s() < 2.0 * e.sigma() + 2.0);
            } else {
                CHECK_THROWS_AS(regularity_monitor(s, sigma), ParameterError);
            }
        }
    }
}

TEST_CASE("zero velocity gives Q = 0 and f = 0") {
    const GridSpec g = grid_of(32);
    const lp::DyadicSymbolFamily fam(g);
    const auto cut = dissipation_wavenumber(fam, VectorField(g), 0.1, 0.1, 1.0);
    CHECK(cut.status == CutoffStatus::resolved);
    CHECK(cut.q_value == 0);
    CHECK(cut.lambda_value == 1.0);
    CHECK(criterion_integrand(fam, VectorField(g), cut).f == 0.0);
}

TEST_CASE("undefined cutoff when the threshold vanishes") {
    const GridSpec g = grid_of(16);
    const lp::DyadicSymbolFamily fam(g);
    const auto cut = dissipation_wavenumber(fam, random_solenoidal(g, 1), 0.0, 0.1, 1.0);
    CHECK(cut.status == CutoffStatus::undefined);
    CHECK_FALSE(cut.defined());
    CHECK_THROWS_AS(cut.low_mode_limit(), UndefinedCutoffError);
    CHECK_THROWS_AS(criterion_integrand(fam, random_solenoidal(g, 1), cut), UndefinedCutoffError);
    CHECK_THROWS_AS(dissipation_wavenumber(fam, VectorField(g), 0.1, 0.1, 0.0), ParameterError);
}

TEST_CASE("cutoff minimality against the brute-force scan on random fields") {
    const GridSpec g = grid_of(32);
    const lp::DyadicSymbolFamily fam(g);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        VectorField u = random_solenoidal(g, seed);
        u *= 0.05 * double(seed + 1);
        const auto cut = dissipation_wavenumber(fam, u, 0.05, 0.08, 1.0);
        const int expect = oracle::brute_force_cutoff(cut.scaled_sups, cut.threshold);
        CHECK(cut.q_value == expect);
        for (int p = cut.q_value + 1; p <= fam.q_max(); ++p) CHECK(cut.scaled_sups[p + 1] < cut.threshold);
        if (cut.q_value > 0) CHECK_FALSE(cut.scaled_sups[cut.q_value + 1] < cut.threshold);
    }
}

TEST_CASE("single mode |k| = 1 with amplitude a gives f = a") {
    const GridSpec g = grid_of(32);
    const lp::DyadicSymbolFamily fam(g);
    const VectorField u{ScalarField(g), single_cos(g, 1, 0, 0, 0.8), ScalarField(g)};
    const auto cut = dissipation_wavenumber(fam, u, 0.1, 0.1, 1.0);
    const auto crit = criterion_integrand(fam, u, cut);
    CHECK(crit.f == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(crit.besov_full == doctest::Approx(0.8).epsilon(1e-9));
}

TEST_CASE("f never exceeds the full Besov norm and equals it at Q = q_max") {
    const GridSpec g = grid_of(32);
    const lp::DyadicSymbolFamily fam(g);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const VectorField u = random_solenoidal(g, 50 + seed);
        const auto cut = dissipation_wavenumber(fam, u, 0.01, 0.02, 0.5);
        const auto crit = criterion_integrand(fam, u, cut);
        CHECK(crit.f <= crit.besov_full);
        const auto sups = lp::block_sup_norms(fam, u);
        CHECK(lp::besov_from_sups(sups, fam.q_max()) == crit.besov_full);
    }
}

TEST_CASE("vorticity sup: gradients give zero and (0, 0, sin x1) gives one") {
    const GridSpec g = grid_of(16);
    CHECK(bkm_integrand(gradient(random_field(g, 3))) < 1e-12);
    const VectorField u{ScalarField(g), ScalarField(g), sample(g, [](double x, double, double) { return std::sin(x); })};
    const VectorField w = curl(u);
    const ScalarField minus_cos = sample(g, [](double x, double, double) { return -std::cos(x); });
    CHECK(max_abs_diff(w[1], minus_cos) < 1e-14);
    CHECK(bkm_integrand(u) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("flux terms vanish without temperature and reject bad exponents") {
    const GridSpec g = grid_of(16);
    const lp::DyadicSymbolFamily fam(g);
    const VectorField u = random_solenoidal(g, 2);
    const FluxDecomposition d = flux_terms(fam, u, ScalarField(g), 0.5, -0.25);
    CHECK(d.i2 == 0.0);
    CHECK(d.i3 == 0.0);
    CHECK(d.i31 == 0.0);
    CHECK(d.i32 == 0.0);
    CHECK(d.i33 == 0.0);
    CHECK(d.i311 == 0.0);
    CHECK(d.i312 == 0.0);
    CHECK(d.i313 == 0.0);
    CHECK(verify_i312_vanishes(fam, u, ScalarField(g), -0.25) == 0.0);
    CHECK_THROWS_AS(flux_terms(fam, u, ScalarField(g), 0.0, -0.25), ParameterError);
}

TEST_CASE("paraproduct and commutator splits are exact") {
    const GridSpec g = grid_of(16);
    const lp::DyadicSymbolFamily fam(g);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const VectorField u = random_solenoidal(g, seed);
        const ScalarField th = random_field(g, 100 + seed);
        const FluxDecomposition d = flux_terms(fam, u, th, 0.75, -0.1);
        const double scale = std::abs(d.i3) + std::abs(d.i31) + std::abs(d.i32) + std::abs(d.i33);
        CHECK(std::abs(d.i3 - (d.i31 + d.i32 + d.i33)) <= 1e-9 * scale);
        const double scale1 = std::abs(d.i31) + std::abs(d.i311) + std::abs(d.i312) + std::abs(d.i313);
        CHECK(std::abs(d.i31 - (d.i311 + d.i312 + d.i313)) <= 1e-9 * scale1);
        CHECK(verify_i312_vanishes(fam, u, th, -0.1) <= 1e-10);
    }
}

TEST_CASE("I312 is order one for a compressible velocity") {
    // div u = cos x1 correlates with theta_3^2 here, so the cancellation that
    // incompressibility provides is absent.
    const GridSpec g = grid_of(32);
    const lp::DyadicSymbolFamily fam(g);
    const VectorField u{sample(g, [](double x, double, double) { return std::sin(x); }), ScalarField(g), ScalarField(g)};
    const ScalarField th = sample(g, [](double x, double y, double) { return std::cos(8 * y) * (1 + std::cos(x)); });
    CHECK(verify_i312_vanishes(fam, u, th, -0.25) > 1e-2);
    const VectorField rotated{ScalarField(g), sample(g, [](double x, double, double) { return std::sin(x); }),
                              ScalarField(g)};
    CHECK(verify_i312_vanishes(fam, rotated, th, -0.25) <= 1e-12);
}

TEST_CASE("commutator pieces sum to I311") {
    const GridSpec g = grid_of(16);
    const lp::DyadicSymbolFamily fam(g);
    const VectorField u = random_solenoidal(g, 8);
    const ScalarField th = random_field(g, 9);
    const FluxDecomposition d = flux_terms(fam, u, th, 0.5, -0.25);
    double sum = 0.0;
    for (int q = -1; q <= fam.q_max(); ++q) {
        for (int p = q - 2; p <= q + 2; ++p) {
            if (p < -1 || p > fam.q_max()) continue;
            sum += commutator_piece(fam, u, th, q, p, -0.25);
        }
    }
    CHECK(sum == doctest::Approx(d.i311).epsilon(1e-10));
}

TEST_CASE("ledger trapezoid examples and sequencing") {
    CriterionLedger ledger;
    update_ledger(ledger, record_at(0.0, 1.0));
    CHECK(ledger.integral_f == 0.0);
    CHECK(ledger.integral_bkm == 0.0);
    update_ledger(ledger, record_at(0.5, 1.0));
    CHECK(ledger.integral_f == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(update_ledger(ledger, record_at(0.5, 1.0)), SequencingError);
    CHECK_THROWS_AS(update_ledger(ledger, record_at(0.2, 1.0)), SequencingError);
    CHECK(ledger.samples.size() == 2);
}

TEST_CASE("ledger integrals are non-decreasing, additive, and skip undefined samples") {
    std::vector<double> t, f;
    CriterionLedger whole, first, second;
    for (int i = 0; i <= 20; ++i) {
        const double ti = 0.1 * i;
        const double fi = 1.0 + std::sin(ti) * std::sin(ti);
        t.push_back(ti);
        f.push_back(fi);
        update_ledger(whole, record_at(ti, fi, 2 * fi));
        if (i <= 10) update_ledger(first, record_at(ti, fi));
        if (i >= 10) update_ledger(second, record_at(ti, fi));
    }
    for (std::size_t i = 1; i < whole.integral_f_history.size(); ++i) {
        CHECK(whole.integral_f_history[i] >= whole.integral_f_history[i - 1]);
    }
    CHECK(whole.integral_f == doctest::Approx(first.integral_f + second.integral_f).epsilon(1e-14));
    CHECK(whole.integral_f == doctest::Approx(oracle::trapezoid(t, f)).epsilon(1e-14));
    CHECK(whole.integral_bkm == doctest::Approx(2.0 * whole.integral_f).epsilon(1e-14));
    CHECK(whole.f_integrable_samples_only);

    CriterionLedger gap;
    update_ledger(gap, record_at(0.0, 1.0));
    update_ledger(gap, record_at(1.0, std::nan("")));
    update_ledger(gap, record_at(2.0, 1.0));
    CHECK(gap.integral_f == 0.0);
    CHECK_FALSE(gap.f_integrable_samples_only);
    CHECK(trapezoid({0.0, 1.0, 2.0}, {1.0, std::nan(""), 1.0}) == 0.0);
}

TEST_CASE("Gronwall overlay follows the discrete recursion") {
    CriterionLedger ledger;
    ledger.gronwall = GronwallConstants{0.5, 0.0};
    DiagnosticsRecord r = record_at(0.0, 1.0);
    r.hs_u = 1.0;
    r.hsigma_theta = 0.0;
    update_ledger(ledger, r);
    r = record_at(1.0, 1.0);
    update_ledger(ledger, r);
    REQUIRE(ledger.gronwall_bound.size() == 2);
    CHECK(ledger.gronwall_bound[0] == doctest::Approx(1.0));
    // B1 = exp(C * int (f + 1)) * B0 = exp(0.5 * 2)
    CHECK(ledger.gronwall_bound[1] == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
}

}  // TEST_SUITE
