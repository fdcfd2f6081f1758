#include "bqlp/flux.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "bqlp/spectral_ops.hpp"

namespace bqlp {

namespace {

bool is_zero(const ScalarField& f) {
    return std::all_of(f.coefficients().begin(), f.coefficients().end(),
                       [](const Complex& c) { return c == Complex{}; });
}

bool is_zero(const VectorField& v) { return is_zero(v[0]) && is_zero(v[1]) && is_zero(v[2]); }

/// Shared LP data for one (u, theta) pair.
class FluxContext {
public:
    FluxContext(const lp::DyadicSymbolFamily& family, const VectorField& u, const ScalarField& theta)
        : family_(family), u_(dealias(u)), theta_(dealias(theta)) {
        ublocks_ = lp::decompose(family_, u_);
        tblocks_ = lp::decompose(family_, theta_);
        const int top = family_.q_max();
        // u_{<=p} for p = -2 .. q_max, stored at p + 2.
        ulow_.reserve(static_cast<std::size_t>(top + 3));
        tlow_.reserve(static_cast<std::size_t>(top + 3));
        for (int p = -2; p <= top; ++p) {
            ulow_.push_back(lp::low_modes(family_, u_, p));
            tlow_.push_back(lp::low_modes(family_, theta_, p));
        }
    }

    int q_max() const { return family_.q_max(); }
    const VectorField& u() const { return u_; }
    const ScalarField& theta() const { return theta_; }
    const VectorField& u_block(int q) const { return ublocks_.block(q); }
    const ScalarField& theta_block(int q) const { return tblocks_.block(q); }
    const lp::ScalarBlocks& theta_blocks() const { return tblocks_; }

    /// u_{<=p}; zero below -1, the full field above q_max.
    const VectorField& u_low(int p) const { return ulow_[static_cast<std::size_t>(std::clamp(p, -2, q_max()) + 2)]; }
    const ScalarField& theta_low(int p) const {
        return tlow_[static_cast<std::size_t>(std::clamp(p, -2, q_max()) + 2)];
    }

    /// l_q^{2e} int Delta_q(X) Y_q, with Y_q = theta_q.
    double tested_against_theta(const ScalarField& x, int q, double weight) const {
        return weight * inner_product(lp::project_block(family_, x, q), theta_block(q));
    }

    const lp::DyadicSymbolFamily& family() const { return family_; }

private:
    const lp::DyadicSymbolFamily& family_;
    VectorField u_;
    ScalarField theta_;
    lp::VectorBlocks ublocks_;
    lp::ScalarBlocks tblocks_;
    std::vector<VectorField> ulow_;
    std::vector<ScalarField> tlow_;
};

double weight(int q, double exponent) { return std::pow(lp::lambda(q), 2.0 * exponent); }

/// (a . grad) f, skipping the transforms when either factor vanishes.
ScalarField transport(const VectorField& a, const ScalarField& f) {
    if (is_zero(a) || is_zero(f)) return ScalarField(f.grid());
    return advect(a, f);
}

ScalarField transport(const PhysicalVector& a, bool a_zero, const ScalarField& f) {
    if (a_zero || is_zero(f)) return ScalarField(f.grid());
    return advect(a, f);
}

double commutator_term(const FluxContext& ctx, int q, int p, double sigma) {
    if (!ctx.family().contains(q) || !ctx.family().contains(p)) return 0.0;
    const VectorField& a = ctx.u_low(p - 2);
    const ScalarField& tp = ctx.theta_block(p);
    ScalarField comm = lp::project_block(ctx.family(), transport(a, tp), q);
    comm -= transport(a, lp::project_block(ctx.family(), tp, q));
    return weight(q, sigma) * inner_product(comm, ctx.theta_block(q));
}

}  // namespace

FluxDecomposition flux_terms(const lp::DyadicSymbolFamily& family, const VectorField& u, const ScalarField& theta,
                             const ValidatedExponents& exponents) {
    const double s = exponents.s();
    const double sigma = exponents.sigma();
    FluxContext ctx(family, u, theta);
    const int top = ctx.q_max();

    FluxDecomposition out;
    out.s = s;
    out.sigma = sigma;

    // I1 and I2
    const VectorField adv_u = is_zero(ctx.u()) ? VectorField(family.grid()) : advect(ctx.u(), ctx.u());
    for (int q = -1; q <= top; ++q) {
        const VectorField& uq = ctx.u_block(q);
        const double w = weight(q, s);
        out.i1 += w * inner_product(lp::project_block(family, adv_u, q), uq);
        out.i2 -= w * inner_product(ctx.theta_block(q), uq[2]);
    }

    // I3, undecomposed
    const ScalarField adv_t = transport(ctx.u(), ctx.theta());
    for (int q = -1; q <= top; ++q) out.i3 += ctx.tested_against_theta(adv_t, q, weight(q, sigma));

    for (int p = -1; p <= top; ++p) {
        const int q_lo = std::max(-1, p - 2);
        const int q_hi = std::min(top, p + 2);

        // I31: u_{<=p-2} . grad theta_p
        const VectorField& a = ctx.u_low(p - 2);
        const bool a_zero = is_zero(a);
        const PhysicalVector a_phys = a_zero ? PhysicalVector{} : to_physical(a);
        const ScalarField lh = transport(a_phys, a_zero, ctx.theta_block(p));
        for (int q = q_lo; q <= q_hi; ++q) {
            const double w = weight(q, sigma);
            out.i31 += ctx.tested_against_theta(lh, q, w);
            // I311 reuses Delta_q(u_{<=p-2} . grad theta_p).
            const ScalarField tq_p = lp::project_block(family, ctx.theta_block(p), q);
            ScalarField comm = lp::project_block(family, lh, q);
            comm -= transport(a_phys, a_zero, tq_p);
            out.i311 += w * inner_product(comm, ctx.theta_block(q));
            // I313: (u_{<=p-2} - u_{<=q-2}) . grad Delta_q theta_p
            const VectorField diff = a - ctx.u_low(q - 2);
            out.i313 += w * inner_product(transport(diff, tq_p), ctx.theta_block(q));
        }

        // I32: u_p . grad theta_{<=p-2}
        const ScalarField hl = transport(ctx.u_block(p), ctx.theta_low(p - 2));
        for (int q = q_lo; q <= q_hi; ++q) out.i32 += ctx.tested_against_theta(hl, q, weight(q, sigma));

        // I33: u_p . grad tilde(theta)_p, tested for q <= p + 2
        const ScalarField hh = transport(ctx.u_block(p), lp::tilde_block(ctx.theta_blocks(), p));
        for (int q = -1; q <= q_hi; ++q) out.i33 += ctx.tested_against_theta(hh, q, weight(q, sigma));
    }

    // I312: u_{<=q-2} . grad theta_q against theta_q
    for (int q = -1; q <= top; ++q) {
        const ScalarField t = transport(ctx.u_low(q - 2), ctx.theta_block(q));
        out.i312 += weight(q, sigma) * inner_product(t, ctx.theta_block(q));
    }
    return out;
}

FluxDecomposition flux_terms(const lp::DyadicSymbolFamily& family, const VectorField& u, const ScalarField& theta,
                             double s, double sigma) {
    return flux_terms(family, u, theta, regularity_monitor(s, sigma));
}

double commutator_piece(const lp::DyadicSymbolFamily& family, const VectorField& u, const ScalarField& theta, int q,
                        int p, double sigma) {
    FluxContext ctx(family, u, theta);
    return commutator_term(ctx, q, p, sigma);
}

double verify_i312_vanishes(const lp::DyadicSymbolFamily& family, const VectorField& u, const ScalarField& theta,
                            double sigma) {
    FluxContext ctx(family, u, theta);
    double i312 = 0.0;
    double bound = 0.0;
    for (int q = -1; q <= ctx.q_max(); ++q) {
        const double w = weight(q, sigma);
        const ScalarField t = transport(ctx.u_low(q - 2), ctx.theta_block(q));
        i312 += w * inner_product(t, ctx.theta_block(q));
        bound += w * l2_norm(t) * l2_norm(ctx.theta_block(q));
    }
    return bound > 0.0 ? std::abs(i312) / bound : 0.0;
}

}  // namespace bqlp
