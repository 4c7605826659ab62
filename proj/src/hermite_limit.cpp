#include "symhyp/hermite_limit.hpp"

namespace symhyp {

namespace {

// Continuous Hahn bundle with both parameters at 1/(omega_l beta^2) over the
// formal degeneration field.
ParamPoint<LimitScalar> chahn_source(const Rat& g, const Rat& omega0, const Rat& omega1) {
    LimitScalar beta2 = LimitScalar::beta_pow(2);
    CHahnParams<LimitScalar> p;
    p.g = LimitScalar(GaussRational(g));
    p.g0 = LimitScalar(1) / (LimitScalar(GaussRational(omega0)) * beta2);
    p.g1 = LimitScalar(1) / (LimitScalar(GaussRational(omega1)) * beta2);
    return p;
}

SymPoly<GaussRational> take_limit(const SymPoly<LimitScalar>& src, const Partition& lam) {
    SymPoly<GaussRational> out(src.nvars());
    for (const auto& [nu, c] : src.terms()) {
        LimitScalar scaled = LimitScalar::beta_pow(lam.size() - nu.size()) * c;
        GaussRational v = scaled.limit_at_zero();
        if (!v.is_real())
            throw NonzeroImaginary("coefficient of " + nu.str() + " has imaginary part " +
                                   v.im().str());
        if (!v.is_zero()) out.add_term(nu, v);
    }
    return out;
}

}  // namespace

SymPoly<GaussRational> build_hermite_exact(const HermiteBuildPlan& plan) {
    Builder<LimitScalar> builder(chahn_source(plan.g, plan.omega0, plan.omega1));
    return take_limit(builder.build(plan.lam, plan.n), plan.lam);
}

HermiteCtx::HermiteCtx(Rat g, Rat omega)
    : HermiteCtx(g, omega, omega / Rat(2), omega / Rat(2)) {}

HermiteCtx::HermiteCtx(Rat g, Rat omega, Rat omega0, Rat omega1)
    : g_(std::move(g)), omega_(std::move(omega)), omega0_(std::move(omega0)),
      omega1_(std::move(omega1)) {
    if (!(g_ > Rat(0)) || !(omega0_ > Rat(0)) || !(omega1_ > Rat(0)) ||
        omega0_ + omega1_ != omega_)
        throw BadInput("invalid degeneration parameters");
    source_ = std::make_unique<Builder<LimitScalar>>(chahn_source(g_, omega0_, omega1_));
}

const SymPoly<GaussRational>& HermiteCtx::poly(const Partition& lam, int n) {
    auto key = std::make_pair(n, lam);
    auto it = polys_.find(key);
    if (it != polys_.end()) return it->second;
    SymPoly<GaussRational> p(n);
    try {
        p = take_limit(source_->build(lam, n), lam);
    } catch (const NonGenericParameters&) {
        // The closed formulas have removable singularities at special rational
        // couplings (shifts like (j'-j)g + lam_j - lam_j' + 1 can vanish).
        // Approach the point along a generic curve: shift the coupling by the
        // degeneration variable itself and take the joint limit.
        if (!shifted_) {
            ParamPoint<LimitScalar> sp = chahn_source(g_, omega0_, omega1_);
            std::get<CHahnParams<LimitScalar>>(sp).g =
                LimitScalar(GaussRational(g_)) + LimitScalar::beta();
            shifted_ = std::make_unique<Builder<LimitScalar>>(std::move(sp));
        }
        p = take_limit(shifted_->build(lam, n), lam);
    }
    return polys_.emplace(std::move(key), std::move(p)).first->second;
}

const std::map<Partition, GaussRational, TermOrder>& HermiteCtx::pieri_row(const Partition& lam,
                                                                           int n, int r) {
    auto key = std::make_tuple(n, lam, r);
    auto it = rows_.find(key);
    if (it != rows_.end()) return it->second;
    auto coeffs = pieri_row_via<GaussRational>(
        [&](const Partition& nu) { return poly(nu, n); }, lam, n, r);
    return rows_.emplace(std::move(key), std::move(coeffs)).first->second;
}

GaussRational HermiteCtx::extract_pieri(const Partition& lam, const Partition& mu, int n, int r) {
    const auto& row = pieri_row(lam, n, r);
    auto it = row.find(mu);
    return it == row.end() ? GaussRational(0) : it->second;
}

GaussRational extract_pieri_hermite(const Partition& lam, const Partition& mu, int n, int r,
                                    const Rat& g, const Rat& omega) {
    HermiteCtx ctx(g, omega);
    return ctx.extract_pieri(lam, mu, n, r);
}

std::shared_ptr<Builder<GaussRational>> make_exact_builder(
    const ParamPoint<GaussRational>& params) {
    if (!std::holds_alternative<HermiteParams<GaussRational>>(params))
        return std::make_shared<Builder<GaussRational>>(params);
    const auto& h = std::get<HermiteParams<GaussRational>>(params);
    if (!h.g.is_real() || !h.omega.is_real()) throw BadInput("hermite parameters must be real");
    auto dual = std::get<HermiteParams<GaussRational>>(dual_params(params));
    auto ctx = std::make_shared<HermiteCtx>(dual.g.re(), dual.omega.re());
    PieriFallback<GaussRational> fb = [ctx](const ParamPoint<GaussRational>&, const Partition& lam,
                                            const Partition& mu, int n, int r) {
        return ctx->extract_pieri(lam, mu, n, r);
    };
    return std::make_shared<Builder<GaussRational>>(params, std::move(fb));
}

}  // namespace symhyp
