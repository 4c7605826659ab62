#pragma once

#include <map>
#include <memory>
#include <tuple>

#include "symhyp/branching.hpp"

namespace symhyp {

// Recipe for one exact degeneration run: the target partition, variable
// count, target parameters, and the split of the scale parameter feeding the
// two source parameters. Results are independent of the split.
struct HermiteBuildPlan {
    Partition lam;
    int n = 1;
    Rat g, omega;
    Rat omega0, omega1;

    HermiteBuildPlan(Partition lam_, int n_, Rat g_, Rat omega_)
        : HermiteBuildPlan(std::move(lam_), n_, std::move(g_), omega_, omega_ / Rat(2),
                           omega_ / Rat(2)) {}
    HermiteBuildPlan(Partition lam_, int n_, Rat g_, Rat omega_, Rat omega0_, Rat omega1_)
        : lam(std::move(lam_)), n(n_), g(std::move(g_)), omega(std::move(omega_)),
          omega0(std::move(omega0_)), omega1(std::move(omega1_)) {
        if (!(g > Rat(0))) throw BadInput("coupling must be positive");
        if (!(omega0 > Rat(0)) || !(omega1 > Rat(0)))
            throw BadInput("scale split parts must be positive");
        if (omega0 + omega1 != omega) throw BadInput("scale split must add up");
    }
};

// Exact symmetric Hermite polynomial, obtained coefficient-wise as the
// formal limit of the continuous Hahn construction with the two parameters
// driven to infinity along 1/(omega_l beta^2). Raises PoleAtZero when a
// coefficient limit fails to exist and NonzeroImaginary when a limit leaves
// the rationals; both indicate a transcription bug upstream.
SymPoly<GaussRational> build_hermite_exact(const HermiteBuildPlan& plan);

// Shared caches for repeated degeneration builds and coefficient
// extractions at one parameter point.
class HermiteCtx {
  public:
    HermiteCtx(Rat g, Rat omega);
    HermiteCtx(Rat g, Rat omega, Rat omega0, Rat omega1);

    const Rat& g() const { return g_; }
    const Rat& omega() const { return omega_; }

    const SymPoly<GaussRational>& poly(const Partition& lam, int n);

    // Coefficient of P_mu in e_r * P_lambda, by back-substitution against
    // the monic triangular family. Also the supplier of the expansion
    // coefficients that have no closed form.
    GaussRational extract_pieri(const Partition& lam, const Partition& mu, int n, int r);

    // The full expansion of e_r * P_lambda over the family.
    const std::map<Partition, GaussRational, TermOrder>& pieri_row(const Partition& lam, int n,
                                                                   int r);

  private:
    Rat g_, omega_, omega0_, omega1_;
    std::unique_ptr<Builder<LimitScalar>> source_;
    std::unique_ptr<Builder<LimitScalar>> shifted_;  // coupling nudged off a singular value
    std::map<std::pair<int, Partition>, SymPoly<GaussRational>> polys_;
    std::map<std::tuple<int, Partition, int>, std::map<Partition, GaussRational, TermOrder>> rows_;
};

// One-shot extraction at a parameter point.
GaussRational extract_pieri_hermite(const Partition& lam, const Partition& mu, int n, int r,
                                    const Rat& g, const Rat& omega);

// Exact builder for any family, with the Hermite spectator coefficients
// routed through a shared degeneration context at the dual parameters.
std::shared_ptr<Builder<GaussRational>> make_exact_builder(
    const ParamPoint<GaussRational>& params);

}  // namespace symhyp
