#pragma once

#include "symhyp/hermite_limit.hpp"

namespace symhyp {

// Exact construction front end used by the verification suites and the CLI.
// Wraps the recursive builder with two recovery routes:
//   - non-generic rational couplings (removable singularities of the closed
//     formulas) are approached along g + beta over the formal field, with
//     exact coefficient-wise limits;
//   - coupling zero at the confluent levels degenerates to symmetrized
//     products of the one-variable polynomials.
// Also routes expansion-coefficient queries for the family whose spectator
// sums have no closed form.
class PolyCtx {
  public:
    explicit PolyCtx(ParamPoint<GaussRational> params);

    const ParamPoint<GaussRational>& params() const { return params_; }
    Family family() const { return family_of(params_); }

    const SymPoly<GaussRational>& poly(const Partition& lam, int n);

    // Expansion coefficient of P_mu in E_r * P_lambda at these parameters;
    // closed form where available, otherwise by back-substitution against
    // this context's polynomials.
    GaussRational pieri(const Partition& lam, const Partition& mu, int n, int r);

    // One-variable expansion data for the pair (lam, mu); regularized the
    // same way as the builds.
    std::vector<GaussRational> branch_coeffs(const Partition& lam, const Partition& mu, int n);
    OneVarPoly<GaussRational> branch_poly(const Partition& lam, const Partition& mu, int n);

  private:
    bool coupling_is_zero() const;
    Builder<LimitScalar>& shifted_builder();
    SymPoly<GaussRational> product_form(const Partition& lam, int n);

    ParamPoint<GaussRational> params_;
    std::shared_ptr<Builder<GaussRational>> direct_;  // null when the dual bundle is undefined
    std::unique_ptr<Builder<LimitScalar>> shifted_;
    std::unique_ptr<Builder<GaussRational>> onevar_;  // coupling-free one-variable source
    std::map<std::pair<int, Partition>, SymPoly<GaussRational>> cache_;
    std::map<std::tuple<int, Partition, int>, std::map<Partition, GaussRational, TermOrder>> rows_;
};

}  // namespace symhyp
