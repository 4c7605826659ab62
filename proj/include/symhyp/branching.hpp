#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "symhyp/pieri.hpp"

namespace symhyp {

// Resolver for expansion coefficients the closed forms cannot supply (the
// Hermite spectator cases); installed by the degeneration machinery.
template <class K>
using PieriFallback = std::function<K(const ParamPoint<K>&, const Partition& lam,
                                      const Partition& mu, int n, int r)>;

// Recursive constructor of the n-variable polynomials from the one-variable
// expansion data, with a per-instance cache of every level. Not safe for
// concurrent use; distinct instances are independent.
template <class K>
class Builder {
  public:
    explicit Builder(ParamPoint<K> params, PieriFallback<K> fallback = nullptr)
        : params_(std::move(params)),
          dual_(dual_params(params_)),
          fallback_(std::move(fallback)) {}

    const ParamPoint<K>& params() const { return params_; }
    const ParamPoint<K>& dual() const { return dual_; }

    // Expansion coefficients B^0..B^d of the one-variable factor attached to
    // the pair (lam in Lambda_{n+1}, mu in Lambda_n). Each value comes from a
    // dual-side expansion coefficient in the conjugated complement boxes, with
    // the two moduli swapped (or the coupling inverted) and a family-specific
    // sign and scale.
    std::vector<K> branch_coeffs(const Partition& lam, const Partition& mu, int n) {
        int m = lam.first();
        if (lam.length() > n + 1 || mu.length() > n)
            throw BadInput("branch pair does not fit the ambient lengths");
        if (m == 0) return {K(1)};  // empty top partition forces the unit
        if (mu.first() > m) throw BadInput("mu does not fit inside the conjugate box");

        Partition lamc = conjugate(lam);
        Partition muc = conjugate(mu);
        Partition dual_target = complement(n + 1, m, lamc);
        Partition dual_source = complement(n, m, muc);
        int d = 0;
        for (int j = 1; j <= m; ++j)
            if (lamc.part(j) == muc.part(j) + 1) ++d;

        int gap = lam.size() - mu.size();
        std::vector<K> out;
        out.reserve(static_cast<size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) {
            K c = dual_pieri(dual_source, dual_target, m, m - k);
            out.push_back(branch_prefactor(k, gap, m) * c);
        }
        return out;
    }

    OneVarPoly<K> branch_poly(const Partition& lam, const Partition& mu, int n) {
        std::vector<K> bs = branch_coeffs(lam, mu, n);
        OneVarPoly<K> out;
        for (size_t k = 0; k < bs.size(); ++k) {
            if (ScalarTraits<K>::is_zero(bs[k])) continue;
            out = out + bs[k] * onevar_basis(params_, static_cast<int>(k));
        }
        return out;
    }

    // The n-variable polynomial, built level by level and cached.
    const SymPoly<K>& build(const Partition& lam, int n) {
        static_assert(ScalarTraits<K>::exact, "the builder collects exact coefficient maps");
        auto key = std::make_pair(n, lam);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        if (lam.length() > n) throw BadInput("partition does not fit the variable count");
        SymPoly<K> result(n);
        if (n == 0) {
            result = SymPoly<K>::unit(0);
        } else {
            ExponentMap<K> acc;
            for (const Partition& mu : preceding_partitions(lam, n - 1)) {
                OneVarPoly<K> u = branch_poly(lam, mu, n - 1);
                if (u.is_zero()) continue;
                const SymPoly<K>& pm = build(mu, n - 1);
                for (auto& [e, c] : merge_with_univariate(pm, u)) {
                    auto [jt, fresh] = acc.try_emplace(e, c);
                    if (!fresh) jt->second += c;
                }
            }
            result = collect_mbasis(acc, n);
            if (!(result.coeff(lam) == K(1)))
                throw Error("constructed polynomial is not monic at " + lam.str());
            for (const auto& [mu, c] : result.terms())
                if (!dominance_leq(mu, lam, n))
                    throw Error("constructed polynomial has a term above " + lam.str());
        }
        return cache_.emplace(std::move(key), std::move(result)).first->second;
    }

    // Value of the polynomial at a point in the base variables, via the
    // recursion alone. Works over fields where coefficient maps cannot be
    // collected exactly.
    K evaluate_at(const Partition& lam, const std::vector<K>& point) {
        std::map<std::pair<int, Partition>, K> memo;
        return eval_rec(lam, point, memo);
    }

  private:
    K dual_pieri(const Partition& lam, const Partition& mu, int n, int r) {
        try {
            return pieri_coeff(dual_, lam, mu, n, r);
        } catch (const HermiteGeneralCase&) {
            if (!fallback_) throw;
            return fallback_(dual_, lam, mu, n, r);
        }
    }

    K branch_prefactor(int k, int gap, int m) const {
        K sign_kgap = kpow(K(-1), k + gap);
        if (std::holds_alternative<AWParams<K>>(params_) ||
            std::holds_alternative<WhittakerParams<K>>(params_) ||
            std::holds_alternative<LaguerreParams<K>>(params_) ||
            std::holds_alternative<HermiteParams<K>>(params_))
            return sign_kgap;
        if (const auto* w = std::get_if<WilsonParams<K>>(&params_))
            return kpow(K(-1), gap + m) * kpow(w->g, 2 * (gap - k));
        if (const auto* c = std::get_if<CHahnParams<K>>(&params_))
            return kpow(ScalarTraits<K>::unit_i(), m) * kpow(K(-1), gap) * kpow(c->g, gap - k);
        return kpow(K(4), m) * kpow(K(-1), gap);  // Jacobi
    }

    K eval_rec(const Partition& lam, const std::vector<K>& point,
               std::map<std::pair<int, Partition>, K>& memo) {
        int n = static_cast<int>(point.size());
        if (n == 0) return K(1);
        auto key = std::make_pair(n, lam);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<K> rest(point.begin(), point.end() - 1);
        K total(0);
        for (const Partition& mu : preceding_partitions(lam, n - 1)) {
            OneVarPoly<K> u = branch_poly(lam, mu, n - 1);
            if (u.is_zero()) continue;
            total += eval_rec(mu, rest, memo) * u.eval(point.back());
        }
        return memo.emplace(std::move(key), std::move(total)).first->second;
    }

    ParamPoint<K> params_, dual_;
    PieriFallback<K> fallback_;
    std::map<std::pair<int, Partition>, SymPoly<K>> cache_;
};

// Expands f over a monic dominance-triangular family by leading-term
// elimination. The provider must return the polynomial attached to any
// partition the residual's leading terms reach. Returns the coefficient map;
// the residual always empties because each basis member is monic.
template <class K, class Provider>
std::map<Partition, K, TermOrder> expand_in_poly_basis(SymPoly<K> f, const Provider& provider) {
    std::map<Partition, K, TermOrder> coeffs;
    while (!f.is_zero()) {
        auto lead = f.terms().begin();  // dominance-maximal by the term order
        Partition nu = lead->first;
        K c = lead->second;
        coeffs.emplace(nu, c);
        f = f - c * provider(nu);
        if (f.coeff(nu) != K(0)) throw Error("basis member at " + nu.str() + " is not monic");
    }
    return coeffs;
}

// Expansion of e_r * P_lambda over the polynomial family supplied by the
// provider; the generic route to coefficients without closed forms.
template <class K, class Provider>
std::map<Partition, K, TermOrder> pieri_row_via(const Provider& provider, const Partition& lam,
                                                int n, int r) {
    SymPoly<K> er = r > 0 ? SymPoly<K>::monomial(
                                n, Partition(std::vector<int>(static_cast<size_t>(r), 1)), K(1))
                          : SymPoly<K>::unit(n);
    SymPoly<K> f = mbasis_mul(er, provider(lam));
    return expand_in_poly_basis(std::move(f), provider);
}

}  // namespace symhyp
