#pragma once

// Independent test oracles: orthogonal polynomials obtained directly from
// exact moment functionals, never through the production construction they
// are used to check.

#include <functional>
#include <vector>

#include "symhyp/sympoly.hpp"

namespace oracles {

using symhyp::ExponentMap;
using symhyp::GaussRational;
using symhyp::OneVarPoly;
using symhyp::Partition;
using symhyp::Rat;
using K = GaussRational;

// <x^k> for the Gaussian weight exp(-omega x^2), normalized to <1> = 1.
inline K gaussian_moment(int k, const Rat& omega) {
    if (k % 2 == 1) return K(0);
    K r(1);
    for (int j = 1; j <= k / 2; ++j) r *= K(Rat(2 * j - 1)) / K(Rat(2) * omega);
    return r;
}

// <y^k> for the Gamma weight y^{h-1} exp(-omega y) on (0, inf), <1> = 1.
inline K gamma_moment(int k, const Rat& h, const Rat& omega) {
    K r(1);
    for (int j = 0; j < k; ++j) r *= (K(h) + K(j)) / K(omega);
    return r;
}

using MomentFn = std::function<K(int)>;

inline K pair_moment(const OneVarPoly<K>& a, const OneVarPoly<K>& b, const MomentFn& mom) {
    K total(0);
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) total += a.coeff(i) * b.coeff(j) * mom(i + j);
    return total;
}

// Monic orthogonal polynomials p_0..p_maxdeg for a moment functional.
inline std::vector<OneVarPoly<K>> gram_schmidt_monic(const MomentFn& mom, int maxdeg) {
    std::vector<OneVarPoly<K>> p;
    for (int m = 0; m <= maxdeg; ++m) {
        std::vector<K> xs(static_cast<size_t>(m) + 1, K(0));
        xs.back() = K(1);
        OneVarPoly<K> cur(xs);  // x^m
        for (int j = 0; j < m; ++j) {
            K c = pair_moment(cur, p[static_cast<size_t>(j)], mom) /
                  pair_moment(p[static_cast<size_t>(j)], p[static_cast<size_t>(j)], mom);
            cur = cur + (-c) * p[static_cast<size_t>(j)];
        }
        p.push_back(cur);
    }
    return p;
}

// Expands f over a monic-triangular polynomial list indexed by degree;
// returns the coefficient vector, f = sum coeffs[j] * basis[j].
inline std::vector<K> expand_in_basis(OneVarPoly<K> f, const std::vector<OneVarPoly<K>>& basis) {
    std::vector<K> coeffs(basis.size(), K(0));
    while (!f.is_zero()) {
        int d = f.degree();
        if (d >= static_cast<int>(basis.size())) throw symhyp::Error("basis too short");
        K c = f.coeff(d);
        coeffs[static_cast<size_t>(d)] = c;
        f = f + (-c) * basis[static_cast<size_t>(d)];
    }
    return coeffs;
}

// Exact expectation of a plain-monomial expansion against independent
// per-variable moments. Used for the small multivariate Gaussian cross-checks.
inline K expect(const ExponentMap<K>& em, const MomentFn& mom) {
    K total(0);
    for (const auto& [e, c] : em) {
        K term = c;
        for (int k : e) term *= mom(k);
        total += term;
    }
    return total;
}

}  // namespace oracles
