#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "symhyp/params.hpp"
#include "symhyp/partition.hpp"
#include "symhyp/sympoly.hpp"

namespace symhyp {

// Zero denominators inside the closed formulas mean the parameter point sits
// on the measure-zero non-generic set.
template <class F>
auto guard_generic(F&& f) {
    try {
        return f();
    } catch (const DivideByZero& e) {
        throw NonGenericParameters(std::string("formula denominator vanished: ") + e.what());
    }
}

namespace detail {

// Enumerates sign assignments eps in {0,+1,-1}^|Kset| with exactly p nonzero
// entries, i.e. the disjoint subset pairs (I+, I-) of Kset with |I+|+|I-|=p.
template <class Fn>
void for_each_signed_subset(size_t ksize, int p, std::vector<int>& eps, size_t idx, int used,
                            const Fn& fn) {
    if (used > p) return;
    if (static_cast<int>(ksize - idx) < p - used) return;
    if (idx == ksize) {
        fn(eps);
        return;
    }
    eps[idx] = 0;
    for_each_signed_subset(ksize, p, eps, idx + 1, used, fn);
    eps[idx] = 1;
    for_each_signed_subset(ksize, p, eps, idx + 1, used + 1, fn);
    eps[idx] = -1;
    for_each_signed_subset(ksize, p, eps, idx + 1, used + 1, fn);
    eps[idx] = 0;
}

// ---- Askey-Wilson kernel ----------------------------------------------
//
// All building blocks are written in the multiplicative variables
//   x_j(eps) = tau_hat_j^eps q^{eps lambda_j},   y_k = tau_hat_k q^{lambda_k}.

template <class K>
struct QKernel {
    const AWParams<K>& P;
    const Partition& lam;
    int n;

    K xv(int j, int e) const { return kpow(P.tau_hat(j, n) * kpow(P.q, lam.part(j)), e); }
    K yv(int k) const { return P.tau_hat(k, n) * kpow(P.q, lam.part(k)); }

    K single(int j, int e) const {
        K x = xv(j, e);
        K num(1);
        for (int l = 0; l < 4; ++l) num *= K(1) - P.that(l) * x;
        return num / (P.tl[0] * (K(1) - x * x) * (K(1) - P.q * x * x));
    }
    K pair_v(int j, int ej, int j2, int ej2) const {
        K x = xv(j, ej) * xv(j2, ej2);
        return (K(1) - P.t * x) * (K(1) - P.q * P.t * x) /
               (P.t * (K(1) - x) * (K(1) - P.q * x));
    }
    K pair_u(int j, int ej, int j2, int ej2) const {
        K x = xv(j, ej) * xv(j2, ej2);
        return (K(1) - P.t * x) * (K(1) - P.q * x / P.t) / ((K(1) - x) * (K(1) - P.q * x));
    }
    K cross(int j, int ej, int k) const {
        K x = xv(j, ej);
        K y = yv(k);
        return (K(1) - P.t * x * y) * (K(1) - P.t * x / y) /
               (P.t * (K(1) - x * y) * (K(1) - x / y));
    }
};

// ---- additive kernel shared by the Wilson / continuous Hahn / Jacobi levels

template <class K>
struct AdditiveKernel {
    const Partition& lam;
    int n;
    K g;
    std::vector<K> ghat;                 // hatted parameter list (4, 3 or 2 entries)
    std::function<K(int)> rho_hat;      // j -> rho_hat_j

    K a(int j, int e) const { return K(e) * (rho_hat(j) + K(lam.part(j))); }
    K b(int k) const { return rho_hat(k) + K(lam.part(k)); }

    K single(int j, int e) const {
        K aj = a(j, e);
        K num(1);
        for (const K& gh : ghat) num *= gh + aj;
        return num / (K(2) * aj * (K(1) + K(2) * aj));
    }
    K pair_v(int j, int ej, int j2, int ej2) const {
        K s = a(j, ej) + a(j2, ej2);
        return (g + s) * (K(1) + g + s) / (s * (K(1) + s));
    }
    K pair_u(int j, int ej, int j2, int ej2) const {
        K s = a(j, ej) + a(j2, ej2);
        return (g + s) * (K(1) - g + s) / (s * (K(1) + s));
    }
    K cross(int j, int ej, int k) const {
        K aj = a(j, ej), bk = b(k);
        return (g + aj + bk) * (g + aj - bk) / ((aj + bk) * (aj - bk));
    }
};

template <class K>
AdditiveKernel<K> additive_kernel(const ParamPoint<K>& params, const Partition& lam, int n) {
    if (const auto* w = std::get_if<WilsonParams<K>>(&params)) {
        return AdditiveKernel<K>{lam, n, w->g,
                                 {w->ghat(0), w->ghat(1), w->ghat(2), w->ghat(3)},
                                 [w, n](int j) { return w->rho_hat(j, n); }};
    }
    if (const auto* c = std::get_if<CHahnParams<K>>(&params)) {
        return AdditiveKernel<K>{lam, n, c->g,
                                 {c->ghat(0), c->ghat(1), c->ghat(2)},
                                 [c, n](int j) { return c->rho_hat(j, n); }};
    }
    const auto& j = std::get<JacobiParams<K>>(params);
    return AdditiveKernel<K>{lam, n, j.g,
                             {j.ghat(0), j.ghat(1)},
                             [&j, n](int jj) { return j.rho_hat(jj, n); }};
}

// ---- rational kernel shared by the Laguerre / Hermite levels ------------
//
// Additions happen only between a raised and a lowered row; spectators couple
// through the two one-sided cross factors.

template <class K>
struct ConfluentKernel {
    const Partition& lam;
    int n;
    K g, h;        // h unused at the Hermite level
    K two_omega;   // 2*omega, only for the Hermite lowering factor
    bool hermite;

    K single(int j, int e) const {
        if (hermite) {
            if (e > 0) return K(1);
            return (K(n - j) * g + K(lam.part(j))) / two_omega;
        }
        if (e > 0) return K(n - j) * g + h + K(lam.part(j));
        return K(n - j) * g + K(lam.part(j));
    }
    // (1 + g/((j'-j)g + lam_j - lam_j'))(1 +/- g/((j'-j)g + lam_j - lam_j' + 1)),
    // with j the raised and j' the lowered row; second sign flips inside U.
    K pm_pair(int jp, int jm, int second_sign) const {
        K base = K(jm - jp) * g + K(lam.part(jp) - lam.part(jm));
        return (K(1) + g / base) * (K(1) + K(second_sign) * g / (base + K(1)));
    }
    K pair_v(int j, int ej, int j2, int ej2) const {
        if (ej == ej2) return K(1);
        return ej > 0 ? pm_pair(j, j2, +1) : pm_pair(j2, j, +1);
    }
    K pair_u(int j, int ej, int j2, int ej2) const {
        if (ej == ej2) return K(1);
        return ej > 0 ? pm_pair(j, j2, -1) : pm_pair(j2, j, -1);
    }
    K cross(int j, int ej, int k) const {
        K base = K(k - j) * g + K(lam.part(j) - lam.part(k));
        return K(1) + K(ej) * g / base;
    }
};

template <class K>
ConfluentKernel<K> confluent_kernel(const ParamPoint<K>& params, const Partition& lam, int n) {
    if (const auto* l = std::get_if<LaguerreParams<K>>(&params))
        return ConfluentKernel<K>{lam, n, l->g, l->h, K(0), false};
    const auto& h = std::get<HermiteParams<K>>(params);
    return ConfluentKernel<K>{lam, n, h.g, K(0), K(2) * h.omega, true};
}

// ---- generic V / U assembly ---------------------------------------------

template <class K, class Kernel>
K assemble_v(const Kernel& ker, const std::vector<int>& Jplus, const std::vector<int>& Jminus,
             int n) {
    std::vector<int> eps(static_cast<size_t>(n), 0);
    std::vector<int> J;
    for (int j : Jplus) eps[static_cast<size_t>(j - 1)] = 1;
    for (int j : Jminus) eps[static_cast<size_t>(j - 1)] = -1;
    for (int j = 1; j <= n; ++j)
        if (eps[static_cast<size_t>(j - 1)] != 0) J.push_back(j);
    K total(1);
    for (int j : J) total *= ker.single(j, eps[static_cast<size_t>(j - 1)]);
    for (size_t a = 0; a < J.size(); ++a)
        for (size_t b = a + 1; b < J.size(); ++b)
            total *= ker.pair_v(J[a], eps[static_cast<size_t>(J[a] - 1)], J[b],
                                eps[static_cast<size_t>(J[b] - 1)]);
    for (int j : J)
        for (int k = 1; k <= n; ++k)
            if (eps[static_cast<size_t>(k - 1)] == 0)
                total *= ker.cross(j, eps[static_cast<size_t>(j - 1)], k);
    return total;
}

template <class K, class Kernel>
K assemble_u(const Kernel& ker, const std::vector<int>& Kset, int p) {
    K total(0);
    std::vector<int> eps(Kset.size(), 0);
    for_each_signed_subset(Kset.size(), p, eps, 0, 0, [&](const std::vector<int>& e) {
        K term(1);
        for (size_t a = 0; a < Kset.size(); ++a)
            if (e[a] != 0) term *= ker.single(Kset[a], e[a]);
        for (size_t a = 0; a < Kset.size(); ++a)
            for (size_t b = a + 1; b < Kset.size(); ++b)
                if (e[a] != 0 && e[b] != 0) term *= ker.pair_u(Kset[a], e[a], Kset[b], e[b]);
        for (size_t a = 0; a < Kset.size(); ++a)
            if (e[a] != 0)
                for (size_t b = 0; b < Kset.size(); ++b)
                    if (e[b] == 0) term *= ker.cross(Kset[a], e[a], Kset[b]);
        total += term;
    });
    return (p % 2 == 0) ? total : -total;
}

// ---- Whittaker level: the q = 0 closed forms -----------------------------

template <class K>
struct WhittakerKernel {
    const WhittakerParams<K>& P;
    const Partition& lam;
    int n;

    K t() const { return P.t; }
    K tprod() const { return P.tl[0] * P.tl[1] * P.tl[2] * P.tl[3]; }
    int count_parts_eq(int value) const {
        int c = 0;
        for (int j = 1; j <= n; ++j)
            if (lam.part(j) == value) ++c;
        return c;
    }
    // product over the last three parameters of (1 - t0 t_l t^{n-j})
    K upper_triple(int j) const {
        K r(1);
        for (int l = 1; l < 4; ++l)
            r *= K(1) - P.tl[0] * P.tl[static_cast<size_t>(l)] * kpow(P.t, n - j);
        return r;
    }
    // product over pairs 1 <= l < m <= 3 of (1 - t_l t_m t^{n-j})
    K lower_triple(int j) const {
        K r(1);
        for (int l = 1; l < 4; ++l)
            for (int m = l + 1; m < 4; ++m)
                r *= K(1) - P.tl[static_cast<size_t>(l)] * P.tl[static_cast<size_t>(m)] *
                                kpow(P.t, n - j);
        return r;
    }
    K ratio_step(int k_minus_j) const {  // (1 - t^{1+d}) / (1 - t^{d})
        return (K(1) - kpow(P.t, 1 + k_minus_j)) / (K(1) - kpow(P.t, k_minus_j));
    }
};

template <class K>
K whittaker_principal(const WhittakerParams<K>& P, const Partition& lam, int n) {
    WhittakerKernel<K> ker{P, lam, n};
    int m0 = ker.count_parts_eq(0);
    K total(1);
    for (int j = 1; j <= n; ++j) {
        if (lam.part(j) > 0) total *= kpow(P.tau(j, n), -lam.part(j)) * ker.upper_triple(j);
        if (lam.part(j) == 1)
            total /= K(1) - ker.tprod() * kpow(P.t, n - j + m0);
    }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            if (lam.part(j) > lam.part(k)) total *= ker.ratio_step(k - j);
    return total;
}

template <class K>
K whittaker_v(const WhittakerParams<K>& P, const Partition& lam, const std::vector<int>& Jplus,
              const std::vector<int>& Jminus, int n) {
    WhittakerKernel<K> ker{P, lam, n};
    K T = ker.tprod();
    int m0 = ker.count_parts_eq(0);
    int m1 = ker.count_parts_eq(1);
    int m1p = 0;
    for (int j : Jplus)
        if (lam.part(j) == 1) ++m1p;
    std::vector<int> eps(static_cast<size_t>(n), 0);
    for (int j : Jplus) eps[static_cast<size_t>(j - 1)] = 1;
    for (int j : Jminus) eps[static_cast<size_t>(j - 1)] = -1;

    K total(1);
    for (int j : Jplus) {
        if (lam.part(j) == 0) {
            total *= (K(1) - T * kpow(P.t, n - j + m0 + m1 - m1p)) * ker.upper_triple(j) /
                     ((K(1) - T * kpow(P.t, 2 * (n - j))) * (K(1) - T * kpow(P.t, 2 * (n - j) + 1)));
        } else if (lam.part(j) == 1) {
            total *= K(1) - T * kpow(P.t, n - j + m0);
        }
    }
    for (int j : Jminus) {
        if (lam.part(j) == 1) {
            total *= (K(1) - T * kpow(P.t, n - j - 1)) * ker.lower_triple(j) /
                     ((K(1) - T * kpow(P.t, 2 * (n - j))) * (K(1) - T * kpow(P.t, 2 * (n - j) - 1)));
        }
    }
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            if (lam.part(j) == lam.part(k) &&
                eps[static_cast<size_t>(j - 1)] > eps[static_cast<size_t>(k - 1)])
                total *= ker.ratio_step(k - j);
    for (int j = 1; j <= n; ++j) total *= kpow(P.tau(j, n), -eps[static_cast<size_t>(j - 1)]);
    return total;
}

template <class K>
K whittaker_u(const WhittakerParams<K>& P, const Partition& lam, const std::vector<int>& Kset,
              int p, int n) {
    WhittakerKernel<K> ker{P, lam, n};
    K T = ker.tprod();
    auto delta = [](int m) { return m == 0 ? 1 : 0; };  // delta_m

    K total(0);
    std::vector<int> eps(Kset.size(), 0);
    for_each_signed_subset(Kset.size(), p, eps, 0, 0, [&](const std::vector<int>& e) {
        auto lam_at = [&](size_t a) { return lam.part(Kset[a]); };
        // terms lowering an empty row die in the q -> 0 limit
        for (size_t a = 0; a < Kset.size(); ++a)
            if (e[a] == -1 && lam_at(a) == 0) return;
        K term(1);
        for (size_t a = 0; a < Kset.size(); ++a) {
            int j = Kset[a];
            if (e[a] == 1) {
                if (lam_at(a) == 0)
                    term *= ker.upper_triple(j) / (K(1) - T * kpow(P.t, 2 * (n - j)));
                else if (lam_at(a) == 1)
                    term *= K(1) - T * kpow(P.t, n - j);
            } else if (e[a] == -1) {
                if (lam_at(a) == 1)
                    term *= ker.lower_triple(j) / (K(1) - T * kpow(P.t, 2 * (n - j)));
            }
        }
        // pairs with equal parts, ordered so the larger sign comes first
        for (size_t a = 0; a < Kset.size(); ++a)
            for (size_t b = 0; b < Kset.size(); ++b)
                if (a != b && lam_at(a) == lam_at(b) && e[a] > e[b])
                    term *= ker.ratio_step(Kset[b] - Kset[a]);
        // lowered row one box above a raised row
        for (size_t a = 0; a < Kset.size(); ++a)
            for (size_t b = 0; b < Kset.size(); ++b)
                if (e[a] == -1 && e[b] == 1 && lam_at(a) == lam_at(b) + 1)
                    term *= ker.ratio_step(Kset[b] - Kset[a]);
        // boundary-interaction corrections
        for (size_t a = 0; a < Kset.size(); ++a)
            for (size_t b = 0; b < Kset.size(); ++b) {
                if (Kset[a] >= Kset[b]) continue;
                int sum = e[a] + e[b];
                if ((sum == -2 || sum == 1 || sum == 2) && lam_at(a) == 1 &&
                    lam_at(b) == delta(1 + e[b]))
                    term *= (K(1) - T * kpow(P.t, 2 * n + 1 - Kset[a] - Kset[b])) /
                            (K(1) - T * kpow(P.t, 2 * n - Kset[a] - Kset[b]));
            }
        for (size_t a = 0; a < Kset.size(); ++a)
            for (size_t b = 0; b < Kset.size(); ++b) {
                if (e[a] == 0 || e[b] == -1 || Kset[a] >= Kset[b]) continue;
                int diff = e[b] - e[a];
                if ((diff == 0 || diff == 1) && lam_at(a) == delta(1 + e[a]) && lam_at(b) == 0)
                    term *= (K(1) - T * kpow(P.t, 2 * n - 1 - Kset[a] - Kset[b])) /
                            (K(1) - T * kpow(P.t, 2 * n - Kset[a] - Kset[b]));
            }
        // residual parameter powers
        for (size_t a = 0; a < Kset.size(); ++a) term *= kpow(P.tl[0], -e[a]);
        for (size_t a = 0; a < Kset.size(); ++a)
            for (size_t b = 0; b < Kset.size(); ++b) {
                if (Kset[a] >= Kset[b]) continue;
                if (e[b] == 0 && e[a] != 0) term *= kpow(P.t, -e[a]);
                if (lam_at(a) == lam_at(b) && e[b] - e[a] == 1) term *= K(1) / P.t;
            }
        total += term;
    });
    return (p % 2 == 0) ? total : -total;
}

}  // namespace detail

// Cross terms shared by the additive-kernel principal specializations.
template <class K, class RhoHat>
K detail_principal_crossterms(const Partition& lam, int n, const K& g, const RhoHat& rho_hat) {
    K total(1);
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            K s = rho_hat(j) + rho_hat(k);
            K d = rho_hat(j) - rho_hat(k);
            total *= pochhammer(g + s, lam.part(j) + lam.part(k)) *
                     pochhammer(g + d, lam.part(j) - lam.part(k)) /
                     (pochhammer(s, lam.part(j) + lam.part(k)) *
                      pochhammer(d, lam.part(j) - lam.part(k)));
        }
    return total;
}

// ((1+k-j)g)_{lam_j - lam_k} / ((k-j)g)_{lam_j - lam_k} over all j < k; the
// additive counterpart of the t^{1+k-j} / t^{k-j} pattern one level up.
template <class K>
K detail_confluent_crossterms(const Partition& lam, int n, const K& g) {
    K total(1);
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            total *= pochhammer(K(1 + k - j) * g, lam.part(j) - lam.part(k)) /
                     pochhammer(K(k - j) * g, lam.part(j) - lam.part(k));
    return total;
}

// Principal specialization p_lambda: the closed product-formula value that
// enters every expansion coefficient as a ratio.
template <class K>
K principal_special(const ParamPoint<K>& params, const Partition& lam, int n) {
    return guard_generic([&]() -> K {
        if (const auto* aw = std::get_if<AWParams<K>>(&params)) {
            K total(1);
            for (int j = 1; j <= n; ++j) {
                K num(1);
                for (int l = 0; l < 4; ++l)
                    num *= q_pochhammer(aw->that(l) * aw->tau_hat(j, n), aw->q, lam.part(j));
                K den = kpow(aw->tau(j, n), lam.part(j)) *
                        q_pochhammer(aw->tau_hat(j, n) * aw->tau_hat(j, n), aw->q, 2 * lam.part(j));
                total *= num / den;
            }
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    K pr = aw->tau_hat(j, n) * aw->tau_hat(k, n);
                    K qu = aw->tau_hat(j, n) / aw->tau_hat(k, n);
                    total *= q_pochhammer(aw->t * pr, aw->q, lam.part(j) + lam.part(k)) *
                             q_pochhammer(aw->t * qu, aw->q, lam.part(j) - lam.part(k)) /
                             (q_pochhammer(pr, aw->q, lam.part(j) + lam.part(k)) *
                              q_pochhammer(qu, aw->q, lam.part(j) - lam.part(k)));
                }
            return total;
        }
        if (const auto* wh = std::get_if<WhittakerParams<K>>(&params))
            return detail::whittaker_principal(*wh, lam, n);
        if (const auto* w = std::get_if<WilsonParams<K>>(&params)) {
            K total = kpow(K(-1), lam.size());
            for (int j = 1; j <= n; ++j) {
                K num(1);
                for (int l = 0; l < 4; ++l)
                    num *= pochhammer(w->ghat(l) + w->rho_hat(j, n), lam.part(j));
                total *= num / pochhammer(K(2) * w->rho_hat(j, n), 2 * lam.part(j));
            }
            return total * detail_principal_crossterms(lam, n, w->g,
                                                       [&](int j) { return w->rho_hat(j, n); });
        }
        if (const auto* c = std::get_if<CHahnParams<K>>(&params)) {
            K total = kpow(ScalarTraits<K>::unit_i(), lam.size());
            for (int j = 1; j <= n; ++j) {
                K num(1);
                for (int l = 0; l < 3; ++l)
                    num *= pochhammer(c->ghat(l) + c->rho_hat(j, n), lam.part(j));
                total *= num / pochhammer(K(2) * c->rho_hat(j, n), 2 * lam.part(j));
            }
            return total * detail_principal_crossterms(lam, n, c->g,
                                                       [&](int j) { return c->rho_hat(j, n); });
        }
        if (const auto* jp = std::get_if<JacobiParams<K>>(&params)) {
            K total = kpow(K(4), lam.size());
            for (int j = 1; j <= n; ++j) {
                K num = pochhammer(jp->ghat(0) + jp->rho_hat(j, n), lam.part(j)) *
                        pochhammer(jp->ghat(1) + jp->rho_hat(j, n), lam.part(j));
                total *= num / pochhammer(K(2) * jp->rho_hat(j, n), 2 * lam.part(j));
            }
            return total * detail_principal_crossterms(lam, n, jp->g,
                                                       [&](int j) { return jp->rho_hat(j, n); });
        }
        if (const auto* l = std::get_if<LaguerreParams<K>>(&params)) {
            K total = kpow(-l->omega, -lam.size());
            for (int j = 1; j <= n; ++j) total *= pochhammer(K(n - j) * l->g + l->h, lam.part(j));
            return total * detail_confluent_crossterms(lam, n, l->g);
        }
        const auto& h = std::get<HermiteParams<K>>(params);
        return detail_confluent_crossterms(lam, n, h.g);
    });
}

// The V factor: contribution of the rows that actually move.
// Returns 1 when J is empty.
template <class K>
K v_factor(const ParamPoint<K>& params, const Partition& lam, const std::vector<int>& Jplus,
           const std::vector<int>& Jminus, int n) {
    return guard_generic([&]() -> K {
        if (const auto* aw = std::get_if<AWParams<K>>(&params)) {
            detail::QKernel<K> ker{*aw, lam, n};
            return detail::assemble_v<K>(ker, Jplus, Jminus, n);
        }
        if (const auto* wh = std::get_if<WhittakerParams<K>>(&params))
            return detail::whittaker_v(*wh, lam, Jplus, Jminus, n);
        if (std::holds_alternative<WilsonParams<K>>(params) ||
            std::holds_alternative<CHahnParams<K>>(params) ||
            std::holds_alternative<JacobiParams<K>>(params)) {
            auto ker = detail::additive_kernel(params, lam, n);
            return detail::assemble_v<K>(ker, Jplus, Jminus, n);
        }
        auto ker = detail::confluent_kernel(params, lam, n);
        return detail::assemble_v<K>(ker, Jplus, Jminus, n);
    });
}

// The U factor: signed sum over virtual moves inside the spectator set.
// Returns 1 when p = 0. The Hermite level has no closed form for it.
template <class K>
K u_factor(const ParamPoint<K>& params, const Partition& lam, const std::vector<int>& Kset, int p,
           int n) {
    if (p < 0 || p > static_cast<int>(Kset.size()))
        throw BadInput("u_factor: order out of range");
    if (std::holds_alternative<HermiteParams<K>>(params))
        throw UnsupportedFamily("no closed spectator sum at the Hermite level");
    if (p == 0) return K(1);
    return guard_generic([&]() -> K {
        if (const auto* aw = std::get_if<AWParams<K>>(&params)) {
            detail::QKernel<K> ker{*aw, lam, n};
            return detail::assemble_u<K>(ker, Kset, p);
        }
        if (const auto* wh = std::get_if<WhittakerParams<K>>(&params))
            return detail::whittaker_u(*wh, lam, Kset, p, n);
        if (std::holds_alternative<LaguerreParams<K>>(params)) {
            auto ker = detail::confluent_kernel(params, lam, n);
            return detail::assemble_u<K>(ker, Kset, p);
        }
        auto ker = detail::additive_kernel(params, lam, n);
        return detail::assemble_u<K>(ker, Kset, p);
    });
}

// Expansion coefficient of P_mu in E_r * P_lambda. Exactly zero outside the
// r-box proximity set; r = 0 degenerates to the identity expansion.
template <class K>
K pieri_coeff(const ParamPoint<K>& params, const Partition& lam, const Partition& mu, int n,
              int r) {
    if (lam.length() > n || mu.length() > n) throw BadInput("partitions do not fit the ambient length");
    if (r == 0) return lam == mu ? K(1) : K(0);
    if (r < 0 || r > n) throw BadInput("pieri order r out of range");
    if (!proximity(lam, mu, r, n)) return K(0);
    IndexSets S = index_sets(lam, mu, n);
    int jsize = static_cast<int>(S.J.size());
    if (std::holds_alternative<HermiteParams<K>>(params)) {
        if (jsize != r)
            throw HermiteGeneralCase("hermite coefficient with |J| = " + std::to_string(jsize) +
                                     " < r = " + std::to_string(r) +
                                     " must come from the degeneration route");
        return guard_generic([&]() -> K {
            K ratio = principal_special(params, lam, n) / principal_special(params, mu, n);
            return ratio * v_factor(params, lam, S.Jplus, S.Jminus, n);
        });
    }
    return guard_generic([&]() -> K {
        K c = principal_special(params, lam, n) / principal_special(params, mu, n);
        c *= v_factor(params, lam, S.Jplus, S.Jminus, n);
        c *= u_factor(params, lam, S.Jc, r - jsize, n);
        if (const auto* l = std::get_if<LaguerreParams<K>>(&params))
            c *= kpow(-l->omega, -r);
        return c;
    });
}

struct PieriRequest {
    Partition lambda, mu;
    int n = 1;
    int r = 1;
    ParamPoint<GaussRational> params;
};

inline GaussRational pieri_coeff(const PieriRequest& req) {
    return pieri_coeff(req.params, req.lambda, req.mu, req.n, req.r);
}

// k-th element of the one-variable expansion basis, in the base variable y.
template <class K>
OneVarPoly<K> onevar_basis(const ParamPoint<K>& params, int k) {
    if (k < 0) throw BadInput("basis index must be nonnegative");
    return guard_generic([&]() -> OneVarPoly<K> {
        OneVarPoly<K> y = OneVarPoly<K>::variable();
        OneVarPoly<K> out = OneVarPoly<K>::constant(K(1));
        if (const auto* aw = std::get_if<AWParams<K>>(&params)) {
            if (ScalarTraits<K>::is_zero(aw->tl[0])) throw NonGenericParameters("t0 must be nonzero");
            for (int j = 1; j <= k; ++j) {
                K c = kpow(aw->q, j - 1) * aw->tl[0] + kpow(aw->q, 1 - j) / aw->tl[0];
                out = out * (y + OneVarPoly<K>::constant(-c));
            }
            return out;
        }
        if (const auto* wh = std::get_if<WhittakerParams<K>>(&params)) {
            if (ScalarTraits<K>::is_zero(wh->tl[0])) throw NonGenericParameters("t0 must be nonzero");
            for (int j = 1; j <= k; ++j) {
                K c = kpow(wh->t, j - 1) * wh->tl[0] + kpow(wh->t, 1 - j) / wh->tl[0];
                out = out * (y + OneVarPoly<K>::constant(-c));
            }
            return out;
        }
        if (const auto* w = std::get_if<WilsonParams<K>>(&params)) {
            for (int s = 0; s < k; ++s) {
                K c = (w->gl[0] + K(s)) * (w->gl[0] + K(s));
                out = out * (y + OneVarPoly<K>::constant(c));
            }
            return out;
        }
        if (const auto* c = std::get_if<CHahnParams<K>>(&params)) {
            K i = ScalarTraits<K>::unit_i();
            for (int s = 0; s < k; ++s)
                out = out * (i * y + OneVarPoly<K>::constant(c->g0 + K(s)));
            return out;
        }
        if (std::holds_alternative<JacobiParams<K>>(params)) {
            // sin^2(x/2) = (2 - y)/4
            OneVarPoly<K> s2({K(1) / K(2), K(-1) / K(4)});
            for (int s = 0; s < k; ++s) out = out * s2;
            return out;
        }
        // Laguerre: y = x^2; Hermite: y = x. Both use plain powers.
        std::vector<K> coeffs(static_cast<size_t>(k) + 1, K(0));
        coeffs.back() = K(1);
        return OneVarPoly<K>(coeffs);
    });
}

// The degree-r generator whose multiplication the expansion coefficients
// describe, expressed in the family's base variables.
template <class K>
SymPoly<K> generator_Er(const ParamPoint<K>& params, int r, int n) {
    if (r < 1 || r > n) throw BadInput("generator index must satisfy 1 <= r <= n");
    auto ones = [](int m) { return Partition(std::vector<int>(static_cast<size_t>(m), 1)); };
    return guard_generic([&]() -> SymPoly<K> {
        SymPoly<K> out(n);
        if (const auto* aw = std::get_if<AWParams<K>>(&params)) {
            std::vector<K> vals;
            for (int j = r; j <= n; ++j) {
                K t = aw->tau(j, n);
                vals.push_back(t + K(1) / t);
            }
            for (int m = 0; m <= r; ++m) {
                K c = kpow(K(-1), r + m) * complete_sym(vals, r - m);
                out.add_term(ones(m), c);
            }
            return out;
        }
        if (const auto* wh = std::get_if<WhittakerParams<K>>(&params)) {
            std::vector<K> vals;
            for (int j = r; j <= n; ++j) {
                K t = wh->tau(j, n);
                vals.push_back(t + K(1) / t);
            }
            for (int m = 0; m <= r; ++m) {
                K c = kpow(K(-1), r + m) * complete_sym(vals, r - m);
                out.add_term(ones(m), c);
            }
            return out;
        }
        if (const auto* w = std::get_if<WilsonParams<K>>(&params)) {
            std::vector<K> vals;
            for (int j = r; j <= n; ++j) {
                K rho = w->rho(j, n);
                vals.push_back(rho * rho);
            }
            for (int m = 0; m <= r; ++m)
                out.add_term(ones(m), kpow(K(-1), r) * complete_sym(vals, r - m));
            return out;
        }
        if (const auto* c = std::get_if<CHahnParams<K>>(&params)) {
            std::vector<K> vals;
            for (int j = r; j <= n; ++j) vals.push_back(c->rho(j, n));
            K i = ScalarTraits<K>::unit_i();
            for (int m = 0; m <= r; ++m)
                out.add_term(ones(m), kpow(K(-1), r) * kpow(i, m) * complete_sym(vals, r - m));
            return out;
        }
        if (std::holds_alternative<JacobiParams<K>>(params)) {
            // (-1)^r e_r of the affine values (2 - y_j)/4
            K c = K(1) / K(2), d = K(-1) / K(4);
            for (int m = 0; m <= r; ++m) {
                Rat binom_nm = binomial(n - m, r - m);
                K coeff = kpow(K(-1), r) * kpow(d, m) * kpow(c, r - m) *
                          ScalarTraits<K>::from_rat(binom_nm);
                if (!ScalarTraits<K>::is_zero(coeff)) out.add_term(ones(m), coeff);
            }
            return out;
        }
        // Laguerre and Hermite: the plain elementary symmetric polynomial.
        out.add_term(ones(r), K(1));
        return out;
    });
}

}  // namespace symhyp
