#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symhyp/qseries.hpp"

namespace symhyp {

enum class Family { AskeyWilson, Whittaker, Wilson, ContinuousHahn, Jacobi, Laguerre, Hermite };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

// Parameter bundles, generic over the coefficient field so the same formulas
// run over exact rationals, formal degeneration variables, and doubles.
//
// Hatted/derived quantities are computed on demand for a given number of
// variables n:
//   tau_j = t^{n-j} t0,  tau_hat_j = t^{n-j} t0_hat   (q-level)
//   rho_j = (n-j) g + g0,  rho_hat_j = (n-j) g + g0_hat   (degenerate levels)

template <class K>
struct AWParams {
    K q, t;
    std::array<K, 4> tl;
    K t0hat;  // square root of q^{-1} t0 t1 t2 t3, supplied by the caller

    K that(int l) const {  // t-hat_l, via t0hat * that_l = t0 * t_l
        if (l == 0) return t0hat;
        return tl[0] * tl[static_cast<size_t>(l)] / t0hat;
    }
    K tau(int j, int n) const { return kpow(t, n - j) * tl[0]; }
    K tau_hat(int j, int n) const { return kpow(t, n - j) * t0hat; }
};

// The q = 0 specialization of the six-parameter q-level family. The single
// modulus plays both roles connected by the q <-> t swap of the branching
// rule: it is the basis modulus of the constructed polynomials and the
// t-slot of their expansion coefficients, while the other slot is pinned
// to zero.
template <class K>
struct WhittakerParams {
    K t;
    std::array<K, 4> tl;

    K tau(int j, int n) const { return kpow(t, n - j) * tl[0]; }
};

template <class K>
struct WilsonParams {
    K g;
    std::array<K, 4> gl;

    K ghat(int l) const {
        K g0h = ghat0();
        if (l == 0) return g0h;
        return gl[0] + gl[static_cast<size_t>(l)] - g0h;
    }
    K ghat0() const { return (gl[0] + gl[1] + gl[2] + gl[3] - K(1)) / K(2); }
    K rho(int j, int n) const { return K(n - j) * g + gl[0]; }
    K rho_hat(int j, int n) const { return K(n - j) * g + ghat0(); }
};

template <class K>
struct CHahnParams {
    K g, g0, g1;

    K ghat(int l) const {
        K re0 = real_part(g0), re1 = real_part(g1);
        K half = K(1) / K(2);
        if (l == 0) return re0 + re1 - half;
        if (l == 1) return half + re0 - re1;
        return half + ScalarTraits<K>::unit_i() * (imag_part(g0) - imag_part(g1));
    }
    K rho(int j, int n) const { return K(n - j) * g + g0; }
    K rho_hat(int j, int n) const { return K(n - j) * g + ghat(0); }
};

template <class K>
struct JacobiParams {
    K g, g0, g1;

    K ghat(int l) const {
        if (l == 0) return (g0 + g1 - K(1)) / K(2);
        return (g0 - g1 + K(1)) / K(2);
    }
    K rho(int j, int n) const { return K(n - j) * g + g0; }
    K rho_hat(int j, int n) const { return K(n - j) * g + ghat(0); }
};

template <class K>
struct LaguerreParams {
    K g, h, omega;
};

template <class K>
struct HermiteParams {
    K g, omega;
};

template <class K>
using ParamPoint = std::variant<AWParams<K>, WhittakerParams<K>, WilsonParams<K>, CHahnParams<K>,
                                JacobiParams<K>, LaguerreParams<K>, HermiteParams<K>>;

template <class K>
Family family_of(const ParamPoint<K>& p) {
    switch (p.index()) {
        case 0: return Family::AskeyWilson;
        case 1: return Family::Whittaker;
        case 2: return Family::Wilson;
        case 3: return Family::ContinuousHahn;
        case 4: return Family::Jacobi;
        case 5: return Family::Laguerre;
        default: return Family::Hermite;
    }
}

// Exact-field validation front end. Checks the supplied square root at the
// q-level and the positivity constraints stated for the continuous Hahn
// weight; genericity is the consumers' concern.
ParamPoint<GaussRational> make_params(Family family,
                                      const std::vector<std::pair<std::string, GaussRational>>& kv);

ParamPoint<GaussRational> params_from_json_text(Family family, const std::string& json_text);
std::string params_to_json_text(const ParamPoint<GaussRational>& p);

// sqrt(q/t), needed to carry the supplied hatted parameter to the dual side.
// Exact fields require the ratio to be a perfect square; the float field
// takes a principal square root. The sign does not matter: every formula
// depends on the hatted parameter only through even combinations.
template <class K>
K dual_modulus_sqrt(const AWParams<K>& aw);

template <>
inline GaussRational dual_modulus_sqrt(const AWParams<GaussRational>& aw) {
    GaussRational ratio = aw.q / aw.t;
    std::optional<Rat> root =
        ratio.is_real() ? ratio.re().sqrt_exact() : std::optional<Rat>{};
    if (!root)
        throw NonGenericParameters(
            "dual bundle needs q/t to be a rational square; got " + ratio.str());
    return GaussRational(*root);
}

template <>
inline LimitScalar dual_modulus_sqrt(const AWParams<LimitScalar>& aw) {
    LimitScalar ratio = aw.q / aw.t;
    if (ratio.is_constant()) {
        GaussRational c = ratio.constant_value();
        if (c.is_real()) {
            if (auto root = c.re().sqrt_exact()) return LimitScalar(GaussRational(*root));
        }
    }
    throw NonGenericParameters("dual bundle needs q/t to be a constant rational square");
}

template <>
inline std::complex<double> dual_modulus_sqrt(const AWParams<std::complex<double>>& aw) {
    return std::sqrt(aw.q / aw.t);
}

template <class K>
ParamPoint<K> dual_params(const ParamPoint<K>& p) {
    if (const auto* aw = std::get_if<AWParams<K>>(&p)) {
        AWParams<K> d;
        d.q = aw->t;
        d.t = aw->q;
        d.tl = aw->tl;
        // (t0hat')^2 = t^{-1} t0 t1 t2 t3 = (q/t) * t0hat^2
        d.t0hat = aw->t0hat * dual_modulus_sqrt(*aw);
        return d;
    }
    if (const auto* wh = std::get_if<WhittakerParams<K>>(&p)) return *wh;
    if (const auto* w = std::get_if<WilsonParams<K>>(&p)) {
        WilsonParams<K> d;
        d.g = K(1) / w->g;
        for (size_t l = 0; l < 4; ++l) d.gl[l] = w->gl[l] / w->g;
        return d;
    }
    if (const auto* c = std::get_if<CHahnParams<K>>(&p))
        return CHahnParams<K>{K(1) / c->g, c->g0 / c->g, c->g1 / c->g};
    if (const auto* j = std::get_if<JacobiParams<K>>(&p))
        return JacobiParams<K>{K(1) / j->g, j->g0 / j->g, j->g1 / j->g};
    if (const auto* l = std::get_if<LaguerreParams<K>>(&p))
        return LaguerreParams<K>{K(1) / l->g, l->h / l->g, l->omega / l->g};
    const auto& h = std::get<HermiteParams<K>>(p);
    return HermiteParams<K>{K(1) / h.g, h.omega / h.g};
}

// sqrt(q/t), needed to carry the supplied hatted parameter to the dual side.
// Exact fields require the ratio to be a perfect square; the float field
// takes a principal square root.
template <class K>
K dual_modulus_sqrt(const AWParams<K>& aw);

}  // namespace symhyp
