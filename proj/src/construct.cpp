#include "symhyp/construct.hpp"

#include <algorithm>
#include <set>

namespace symhyp {

namespace {

using K = GaussRational;

const K* coupling_of(const ParamPoint<K>& p) {
    if (const auto* w = std::get_if<WilsonParams<K>>(&p)) return &w->g;
    if (const auto* c = std::get_if<CHahnParams<K>>(&p)) return &c->g;
    if (const auto* j = std::get_if<JacobiParams<K>>(&p)) return &j->g;
    if (const auto* l = std::get_if<LaguerreParams<K>>(&p)) return &l->g;
    if (const auto* h = std::get_if<HermiteParams<K>>(&p)) return &h->g;
    return nullptr;
}

LimitScalar lift(const K& v) { return LimitScalar(v); }

// Same bundle over the formal field with the coupling shifted by beta.
ParamPoint<LimitScalar> shifted_params(const ParamPoint<K>& p) {
    LimitScalar beta = LimitScalar::beta();
    if (const auto* w = std::get_if<WilsonParams<K>>(&p)) {
        WilsonParams<LimitScalar> s;
        s.g = lift(w->g) + beta;
        for (size_t l = 0; l < 4; ++l) s.gl[l] = lift(w->gl[l]);
        return s;
    }
    if (const auto* c = std::get_if<CHahnParams<K>>(&p))
        return CHahnParams<LimitScalar>{lift(c->g) + beta, lift(c->g0), lift(c->g1)};
    if (const auto* j = std::get_if<JacobiParams<K>>(&p))
        return JacobiParams<LimitScalar>{lift(j->g) + beta, lift(j->g0), lift(j->g1)};
    if (const auto* l = std::get_if<LaguerreParams<K>>(&p))
        return LaguerreParams<LimitScalar>{lift(l->g) + beta, lift(l->h), lift(l->omega)};
    throw UnsupportedParameters("no regularization path for this family");
}

SymPoly<K> take_plain_limit(const SymPoly<LimitScalar>& src) {
    SymPoly<K> out(src.nvars());
    for (const auto& [nu, c] : src.terms()) {
        K v = c.limit_at_zero();
        if (!v.is_zero()) out.add_term(nu, v);
    }
    return out;
}

}  // namespace

PolyCtx::PolyCtx(ParamPoint<K> params) : params_(std::move(params)) {
    if (!coupling_is_zero()) direct_ = make_exact_builder(params_);
}

bool PolyCtx::coupling_is_zero() const {
    const K* g = coupling_of(params_);
    if (g == nullptr || !g->is_zero()) return false;
    Family f = family_of(params_);
    if (f == Family::Hermite || f == Family::Laguerre) return true;
    throw UnsupportedParameters("coupling zero is only supported at the confluent levels");
}

Builder<LimitScalar>& PolyCtx::shifted_builder() {
    if (!shifted_) shifted_ = std::make_unique<Builder<LimitScalar>>(shifted_params(params_));
    return *shifted_;
}

const SymPoly<K>& PolyCtx::poly(const Partition& lam, int n) {
    auto key = std::make_pair(n, lam);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    SymPoly<K> result(n);
    if (!direct_) {
        result = product_form(lam, n);
    } else {
        try {
            result = direct_->build(lam, n);
        } catch (const NonGenericParameters&) {
            result = take_plain_limit(shifted_builder().build(lam, n));
        }
    }
    return cache_.emplace(std::move(key), std::move(result)).first->second;
}

GaussRational PolyCtx::pieri(const Partition& lam, const Partition& mu, int n, int r) {
    try {
        return pieri_coeff(params_, lam, mu, n, r);
    } catch (const HermiteGeneralCase&) {
    } catch (const NonGenericParameters&) {
        // removable singularity of the closed form; fall through to the
        // expansion against exactly constructed polynomials
    }
    if (r == 0) return lam == mu ? K(1) : K(0);
    if (!proximity(lam, mu, r, n)) return K(0);
    auto key = std::make_tuple(n, lam, r);
    auto it = rows_.find(key);
    if (it == rows_.end()) {
        auto row = pieri_row_via<K>([&](const Partition& nu) { return poly(nu, n); }, lam, n, r);
        it = rows_.emplace(std::move(key), std::move(row)).first;
    }
    auto jt = it->second.find(mu);
    return jt == it->second.end() ? K(0) : jt->second;
}

std::vector<GaussRational> PolyCtx::branch_coeffs(const Partition& lam, const Partition& mu,
                                                  int n) {
    if (!direct_) {
        // product form: the attached polynomial is the one-variable
        // polynomial of the removed part, or zero
        std::vector<int> rest = lam.padded(n + 1);
        std::vector<int> want = mu.padded(n);
        std::vector<int> diff;
        std::multiset<int> a(rest.begin(), rest.end()), b(want.begin(), want.end());
        for (int v : b) {
            auto jt = a.find(v);
            if (jt == a.end()) return {K(0)};
            a.erase(jt);
        }
        if (a.size() != 1) return {K(0)};
        int v = *a.begin();
        const SymPoly<K>& pv = poly(Partition{v}, 1);
        std::vector<K> out(static_cast<size_t>(v) + 1, K(0));
        for (const auto& [nu, c] : pv.terms()) out[static_cast<size_t>(nu.part(1))] = c;
        return out;
    }
    try {
        return direct_->branch_coeffs(lam, mu, n);
    } catch (const NonGenericParameters&) {
        auto lifted = shifted_builder().branch_coeffs(lam, mu, n);
        std::vector<K> out;
        out.reserve(lifted.size());
        for (const auto& c : lifted) out.push_back(c.limit_at_zero());
        return out;
    }
}

OneVarPoly<GaussRational> PolyCtx::branch_poly(const Partition& lam, const Partition& mu, int n) {
    auto bs = branch_coeffs(lam, mu, n);
    OneVarPoly<K> out;
    for (size_t k = 0; k < bs.size(); ++k) {
        if (bs[k].is_zero()) continue;
        out = out + bs[k] * onevar_basis(params_, static_cast<int>(k));
    }
    return out;
}

SymPoly<GaussRational> PolyCtx::product_form(const Partition& lam, int n) {
    if (n == 0) return SymPoly<K>::unit(0);
    if (!onevar_) {
        // the one-variable polynomials do not involve the coupling; source
        // them from the same family at coupling one
        ParamPoint<K> p = params_;
        if (auto* l = std::get_if<LaguerreParams<K>>(&p)) l->g = K(1);
        if (auto* h = std::get_if<HermiteParams<K>>(&p)) h->g = K(1);
        onevar_ = std::make_unique<Builder<K>>(p);
    }
    std::vector<int> padded = lam.padded(n);
    std::vector<int> values = padded;
    values.erase(std::unique(values.begin(), values.end()), values.end());

    ExponentMap<K> acc;
    for (int v : values) {
        std::vector<int> rest;
        bool removed = false;
        for (int x : padded) {
            if (!removed && x == v) {
                removed = true;
                continue;
            }
            rest.push_back(x);
        }
        const SymPoly<K>& head = poly(Partition(rest), n - 1);
        const SymPoly<K>& pv = onevar_->build(Partition{v}, 1);
        std::vector<K> coeffs(static_cast<size_t>(v) + 1, K(0));
        for (const auto& [nu, c] : pv.terms()) coeffs[static_cast<size_t>(nu.part(1))] = c;
        OneVarPoly<K> u(coeffs);
        for (auto& [e, c] : merge_with_univariate(head, u)) {
            auto [jt, fresh] = acc.try_emplace(e, c);
            if (!fresh) jt->second += c;
        }
    }
    return collect_mbasis(acc, n);
}

}  // namespace symhyp
