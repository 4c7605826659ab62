#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "symhyp/partition.hpp"
#include "symhyp/scalar.hpp"

namespace symhyp {

// Dense univariate polynomial in the base variable y of a family
// (y = e^{ix} + e^{-ix} at the trigonometric levels, y = x^2 for the even
// families, y = x otherwise). Low degree first, no high zeros.
template <class K>
class OneVarPoly {
  public:
    OneVarPoly() = default;
    explicit OneVarPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static OneVarPoly constant(K v) { return OneVarPoly(std::vector<K>{std::move(v)}); }
    static OneVarPoly variable() { return OneVarPoly(std::vector<K>{K(0), K(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero poly
    K coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : K(0);
    }
    bool is_zero() const { return c_.empty(); }

    K eval(const K& y) const {
        K r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * y + c_[i];
        return r;
    }

    friend OneVarPoly operator+(const OneVarPoly& a, const OneVarPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] += a.c_[i];
            if (i < b.c_.size()) r[i] += b.c_[i];
        }
        return OneVarPoly(std::move(r));
    }
    friend OneVarPoly operator*(const OneVarPoly& a, const OneVarPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return OneVarPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return OneVarPoly(std::move(r));
    }
    friend OneVarPoly operator*(const K& s, const OneVarPoly& a) {
        std::vector<K> r = a.c_;
        for (auto& x : r) x *= s;
        return OneVarPoly(std::move(r));
    }
    friend bool operator==(const OneVarPoly& a, const OneVarPoly& b) { return a.c_ == b.c_; }

  private:
    void trim() {
        while (!c_.empty() && ScalarTraits<K>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

// Plain monomial expansion: exponent tuple (fixed length nvars) -> coefficient.
template <class K>
using ExponentMap = std::map<std::vector<int>, K>;

// Symmetric polynomial in the monomial-symmetric basis: a finite map from
// partitions (length <= nvars) to coefficients, zero coefficients purged.
template <class K>
class SymPoly {
  public:
    using Terms = std::map<Partition, K, TermOrder>;

    explicit SymPoly(int nvars = 0) : nvars_(nvars) {
        if (nvars < 0) throw BadInput("negative variable count");
    }
    static SymPoly unit(int nvars) { return monomial(nvars, Partition{}, K(1)); }
    static SymPoly monomial(int nvars, const Partition& mu, K coeff) {
        SymPoly p(nvars);
        p.add_term(mu, std::move(coeff));
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K coeff(const Partition& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? K(0) : it->second;
    }

    void add_term(const Partition& mu, K c) {
        if (mu.length() > nvars_)
            throw BadInput("partition " + mu.str() + " too long for " + std::to_string(nvars_) +
                           " variables");
        auto it = terms_.find(mu);
        if (it == terms_.end()) {
            if (!ScalarTraits<K>::is_zero(c)) terms_.emplace(mu, std::move(c));
        } else {
            it->second += c;
            if (ScalarTraits<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b) {
        if (a.nvars_ != b.nvars_) throw BadInput("variable count mismatch");
        SymPoly r = a;
        for (const auto& [mu, c] : b.terms_) r.add_term(mu, c);
        return r;
    }
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b) {
        if (a.nvars_ != b.nvars_) throw BadInput("variable count mismatch");
        SymPoly r = a;
        for (const auto& [mu, c] : b.terms_) r.add_term(mu, -c);
        return r;
    }
    friend SymPoly operator*(const K& s, const SymPoly& a) {
        SymPoly r(a.nvars_);
        for (const auto& [mu, c] : a.terms_) r.add_term(mu, s * c);
        return r;
    }
    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

  private:
    int nvars_;
    Terms terms_;
};

// Expansion into plain monomials over all coordinate permutations.
template <class K>
ExponentMap<K> expand_monomials(const SymPoly<K>& f) {
    ExponentMap<K> out;
    for (const auto& [mu, c] : f.terms())
        for (const auto& e : orbit_of(mu, f.nvars())) out[e] = c;
    return out;
}

// Regroups a plain monomial expansion into the m-basis. Rejects input whose
// coefficients are not constant on permutation orbits; such input signals a
// wrong expansion coefficient upstream.
template <class K>
SymPoly<K> collect_mbasis(const ExponentMap<K>& em, int nvars) {
    SymPoly<K> out(nvars);
    std::map<Partition, std::pair<K, size_t>, TermOrder> buckets;
    for (const auto& [e, c] : em) {
        if (ScalarTraits<K>::is_zero(c)) continue;
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        Partition mu(sorted);
        auto [it, fresh] = buckets.try_emplace(mu, std::make_pair(c, size_t{1}));
        if (!fresh) {
            if (!(it->second.first == c))
                throw NonSymmetric("orbit of " + mu.str() + " has unequal coefficients");
            ++it->second.second;
        }
    }
    for (const auto& [mu, info] : buckets) {
        if (info.second != orbit_of(mu, nvars).size())
            throw NonSymmetric("orbit of " + mu.str() + " is incomplete");
        out.add_term(mu, info.first);
    }
    return out;
}

template <class K>
ExponentMap<K> em_mul(const ExponentMap<K>& a, const ExponentMap<K>& b) {
    ExponentMap<K> out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = out.try_emplace(e, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    return out;
}

// Product in the m-basis, by expanding orbits and regrouping.
template <class K>
SymPoly<K> mbasis_mul(const SymPoly<K>& f, const SymPoly<K>& g) {
    if (f.nvars() != g.nvars()) throw BadInput("variable count mismatch");
    return collect_mbasis(em_mul(expand_monomials(f), expand_monomials(g)), f.nvars());
}

// Plain-monomial product of an n-variable symmetric polynomial with a
// univariate polynomial in the new last variable. The result is generally
// not symmetric term by term; the caller sums over the branching rule and
// regroups with collect_mbasis.
template <class K>
ExponentMap<K> merge_with_univariate(const SymPoly<K>& f, const OneVarPoly<K>& u) {
    ExponentMap<K> out;
    for (const auto& [mu, c] : f.terms())
        for (const auto& e : orbit_of(mu, f.nvars()))
            for (int k = 0; k <= u.degree(); ++k) {
                K uk = u.coeff(k);
                if (ScalarTraits<K>::is_zero(uk)) continue;
                std::vector<int> key = e;
                key.push_back(k);
                auto [it, fresh] = out.try_emplace(key, c * uk);
                if (!fresh) it->second += c * uk;
            }
    return out;
}

// Value of the monomial symmetric function m_mu at a point.
template <class K>
K monomial_sym_value(const Partition& mu, const std::vector<K>& point) {
    K total(0);
    for (const auto& e : orbit_of(mu, static_cast<int>(point.size()))) {
        K term(1);
        for (size_t i = 0; i < point.size(); ++i) term *= kpow(point[i], e[i]);
        total += term;
    }
    return total;
}

// Exact value of the plain-monomial expansion at a point.
template <class K>
K evaluate(const SymPoly<K>& f, const std::vector<K>& point) {
    if (static_cast<int>(point.size()) != f.nvars())
        throw BadInput("evaluation point has wrong dimension");
    K total(0);
    for (const auto& [mu, c] : f.terms()) total += c * monomial_sym_value(mu, point);
    return total;
}

}  // namespace symhyp
