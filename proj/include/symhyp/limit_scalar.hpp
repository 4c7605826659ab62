#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "symhyp/gauss_rational.hpp"

namespace symhyp {

namespace detail {

// Dense univariate polynomials over the Gaussian rationals, low degree first,
// no high zero coefficients.
using GPoly = std::vector<GaussRational>;

inline void gp_trim(GPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline GPoly gp_add(const GPoly& a, const GPoly& b) {
    GPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    gp_trim(r);
    return r;
}

inline GPoly gp_neg(GPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

inline GPoly gp_mul(const GPoly& a, const GPoly& b) {
    if (a.empty() || b.empty()) return {};
    GPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    gp_trim(r);
    return r;
}

inline GPoly gp_scale(GPoly a, const GaussRational& c) {
    for (auto& x : a) x *= c;
    gp_trim(a);
    return a;
}

// Remainder of a by b (b nonzero); quotient discarded.
inline GPoly gp_mod(GPoly a, const GPoly& b) {
    GaussRational lead = b.back();
    while (a.size() >= b.size()) {
        GaussRational q = a.back() / lead;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] -= q * b[i];
        a.pop_back();  // top coefficient cancels exactly
        gp_trim(a);
    }
    return a;
}

// Exact quotient a / b; callers guarantee divisibility.
inline GPoly gp_divexact(GPoly a, const GPoly& b) {
    if (a.size() < b.size()) return {};
    GPoly q(a.size() - b.size() + 1);
    GaussRational lead = b.back();
    while (a.size() >= b.size()) {
        GaussRational c = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        gp_trim(a);
    }
    gp_trim(q);
    return q;
}

inline GPoly gp_monic(GPoly a) {
    if (a.empty()) return a;
    GaussRational lead = a.back();
    if (lead.is_one()) return a;
    for (auto& c : a) c /= lead;
    return a;
}

inline GPoly gp_gcd(GPoly a, GPoly b) {
    a = gp_monic(a);
    b = gp_monic(b);
    while (!b.empty()) {
        GPoly r = gp_monic(gp_mod(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return {GaussRational(1)};
    return a;
}

inline size_t gp_order(const GPoly& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) return i;
    return p.size();
}

}  // namespace detail

// Univariate rational function in a formal degeneration variable beta, over
// the Gaussian rationals. Kept in canonical form: numerator and denominator
// coprime, denominator monic. Supports the exact evaluation of beta -> 0
// limits; a negative valuation at zero raises PoleAtZero.
class LimitScalar {
  public:
    LimitScalar() : num_(), den_{GaussRational(1)} {}
    LimitScalar(long n) : LimitScalar(GaussRational(n)) {}  // NOLINT
    LimitScalar(GaussRational c) : den_{GaussRational(1)} {  // NOLINT
        if (!c.is_zero()) num_ = {std::move(c)};
    }
    LimitScalar(detail::GPoly num, detail::GPoly den) : num_(std::move(num)), den_(std::move(den)) {
        detail::gp_trim(num_);
        detail::gp_trim(den_);
        if (den_.empty()) throw DivideByZero("rational function with zero denominator");
        normalize();
    }

    static LimitScalar beta() { return LimitScalar({GaussRational(0), GaussRational(1)}, {GaussRational(1)}); }
    static LimitScalar beta_pow(long k) {
        if (k >= 0) {
            detail::GPoly n(static_cast<size_t>(k) + 1);
            n.back() = GaussRational(1);
            return LimitScalar(std::move(n), {GaussRational(1)});
        }
        detail::GPoly d(static_cast<size_t>(-k) + 1);
        d.back() = GaussRational(1);
        return LimitScalar({GaussRational(1)}, std::move(d));
    }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const { return num_.size() == 1 && num_[0].is_one() && den_.size() == 1; }
    // Constant (degree-zero) values convert back to plain scalars.
    bool is_constant() const { return num_.size() <= 1 && den_.size() == 1; }
    GaussRational constant_value() const {
        if (!is_constant()) throw Error("limit scalar is not constant");
        return num_.empty() ? GaussRational(0) : num_[0] / den_[0];
    }

    // Exact value of the reduced rational function at beta = 0.
    GaussRational limit_at_zero() const {
        if (num_.empty()) return GaussRational(0);
        if (den_[0].is_zero()) throw PoleAtZero("rational function has a pole at beta = 0");
        return num_[0] / den_[0];
    }

    friend LimitScalar operator+(const LimitScalar& a, const LimitScalar& b) {
        return LimitScalar(detail::gp_add(detail::gp_mul(a.num_, b.den_), detail::gp_mul(b.num_, a.den_)),
                           detail::gp_mul(a.den_, b.den_));
    }
    friend LimitScalar operator-(const LimitScalar& a, const LimitScalar& b) {
        return a + (-b);
    }
    LimitScalar operator-() const {
        LimitScalar r = *this;
        r.num_ = detail::gp_neg(r.num_);
        return r;
    }
    friend LimitScalar operator*(const LimitScalar& a, const LimitScalar& b) {
        if (a.is_zero() || b.is_zero()) return LimitScalar();
        // Cross-reduce before multiplying to keep degrees down.
        detail::GPoly g1 = detail::gp_gcd(a.num_, b.den_);
        detail::GPoly g2 = detail::gp_gcd(b.num_, a.den_);
        detail::GPoly n1 = g1.size() > 1 ? detail::gp_divexact(a.num_, g1) : a.num_;
        detail::GPoly d2 = g1.size() > 1 ? detail::gp_divexact(b.den_, g1) : b.den_;
        detail::GPoly n2 = g2.size() > 1 ? detail::gp_divexact(b.num_, g2) : b.num_;
        detail::GPoly d1 = g2.size() > 1 ? detail::gp_divexact(a.den_, g2) : a.den_;
        return LimitScalar(detail::gp_mul(n1, n2), detail::gp_mul(d1, d2));
    }
    friend LimitScalar operator/(const LimitScalar& a, const LimitScalar& b) {
        if (b.is_zero()) throw DivideByZero("division by zero rational function");
        if (a.is_zero()) return LimitScalar();
        LimitScalar binv(b.den_, b.num_);
        return a * binv;
    }

    LimitScalar& operator+=(const LimitScalar& b) { return *this = *this + b; }
    LimitScalar& operator-=(const LimitScalar& b) { return *this = *this - b; }
    LimitScalar& operator*=(const LimitScalar& b) { return *this = *this * b; }
    LimitScalar& operator/=(const LimitScalar& b) { return *this = *this / b; }

    friend bool operator==(const LimitScalar& a, const LimitScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const LimitScalar& a, const LimitScalar& b) { return !(a == b); }

    LimitScalar conj() const {
        LimitScalar r = *this;
        for (auto& c : r.num_) c = c.conj();
        for (auto& c : r.den_) c = c.conj();
        r.normalize();
        return r;
    }

    const detail::GPoly& num() const { return num_; }
    const detail::GPoly& den() const { return den_; }

    std::string str() const {
        auto poly_str = [](const detail::GPoly& p) {
            if (p.empty()) return std::string("0");
            std::string s;
            for (size_t i = 0; i < p.size(); ++i) {
                if (p[i].is_zero()) continue;
                if (!s.empty()) s += " + ";
                s += "(" + p[i].str() + ")";
                if (i == 1) s += "*b";
                if (i > 1) s += "*b^" + std::to_string(i);
            }
            return s.empty() ? std::string("0") : s;
        };
        if (den_.size() == 1 && den_[0].is_one()) return poly_str(num_);
        return "[" + poly_str(num_) + "] / [" + poly_str(den_) + "]";
    }

  private:
    void normalize() {
        detail::gp_trim(num_);
        detail::gp_trim(den_);
        if (num_.empty()) {
            den_ = {GaussRational(1)};
            return;
        }
        // Strip the common power of beta first; it is cheap and frequent.
        size_t s = std::min(detail::gp_order(num_), detail::gp_order(den_));
        if (s > 0) {
            num_.erase(num_.begin(), num_.begin() + static_cast<long>(s));
            den_.erase(den_.begin(), den_.begin() + static_cast<long>(s));
        }
        detail::GPoly g = detail::gp_gcd(num_, den_);
        if (g.size() > 1) {
            num_ = detail::gp_divexact(num_, g);
            den_ = detail::gp_divexact(den_, g);
        }
        GaussRational lead = den_.back();
        if (!lead.is_one()) {
            for (auto& c : num_) c /= lead;
            for (auto& c : den_) c /= lead;
        }
    }

    detail::GPoly num_, den_;
};

}  // namespace symhyp
