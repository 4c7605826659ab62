#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "symhyp/errors.hpp"

namespace symhyp {

// Arbitrary-precision rational, thin wrapper over GMP's mpq_class.
// Serializes as "p/q" ("p" when the denominator is 1).
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw DivideByZero("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) {}

    // Parses "p", "-p/q", with optional whitespace trimmed by the caller.
    static Rat parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw BadInput("cannot parse rational: '" + s + "'");
        if (v.get_den() == 0) throw BadInput("zero denominator in rational: '" + s + "'");
        v.canonicalize();
        return Rat(std::move(v));
    }

    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    bool is_integer() const { return v_.get_den() == 1; }
    // Value as long; caller must know it fits.
    long to_long() const { return mpz_get_si(v_.get_num().get_mpz_t()); }
    double to_double() const { return v_.get_d(); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw DivideByZero();
        return Rat(mpq_class(a.v_ / b.v_));
    }
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
    Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
    Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw DivideByZero("0 to a negative power");
            return (Rat(1) / *this).pow(-e);
        }
        Rat r(1), b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Exact square root, when one exists in the rationals.
    std::optional<Rat> sqrt_exact() const {
        if (sign() < 0) return std::nullopt;
        mpz_class num = v_.get_num(), den = v_.get_den();
        if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Rat(mpq_class(rn) / mpq_class(rd));
    }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

inline Rat factorial(long n) {
    Rat r(1);
    for (long i = 2; i <= n; ++i) r *= Rat(i);
    return r;
}

inline Rat binomial(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    Rat r(1);
    for (long i = 0; i < k; ++i) r *= Rat(n - i, i + 1);
    return r;
}

}  // namespace symhyp
