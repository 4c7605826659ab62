#pragma once

#include <string>

#include "symhyp/rational.hpp"

namespace symhyp {

// Exact complex number a + b*i with arbitrary-precision rational a, b.
// The universal coefficient scalar for all polynomial families.
class GaussRational {
  public:
    GaussRational() = default;
    GaussRational(long n) : re_(n) {}  // NOLINT: implicit by design
    GaussRational(Rat re) : re_(std::move(re)) {}  // NOLINT
    GaussRational(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rat(0), Rat(1)); }
    static GaussRational from_rat(const Rat& r) { return GaussRational(r); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    GaussRational real_part() const { return GaussRational(re_); }
    GaussRational imag_part() const { return GaussRational(im_); }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rat n = b.re_ * b.re_ + b.im_ * b.im_;
        if (n.is_zero()) throw DivideByZero();
        return GaussRational((a.re_ * b.re_ + a.im_ * b.im_) / n,
                             (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    GaussRational& operator+=(const GaussRational& b) { return *this = *this + b; }
    GaussRational& operator-=(const GaussRational& b) { return *this = *this - b; }
    GaussRational& operator*=(const GaussRational& b) { return *this = *this * b; }
    GaussRational& operator/=(const GaussRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    GaussRational pow(long e) const {
        if (e < 0) return GaussRational(1) / pow(-e);
        GaussRational r(1), b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        return re_.str() + (im_.sign() >= 0 ? "+" : "") + im_.str() + "*i";
    }

  private:
    Rat re_, im_;
};

}  // namespace symhyp
