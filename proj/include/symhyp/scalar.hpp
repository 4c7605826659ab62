#pragma once

#include <cmath>
#include <complex>

#include "symhyp/gauss_rational.hpp"
#include "symhyp/limit_scalar.hpp"

namespace symhyp {

// The coefficient fields the formula engine is instantiated over: exact
// Gaussian rationals, exact rational functions of the degeneration variable,
// and complex doubles for the numeric degeneration checks.
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussRational> {
    static constexpr bool exact = true;
    static GaussRational from_rat(const Rat& r) { return GaussRational(r); }
    static GaussRational unit_i() { return GaussRational::i(); }
    static GaussRational conj(const GaussRational& x) { return x.conj(); }
    static bool is_zero(const GaussRational& x) { return x.is_zero(); }
    static bool is_finite(const GaussRational&) { return true; }
};

template <>
struct ScalarTraits<LimitScalar> {
    static constexpr bool exact = true;
    static LimitScalar from_rat(const Rat& r) { return LimitScalar(GaussRational(r)); }
    static LimitScalar unit_i() { return LimitScalar(GaussRational::i()); }
    static LimitScalar conj(const LimitScalar& x) { return x.conj(); }
    static bool is_zero(const LimitScalar& x) { return x.is_zero(); }
    static bool is_finite(const LimitScalar&) { return true; }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> from_rat(const Rat& r) { return {r.to_double(), 0.0}; }
    static std::complex<double> unit_i() { return {0.0, 1.0}; }
    static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
    static bool is_zero(const std::complex<double>& x) { return x == 0.0; }
    static bool is_finite(const std::complex<double>& x) {
        return std::isfinite(x.real()) && std::isfinite(x.imag());
    }
};

template <class K>
K kpow(const K& base, long e) {
    if (e < 0) return K(1) / kpow(base, -e);
    K r(1), b(base);
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

template <class K>
K real_part(const K& x) {
    return (x + ScalarTraits<K>::conj(x)) / K(2);
}

template <class K>
K imag_part(const K& x) {
    return (x - ScalarTraits<K>::conj(x)) / (K(2) * ScalarTraits<K>::unit_i());
}

}  // namespace symhyp
