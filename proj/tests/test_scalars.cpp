#include "doctest.h"
#include "symhyp/scalar.hpp"

using namespace symhyp;

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rat::parse("3/4") + Rat::parse("1/4") == Rat(1));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(-6, 4).str() == "-3/2");
    CHECK(Rat(5).str() == "5");
    CHECK(Rat(2).pow(-2) == Rat(1, 4));
    CHECK_THROWS_AS(Rat(1) / Rat(0), DivideByZero);
    CHECK_THROWS_AS(Rat::parse("abc"), BadInput);
}

TEST_CASE("rational exact square roots") {
    CHECK(Rat(9, 4).sqrt_exact().value() == Rat(3, 2));
    CHECK(Rat(0).sqrt_exact().value() == Rat(0));
    CHECK_FALSE(Rat(2).sqrt_exact().has_value());
    CHECK_FALSE(Rat(-1).sqrt_exact().has_value());
}

TEST_CASE("gaussian rational field") {
    GaussRational i = GaussRational::i();
    CHECK(i * i == GaussRational(-1));
    GaussRational z(Rat(1, 2), Rat(1, 3));
    CHECK(z * z.conj() == GaussRational(Rat(1, 4) + Rat(1, 9)));
    CHECK(z / z == GaussRational(1));
    CHECK(z.pow(-1) * z == GaussRational(1));
    CHECK(i.pow(7) == -i);
    CHECK_THROWS_AS(z / GaussRational(0), DivideByZero);
    CHECK(real_part(z) == GaussRational(Rat(1, 2)));
    CHECK(imag_part(z) == GaussRational(Rat(1, 3)));
}

TEST_CASE("limit scalar arithmetic") {
    LimitScalar b = LimitScalar::beta();
    LimitScalar one(1);

    // (b^2 + b) / b -> 1 at zero
    LimitScalar f = (b * b + b) / b;
    CHECK(f.limit_at_zero() == GaussRational(1));

    // (2 + b) / (1 + b) -> 2
    LimitScalar g = (LimitScalar(2) + b) / (one + b);
    CHECK(g.limit_at_zero() == GaussRational(2));

    // 1 / b has a pole
    CHECK_THROWS_AS((one / b).limit_at_zero(), PoleAtZero);

    CHECK((b - b).is_zero());
    CHECK((b / b) == one);
    CHECK_THROWS_AS(one / (b - b), DivideByZero);
}

TEST_CASE("limit scalar is a field where defined") {
    LimitScalar b = LimitScalar::beta();
    LimitScalar x = (LimitScalar(GaussRational(Rat(2, 3))) + b * b) / (LimitScalar(1) + b);
    LimitScalar y = b * b - LimitScalar(GaussRational(Rat(1, 5)));
    LimitScalar z = LimitScalar(GaussRational(Rat(7, 2))) * b + LimitScalar(1);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x / y * y == x);
    CHECK((x * y) / (y * x) == LimitScalar(1));
    CHECK(x - x == LimitScalar(0));
}

TEST_CASE("limit at zero is a ring homomorphism on pole-free elements") {
    LimitScalar b = LimitScalar::beta();
    LimitScalar x = (LimitScalar(3) + b) / (LimitScalar(1) + b * b);
    LimitScalar y = LimitScalar(GaussRational(Rat(1, 4))) + b * b * b;
    CHECK((x + y).limit_at_zero() == x.limit_at_zero() + y.limit_at_zero());
    CHECK((x * y).limit_at_zero() == x.limit_at_zero() * y.limit_at_zero());
}

TEST_CASE("limit scalar conjugation is coefficient-wise") {
    LimitScalar b = LimitScalar::beta();
    LimitScalar i(GaussRational::i());
    LimitScalar f = (i * b + LimitScalar(1)) / (b + LimitScalar(2));
    CHECK(real_part(f) + i * imag_part(f) == f);
    CHECK(f.conj().conj() == f);
    CHECK(imag_part(f).limit_at_zero().is_real());
}

TEST_CASE("beta powers") {
    CHECK(LimitScalar::beta_pow(3) == kpow(LimitScalar::beta(), 3));
    CHECK(LimitScalar::beta_pow(-2) * LimitScalar::beta_pow(2) == LimitScalar(1));
    CHECK((LimitScalar::beta_pow(2) * (LimitScalar(1) / LimitScalar::beta())).limit_at_zero() ==
          GaussRational(0));
}

TEST_CASE("float scalar traits") {
    using C = std::complex<double>;
    CHECK(ScalarTraits<C>::from_rat(Rat(1, 2)) == C(0.5, 0.0));
    CHECK(!ScalarTraits<C>::is_finite(C(1.0, 0.0) / C(0.0, 0.0)));
    CHECK(kpow(C(2.0, 0.0), -2) == C(0.25, 0.0));
}
