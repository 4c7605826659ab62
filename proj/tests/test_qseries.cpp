#include "doctest.h"
#include "symhyp/qseries.hpp"

using namespace symhyp;
using K = GaussRational;

TEST_CASE("shifted factorials") {
    CHECK(pochhammer(K(1), 3) == K(6));
    CHECK(pochhammer(K(Rat(-17, 3)), 0) == K(1));
    CHECK(pochhammer(K(Rat(1, 2)), 2) == K(Rat(3, 4)));
    // (a)_{k+1} = (a)_k (a+k)
    K a(Rat(2, 7));
    for (int k = 0; k < 5; ++k) CHECK(pochhammer(a, k + 1) == pochhammer(a, k) * (a + K(k)));
}

TEST_CASE("q-shifted factorials") {
    K q(Rat(1, 3));
    CHECK(q_pochhammer(q, q, 1) == K(1) - q);
    CHECK(q_pochhammer(K(Rat(5, 2)), q, 0) == K(1));
    CHECK(q_pochhammer(K(1), q, 4) == K(0));
    K a(Rat(2, 5));
    for (int k = 0; k < 5; ++k)
        CHECK(q_pochhammer(a, q, k + 1) == q_pochhammer(a, q, k) * (K(1) - a * kpow(q, k)));
}

TEST_CASE("elementary and complete symmetric values") {
    std::vector<K> v{K(1), K(2), K(3)};
    CHECK(elementary_sym(v, 0) == K(1));
    CHECK(elementary_sym(v, 1) == K(6));
    CHECK(elementary_sym(v, 2) == K(11));
    CHECK(elementary_sym(v, 3) == K(6));
    CHECK(elementary_sym(v, 4) == K(0));
    CHECK(complete_sym(v, 0) == K(1));
    CHECK(complete_sym(v, 1) == K(6));
    CHECK(complete_sym(v, 2) == K(25));  // 1+4+9+2+3+6
    CHECK(complete_sym(std::vector<K>{}, 0) == K(1));
    CHECK(complete_sym(std::vector<K>{}, 2) == K(0));
}
