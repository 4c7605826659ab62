#include "doctest.h"
#include "oracles.hpp"
#include "symhyp/hermite_limit.hpp"

using namespace symhyp;
using K = GaussRational;

namespace {

ParamPoint<K> hermite(Rat g, Rat omega) {
    return make_params(Family::Hermite, {{"g", K(g)}, {"omega", K(omega)}});
}
ParamPoint<K> laguerre(Rat g, Rat h, Rat omega) {
    return make_params(Family::Laguerre, {{"g", K(g)}, {"h", K(h)}, {"omega", K(omega)}});
}
ParamPoint<K> jacobi(Rat g, Rat g0, Rat g1) {
    return make_params(Family::Jacobi, {{"g", K(g)}, {"g0", K(g0)}, {"g1", K(g1)}});
}
ParamPoint<K> wilson(Rat g, Rat g0, Rat g1, Rat g2, Rat g3) {
    return make_params(Family::Wilson, {{"g", K(g)}, {"g0", K(g0)}, {"g1", K(g1)},
                                        {"g2", K(g2)}, {"g3", K(g3)}});
}
ParamPoint<K> chahn(K g, K g0, K g1) {
    return make_params(Family::ContinuousHahn, {{"g", g}, {"g0", g0}, {"g1", g1}});
}
ParamPoint<K> askey_wilson(Rat s, Rat t, Rat c, Rat t1, Rat t2, Rat t3) {
    Rat q = s * s * t;
    Rat t0 = c * c * t / (t1 * t2 * t3);
    return make_params(Family::AskeyWilson,
                       {{"q", K(q)}, {"t", K(t)}, {"t0", K(t0)}, {"t1", K(t1)},
                        {"t2", K(t2)}, {"t3", K(t3)}, {"t0hat", K(c / s)}});
}
ParamPoint<K> whittaker(Rat t, Rat t0, Rat t1, Rat t2, Rat t3) {
    return make_params(Family::Whittaker, {{"t", K(t)}, {"t0", K(t0)}, {"t1", K(t1)},
                                           {"t2", K(t2)}, {"t3", K(t3)}});
}

}  // namespace

TEST_CASE("empty branch pair gives the unit coefficient") {
    for (auto p : {hermite(Rat(1), Rat(1)), laguerre(Rat(1), Rat(3), Rat(2)),
                   jacobi(Rat(1), Rat(1, 2), Rat(1, 3))}) {
        auto b = make_exact_builder(p);
        auto bs = b->branch_coeffs(Partition{}, Partition{}, 0);
        REQUIRE(bs.size() == 1);
        CHECK(bs[0] == K(1));
    }
}

TEST_CASE("one-variable branch data reproduces the gaussian construction") {
    Rat g(1), omega(1);
    auto b = make_exact_builder(hermite(g, omega));
    auto bs = b->branch_coeffs(Partition{2}, Partition{}, 0);
    REQUIRE(bs.size() == 3);
    CHECK(bs[0] == K(Rat(-1, 2)));  // -1/(2 omega)
    CHECK(bs[1] == K(0));
    CHECK(bs[2] == K(1));
}

TEST_CASE("one-variable laguerre branch data") {
    Rat g(1), h(3), omega(1);
    auto b = make_exact_builder(laguerre(g, h, omega));
    auto bs = b->branch_coeffs(Partition{1}, Partition{}, 0);
    REQUIRE(bs.size() == 2);
    CHECK(bs[0] == K(-h));  // -h/omega at omega = 1
    CHECK(bs[1] == K(1));
}

TEST_CASE("two-variable hermite branch polynomials") {
    auto b = make_exact_builder(hermite(Rat(1, 2), Rat(1)));
    // d((1,1),(1)) = 1 and the polynomial is exactly the new variable
    auto u = b->branch_poly(Partition{1, 1}, Partition{1}, 1);
    CHECK(u.degree() == 1);
    CHECK(u.coeff(1) == K(1));
    CHECK(u.coeff(0) == K(0));
    // embedded equal pair keeps degree zero
    auto c = b->branch_poly(Partition{1}, Partition{1}, 1);
    CHECK(c.degree() == 0);
}

TEST_CASE("hermite builds match the moment oracles") {
    Rat g(3, 2), omega(5, 4);
    auto b = make_exact_builder(hermite(g, omega));

    CHECK(b->build(Partition{}, 2) == SymPoly<K>::unit(2));

    auto p2 = b->build(Partition{2}, 1);
    CHECK(p2.coeff(Partition{2}) == K(1));
    CHECK(p2.coeff(Partition{}) == K(-1) / (K(2) * K(omega)));

    auto p11 = b->build(Partition{1, 1}, 2);
    CHECK(p11.coeff(Partition{1, 1}) == K(1));
    CHECK(p11.coeff(Partition{}) == K(g) / (K(2) * K(omega)));
    CHECK(p11.terms().size() == 2);

    // all one-variable polynomials agree with the gram-schmidt oracle
    auto mom = [&](int k) { return oracles::gaussian_moment(k, omega); };
    auto oracle = oracles::gram_schmidt_monic(mom, 6);
    for (int m = 0; m <= 6; ++m) {
        auto pm = b->build(Partition{m}, 1);
        for (int k = 0; k <= m; ++k)
            CHECK(pm.coeff(Partition{k}) == oracle[static_cast<size_t>(m)].coeff(k));
    }
}

TEST_CASE("laguerre builds match the gamma oracle") {
    Rat g(5, 7), h(7, 3), omega(3);
    auto b = make_exact_builder(laguerre(g, h, omega));
    auto mom = [&](int k) { return oracles::gamma_moment(k, h, omega); };
    auto oracle = oracles::gram_schmidt_monic(mom, 5);
    for (int m = 0; m <= 5; ++m) {
        auto pm = b->build(Partition{m}, 1);
        for (int k = 0; k <= m; ++k)
            CHECK(pm.coeff(Partition{k}) == oracle[static_cast<size_t>(m)].coeff(k));
    }
}

TEST_CASE("builds are monic, triangular, and real across families") {
    std::vector<ParamPoint<K>> points = {
        hermite(Rat(2, 3), Rat(5, 4)),
        laguerre(Rat(1, 2), Rat(7, 3), Rat(2)),
        jacobi(Rat(3, 2), Rat(1, 2), Rat(2, 3)),
        wilson(Rat(1, 2), Rat(2, 3), Rat(1, 5), Rat(3, 7), Rat(1, 2)),
        askey_wilson(Rat(2), Rat(1, 9), Rat(2, 3), Rat(1, 2), Rat(1, 3), Rat(1, 5)),
        whittaker(Rat(1, 3), Rat(1, 2), Rat(1, 5), Rat(2, 3), Rat(1, 7)),
    };
    for (auto& p : points) {
        auto b = make_exact_builder(p);
        for (int n = 1; n <= 2; ++n)
            for (const auto& lam : enumerate_subpartitions(n, 3)) {
                const auto& poly = b->build(lam, n);
                CHECK(poly.coeff(lam) == K(1));
                for (const auto& [mu, c] : poly.terms()) {
                    CHECK(dominance_leq(mu, lam, n));
                    CHECK(c.is_real());
                }
            }
    }
    // complex parameters produce gaussian-rational coefficients, monic and triangular
    auto cb = make_exact_builder(chahn(K(1), K(Rat(1, 2), Rat(1, 3)), K(Rat(1, 2), Rat(-1, 3))));
    for (const auto& lam : enumerate_subpartitions(2, 2)) {
        const auto& poly = cb->build(lam, 2);
        CHECK(poly.coeff(lam) == K(1));
        for (const auto& [mu, c] : poly.terms()) CHECK(dominance_leq(mu, lam, 2));
    }
}

TEST_CASE("recursive evaluation agrees with the collected expansion") {
    std::vector<ParamPoint<K>> points = {
        laguerre(Rat(1, 2), Rat(7, 3), Rat(2)),
        jacobi(Rat(3, 2), Rat(1, 2), Rat(2, 3)),
        askey_wilson(Rat(2), Rat(1, 9), Rat(2, 3), Rat(1, 2), Rat(1, 3), Rat(1, 5)),
    };
    std::vector<K> pt{K(Rat(2, 3)), K(Rat(-1, 2)), K(Rat(5, 7))};
    for (auto& p : points) {
        auto b = make_exact_builder(p);
        for (const auto& lam : enumerate_subpartitions(3, 2)) {
            auto direct = evaluate(b->build(lam, 3), pt);
            CHECK(direct == b->evaluate_at(lam, pt));
        }
    }
}

TEST_CASE("branch coefficients vanish for non-preceding pairs") {
    auto b = make_exact_builder(laguerre(Rat(1, 2), Rat(7, 3), Rat(2)));
    // mu exceeding the conjugate box is not representable at all
    CHECK_THROWS_AS(b->branch_coeffs(Partition{1, 1}, Partition{3}, 2), BadInput);

    // fits the boxes but fails the interlacing: no nu works between () and
    // (2,2,1), yet the dual-side formula still evaluates -- to zero.
    auto cs = b->branch_coeffs(Partition{2, 2, 1}, Partition{}, 2);
    for (const auto& c : cs) CHECK(c == K(0));
}
