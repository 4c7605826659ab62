#include "doctest.h"
#include "oracles.hpp"
#include "symhyp/pieri.hpp"

using namespace symhyp;
using K = GaussRational;

namespace {

ParamPoint<K> hermite(Rat g, Rat omega) {
    return make_params(Family::Hermite, {{"g", K(g)}, {"omega", K(omega)}});
}

ParamPoint<K> laguerre(Rat g, Rat h, Rat omega) {
    return make_params(Family::Laguerre, {{"g", K(g)}, {"h", K(h)}, {"omega", K(omega)}});
}

ParamPoint<K> wilson(Rat g, Rat g0, Rat g1, Rat g2, Rat g3) {
    return make_params(Family::Wilson, {{"g", K(g)}, {"g0", K(g0)}, {"g1", K(g1)},
                                        {"g2", K(g2)}, {"g3", K(g3)}});
}

ParamPoint<K> jacobi(Rat g, Rat g0, Rat g1) {
    return make_params(Family::Jacobi, {{"g", K(g)}, {"g0", K(g0)}, {"g1", K(g1)}});
}

ParamPoint<K> chahn(K g, K g0, K g1) {
    return make_params(Family::ContinuousHahn, {{"g", g}, {"g0", g0}, {"g1", g1}});
}

// q = s^2 t keeps the hatted parameter rational on both sides of the duality.
ParamPoint<K> askey_wilson(Rat s, Rat t, Rat c, Rat t1, Rat t2, Rat t3) {
    Rat q = s * s * t;
    Rat t0 = c * c * t / (t1 * t2 * t3);
    Rat t0hat = c / s;
    return make_params(Family::AskeyWilson,
                       {{"q", K(q)}, {"t", K(t)}, {"t0", K(t0)}, {"t1", K(t1)},
                        {"t2", K(t2)}, {"t3", K(t3)}, {"t0hat", K(t0hat)}});
}

}  // namespace

TEST_CASE("principal specializations") {
    CHECK(principal_special(hermite(Rat(2, 3), Rat(1)), Partition{}, 2) == K(1));
    Rat g(2, 3);
    CHECK(principal_special(hermite(g, Rat(1)), Partition{2, 1}, 2) ==
          (K(1) + K(g)) / K(g));
    // Laguerre single row: (-omega)^{-m} (h)_m
    Rat h(3, 2), omega(2);
    for (int m = 0; m <= 4; ++m) {
        K expected = kpow(K(-omega), -m) * pochhammer(K(h), m);
        CHECK(principal_special(laguerre(Rat(1), h, omega), Partition{m}, 1) == expected);
    }
    // empty partitions are always 1
    CHECK(principal_special(wilson(Rat(1), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)),
                            Partition{}, 2) == K(1));
    CHECK(principal_special(askey_wilson(Rat(2), Rat(1, 16), Rat(1, 2), Rat(1, 2), Rat(1, 3),
                                         Rat(1, 5)),
                            Partition{}, 2) == K(1));
}

TEST_CASE("v factors") {
    // removal of one box in one variable costs the gaussian moment ratio
    Rat g(1), omega(3, 2);
    for (int m = 1; m <= 4; ++m)
        CHECK(v_factor(hermite(g, omega), Partition{m}, {}, {1}, 1) ==
              K(Rat(m)) / (K(2) * K(omega)));
    // empty J
    CHECK(v_factor(hermite(g, omega), Partition{3}, {}, {}, 1) == K(1));
    CHECK(v_factor(laguerre(Rat(1), Rat(3), Rat(2)), Partition{2, 1}, {}, {}, 2) == K(1));
    // Laguerre raise: h + m
    Rat h(3);
    for (int m = 0; m <= 3; ++m)
        CHECK(v_factor(laguerre(Rat(1), h, Rat(2)), Partition{m}, {1}, {}, 1) == K(h) + K(m));
}

TEST_CASE("u factors") {
    CHECK(u_factor(laguerre(Rat(1), Rat(3), Rat(2)), Partition{2}, {1}, 0, 1) == K(1));
    CHECK(u_factor(wilson(Rat(1), Rat(1, 2), Rat(1, 3), Rat(1, 5), Rat(1, 7)), Partition{},
                   std::vector<int>{}, 0, 0) == K(1));
    // one-variable spectator sum: -(h + 2m)
    Rat h(3);
    for (int m = 0; m <= 3; ++m)
        CHECK(u_factor(laguerre(Rat(1), h, Rat(2)), Partition{m}, {1}, 1, 1) ==
              -(K(h) + K(2 * m)));
    CHECK_THROWS_AS(u_factor(hermite(Rat(1), Rat(1)), Partition{1}, {1}, 1, 1),
                    UnsupportedFamily);
}

TEST_CASE("one-variable coefficients match the moment oracles") {
    Rat g(1), omega(5, 4), h(7, 3);
    auto hmom = [&](int k) { return oracles::gaussian_moment(k, omega); };
    auto lmom = [&](int k) { return oracles::gamma_moment(k, h, omega); };
    auto hps = oracles::gram_schmidt_monic(hmom, 7);
    auto lps = oracles::gram_schmidt_monic(lmom, 7);

    for (int m = 1; m <= 6; ++m) {
        // x * p_m expanded over the oracle basis: removal coefficient
        OneVarPoly<K> shifted = OneVarPoly<K>::variable() * hps[static_cast<size_t>(m)];
        auto coeffs = oracles::expand_in_basis(shifted, hps);
        K removal = pieri_coeff(hermite(g, omega), Partition{m}, Partition{m - 1}, 1, 1);
        CHECK(removal == coeffs[static_cast<size_t>(m - 1)]);
        CHECK(removal == K(Rat(m)) / (K(2) * K(omega)));
        CHECK(pieri_coeff(hermite(g, omega), Partition{m}, Partition{m + 1}, 1, 1) == K(1));

        OneVarPoly<K> lshift = OneVarPoly<K>::variable() * lps[static_cast<size_t>(m)];
        auto lcoeffs = oracles::expand_in_basis(lshift, lps);
        K lremoval = pieri_coeff(laguerre(Rat(1), h, omega), Partition{m}, Partition{m - 1}, 1, 1);
        CHECK(lremoval == lcoeffs[static_cast<size_t>(m - 1)]);
        CHECK(lremoval == K(Rat(m)) * (K(Rat(m)) + K(h) - K(1)) / (K(omega) * K(omega)));
        // staying coefficient: (2m + h)/omega
        K stay = pieri_coeff(laguerre(Rat(1), h, omega), Partition{m}, Partition{m}, 1, 1);
        CHECK(stay == lcoeffs[static_cast<size_t>(m)]);
        CHECK(stay == (K(2 * m) + K(h)) / K(omega));
    }
}

TEST_CASE("coefficient of the fully raised partition is the generator top coefficient") {
    // one variable: E_1 * P_m is expanded monically, so the raising
    // coefficient equals the leading coefficient of E_1 in the base variable.
    for (int m = 0; m <= 3; ++m) {
        Partition lam{m}, mu{m + 1};
        CHECK(pieri_coeff(hermite(Rat(1, 2), Rat(2)), lam, mu, 1, 1) == K(1));
        CHECK(pieri_coeff(laguerre(Rat(1), Rat(5, 2), Rat(3)), lam, mu, 1, 1) == K(1));
        CHECK(pieri_coeff(wilson(Rat(1), Rat(1, 2), Rat(1, 3), Rat(1, 5), Rat(1, 7)), lam, mu, 1,
                          1) == K(-1));
        CHECK(pieri_coeff(jacobi(Rat(1), Rat(1, 2), Rat(1, 3)), lam, mu, 1, 1) == K(Rat(1, 4)));
        CHECK(pieri_coeff(chahn(K(1), K(Rat(1, 2)), K(Rat(1, 3))), lam, mu, 1, 1) ==
              -GaussRational::i());
        CHECK(pieri_coeff(askey_wilson(Rat(2), Rat(1, 16), Rat(1, 2), Rat(1, 2), Rat(1, 3),
                                       Rat(1, 5)),
                          lam, mu, 1, 1) == K(1));
    }
}

TEST_CASE("coefficients vanish outside the proximity set") {
    auto p = laguerre(Rat(1), Rat(3), Rat(2));
    CHECK(pieri_coeff(p, Partition{2}, Partition{}, 2, 2) == K(0));
    CHECK(pieri_coeff(p, Partition{2, 2}, Partition{1, 1}, 2, 1) == K(0));
    CHECK(pieri_coeff(p, Partition{1}, Partition{1}, 1, 0) == K(1));
    CHECK(pieri_coeff(p, Partition{1}, Partition{}, 1, 0) == K(0));
}

TEST_CASE("hermite coefficients without closed form are routed away") {
    CHECK_THROWS_AS(pieri_coeff(hermite(Rat(1), Rat(1)), Partition{1}, Partition{1}, 2, 1),
                    HermiteGeneralCase);
}

TEST_CASE("generators") {
    auto h2 = generator_Er(hermite(Rat(1), Rat(1)), 1, 2);
    CHECK(h2 == SymPoly<K>::monomial(2, Partition{1}, K(1)));

    auto j1 = generator_Er(jacobi(Rat(1), Rat(1, 2), Rat(1, 3)), 1, 1);
    CHECK(j1.coeff(Partition{1}) == K(Rat(1, 4)));
    CHECK(j1.coeff(Partition{}) == K(Rat(-1, 2)));

    auto l22 = generator_Er(laguerre(Rat(1), Rat(3), Rat(2)), 2, 2);
    CHECK(l22 == SymPoly<K>::monomial(2, Partition{1, 1}, K(1)));

    // degree-r top coefficient of the q-level generator is 1
    auto aw = askey_wilson(Rat(2), Rat(1, 16), Rat(1, 2), Rat(1, 2), Rat(1, 3), Rat(1, 5));
    for (int r = 1; r <= 2; ++r) {
        auto er = generator_Er(aw, r, 2);
        CHECK(er.coeff(Partition(std::vector<int>(static_cast<size_t>(r), 1))) == K(1));
    }
}

TEST_CASE("one-variable expansion bases") {
    auto aw = askey_wilson(Rat(2), Rat(1, 16), Rat(1, 2), Rat(1, 2), Rat(1, 3), Rat(1, 5));
    CHECK(onevar_basis(aw, 0) == OneVarPoly<K>::constant(K(1)));
    const auto& awp = std::get<AWParams<K>>(aw);
    auto b1 = onevar_basis(aw, 1);
    CHECK(b1.coeff(1) == K(1));
    CHECK(b1.coeff(0) == -(awp.tl[0] + K(1) / awp.tl[0]));

    Rat g0(1, 2);
    auto w1 = onevar_basis(wilson(Rat(1), g0, Rat(1, 3), Rat(1, 5), Rat(1, 7)), 1);
    CHECK(w1.coeff(0) == K(g0 * g0));
    CHECK(w1.coeff(1) == K(1));

    auto jac = onevar_basis(jacobi(Rat(1), Rat(1, 2), Rat(1, 3)), 1);
    CHECK(jac.coeff(0) == K(Rat(1, 2)));
    CHECK(jac.coeff(1) == K(Rat(-1, 4)));

    // documented leading coefficients
    for (int k = 0; k <= 3; ++k) {
        CHECK(onevar_basis(aw, k).coeff(k) == K(1));
        CHECK(onevar_basis(chahn(K(1), K(Rat(1, 2)), K(Rat(1, 3))), k).coeff(k) ==
              GaussRational::i().pow(k));
        CHECK(onevar_basis(jacobi(Rat(1), Rat(1, 2), Rat(1, 3)), k).coeff(k) ==
              K(Rat(-1, 4)).pow(k));
        CHECK(onevar_basis(hermite(Rat(1), Rat(1)), k).coeff(k) == K(1));
        CHECK(onevar_basis(laguerre(Rat(1), Rat(3), Rat(2)), k).coeff(k) == K(1));
        CHECK(onevar_basis(aw, k).degree() == k);
    }
}
