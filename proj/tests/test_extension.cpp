#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "scaffold/extension.hpp"

using namespace scaffold;

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate_params(PrimePower(2, 1), 3, {0, -1}));
    CHECK_NOTHROW(validate_params(PrimePower(3, 2), 2, {0, -1, -1}));

    CHECK_THROWS_AS(validate_params(PrimePower(2, 1), 4, {0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_params(PrimePower(2, 1), 0, {0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_params(PrimePower(2, 1), -3, {0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_params(PrimePower(2, 1), 3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_params(PrimePower(2, 1), 3, {-1, -2}), std::invalid_argument);
    CHECK_THROWS_AS(validate_params(PrimePower(2, 1), 3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_params(PrimePower(3, 2), 2, {0, -2, -1}), std::invalid_argument);
}

TEST_CASE("ramification break sequences") {
    SUBCASE("p=2 n=1 b=3 omega=[0,-1]") {
        const auto ram = ramification_breaks(validate_params(PrimePower(2, 1), 3, {0, -1}));
        CHECK(ram.breaks == std::vector<int64_t>{3, 7});
        CHECK(ram.distinct_breaks == std::vector<int64_t>{3, 7});
        CHECK(ram.b_max == 7);
    }
    SUBCASE("collapsed sequence when all omegas equal") {
        const auto ram = ramification_breaks(validate_params(PrimePower(2, 1), 3, {0, 0}));
        CHECK(ram.breaks == std::vector<int64_t>{3, 3});
        CHECK(ram.distinct_breaks == std::vector<int64_t>{3});
        CHECK(ram.b_max == 3);
    }
    SUBCASE("p=3 n=2 b=2 omega=[0,-1,-3]") {
        const auto ram = ramification_breaks(validate_params(PrimePower(3, 2), 2, {0, -1, -3}));
        CHECK(ram.breaks == std::vector<int64_t>{2, 29, 191});
        CHECK(ram.b_max == 191);
        CHECK(residue(29, 27) == 2);
        CHECK(residue(191, 27) == 2);
    }
}

TEST_CASE("every break is congruent to r(b) mod q") {
    std::mt19937_64 rng(7001);
    for (const PrimePower pp :
         {PrimePower(2, 3), PrimePower(3, 5), PrimePower(5, 2), PrimePower(7, 1)}) {
        REQUIRE(pp.q() <= 729);
        for (int trial = 0; trial < 50; ++trial) {
            int64_t b = int64_t(rng() % (3 * uint64_t(pp.q()))) + 1;
            while (b % pp.p() == 0) ++b;
            std::vector<int64_t> omega{0};
            for (uint32_t i = 1; i <= pp.n(); ++i)
                omega.push_back(omega.back() - int64_t(rng() % 4));
            const auto ram = ramification_breaks(validate_params(pp, b, omega));
            for (int64_t br : ram.breaks) CHECK(residue(br, pp.q()) == residue(b, pp.q()));
            CHECK(ram.b_max == ram.breaks.back());
            for (size_t i = 1; i < ram.breaks.size(); ++i)
                CHECK(ram.breaks[i] >= ram.breaks[i - 1]);
        }
    }
}

TEST_CASE("error-term thresholds") {
    const auto params = validate_params(PrimePower(2, 1), 3, {0, -1});
    CHECK(epsilon_threshold(params, 1) == Rational(-7, 2));
    CHECK(epsilon_threshold(params, 0) == Rational(-3, 2));
    // strict inequality: v = -3 admissible against -7/2, v = -4 not
    CHECK(Rational(-3) > epsilon_threshold(params, 1));
    CHECK_FALSE(Rational(-4) > epsilon_threshold(params, 1));

    // degenerate degree-p case: threshold is exactly -b
    for (uint32_t p : {2u, 5u, 11u}) {
        const auto deg1 = validate_params(PrimePower(p, 0), 3, {0});
        CHECK(epsilon_threshold(deg1, 0) == Rational(-3));
    }

    CHECK_THROWS_AS(epsilon_threshold(params, 2), std::out_of_range);
}

TEST_CASE("d values") {
    CHECK(d_value(0, 3, 4) == 0);
    CHECK(d_value(1, 3, 4) == 1);
    CHECK(d_value(2, 3, 4) == 2);
    CHECK(d_value(3, 3, 4) == 3);

    CHECK(d_value(0, 7, 4) == 1);
    CHECK(d_value(1, 7, 4) == 3);
    CHECK(d_value(2, 7, 4) == 5);
    CHECK(d_value(3, 7, 4) == 7);

    for (int64_t b_max : {1, 3, 5, 11}) CHECK(d_value(15, b_max, 16) == b_max);

    CHECK_THROWS_AS(d_value(4, 3, 4), std::out_of_range);
    CHECK_THROWS_AS(d_value(-1, 3, 4), std::out_of_range);
    CHECK_THROWS_AS(d_value(0, 0, 4), std::out_of_range);
}

TEST_CASE("rho valuations sweep a complete residue system") {
    CHECK(rho_valuation(0, 3, 4) == 3);
    CHECK(rho_valuation(1, 3, 4) == 2);
    CHECK(rho_valuation(2, 3, 4) == 1);
    CHECK(rho_valuation(3, 3, 4) == 0);

    for (const PrimePower pp : {PrimePower(2, 3), PrimePower(3, 2), PrimePower(5, 1)}) {
        for (int64_t b_max = 1; b_max < 3 * pp.q(); ++b_max) {
            if (b_max % pp.p() == 0) continue;
            std::set<int64_t> seen;
            for (int64_t a = 0; a < pp.q(); ++a) seen.insert(rho_valuation(a, b_max, pp.q()));
            CHECK(int64_t(seen.size()) == pp.q());
        }
    }
}

TEST_CASE("psi monomial products") {
    const PrimePower pp(2, 1);
    CHECK(psi_mult(1, 2, pp) == 3);
    CHECK_FALSE(psi_mult(1, 1, pp).has_value());  // Psi_0^2 = 0
    for (int64_t j = 0; j < 4; ++j) CHECK(psi_mult(0, j, pp) == j);

    CHECK_THROWS_AS(psi_mult(4, 0, pp), std::out_of_range);
}

TEST_CASE("psi products are commutative, associative, zero-absorbing") {
    for (const PrimePower pp : {PrimePower(2, 5), PrimePower(3, 2), PrimePower(5, 1),
                                PrimePower(7, 0), PrimePower(61, 0)}) {
        const int64_t q = pp.q();
        for (int64_t a = 0; a < q; ++a)
            for (int64_t b = 0; b < q; ++b) {
                CHECK(psi_mult(a, b, pp) == psi_mult(b, a, pp));
                for (int64_t c = 0; c < q; ++c) {
                    const auto ab = psi_mult(a, b, pp);
                    const auto bc = psi_mult(b, c, pp);
                    const auto left = ab ? psi_mult(*ab, c, pp) : std::optional<int64_t>{};
                    const auto right = bc ? psi_mult(a, *bc, pp) : std::optional<int64_t>{};
                    CHECK(left == right);
                }
            }
    }
}

TEST_CASE("action on the rho basis") {
    const PrimePower pp(2, 1);
    CHECK(psi_action_on_rho(1, 0, 3, pp) == RhoAction{false, 1, 1});
    CHECK(psi_action_on_rho(1, 1, 3, pp) == RhoAction::annihilated());
    for (int64_t a = 0; a < 4; ++a)
        CHECK(psi_action_on_rho(0, a, 3, pp) == RhoAction{false, 0, a});
}

TEST_CASE("acting twice matches acting by the product") {
    std::mt19937_64 rng(7002);
    for (const PrimePower pp : {PrimePower(2, 2), PrimePower(3, 1), PrimePower(5, 1)}) {
        const int64_t q = pp.q();
        for (int trial = 0; trial < 6; ++trial) {
            int64_t b_max = int64_t(rng() % (4 * uint64_t(q))) + 1;
            while (b_max % pp.p() == 0) ++b_max;
            for (int64_t i = 0; i < q; ++i)
                for (int64_t j = 0; j < q; ++j)
                    for (int64_t a = 0; a < q; ++a) {
                        const RhoAction first = psi_action_on_rho(i, a, b_max, pp);
                        const RhoAction then =
                            first.zero ? RhoAction::annihilated()
                                       : psi_action_on_rho(j, first.target_index, b_max, pp);
                        const auto prod = psi_mult(i, j, pp);
                        const RhoAction once = prod ? psi_action_on_rho(*prod, a, b_max, pp)
                                                    : RhoAction::annihilated();
                        if (then.zero || first.zero) {
                            CHECK(once.zero);
                        } else {
                            REQUIRE_FALSE(once.zero);
                            CHECK(once.target_index == then.target_index);
                            CHECK(once.t_exponent == first.t_exponent + then.t_exponent);
                        }
                    }
        }
    }
}
