#include <doctest.h>

#include <random>

#include "schurq/special_eval.hpp"
#include "schurq/tau.hpp"
#include "schurq/virasoro.hpp"

using namespace schurq;

namespace {

QEngine& engine() {
    static QEngine e;
    return e;
}

OddPoly t(int k) { return OddPoly::variable(k); }

HbarSeries random_series(std::mt19937& rng, int trunc = 40) {
    std::uniform_int_distribution<int> order(0, 2), var(0, 3), expn(1, 2), nterms(1, 4);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    HbarSeries s(trunc);
    for (int slice = 0; slice <= 2; ++slice) {
        OddPoly p;
        for (int i = 0, n = nterms(rng); i < n; ++i) {
            Monomial m;
            for (int v = 0, nv = 1 + var(rng) % 2; v < nv; ++v) {
                m = m * Monomial::power(2 * var(rng) + 1, expn(rng));
            }
            p.add_term(m, rational(num(rng), den(rng)));
        }
        s.add_to_slice(order(rng), p);
    }
    return s;
}

}  // namespace

TEST_CASE("apply_L base cases") {
    HbarSeries one = HbarSeries::one(20);

    auto l0 = apply_L(0, one);
    CHECK(l0.slice(0) == OddPoly::constant(rational(1, 16)));
    CHECK(l0.slice(-1).is_zero());

    auto lm1 = apply_L(-1, one);
    CHECK(lm1.slice(0) == OddPoly::term(Monomial::power(1, 2), rational(1, 4)));

    HbarSeries t7(20);
    t7.set_slice(0, t(7));
    auto l2 = apply_L(2, t7);
    CHECK(l2.slice(0) == t(3).scaled(rational(3, 2)));
    CHECK(l2.slice(-1) == OddPoly::constant(rational(-1, 2)));

    CHECK_THROWS_AS(apply_L(-2, one), IndexBelowMinusOne);
}

TEST_CASE("bracket identity on fixed small series") {
    HbarSeries s(40);
    s.set_slice(0, t(3) * t(5));
    CHECK(bracket_residual(0, 1, s).is_zero());
    CHECK(bracket_residual(1, 1, s).is_zero());
}

TEST_CASE("bracket identity on random series for all index pairs") {
    std::mt19937 rng(37);
    HbarSeries s = random_series(rng);
    for (int k = -1; k <= 2; ++k) {
        for (int m = -1; m <= 2; ++m) {
            if (k + m < -1) continue;
            CAPTURE(k);
            CAPTURE(m);
            CHECK(bracket_residual(k, m, s).is_zero());
        }
    }
    CHECK_THROWS_AS(bracket_residual(-1, -1, s), IndexBelowMinusOne);
}

TEST_CASE("phi functional vanishes on strict partitions") {
    CHECK(phi_functional({}) == 0);
    CHECK(phi_functional({1}) == 0);
    CHECK(phi_functional({3, 2, 1}) == 0);
    for (auto& sp : enumerate_strict(10)) CHECK(phi_functional(sp.parts()) == 0);
}

TEST_CASE("psi functional vanishes on strict partitions") {
    CHECK(psi_functional({}) == 0);
    CHECK(psi_functional({1}) == 0);
    CHECK(psi_functional({4, 2}) == 0);
    for (auto& sp : enumerate_strict(9)) CHECK(psi_functional(sp.parts()) == 0);
}

TEST_CASE("adjoint pairing: <L_m tau, Q_mu> = <tau, L_m^perp Q_mu>") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        HbarSeries tau = random_series(rng);
        for (int m : {-1, 2}) {
            for (auto& mu : enumerate_strict(8)) {
                auto act = adjoint_virasoro_basis(m, mu);
                // left: sum over all hbar orders of the pairing
                HbarSeries lt = apply_L(m, tau);
                std::map<int, Rational> left;
                for (auto& [a, slice] : lt.slices()) {
                    Rational v = inner_product(slice, engine().q_poly(mu));
                    if (v != 0) left[a] = v;
                }
                // right: <tau, order0> at same order, <tau, order_m1> shifted
                std::map<int, Rational> right;
                OddPoly p0 = engine().to_poly(act.order0);
                OddPoly p1 = engine().to_poly(act.order_m1);
                for (auto& [a, slice] : tau.slices()) {
                    Rational v0 = inner_product(slice, p0);
                    if (v0 != 0) right[a] += v0;
                    Rational v1 = inner_product(slice, p1);
                    if (v1 != 0) right[a - 1] += v1;
                }
                for (auto it = right.begin(); it != right.end();) {
                    it = (it->second == 0) ? right.erase(it) : std::next(it);
                }
                CHECK(left == right);
            }
        }
    }
}

TEST_CASE("KW-grading: L_m maps the hbar^a slice to degree 3a - 2m") {
    QEngine eng;
    auto tau = build_tau_mm(9, eng);
    REQUIRE(tau.series.kw_graded());
    for (int m = -1; m <= 3; ++m) {
        auto image = apply_L(m, tau.series);
        for (auto& [a, slice] : image.slices()) {
            CHECK(slice.is_homogeneous(3 * a - 2 * m));
        }
    }
}

TEST_CASE("constraint residual on the Q-basis tau") {
    QEngine eng;
    auto tau = build_tau_mm(9, eng);
    auto res = constraint_residual(-1, tau.series);
    CHECK(res.all_zero());
    CHECK(res.reliable_orders == std::vector<int>{-1, 0, 1, 2});
}

TEST_CASE("constraint residual detects a seeded fault") {
    QEngine eng;
    auto tau = build_tau_mm(9, eng);
    tau.series.add_to_slice(1, eng.q_poly({2, 1}));
    auto res = constraint_residual(-1, tau.series);
    CHECK(!res.all_zero());
}

TEST_CASE("pairing theorem at unit-test scale") {
    QEngine eng;
    auto tau9 = build_tau_mm(9, eng);
    auto c = pairing_theorem_check(-1, StrictPartition({2}), tau9.series, eng);
    CHECK(c.order_integral);
    CHECK(c.hbar_order == 0);
    CHECK(c.lhs == 0);
    CHECK(c.rhs == 0);

    auto e = pairing_theorem_check(-1, StrictPartition{}, tau9.series, eng);
    CHECK(e.lhs == 0);
    CHECK(e.rhs == 0);

    auto tau12 = build_tau_mm(12, eng);
    // |mu| = 1: the target order (1+4)/3 is fractional, both sides vanish
    auto c1 = pairing_theorem_check(2, StrictPartition({1}), tau12.series, eng);
    CHECK(!c1.order_integral);
    CHECK(c1.residual() == 0);
    // |mu| = 2: integral order (2+4)/3 = 2
    auto c2 = pairing_theorem_check(2, StrictPartition({2}), tau12.series, eng);
    CHECK(c2.order_integral);
    CHECK(c2.hbar_order == 2);
    CHECK(c2.residual() == 0);

    CHECK_THROWS_AS(pairing_theorem_check(2, StrictPartition({8}), tau9.series, eng),
                    TruncationInsufficient);
}
