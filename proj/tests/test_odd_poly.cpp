#include <doctest.h>

#include <random>

#include "schurq/hbar_series.hpp"
#include "schurq/odd_poly.hpp"

using namespace schurq;

namespace {

OddPoly t(int k) { return OddPoly::variable(k); }

OddPoly random_poly(std::mt19937& rng, int max_terms = 5, int max_var = 5, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> var(0, max_var / 2);
    std::uniform_int_distribution<int> expn(1, max_exp);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    OddPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m;
        int nvars = 1 + var(rng) % 3;
        for (int v = 0; v < nvars; ++v) m = m * Monomial::power(2 * var(rng) + 1, expn(rng));
        p.add_term(m, rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("addition cancels exactly") {
    CHECK((t(1).scaled(2) + t(1).scaled(-2)).is_zero());
}

TEST_CASE("truncated multiplication drops high degrees") {
    CHECK(t(1).mul(t(1), 1).is_zero());
    OddPoly q = t(1).scaled(2).mul(t(1).mul(t(1)).scaled(2));
    OddPoly expect = OddPoly::term(Monomial::power(1, 3), 4);
    CHECK(q == expect);
}

TEST_CASE("variables must be odd") {
    CHECK_THROWS_AS(OddPoly::variable(2), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::power(4, 1), std::invalid_argument);
}

TEST_CASE("partial derivative") {
    OddPoly p = t(3).scaled(2) + OddPoly::term(Monomial::power(1, 3), rational(4, 3));
    CHECK(p.partial(3) == OddPoly::constant(2));
    CHECK(t(5).partial(3).is_zero());
    CHECK(OddPoly::constant(1).mul_by_t(7) == t(7));
}

TEST_CASE("exp of zero is one") {
    CHECK(exp_truncated(OddPoly{}, 10) == OddPoly::constant(1));
}

TEST_CASE("exp_truncated matches the factorial oracle") {
    // oracle: sum_k (2 t_1)^k / k! up to degree 2
    OddPoly e1 = exp_truncated(t(1).scaled(2), 2);
    OddPoly expect1 = OddPoly::constant(1) + t(1).scaled(2) + OddPoly::term(Monomial::power(1, 2), 2);
    CHECK(e1 == expect1);

    OddPoly e3 = exp_truncated(t(3).scaled(2), 6);
    OddPoly expect3 = OddPoly::constant(1) + t(3).scaled(2) + OddPoly::term(Monomial::power(3, 2), 2);
    CHECK(e3 == expect3);
}

TEST_CASE("exp_truncated rejects constant terms") {
    CHECK_THROWS_AS(exp_truncated(OddPoly::constant(1), 4), NonzeroConstantTerm);
}

TEST_CASE("evaluate") {
    CHECK(t(1).scaled(2).evaluate({{1, 1}}) == 2);
    OddPoly p = t(3).scaled(2) + OddPoly::term(Monomial::power(1, 3), rational(4, 3));
    CHECK(p.evaluate({{3, rational(1, 3)}}) == rational(2, 3));
    CHECK(t(5).evaluate({{1, 1}}) == 0);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        OddPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
    }
}

TEST_CASE("Leibniz commutator of t_k and its half-derivative") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        OddPoly p = random_poly(rng);
        for (int k : {1, 3, 5}) {
            CHECK(p.mul_by_t(k).partial(k) - p.partial(k).mul_by_t(k) == p);
        }
    }
}

TEST_CASE("exp is additive over disjoint variables") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<long> c(-3, 3);
        OddPoly p = t(1).scaled(c(rng)) + OddPoly::term(Monomial::power(1, 2), c(rng));
        OddPoly q = t(3).scaled(c(rng)) + t(5).scaled(c(rng));
        int d = 8;
        CHECK(exp_truncated(p + q, d) == exp_truncated(p, d).mul(exp_truncated(q, d), d));
    }
}

TEST_CASE("evaluate is a ring homomorphism on full products") {
    std::mt19937 rng(19);
    std::map<int, Rational> at{{1, rational(1, 2)}, {3, rational(-2, 3)}, {5, 1}};
    for (int trial = 0; trial < 40; ++trial) {
        OddPoly p = random_poly(rng), q = random_poly(rng);
        CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
        CHECK((p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at));
    }
}

TEST_CASE("degree bookkeeping") {
    CHECK(!OddPoly{}.degree().has_value());
    CHECK(*(t(3) * t(5)).degree() == 8);
    CHECK((t(3) * t(5)).is_homogeneous(8));
    CHECK(!(t(3) + t(1)).is_homogeneous(3));
}

TEST_CASE("hbar series shift plumbing") {
    HbarSeries s(10);
    s.set_slice(0, OddPoly::constant(1) + t(1));

    auto same = apply_shifted(s, 0, [](const OddPoly& p) { return p; });
    CHECK(same == s);

    auto shifted = apply_shifted(s, -1, [](const OddPoly& p) { return p; });
    CHECK(shifted.slice(-1) == s.slice(0));
    CHECK(shifted.slice(0).is_zero());

    auto killed = apply_shifted(HbarSeries::one(10), -1,
                                [](const OddPoly& p) { return p.partial(1); });
    CHECK(killed.is_zero());
}

TEST_CASE("hbar series log against direct expansion") {
    // x = h*t1: log(1+x) = x - x^2/2 + x^3/3 - ...
    HbarSeries x(20);
    x.set_slice(1, t(1));
    auto lg = log_one_plus(x, 3);
    CHECK(lg.slice(1) == t(1));
    CHECK(lg.slice(2) == OddPoly::term(Monomial::power(1, 2), rational(-1, 2)));
    CHECK(lg.slice(3) == OddPoly::term(Monomial::power(1, 3), rational(1, 3)));
}

TEST_CASE("truncation bound applies to stored slices") {
    HbarSeries s(2);
    s.set_slice(0, t(1) + t(3) + t(5));
    CHECK(s.slice(0) == t(1));
}
