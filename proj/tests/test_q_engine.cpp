#include <doctest.h>

#include <functional>
#include <random>

#include "schurq/q_engine.hpp"

using namespace schurq;

namespace {

QEngine& engine() {
    static QEngine e;
    return e;
}

OddPoly t(int k) { return OddPoly::variable(k); }
OddPoly tpow(int k, int e, Rational c = 1) { return OddPoly::term(Monomial::power(k, e), c); }

// Independent series oracle for q_k: expand exp(2 t_1 z + 2 t_3 z^3 + 2 t_5 z^5)
// term by term with explicit multinomial factorials, up to z^5.
OddPoly oracle_q(int k) {
    OddPoly out;
    for (int a = 0; a <= k; ++a) {          // exponent of (2 t_1 z)
        for (int b = 0; 3 * b <= k; ++b) {  // exponent of (2 t_3 z^3)
            for (int c = 0; 5 * c <= k; ++c) {
                if (a + 3 * b + 5 * c != k) continue;
                Rational coeff = rational_pow(2, a + b + c);
                coeff /= Rational(factorial(a)) * Rational(factorial(b)) * Rational(factorial(c));
                Monomial mono;
                if (a > 0) mono = mono * Monomial::power(1, a);
                if (b > 0) mono = mono * Monomial::power(3, b);
                if (c > 0) mono = mono * Monomial::power(5, c);
                out.add_term(mono, coeff);
            }
        }
    }
    return out;
}

OddPoly random_poly(std::mt19937& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(1, max_terms), var(0, 2), expn(1, 2);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    OddPoly p;
    for (int i = 0, n = nterms(rng); i < n; ++i) {
        Monomial m;
        for (int v = 0, nv = 1 + var(rng); v < nv; ++v) {
            m = m * Monomial::power(2 * var(rng) + 1, expn(rng));
        }
        p.add_term(m, rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("gen_q matches the series oracle through degree 5") {
    auto qs = engine().gen_q(5);
    REQUIRE(qs.size() == 6);
    for (int k = 0; k <= 5; ++k) CHECK(qs[static_cast<std::size_t>(k)] == oracle_q(k));
    // frozen small cases
    CHECK(qs[0] == OddPoly::constant(1));
    CHECK(qs[1] == t(1).scaled(2));
    CHECK(qs[3] == t(3).scaled(2) + tpow(1, 3, rational(4, 3)));
}

TEST_CASE("q_k is homogeneous of degree k and nonzero for even k") {
    auto qs = engine().gen_q(10);
    for (int k = 0; k <= 10; ++k) {
        CHECK(qs[static_cast<std::size_t>(k)].is_homogeneous(k));
        CHECK(!qs[static_cast<std::size_t>(k)].is_zero());
    }
}

TEST_CASE("m_entry base cases") {
    CHECK(engine().m_entry(0, 0).is_zero());
    CHECK(engine().m_entry(1, 0) == t(1).scaled(2));
    OddPoly m21 = engine().m_entry(2, 1);
    CHECK(m21 == tpow(1, 3, rational(4, 3)) + t(3).scaled(-4));
}

TEST_CASE("m_entry is skew") {
    for (int r = 0; r <= 5; ++r) {
        for (int s = 0; s <= 5; ++s) {
            CHECK(engine().m_entry(r, s) == -engine().m_entry(s, r));
        }
    }
}

TEST_CASE("pfaffian conventions") {
    CHECK(pfaffian(SkewMatrix(0)) == OddPoly::constant(1));

    SkewMatrix two(2);
    two.set_upper(0, 1, t(3));
    CHECK(pfaffian(two) == t(3));

    // generic 4x4 with distinct variables as entries
    SkewMatrix four(4);
    int vars[4][4] = {};
    int next = 1;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            vars[i][j] = next;
            four.set_upper(i, j, t(next));
            next += 2;
        }
    }
    OddPoly expect = t(vars[0][1]) * t(vars[2][3]) - t(vars[0][2]) * t(vars[1][3]) +
                     t(vars[0][3]) * t(vars[1][2]);
    CHECK(pfaffian(four) == expect);

    CHECK_THROWS_AS(pfaffian(SkewMatrix(3)), OddDimension);
}

TEST_CASE("pfaffian equals the perfect-matching sum on random matrices") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    for (int dim : {4, 6}) {
        for (int trial = 0; trial < 5; ++trial) {
            SkewMatrix m(dim);
            std::vector<std::vector<Rational>> a(static_cast<std::size_t>(dim),
                                                 std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
            for (int i = 0; i < dim; ++i) {
                for (int j = i + 1; j < dim; ++j) {
                    Rational v = rational(num(rng), den(rng));
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
                    m.set_upper(i, j, OddPoly::constant(v));
                }
            }
            // matching-sum oracle: sum over perfect matchings with the sign
            // computed independently as the inversion parity of the flat
            // pairing sequence
            Rational expected = 0;
            std::vector<int> idx(static_cast<std::size_t>(dim));
            for (int i = 0; i < dim; ++i) idx[static_cast<std::size_t>(i)] = i;
            std::function<void(std::vector<int>, std::vector<int>)> enumer =
                [&](std::vector<int> rest, std::vector<int> seq) {
                    if (rest.empty()) {
                        int inv = 0;
                        for (std::size_t x = 0; x < seq.size(); ++x) {
                            for (std::size_t y = x + 1; y < seq.size(); ++y) {
                                if (seq[x] > seq[y]) ++inv;
                            }
                        }
                        Rational prod = (inv % 2 == 0) ? 1 : -1;
                        for (std::size_t p = 0; p < seq.size(); p += 2) {
                            prod *= a[static_cast<std::size_t>(seq[p])][static_cast<std::size_t>(seq[p + 1])];
                        }
                        expected += prod;
                        return;
                    }
                    for (std::size_t partner = 1; partner < rest.size(); ++partner) {
                        std::vector<int> next;
                        for (std::size_t o = 1; o < rest.size(); ++o) {
                            if (o != partner) next.push_back(rest[o]);
                        }
                        std::vector<int> seq2 = seq;
                        seq2.push_back(rest[0]);
                        seq2.push_back(rest[partner]);
                        enumer(next, seq2);
                    }
                };
            enumer(idx, {});
            OddPoly pf = pfaffian(m);
            CHECK(pf.constant_term() == expected);
            CHECK(pf.is_homogeneous(0));
        }
    }
}

TEST_CASE("q_poly base cases") {
    CHECK(engine().q_poly(IntVector{}) == OddPoly::constant(1));
    CHECK(engine().q_poly({1}) == t(1).scaled(2));
    OddPoly q21 = engine().q_poly({2, 1});
    CHECK(q21 == tpow(1, 3, rational(4, 3)) + t(3).scaled(-4));
    CHECK(engine().q_poly({1, 2}) == -q21);
    CHECK(engine().q_poly({2, 2}).is_zero());
}

TEST_CASE("q_poly is homogeneous of the partition weight") {
    for (auto& sp : enumerate_strict(10)) {
        CHECK(engine().q_poly(sp).is_homogeneous(sp.weight()));
        CHECK(!engine().q_poly(sp).is_zero());
    }
}

TEST_CASE("inner product on monomials and the Q-basis") {
    CHECK(inner_product(t(1), t(1)) == rational(1, 2));
    OddPoly q21 = engine().q_poly({2, 1});
    CHECK(inner_product(q21, q21) == 4);
    CHECK(inner_product(engine().q_poly({3}), q21) == 0);
}

TEST_CASE("inner product adjointness of t_r and (1/2r) d/dt_r") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        OddPoly p = random_poly(rng), q = random_poly(rng);
        for (int r : {1, 3, 5}) {
            CHECK(inner_product(p.partial(r).scaled(rational(1, 2 * r)), q) ==
                  inner_product(p, q.mul_by_t(r)));
        }
    }
}

TEST_CASE("expand_in_q_basis on frozen oracle values") {
    QExpansion e1 = engine().expand_in_q_basis(t(1).scaled(2));
    CHECK(e1.size() == 1);
    CHECK(e1.coefficient(StrictPartition({1})) == 1);

    // oracle: solve a*Q_(3) + b*Q_(2,1) = t_1^3 (2x2 exact system), verified
    // by reconstruction below: a = 1/2, b = 1/4.
    QExpansion e2 = engine().expand_in_q_basis(tpow(1, 3));
    CHECK(e2.size() == 2);
    CHECK(e2.coefficient(StrictPartition({3})) == rational(1, 2));
    CHECK(e2.coefficient(StrictPartition({2, 1})) == rational(1, 4));
    CHECK(engine().to_poly(e2) == tpow(1, 3));

    CHECK(engine().expand_in_q_basis(OddPoly{}).empty());
}

TEST_CASE("expansion round-trips and matches the inner-product route") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        OddPoly p = random_poly(rng);
        QExpansion e = engine().expand_in_q_basis(p);
        CHECK(engine().to_poly(e) == p);
        CHECK(e == engine().expand_in_q_basis_inner(p));
    }
}

TEST_CASE("half derivative in the basis") {
    QExpansion d = half_derivative_basis({3}, 3);
    CHECK(d.size() == 1);
    CHECK(d.coefficient(StrictPartition{}) == 1);

    CHECK(half_derivative_basis({1}, 3).empty());

    QExpansion d2 = half_derivative_basis({2, 1}, 1);
    CHECK(d2.size() == 1);
    CHECK(d2.coefficient(StrictPartition({2})) == 1);
}

TEST_CASE("multiplication by t_r in the basis") {
    QExpansion m1 = multiply_tr_basis({2}, 1);
    CHECK(m1.coefficient(StrictPartition({3})) == 1);
    CHECK(m1.coefficient(StrictPartition({2, 1})) == rational(1, 2));
    CHECK(m1.size() == 2);

    // direct-expansion oracle: 3 t_3 = (1/2) Q_(3) - (1/2) Q_(2,1)
    QExpansion m3 = multiply_tr_basis({}, 3);
    CHECK(m3.coefficient(StrictPartition({3})) == rational(1, 2));
    CHECK(m3.coefficient(StrictPartition({2, 1})) == rational(-1, 2));
    CHECK(engine().to_poly(m3) == t(3).scaled(3));

    QExpansion m11 = multiply_tr_basis({1}, 1);
    CHECK(m11.size() == 1);
    CHECK(m11.coefficient(StrictPartition({2})) == 1);
}

TEST_CASE("basis derivative and multiplication agree with the polynomial route") {
    // general index vectors, not just strict: all tuples with parts <= 3, len <= 3
    std::vector<IntVector> tuples{{}};
    for (int a = 0; a <= 3; ++a) {
        tuples.push_back({a});
        for (int b = 0; b <= 3; ++b) {
            tuples.push_back({a, b});
            for (int c = 0; c <= 3; ++c) tuples.push_back({a, b, c});
        }
    }
    for (auto& v : tuples) {
        OddPoly qv = engine().q_poly(v);
        for (int r : {1, 3}) {
            CHECK(engine().to_poly(half_derivative_basis(v, r)) == qv.partial(r).scaled(rational(1, 2)));
            CHECK(engine().to_poly(multiply_tr_basis(v, r)) == qv.mul_by_t(r).scaled(r));
        }
    }
}

TEST_CASE("L-prime actions") {
    QExpansion l1 = l_prime_action(1, StrictPartition({3}));
    CHECK(l1.size() == 1);
    CHECK(l1.coefficient(StrictPartition({1})) == 2);

    CHECK(l_prime_action(1, StrictPartition({1})).empty());
    CHECK(l_prime_action(2, StrictPartition({2, 1})).empty());
}

TEST_CASE("L-prime actions match the differential operators") {
    auto l1_op = [&](const OddPoly& p) {
        OddPoly out = p.partial(1).partial(1).scaled(rational(1, 4));
        for (int k = 1; k <= 15; k += 2) out += p.partial(k + 2).mul_by_t(k).scaled(k);
        return out;
    };
    auto l2_op = [&](const OddPoly& p) {
        OddPoly out = p.partial(1).partial(3).scaled(rational(1, 2));
        for (int k = 1; k <= 15; k += 2) out += p.partial(k + 4).mul_by_t(k).scaled(k);
        return out;
    };
    for (auto& sp : enumerate_strict(10)) {
        OddPoly q = engine().q_poly(sp);
        CHECK(engine().to_poly(l_prime_action(1, sp)) == l1_op(q));
        CHECK(engine().to_poly(l_prime_action(2, sp)) == l2_op(q));
    }
}

TEST_CASE("adjoint Virasoro action, basis route vs frozen cases") {
    auto empty = adjoint_virasoro_basis(-1, StrictPartition{});
    CHECK(empty.order0.empty());
    CHECK(empty.order_m1.size() == 1);
    CHECK(empty.order_m1.coefficient(StrictPartition({1})) == rational(-1, 2));

    auto three = adjoint_virasoro_basis(-1, StrictPartition({3}));
    CHECK(three.order0.coefficient(StrictPartition({1})) == rational(3, 4));

    auto l2e = adjoint_virasoro_basis(2, StrictPartition{});
    CHECK(l2e.order0.coefficient(StrictPartition({4})) == 1);
    CHECK(l2e.order0.coefficient(StrictPartition({3, 1})) == rational(-1, 2));
    CHECK(l2e.order0.size() == 2);
}

TEST_CASE("adjoint Virasoro action matches the operator route") {
    // (L_-1)^perp = (1/2) L_1' - (1/16) d^2/dt_1^2 - t_1/hbar
    // (L_2)^perp  = (1/2) (L_2')^perp + 3 t_1 t_3 - 7 t_7/hbar,
    // (L_2')^perp = sum (k+4) t_{k+4} d/dt_k + 6 t_1 t_3.
    auto check_sp = [&](const StrictPartition& sp) {
        OddPoly q = engine().q_poly(sp);

        OddPoly l1p = q.partial(1).partial(1).scaled(rational(1, 4));
        for (int k = 1; k <= 21; k += 2) l1p += q.partial(k + 2).mul_by_t(k).scaled(k);
        OddPoly order0_m1 = l1p.scaled(rational(1, 2)) -
                            q.partial(1).partial(1).scaled(rational(1, 16));
        OddPoly order_m1_m1 = -q.mul_by_t(1);
        auto act1 = adjoint_virasoro_basis(-1, sp);
        CHECK(engine().to_poly(act1.order0) == order0_m1);
        CHECK(engine().to_poly(act1.order_m1) == order_m1_m1);

        OddPoly l2perp = q.mul_by_t(1).mul_by_t(3).scaled(6);
        for (int k = 1; k <= 21; k += 2) l2perp += q.partial(k).mul_by_t(k + 4).scaled(k + 4);
        OddPoly order0_2 = l2perp.scaled(rational(1, 2)) + q.mul_by_t(1).mul_by_t(3).scaled(3);
        OddPoly order_m1_2 = q.mul_by_t(7).scaled(-7);
        auto act2 = adjoint_virasoro_basis(2, sp);
        CHECK(engine().to_poly(act2.order0) == order0_2);
        CHECK(engine().to_poly(act2.order_m1) == order_m1_2);
    };
    for (auto& sp : enumerate_strict(8)) check_sp(sp);
}

TEST_CASE("orthogonality sweep at unit-test scale") {
    auto sps = enumerate_strict(7);
    for (auto& a : sps) {
        OddPoly qa = engine().q_poly(a);
        for (auto& b : sps) {
            Rational expect = (a == b) ? rational_pow(2, a.length()) : Rational(0);
            CHECK(inner_product(qa, engine().q_poly(b)) == expect);
        }
    }
}
