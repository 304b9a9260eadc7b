#include "schurq/virasoro.hpp"

#include <set>

#include "schurq/special_eval.hpp"

namespace schurq {

OddPoly virasoro_degree_part(int m, const OddPoly& f) {
    if (m < -1) throw IndexBelowMinusOne("Virasoro index must be >= -1");
    OddPoly out;
    // (1/4) Σ_{a+b=2m, a,b odd >= 1} ∂_a ∂_b, ordered pairs.
    for (int a = 1; a <= 2 * m - 1; a += 2) {
        int b = 2 * m - a;
        out += f.partial(a).partial(b).scaled(rational(1, 4));
    }
    // (1/2) Σ_k k t_k ∂_{k+2m}; iterate the variables present in f.
    std::set<int> vars;
    for (auto& [mono, c] : f.terms()) {
        (void)c;
        for (auto& [k, e] : mono.exponents()) {
            (void)e;
            vars.insert(k);
        }
    }
    for (int v : vars) {
        int k = v - 2 * m;
        if (k < 1) continue;
        out += f.partial(v).mul_by_t(k).scaled(rational(k, 2));
    }
    if (m == -1) out += f.mul_by_t(1).mul_by_t(1).scaled(rational(1, 4));
    if (m == 0) out += f.scaled(rational(1, 16));
    return out;
}

HbarSeries apply_L(int m, const HbarSeries& s) {
    if (m < -1) throw IndexBelowMinusOne("Virasoro index must be >= -1");
    HbarSeries out(s.truncation_degree());
    for (auto& [a, f] : s.slices()) {
        out.add_to_slice(a, virasoro_degree_part(m, f));
        out.add_to_slice(a - 1, f.partial(2 * m + 3).scaled(rational(-1, 2)));
    }
    return out;
}

HbarSeries bracket_residual(int k, int m, const HbarSeries& s) {
    if (k < -1 || m < -1 || k + m < -1) throw IndexBelowMinusOne("bracket needs k, m, k+m >= -1");
    HbarSeries res = apply_L(k, apply_L(m, s)) - apply_L(m, apply_L(k, s));
    res = res - apply_L(k + m, s).scaled(k - m);
    return res;
}

Rational phi_functional(const IntVector& mu) {
    IntVector d(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] <= 0) throw HypothesisViolated("parts must be positive");
        d[i] = 2 * mu[i];
    }
    auto bump2 = [&](std::size_t i, int delta) {
        IntVector v = d;
        v[i] += delta;
        return v;
    };
    Rational res = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (i == j) continue;
            IntVector v = d;
            v[i] -= 2;
            v[j] -= 2;
            res += a_const(v) / ((2 * mu[i] - 1) * (2 * mu[j] - 1));
        }
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        res -= a_const(bump2(i, -4)) / (2 * mu[i] - 1);
        res += a_const(bump2(i, 2)) * rational(2 * mu[i] + 1, 4);
    }
    IntVector tail = d;
    tail.push_back(2);
    res += a_const(tail) / 8;
    return res;
}

Rational psi_functional(const IntVector& mu) {
    IntVector d(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] <= 0) throw HypothesisViolated("parts must be positive");
        d[i] = 2 * mu[i];
    }
    auto dfall = [](int x, int k) { return Rational(double_falling(x, k)); };
    auto bump2 = [&](std::size_t i, int delta) {
        IntVector v = d;
        v[i] += delta;
        return v;
    };
    auto append2 = [&](std::initializer_list<int> extra) {
        IntVector v = d;
        for (int x : extra) v.push_back(x);
        return v;
    };

    Rational res = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (i == j) continue;
            IntVector v = d;
            v[i] += 6;
            v[j] += 2;
            res += a_const(v) * (2 * mu[j] + 1) * dfall(2 * mu[i] + 5, 3);
        }
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        res += a_const(bump2(i, 8)) * dfall(2 * mu[i] + 7, 4) * rational(mu[i] + 4, 2);
        IntVector v62 = bump2(i, 6);
        v62.push_back(2);
        res += a_const(v62) * dfall(2 * mu[i] + 5, 3) / 2;
        IntVector v26 = bump2(i, 2);
        v26.push_back(6);
        res += a_const(v26) * (2 * mu[i] + 1) * rational(15, 2);
        IntVector v242 = bump2(i, 2);
        v242.push_back(4);
        v242.push_back(2);
        res -= a_const(v242) * (2 * mu[i] + 1) * rational(3, 2);
    }
    res += a_const(append2({8})) * 105;
    res -= a_const(append2({6, 2})) * rational(15, 2);

    Rational tail = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        tail += a_const(bump2(i, 14)) * dfall(2 * mu[i] + 13, 7);
    }
    for (int r = 0; r <= 3; ++r) {
        Rational c = Rational(odd_double_factorial(2 * r - 1)) *
                     Rational(odd_double_factorial(13 - 2 * r)) / 2;
        if (r % 2 != 0) c = -c;
        tail += a_const(append2({2 * (7 - r), 2 * r})) * c;
    }
    res -= tail / 16;
    return res;
}

ConstraintResidual constraint_residual(int m, const HbarSeries& tau) {
    ConstraintResidual out;
    out.m = m;
    if (tau.slices().empty()) return out;
    int a_min = tau.slices().begin()->first;
    int a_max = tau.slices().rbegin()->first;
    HbarSeries res = apply_L(m, tau);
    for (int a = a_min - 1; a <= a_max; ++a) {
        if (3 * (a + 1) > tau.truncation_degree()) continue;
        out.reliable_orders.push_back(a);
        const OddPoly& slice = res.slice(a);
        if (!slice.is_zero()) out.residual_slices.emplace(a, slice);
    }
    return out;
}

PairingCheck pairing_theorem_check(int m, const StrictPartition& mu, const HbarSeries& tau,
                                   QEngine& engine) {
    if (m != -1 && m != 2) throw std::invalid_argument("pairing check defined for m in {-1, 2}");
    PairingCheck check;
    int w = mu.weight();
    check.order_integral = ((w + 2 * m) % 3 == 0);
    if (check.order_integral) {
        check.hbar_order = (w + 2 * m) / 3;
        if (3 * (check.hbar_order + 1) > tau.truncation_degree()) {
            throw TruncationInsufficient("tau truncation too shallow for the pairing order");
        }
    }

    OddPoly qmu = engine.q_poly(mu);
    HbarSeries left = apply_L(m, tau);
    Rational lhs = 0;
    for (auto& [a, slice] : left.slices()) {
        if (3 * (a + 1) > tau.truncation_degree()) continue;
        lhs += inner_product(slice, qmu);
    }
    check.lhs = lhs;

    if (check.order_integral) {
        Rational scale = rational_pow(rational(1, 16), check.hbar_order) * ratio_dfact(mu);
        if (m == -1) {
            check.rhs = scale * phi_functional(mu.parts()) * rational(-1, 4);
        } else {
            check.rhs = scale * psi_functional(mu.parts());
        }
    } else {
        check.rhs = 0;
    }
    return check;
}

}  // namespace schurq
