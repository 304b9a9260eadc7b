#include "schurq/tau.hpp"

#include <algorithm>
#include <numeric>

#include "schurq/parallel.hpp"
#include "schurq/special_eval.hpp"
#include "schurq/virasoro.hpp"

namespace schurq {

TauSeries build_tau_mm(int degree, QEngine& engine, int workers) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    auto partitions = enumerate_strict(degree);
    std::vector<Rational> coeffs(partitions.size(), Rational(0));
    parallel_for(partitions.size(), workers, [&](std::size_t i) {
        const StrictPartition& sp = partitions[i];
        if (sp.weight() % 3 != 0) return;
        IntVector doubled;
        for (int x : sp.parts()) doubled.push_back(2 * x);
        Rational a2 = a_const(doubled);
        if (a2 == 0) return;
        coeffs[i] = ratio_dfact(sp) * a2 * rational_pow(rational(1, 16), sp.weight() / 3) /
                    rational_pow(2, sp.length());
    });

    HbarSeries s(degree);
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        if (coeffs[i] == 0) continue;
        s.add_to_slice(partitions[i].weight() / 3, engine.q_poly(partitions[i]).scaled(coeffs[i]));
    }
    return {std::move(s), TauKind::MM};
}

TauSeries build_tau_kw(int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    HbarSeries s = HbarSeries::one(degree);
    for (int a = 1; 3 * a <= degree; ++a) {
        const OddPoly prev = s.slice(a - 1);
        // The L_m constraint at ħ-order a-1 pins ∂_{2m+3} of the new slice.
        std::map<int, OddPoly> partials;
        for (int k = 1; k <= 3 * a; k += 2) {
            int m = (k - 3) / 2;
            partials[k] = virasoro_degree_part(m, prev).scaled(2);
        }
        // Euler's identity on the homogeneous degree-3a component.
        OddPoly slice;
        for (auto& [k, g] : partials) slice += g.mul_by_t(k).scaled(k);
        slice = slice.scaled(rational(1, 3 * a));
        if (!slice.is_homogeneous(3 * a)) {
            throw InconsistentSystem("solved slice is not homogeneous");
        }
        for (auto& [k, g] : partials) {
            if (!(slice.partial(k) == g)) {
                throw InconsistentSystem("constraint equations disagree at order " +
                                         std::to_string(a));
            }
        }
        s.set_slice(a, std::move(slice));
    }
    return {std::move(s), TauKind::KWOracle};
}

std::vector<TauDifference> compare_tau(const TauSeries& a, const TauSeries& b, int degree) {
    if (a.degree() < degree || b.degree() < degree) {
        throw TruncationInsufficient("both series must be truncated at >= the compared degree");
    }
    std::vector<TauDifference> out;
    for (int order = 0; 3 * order <= degree; ++order) {
        OddPoly diff = a.series.slice(order) - b.series.slice(order);
        for (auto& [mono, c] : diff.terms()) {
            if (mono.degree() > degree) continue;
            out.push_back({order, mono, a.series.slice(order).coefficient(mono),
                           b.series.slice(order).coefficient(mono)});
        }
    }
    return out;
}

HbarSeries log_tau(const TauSeries& tau) {
    if (!(tau.series.slice(0) == OddPoly::constant(1))) {
        throw std::invalid_argument("tau must have unit constant slice");
    }
    HbarSeries x(tau.series.truncation_degree());
    for (auto& [a, p] : tau.series.slices()) {
        if (a != 0) x.set_slice(a, p);
    }
    int max_order = tau.series.truncation_degree() / 3;
    return log_one_plus(x, max_order);
}

Correlator extract_correlator(const TauSeries& tau, std::vector<int> ks) {
    for (int k : ks) {
        if (k < 0) throw std::invalid_argument("correlator indices must be non-negative");
    }
    std::sort(ks.begin(), ks.end(), std::greater<int>());
    Correlator out;
    out.ks = ks;
    out.value = 0;

    int n = static_cast<int>(ks.size());
    int total = std::accumulate(ks.begin(), ks.end(), 0);
    if ((total - n + 3) % 3 != 0) return out;
    int genus = (total - n + 3) / 3;
    int order = 2 * genus - 2 + n;
    if (genus < 0 || order < 1) return out;
    out.genus = genus;
    out.dimension_ok = true;

    if (3 * order > tau.degree()) {
        throw TruncationInsufficient("correlator order exceeds the tau truncation");
    }

    Monomial mono;
    std::map<int, int> mult;
    for (int k : ks) ++mult[k];
    Rational scale = 1;
    for (auto& [k, m] : mult) {
        mono = mono * Monomial::power(2 * k + 1, m);
        scale *= Rational(factorial(m)) /
                 rational_pow(Rational(odd_double_factorial(2 * k + 1)), m);
    }
    out.value = log_tau(tau).slice(order).coefficient(mono) * scale;
    return out;
}

HbarScalar theta_coefficient(const StrictPartition& lam) {
    auto sf = standard_form(lam);
    if (sf.form.q() != sf.form.r()) {
        throw HypothesisViolated("theta needs q = r in the standard form");
    }
    int w = lam.weight();
    HbarScalar out{rational_pow(rational(1, 48), w / 3), w / 3};
    if (sf.form.r() % 2 != 0) out.value = -out.value;
    for (int k : sf.form.ks) {
        out.value *= Rational(odd_double_factorial(6 * k - 1)) /
                     Rational(odd_double_factorial(2 * k - 1));
    }
    for (int m : sf.form.ms) {
        out.value *= Rational(odd_double_factorial(6 * m + 1)) /
                     Rational(odd_double_factorial(2 * m - 1));
    }
    for (int n : sf.form.ns) {
        out.value *= Rational(odd_double_factorial(6 * n + 3)) /
                     Rational(odd_double_factorial(2 * n + 1));
    }
    return out;
}

bool hyper_contributing(const StrictPartition& lam) {
    auto sf = standard_form(lam);
    return sf.form.q() == sf.form.r();
}

HbarScalar eta_coefficient(const StrictPartition& lam, const HbarScalar& c1,
                           const HbarScalar& c2) {
    HbarScalar prod = c1 * c2;
    if (!(prod.value == rational(-1, 16) && prod.hbar_power == 1)) {
        throw ConstraintViolation("c1 * c2 must equal -hbar/16");
    }
    HbarScalar out{1, 0};
    for (int part : lam.parts()) {
        int k = part / 3;
        HbarScalar factor{rational_pow(rational(1, 48), k), k};
        switch (part % 3) {
            case 0:
                factor.value *= Rational(odd_double_factorial(6 * k - 1)) /
                                Rational(odd_double_factorial(2 * k - 1));
                break;
            case 1:
                factor.value *= Rational(odd_double_factorial(6 * k + 1)) /
                                Rational(odd_double_factorial(2 * k - 1));
                factor = factor * c1;
                break;
            default:
                factor.value *= Rational(odd_double_factorial(6 * k + 3)) /
                                (Rational(odd_double_factorial(2 * k + 1)) * 3);
                factor = factor * c2;
                break;
        }
        out = out * factor;
    }
    return out;
}

HyperCheck hypergeometric_check(const StrictPartition& lam, const HbarScalar& c1,
                                const HbarScalar& c2) {
    HyperCheck out;
    out.contributing = hyper_contributing(lam);
    out.eta = eta_coefficient(lam, c1, c2);
    if (!out.contributing) {
        // Off the contributing set both the Q-coefficient and A_λ vanish;
        // record that instead of a fractional-power θ.
        IntVector doubled;
        for (int x : lam.parts()) doubled.push_back(2 * x);
        out.theta = HbarScalar{0, 0};
        out.theta_eta_residual = 0;
        out.diagonal_residual = a_const(doubled);
        return out;
    }
    out.theta = theta_coefficient(lam);
    if (out.theta.hbar_power != out.eta.hbar_power && out.eta.value != 0) {
        throw ConstraintViolation("theta and eta disagree in hbar power");
    }
    out.theta_eta_residual = out.theta.value - out.eta.value;

    IntVector doubled;
    for (int x : lam.parts()) doubled.push_back(2 * x);
    Rational lhs = rational_pow(rational(1, 16), lam.weight() / 3) * ratio_dfact(lam) *
                   a_const(doubled);
    Rational rhs = out.theta.value * a_const(lam.parts());
    out.diagonal_residual = lhs - rhs;
    return out;
}

}  // namespace schurq
