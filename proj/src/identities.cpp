#include "schurq/identities.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "schurq/parallel.hpp"
#include "schurq/special_eval.hpp"
#include "schurq/virasoro.hpp"

namespace schurq {

namespace {

Rational A(const IntVector& v) { return a_const(v); }

IntVector bumped(const IntVector& v, std::size_t i, int delta) {
    IntVector w = v;
    w[i] += delta;
    return w;
}

IntVector erased(const IntVector& v, std::size_t i) {
    IntVector w = v;
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    return w;
}

IntVector erased2(const IntVector& v, std::size_t i, std::size_t j) {
    IntVector w;
    w.reserve(v.size() - 2);
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (t != i && t != j) w.push_back(v[t]);
    }
    return w;
}

IntVector appended(IntVector v, std::initializer_list<int> extra) {
    for (int x : extra) v.push_back(x);
    return v;
}

void require_nonnegative(const IntVector& v) {
    for (int x : v) {
        if (x < 0) throw HypothesisViolated("parts must be non-negative");
    }
}

void require_positive(const IntVector& v) {
    for (int x : v) {
        if (x <= 0) throw HypothesisViolated("parts must be positive");
    }
}

void require_weakly_positive(const IntVector& v) {
    require_nonnegative(v);
    if (std::count(v.begin(), v.end(), 0) > 1) {
        throw HypothesisViolated("at most one zero part allowed");
    }
}

void require_distinct_positive(const IntVector& v) {
    require_positive(v);
    IntVector s = v;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw HypothesisViolated("parts must be distinct");
    }
}

Rational two_thirds_pow(int e) { return rational_pow(rational(2, 3), e); }

}  // namespace

Rational rec_weight(const IntVector& lam) {
    require_nonnegative(lam);
    int weight = std::accumulate(lam.begin(), lam.end(), 0);
    Rational res = A(lam) * rational(weight, 2);
    for (std::size_t i = 0; i < lam.size(); ++i) res -= A(bumped(lam, i, -3));
    return res;
}

Rational rec_pfaffian(const IntVector& lam, int pivot) {
    require_nonnegative(lam);
    IntVector v = lam;
    if (v.size() % 2 != 0) {
        if (std::count(v.begin(), v.end(), 0) > 0) {
            throw OddLengthWithoutZeroPad("odd length input must be positive to zero-pad");
        }
        v.push_back(0);
    }
    std::size_t l = v.size();
    long zeros = std::count(v.begin(), v.end(), 0);
    if (zeros > 2) throw HypothesisViolated("too many zero parts");
    if (zeros == 2) {
        if (v.back() != 0) throw HypothesisViolated("two zeros only in the (mu,0) shape");
        if (pivot == static_cast<int>(l)) {
            throw HypothesisViolated("pivot at the padded zero holds only up to sign");
        }
    }
    if (pivot < 1 || pivot > static_cast<int>(l)) throw std::invalid_argument("pivot out of range");

    std::size_t j = static_cast<std::size_t>(pivot - 1);
    Rational sum = 0;
    for (std::size_t i = 0; i < l; ++i) {
        if (i == j) continue;
        Rational term = A({v[j], v[i]}) * A(erased2(v, std::min(i, j), std::max(i, j)));
        // ĩ(j) with 1-based indices: i if i < j+1 ... expressed 0-based below.
        long it = (i < j) ? static_cast<long>(i + 1) - 1 : static_cast<long>(i + 1);
        if (it % 2 != 0) term = -term;
        sum += term;
    }
    if ((pivot - 1) % 2 != 0) sum = -sum;
    return A(v) - sum;
}

Rational lemma_ni1(const IntVector& lam) {
    require_weakly_positive(lam);
    auto sf = standard_form(lam);
    IntVector v = sf.form.reassemble();
    int p = sf.form.p(), q = sf.form.q(), r = sf.form.r();
    Rational res = 0;
    for (int i = 0; i < r; ++i) res += A(bumped(v, static_cast<std::size_t>(p + q + i), -1));
    return res;
}

Rational lemma_qi1(const IntVector& lam) {
    require_weakly_positive(lam);
    auto sf = standard_form(lam);
    IntVector v = sf.form.reassemble();
    int p = sf.form.p(), q = sf.form.q();
    Rational res = 0;
    for (int i = 0; i < q; ++i) res += A(bumped(v, static_cast<std::size_t>(p + i), 1));
    return res;
}

Rational lemma_even1(const IntVector& lam) {
    require_positive(lam);
    if (lam.size() % 2 != 0) throw HypothesisViolated("even length required");
    Rational res = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        Rational term = A({lam[i]}) * A(erased(lam, i));
        res += (i % 2 == 0) ? term : -term;
    }
    return res;
}

MultCorollaries mult_corollaries(const IntVector& lam) {
    require_nonnegative(lam);
    MultCorollaries out;
    out.append1 = A(appended(lam, {1}));
    for (std::size_t i = 0; i < lam.size(); ++i) out.append1 += A(bumped(lam, i, 1)) * 2;

    out.append21 = A(appended(lam, {2, 1})) - A(appended(lam, {3})) + A(lam) * 2;
    for (std::size_t i = 0; i < lam.size(); ++i) out.append21 -= A(bumped(lam, i, 3)) * 2;
    return out;
}

PhiParts phi_parts(const IntVector& mu) {
    require_distinct_positive(mu);
    auto sf = standard_form(mu);
    IntVector v = sf.form.reassemble();
    const auto& ks = sf.form.ks;
    const auto& ms = sf.form.ms;
    const auto& ns = sf.form.ns;
    int p = sf.form.p(), q = sf.form.q(), r = sf.form.r();
    auto kpos = [&](int i) { return static_cast<std::size_t>(i); };
    auto mpos = [&](int i) { return static_cast<std::size_t>(p + i); };
    auto npos = [&](int i) { return static_cast<std::size_t>(p + q + i); };

    PhiParts out;
    out.phi1 = 0;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            IntVector w = v;
            w[npos(i)] -= 1;
            w[npos(j)] -= 1;
            out.phi1 += A(w);
        }
    }

    out.phi2 = 0;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            if (i == j) continue;
            IntVector w = v;
            w[kpos(i)] -= 1;
            w[kpos(j)] -= 1;
            out.phi2 += A(w) / ((6 * ks[i] - 1) * (6 * ks[j] - 1));
        }
    }
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            if (i == j) continue;
            IntVector w = v;
            w[mpos(i)] -= 1;
            w[mpos(j)] -= 1;
            out.phi2 += A(w) / ((6 * ms[i] + 1) * (6 * ms[j] + 1));
        }
    }
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
            IntVector w = v;
            w[kpos(i)] -= 1;
            w[mpos(j)] -= 1;
            out.phi2 -= A(w) * 2 / ((6 * ks[i] - 1) * (6 * ms[j] + 1));
        }
    }
    for (int i = 0; i < q; ++i) out.phi2 += A(bumped(v, mpos(i), -2)) / (6 * ms[i] + 1);
    for (int i = 0; i < q; ++i) out.phi2 -= A(bumped(v, mpos(i), 1)) / 4;

    out.phi3 = 0;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < r; ++j) {
            IntVector w = v;
            w[kpos(i)] -= 1;
            w[npos(j)] -= 1;
            out.phi3 += A(w) * rational(2, 3) / (6 * ks[i] - 1);
        }
    }
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < r; ++j) {
            IntVector w = v;
            w[mpos(i)] -= 1;
            w[npos(j)] -= 1;
            out.phi3 -= A(w) * rational(2, 3) / (6 * ms[i] + 1);
        }
    }
    for (int i = 0; i < p; ++i) {
        out.phi3 -= A(bumped(v, kpos(i), -2)) * rational(2 * ks[i] - 1, 6 * ks[i] - 1);
    }
    for (int i = 0; i < r; ++i) out.phi3 += A(bumped(v, npos(i), -2)) / 3;
    for (int i = 0; i < p; ++i) out.phi3 += A(bumped(v, kpos(i), 1)) * rational(6 * ks[i] + 1, 12);
    for (int i = 0; i < r; ++i) out.phi3 -= A(bumped(v, npos(i), 1)) * rational(6 * ns[i] + 5, 12);
    out.phi3 += A(appended(v, {1})) / 24;

    out.phi2p = 0;
    for (int i = 0; i < q; ++i) {
        Rational inner = 0;
        for (int j = 0; j < q; ++j) {
            if (j == i) continue;
            inner += A(erased(bumped(v, mpos(j), -1), mpos(i))) / (6 * ms[j] + 1);
        }
        for (int j = 0; j < p; ++j) {
            inner -= A(erased(bumped(v, kpos(j), -1), mpos(i))) / (6 * ks[j] - 1);
        }
        Rational weight = two_thirds_pow(ms[i]) / (Rational(factorial(ms[i])) * (6 * ms[i] + 1));
        if ((i + 1) % 2 != 0) weight = -weight;  // (-1)^i with 1-based i
        out.phi2p += weight * inner;
    }
    return out;
}

PsiParts psi_parts(const IntVector& mu) {
    require_distinct_positive(mu);
    auto sf = standard_form(mu);
    IntVector v = sf.form.reassemble();
    const auto& ks = sf.form.ks;
    const auto& ms = sf.form.ms;
    const auto& ns = sf.form.ns;
    int p = sf.form.p(), q = sf.form.q(), r = sf.form.r();
    int l = p + q + r;
    auto kpos = [&](int i) { return static_cast<std::size_t>(i); };
    auto mpos = [&](int i) { return static_cast<std::size_t>(p + i); };
    auto npos = [&](int i) { return static_cast<std::size_t>(p + q + i); };
    auto dfall = [](int x, int k) { return Rational(double_falling(x, k)); };

    PsiParts out;
    out.psi1 = 0;
    for (int i = 0; i < q; ++i) {
        out.psi1 += A(bumped(v, mpos(i), 4)) * dfall(6 * ms[i] + 7, 2) * (ms[i] + 1) * rational(9, 2);
        out.psi1 -= A(bumped(v, mpos(i), 7)) * dfall(6 * ms[i] + 13, 5) /
                    (16 * (2 * ms[i] + 3));
    }
    out.psi1 += A(appended(v, {5, 2})) * rational(105, 32);

    out.psi2 = 0;
    for (int i = 0; i < p; ++i) {
        Rational pre = dfall(6 * ks[i] + 5, 3) * 6 / (2 * ks[i] + 1);
        for (int j = 0; j < p; ++j) {
            if (j == i) continue;
            IntVector w = v;
            w[kpos(i)] += 3;
            w[kpos(j)] += 1;
            out.psi2 += pre * ks[j] * A(w);
        }
        for (int j = 0; j < r; ++j) {
            IntVector w = v;
            w[kpos(i)] += 3;
            w[npos(j)] += 1;
            out.psi2 -= pre * (ns[j] + 1) * A(w);
        }
    }
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < q; ++i) {
            IntVector w = v;
            w[mpos(i)] += 3;
            w[npos(j)] += 1;
            out.psi2 -= A(w) * dfall(6 * ms[i] + 7, 2) * (ns[j] + 1) * 18;
        }
        for (int i = 0; i < r; ++i) {
            if (i == j) continue;
            IntVector w = v;
            w[npos(i)] += 3;
            w[npos(j)] += 1;
            out.psi2 -= A(w) * dfall(6 * ns[i] + 7, 2) * (ns[j] + 1) * 18;
        }
    }
    for (int j = 0; j < p; ++j) {
        for (int i = 0; i < q; ++i) {
            IntVector w = v;
            w[mpos(i)] += 3;
            w[kpos(j)] += 1;
            out.psi2 += A(w) * dfall(6 * ms[i] + 7, 2) * ks[j] * 18;
        }
        for (int i = 0; i < r; ++i) {
            IntVector w = v;
            w[npos(i)] += 3;
            w[kpos(j)] += 1;
            out.psi2 += A(w) * dfall(6 * ns[i] + 7, 2) * ks[j] * 18;
        }
    }
    for (int i = 0; i < p; ++i) {
        out.psi2 += A(bumped(v, kpos(i), 4)) * (18 * ks[i] * ks[i] + 45 * ks[i] + 26) *
                    dfall(6 * ks[i] + 5, 3) / (2 * (2 * ks[i] + 1));
    }
    for (int i = 0; i < r; ++i) {
        out.psi2 -= A(bumped(v, npos(i), 4)) * (18 * ns[i] * ns[i] + 69 * ns[i] + 68) *
                    dfall(6 * ns[i] + 7, 2) * rational(3, 2);
    }
    for (int i = 0; i < p; ++i) {
        out.psi2 += A(appended(bumped(v, kpos(i), 1), {3})) * (9 * ks[i] + 4) * 6;
    }
    for (int i = 0; i < r; ++i) {
        out.psi2 -= A(appended(bumped(v, npos(i), 1), {3})) * (9 * ns[i] + 5) * 6;
    }
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < l; ++j) {
            IntVector w = v;
            w[kpos(i)] += 1;
            w[static_cast<std::size_t>(j)] += 3;
            out.psi2 += A(w) * (6 * ks[i] + 1) * 3;
        }
        out.psi2 -= A(bumped(v, kpos(i), 1)) * (6 * ks[i] + 1) * 3;
    }
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < l; ++j) {
            IntVector w = v;
            w[npos(i)] += 1;
            w[static_cast<std::size_t>(j)] += 3;
            out.psi2 -= A(w) * (6 * ns[i] + 5) * 3;
        }
        out.psi2 += A(bumped(v, npos(i), 1)) * (6 * ns[i] + 5) * 3;
    }
    out.psi2 += A(appended(v, {4})) * 120;
    for (int i = 0; i < p; ++i) {
        out.psi2 -= A(bumped(v, kpos(i), 7)) * dfall(6 * ks[i] + 13, 7) /
                    (48 * (2 * ks[i] + 3) * (2 * ks[i] + 1));
    }
    for (int i = 0; i < r; ++i) {
        out.psi2 += A(bumped(v, npos(i), 7)) * dfall(6 * ns[i] + 17, 7) /
                    (48 * (2 * ns[i] + 5) * (2 * ns[i] + 3));
    }
    out.psi2 -= A(appended(v, {7})) * rational(15015, 32);
    out.psi2 += A(appended(v, {6, 1})) * rational(1155, 32);
    out.psi2 += A(appended(v, {4, 3})) * rational(525, 32);
    return out;
}

Rational m_functional(int which, const IntVector& lam) {
    require_positive(lam);
    auto sf = standard_form(lam);
    IntVector v = sf.form.reassemble();
    const auto& ks = sf.form.ks;
    const auto& ns = sf.form.ns;
    int p = sf.form.p(), q = sf.form.q(), r = sf.form.r();
    auto kpos = [&](int i) { return static_cast<std::size_t>(i); };
    auto npos = [&](int i) { return static_cast<std::size_t>(p + q + i); };
    auto sign1b = [](int i) { return (i % 2 != 0) ? -1 : 1; };  // (-1)^i, i 1-based

    switch (which) {
        case 1: {
            Rational res = 0;
            for (int i = 0; i < r; ++i) {
                Rational inner = 0;
                for (int j = 0; j < p; ++j) {
                    inner += A(erased(bumped(v, kpos(j), 1), npos(i))) * ks[j];
                }
                for (int j = 0; j < r; ++j) {
                    if (j == i) continue;
                    inner -= A(erased(bumped(v, npos(j), 1), npos(i))) * (ns[j] + 1);
                }
                res += inner * two_thirds_pow(ns[i]) / Rational(factorial(ns[i])) * sign1b(i + 1);
            }
            return res;
        }
        case 2: {
            Rational res = 0;
            for (int i = 0; i < r; ++i) {
                Rational inner = 0;
                for (int j = 0; j < p; ++j) inner += A(erased(bumped(v, kpos(j), 1), npos(i)));
                for (int j = 0; j < r; ++j) {
                    if (j == i) continue;
                    inner += A(erased(bumped(v, npos(j), 1), npos(i)));
                }
                res += inner * two_thirds_pow(ns[i]) / Rational(factorial(ns[i] + 1)) * sign1b(i + 1);
            }
            return res;
        }
        case 3:
        case 4: {
            if (p <= 1 || p % 2 == 0) throw HypothesisViolated("needs p > 1 odd");
            Rational res = 0;
            for (int i = 0; i < p; ++i) {
                for (int j = 0; j < p; ++j) {
                    if (j == i) continue;
                    Rational term = A(erased(bumped(v, kpos(i), 3), kpos(j))) *
                                    two_thirds_pow(ks[j]) / Rational(factorial(ks[j])) *
                                    sign1b(j + 1);
                    if (which == 3) term *= (6 * ks[i] + 5) * (6 * ks[i] + 1);
                    res += term;
                }
            }
            return res;
        }
        case 5: {
            if (p % 2 == 0) throw HypothesisViolated("needs p odd");
            Rational res = 0;
            for (int i = 0; i < p; ++i) {
                Rational inner = A(erased(appended(v, {3}), kpos(i))) -
                                 A(erased(v, kpos(i))) * rational(2, 3);
                res += inner * two_thirds_pow(ks[i]) / Rational(factorial(ks[i])) * sign1b(i + 1);
            }
            return res;
        }
        case 6: {
            if (p % 2 != 0) throw HypothesisViolated("needs p even");
            Rational res = 0;
            for (int i = 0; i < p; ++i) {
                res += A(erased(v, kpos(i))) * A({3 * ks[i] + 3}) * sign1b(i + 1 + 1);
                res += A(bumped(v, kpos(i), 3));
            }
            return res;
        }
        case 7: {
            if (p % 2 != 0) throw HypothesisViolated("needs p even");
            Rational res = 0;
            for (int i = 0; i < p; ++i) {
                int c = 6 * ks[i] * ks[i] + 6 * ks[i] + 1;
                Rational inner = A(erased(v, kpos(i))) * A({3 * ks[i] + 3}) * sign1b(i + 1 + 1) -
                                 A(bumped(v, kpos(i), 3));
                res += inner * c;
                res += A({3 * ks[i], 3}) * A(erased(v, kpos(i))) * sign1b(i + 1 + 1);
            }
            return res;
        }
        default:
            throw std::invalid_argument("which must be 1..7");
    }
}

AppendixResiduals appendix_identities(int a, int b, int c, int ka, int kb, int kc) {
    if (!(0 < a && a < b && b < c)) throw std::invalid_argument("need positive a < b < c");
    if (ka < 0 || kb < 0 || kc < 0) throw std::invalid_argument("k values must be non-negative");
    std::map<int, int> kv{{a, ka}, {b, kb}, {c, kc}};
    int labels[3] = {a, b, c};
    std::sort(labels, labels + 3);

    AppendixResiduals out{0, 0};
    int perm[3] = {0, 1, 2};
    do {
        int i = labels[perm[0]], j = labels[perm[1]], m = labels[perm[2]];
        long itilde = (i < j) ? i - 1 : i;
        long mtilde = m - (i > m ? 1 : 0) - (j < m ? 1 : 0);
        int sign = ((j + itilde + mtilde) % 2 == 0) ? 1 : -1;
        long ki = kv[i], km = kv[m];
        Rational base = rational(ki + 1 - km) / ((ki + 1) * (ki + 1 + km));
        out.b1 += base * sign;
        out.b2 += base * sign * ((6 * ki + 5) * (6 * ki + 1));
    } while (std::next_permutation(perm, perm + 3));
    return out;
}

namespace {

/// C = (-1)^r (1/3)^e / (∏(2k_i-1)!! ∏(2m_i-1)!! ∏(2n_i+1)!!), the constant
/// dividing the doubled functional in the reduction.
Rational reduction_constant(const StandardForm& form, int third_exponent) {
    Rational c = rational_pow(rational(1, 3), third_exponent);
    if (form.r() % 2 != 0) c = -c;
    for (int k : form.ks) c /= Rational(odd_double_factorial(2 * k - 1));
    for (int m : form.ms) c /= Rational(odd_double_factorial(2 * m - 1));
    for (int n : form.ns) c /= Rational(odd_double_factorial(2 * n + 1));
    return c;
}

}  // namespace

Rational phi_recombination(const StrictPartition& mu) {
    auto sf = standard_form(mu);
    IntVector v = sf.form.reassemble();
    Rational combination = 0;
    int w = mu.weight();
    if (!mu.empty() && w % 3 == 2) {
        auto parts = phi_parts(v);
        int q = sf.form.q(), r = sf.form.r();
        Rational inner = 0;
        if (r == q + 4) inner += parts.phi1 / 9;
        if (r == q - 2) inner += parts.phi2;
        if (r == q + 1) inner += parts.phi3;
        combination = reduction_constant(sf.form, (w - 2) / 3) * inner;
    }
    return phi_functional(v) - combination;
}

Rational psi_recombination(const StrictPartition& mu) {
    auto sf = standard_form(mu);
    IntVector v = sf.form.reassemble();
    Rational combination = 0;
    int w = mu.weight();
    if (w % 3 == 2) {
        auto parts = psi_parts(v);
        int q = sf.form.q(), r = sf.form.r();
        Rational inner = 0;
        if (q == r + 2) inner -= parts.psi1 * 3;
        if (r == q + 1) inner += parts.psi2;
        combination = reduction_constant(sf.form, (w + 4) / 3) * inner;
    }
    return psi_functional(v) - combination;
}

// ---------------------------------------------------------------------------
// Enumeration drivers
// ---------------------------------------------------------------------------

namespace {

void partitions_rec(int max_part, int budget, int max_len, IntVector& prefix,
                    std::vector<IntVector>& out) {
    out.push_back(prefix);
    if (static_cast<int>(prefix.size()) == max_len) return;
    int cap = prefix.empty() ? max_part : prefix.back();
    cap = std::min(cap, budget);
    for (int next = cap; next >= 1; --next) {
        prefix.push_back(next);
        partitions_rec(max_part, budget - next, max_len, prefix, out);
        prefix.pop_back();
    }
}

/// Non-increasing positive tuples with the configured bounds (includes the
/// empty tuple).
std::vector<IntVector> positive_partitions(const SuiteConfig& cfg) {
    std::vector<IntVector> out;
    IntVector prefix;
    partitions_rec(cfg.max_part, cfg.max_weight, cfg.max_length, prefix, out);
    return out;
}

std::vector<IntVector> strict_inputs(const SuiteConfig& cfg) {
    std::vector<IntVector> out;
    for (auto& v : positive_partitions(cfg)) {
        IntVector s = v;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) == s.end()) out.push_back(v);
    }
    return out;
}

IntVector random_tuple(std::mt19937& rng, int max_part, int max_len, bool positive) {
    std::uniform_int_distribution<int> len(positive ? 1 : 0, max_len);
    std::uniform_int_distribution<int> part(positive ? 1 : 0, max_part);
    IntVector v(static_cast<std::size_t>(len(rng)));
    for (auto& x : v) x = part(rng);
    return v;
}

IntVector random_strict(std::mt19937& rng, int max_part, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    int l = len(rng);
    std::vector<int> pool(static_cast<std::size_t>(max_part));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    IntVector v(pool.begin(), pool.begin() + std::min<std::size_t>(l, pool.size()));
    return v;  // random order kept on purpose
}

using Evaluator = std::function<void(const IntVector&, std::vector<IdentityReport>&)>;

void push(std::vector<IdentityReport>& out, const std::string& name, const IntVector& input,
          const Rational& residual) {
    out.push_back({name, input, residual, residual == 0});
}

struct Family {
    std::string name;
    // Builds the deterministic qualifying inputs.
    std::function<std::vector<IntVector>(const SuiteConfig&)> inputs;
    // Builds randomized extra inputs (may return duplicates/empties).
    std::function<IntVector(std::mt19937&, const SuiteConfig&)> random_input;
    Evaluator evaluate;
};

std::vector<IntVector> with_zero_variants(std::vector<IntVector> base) {
    std::vector<IntVector> out;
    out.reserve(base.size() * 2);
    for (auto& v : base) {
        out.push_back(v);
        IntVector padded = v;
        padded.push_back(0);
        out.push_back(std::move(padded));
    }
    return out;
}

const std::vector<Family>& families() {
    static const std::vector<Family> fams = [] {
        std::vector<Family> f;
        auto positive = [](const SuiteConfig& c) { return positive_partitions(c); };
        auto weakly = [](const SuiteConfig& c) { return with_zero_variants(positive_partitions(c)); };
        auto strict = [](const SuiteConfig& c) { return strict_inputs(c); };
        auto rnd_tuple = [](std::mt19937& rng, const SuiteConfig& c) {
            return random_tuple(rng, c.max_part + 18, c.max_length + 2, false);
        };
        auto rnd_positive = [](std::mt19937& rng, const SuiteConfig& c) {
            return random_tuple(rng, c.max_part + 18, c.max_length + 2, true);
        };
        auto rnd_strict = [](std::mt19937& rng, const SuiteConfig& c) {
            return random_strict(rng, c.max_part + 18, c.max_length + 2);
        };

        f.push_back({"rec-weight", weakly, rnd_tuple,
                     [](const IntVector& v, std::vector<IdentityReport>& out) {
                         push(out, "rec-weight", v, rec_weight(v));
                     }});
        f.push_back({"rec-pfaffian", positive, rnd_positive,
                     [](const IntVector& v, std::vector<IdentityReport>& out) {
                         if (v.empty()) return;
                         int l = static_cast<int>(v.size());
                         int pivots = (l % 2 == 0) ? l : l + 1;
                         for (int j = 1; j <= pivots; ++j) {
                             push(out, "rec-pfaffian", v, rec_pfaffian(v, j));
                         }
                     }});
        f.push_back({"ni1", weakly, rnd_positive,
                     [](const IntVector& v, std::vector<IdentityReport>& out) {
                         push(out, "ni1", v, lemma_ni1(v));
                     }});
        f.push_back({"qi1", weakly, rnd_positive,
                     [](const IntVector& v, std::vector<IdentityReport>& out) {
                         push(out, "qi1", v, lemma_qi1(v));
                     }});
        f.push_back({"even1",
                     [](const SuiteConfig& c) {
                         std::vector<IntVector> out;
                         for (auto& v : positive_partitions(c)) {
                             if (v.size() % 2 == 0 && !v.empty()) out.push_back(v);
                         }
                         return out;
                     },
                     [](std::mt19937& rng, const SuiteConfig& c) {
                         IntVector v = random_tuple(rng, c.max_part + 18, c.max_length + 2, true);
                         if (v.size() % 2 != 0) v.push_back(1 + (rng() % 9));
                         return v;
                     },
                     [](const IntVector& v, std::vector<IdentityReport>& out) {
                         push(out, "even1", v, lemma_even1(v));
                     }});
        f.push_back({"mult", weakly, rnd_tuple,
                     [](const IntVector& v, std::vector<IdentityReport>& out) {
                         auto mc = mult_corollaries(v);
                         push(out, "mult-append-1", v, mc.append1);
                         push(out, "mult-append-21", v, mc.append21);
                     }});
        f.push_back({"phi", strict, rnd_strict,
                     [](const IntVector& v, std::vector<IdentityReport>& out) {
                         auto parts = phi_parts(v);
                         push(out, "phi1", v, parts.phi1);
                         push(out, "phi2", v, parts.phi2);
                         push(out, "phi3", v, parts.phi3);
                         push(out, "phi2-prime", v, parts.phi2p);
                     }});
        f.push_back({"psi", strict, rnd_strict,
                     [](const IntVector& v, std::vector<IdentityReport>& out) {
                         auto parts = psi_parts(v);
                         push(out, "psi1", v, parts.psi1);
                         push(out, "psi2", v, parts.psi2);
                     }});
        f.push_back({"m-functionals", positive, rnd_positive,
                     [](const IntVector& v, std::vector<IdentityReport>& out) {
                         int p = standard_form(v).form.p();
                         push(out, "m1", v, m_functional(1, v));
                         push(out, "m2", v, m_functional(2, v));
                         if (p > 1 && p % 2 != 0) {
                             push(out, "m3", v, m_functional(3, v));
                             push(out, "m4", v, m_functional(4, v));
                         }
                         if (p % 2 != 0) push(out, "m5", v, m_functional(5, v));
                         if (p % 2 == 0) {
                             push(out, "m6", v, m_functional(6, v));
                             push(out, "m7", v, m_functional(7, v));
                         }
                     }});
        f.push_back({"appendix",
                     [](const SuiteConfig&) {
                         std::vector<IntVector> out;
                         for (int a = 1; a <= 4; ++a) {
                             for (int b = a + 1; b <= 5; ++b) {
                                 for (int c = b + 1; c <= 6; ++c) {
                                     for (int ka = 0; ka <= 2; ++ka) {
                                         for (int kb = 0; kb <= 2; ++kb) {
                                             for (int kc = 0; kc <= 2; ++kc) {
                                                 out.push_back({a, b, c, ka, kb, kc});
                                             }
                                         }
                                     }
                                 }
                             }
                         }
                         return out;
                     },
                     [](std::mt19937& rng, const SuiteConfig&) {
                         std::uniform_int_distribution<int> pos(1, 40), kd(0, 25);
                         int a = pos(rng), b = pos(rng), c = pos(rng);
                         int lo = std::min({a, b, c}), hi = std::max({a, b, c});
                         int mid = a + b + c - lo - hi;
                         if (lo == mid) ++mid;
                         if (mid >= hi) hi = mid + 1;
                         return IntVector{lo, mid, hi, kd(rng), kd(rng), kd(rng)};
                     },
                     [](const IntVector& v, std::vector<IdentityReport>& out) {
                         auto res = appendix_identities(v[0], v[1], v[2], v[3], v[4], v[5]);
                         push(out, "appendix-b1", v, res.b1);
                         push(out, "appendix-b2", v, res.b2);
                     }});
        f.push_back({"recombine", strict, rnd_strict,
                     [](const IntVector& v, std::vector<IdentityReport>& out) {
                         IntVector sorted = v;
                         std::sort(sorted.begin(), sorted.end(), std::greater<int>());
                         StrictPartition sp(sorted);
                         push(out, "recombine-phi", sorted, phi_recombination(sp));
                         push(out, "recombine-psi", sorted, psi_recombination(sp));
                     }});
        return f;
    }();
    return fams;
}

}  // namespace

std::vector<std::string> identity_family_names() {
    std::vector<std::string> names;
    for (auto& fam : families()) names.push_back(fam.name);
    return names;
}

std::vector<IdentityReport> run_identity_suite(const std::string& family, const SuiteConfig& cfg) {
    std::vector<const Family*> selected;
    for (auto& fam : families()) {
        if (family == "all" || family == fam.name) selected.push_back(&fam);
    }
    if (selected.empty()) throw std::invalid_argument("unknown identity family: " + family);

    std::vector<IdentityReport> out;
    for (const Family* fam : selected) {
        std::vector<IntVector> inputs = fam->inputs(cfg);
        std::mt19937 rng(cfg.seed);
        for (int i = 0; i < cfg.random_instances; ++i) {
            inputs.push_back(fam->random_input(rng, cfg));
        }
        std::vector<std::vector<IdentityReport>> buckets(inputs.size());
        parallel_for(inputs.size(), cfg.workers, [&](std::size_t i) {
            fam->evaluate(inputs[i], buckets[i]);
        });
        for (auto& b : buckets) {
            for (auto& rep : b) out.push_back(std::move(rep));
        }
    }
    return out;
}

}  // namespace schurq
