#include "schurq/special_eval.hpp"

#include <numeric>

namespace schurq {

Integer odd_double_factorial(int n) {
    if (n < -1 || n % 2 == 0) throw std::invalid_argument("double factorial needs odd n >= -1");
    Integer f = 1;
    for (int x = n; x >= 1; x -= 2) f *= x;
    return f;
}

Integer double_falling(int x, int k) {
    if (k < 0) throw std::invalid_argument("double falling factorial needs k >= 0");
    Integer f = 1;
    for (int i = 0; i < k; ++i) f *= x - 2 * i;
    return f;
}

Rational hook_eval(const IntVector& v) {
    auto norm = normalize(v);
    if (norm.coefficient == 0) return 0;
    const auto& parts = norm.partition.parts();
    Rational value = rational_pow(2, norm.partition.weight());
    for (int p : parts) value /= Rational(factorial(p));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            value *= rational(parts[i] - parts[j], parts[i] + parts[j]);
        }
    }
    return value * norm.coefficient;
}

Rational a_const(const IntVector& v) {
    auto norm = normalize(v);
    if (norm.coefficient == 0) return 0;
    const StrictPartition& sp = norm.partition;
    if (sp.weight() % 3 != 0) return 0;

    auto [form, sign] = standard_form(sp);
    int p = form.p(), q = form.q(), r = form.r();
    if (q != r) return 0;

    Rational value = rational_pow(2, r) * rational_pow(rational(2, 3), sp.weight() / 3);
    if ((r * (r - 1) / 2) % 2 != 0) value = -value;
    for (int k : form.ks) value /= Rational(factorial(k));
    for (int m : form.ms) value /= Rational(factorial(m));
    for (int n : form.ns) value /= Rational(factorial(n));
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            value *= rational(form.ks[i] - form.ks[j], form.ks[i] + form.ks[j]);
        }
    }
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            value *= (form.ms[i] - form.ms[j]) * (form.ns[i] - form.ns[j]);
        }
    }
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < r; ++j) {
            value /= form.ms[i] + form.ns[j] + 1;
        }
    }
    return value * sign * norm.coefficient;
}

Rational ratio_dfact(const StrictPartition& lam) {
    Rational value = 1;
    for (int p : lam.parts()) value *= Rational(odd_double_factorial(2 * p - 1));
    return value;
}

Rational a_double(const StrictPartition& lam) {
    Rational base = a_const(lam.parts());
    if (base == 0) return 0;
    auto [form, sign] = standard_form(lam);
    (void)sign;  // the permutation signs of λ and 2λ cancel
    Rational factor = rational_pow(rational(1, 3), lam.weight() / 3);
    if (form.r() % 2 != 0) factor = -factor;
    for (int k : form.ks) factor /= Rational(odd_double_factorial(2 * k - 1));
    for (int m : form.ms) factor /= Rational(odd_double_factorial(2 * m - 1));
    for (int n : form.ns) factor /= Rational(odd_double_factorial(2 * n + 1));
    return base * factor;
}

}  // namespace schurq
