#include "schurq/hbar_series.hpp"

namespace schurq {

namespace {
const OddPoly kZeroPoly{};
}

HbarSeries HbarSeries::one(int truncation_degree) {
    HbarSeries s(truncation_degree);
    s.set_slice(0, OddPoly::constant(1));
    return s;
}

const OddPoly& HbarSeries::slice(int order) const {
    auto it = slices_.find(order);
    return it == slices_.end() ? kZeroPoly : it->second;
}

void HbarSeries::set_slice(int order, OddPoly p) {
    p = p.truncated(truncation_degree_);
    if (p.is_zero()) {
        slices_.erase(order);
    } else {
        slices_[order] = std::move(p);
    }
}

void HbarSeries::add_to_slice(int order, const OddPoly& p) {
    set_slice(order, slice(order) + p);
}

HbarSeries& HbarSeries::operator+=(const HbarSeries& o) {
    for (auto& [a, p] : o.slices_) add_to_slice(a, p);
    return *this;
}

HbarSeries HbarSeries::operator+(const HbarSeries& o) const {
    HbarSeries out = *this;
    out += o;
    return out;
}

HbarSeries HbarSeries::operator-(const HbarSeries& o) const {
    return *this + o.scaled(-1);
}

HbarSeries HbarSeries::scaled(const Rational& c) const {
    HbarSeries out(truncation_degree_);
    if (c == 0) return out;
    for (auto& [a, p] : slices_) out.slices_.emplace(a, p.scaled(c));
    return out;
}

bool HbarSeries::operator==(const HbarSeries& o) const {
    return slices_ == o.slices_;
}

HbarSeries HbarSeries::mul(const HbarSeries& o, int max_order) const {
    HbarSeries out(truncation_degree_);
    for (auto& [a, p] : slices_) {
        for (auto& [b, q] : o.slices_) {
            if (a + b > max_order) continue;
            out.add_to_slice(a + b, p.mul(q, truncation_degree_));
        }
    }
    return out;
}

bool HbarSeries::kw_graded() const {
    for (auto& [a, p] : slices_) {
        if (a < 0) return false;
        if (!p.is_homogeneous(3 * a)) return false;
    }
    return true;
}

HbarSeries apply_shifted(const HbarSeries& s, int shift,
                         const std::function<OddPoly(const OddPoly&)>& f) {
    HbarSeries out(s.truncation_degree());
    for (auto& [a, p] : s.slices()) out.add_to_slice(a + shift, f(p));
    return out;
}

HbarSeries log_one_plus(const HbarSeries& x, int max_order) {
    for (auto& [a, p] : x.slices()) {
        (void)p;
        if (a <= 0) throw std::invalid_argument("log argument needs positive minimum hbar-order");
    }
    HbarSeries acc(x.truncation_degree());
    HbarSeries power = x;
    for (int n = 1; n <= max_order && !power.is_zero(); ++n) {
        acc += power.scaled(rational(n % 2 == 1 ? 1 : -1, n));
        power = power.mul(x, max_order);
    }
    return acc;
}

}  // namespace schurq
