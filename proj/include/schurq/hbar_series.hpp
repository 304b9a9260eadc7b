#pragma once

#include <functional>
#include <map>

#include "schurq/odd_poly.hpp"

namespace schurq {

/// Finite family of ħ-slices, each an OddPoly of t-degree <= the truncation
/// bound. Negative ħ-exponents are allowed (they appear transiently under
/// the Virasoro operators).
class HbarSeries {
public:
    explicit HbarSeries(int truncation_degree) : truncation_degree_(truncation_degree) {}

    static HbarSeries one(int truncation_degree);

    int truncation_degree() const { return truncation_degree_; }
    const std::map<int, OddPoly>& slices() const { return slices_; }
    /// Zero polynomial for absent orders.
    const OddPoly& slice(int order) const;
    bool is_zero() const { return slices_.empty(); }

    /// Stores the slice truncated to the degree bound; drops zero slices.
    void set_slice(int order, OddPoly p);
    void add_to_slice(int order, const OddPoly& p);

    HbarSeries& operator+=(const HbarSeries& o);
    HbarSeries operator+(const HbarSeries& o) const;
    HbarSeries operator-(const HbarSeries& o) const;
    HbarSeries scaled(const Rational& c) const;
    bool operator==(const HbarSeries& o) const;

    /// Slice-convolution product, keeping ħ-orders <= max_order.
    HbarSeries mul(const HbarSeries& o, int max_order) const;

    /// True when every slice sits at ħ^a, a >= 0, and is homogeneous of
    /// t-degree 3a.
    bool kw_graded() const;

private:
    std::map<int, OddPoly> slices_;
    int truncation_degree_;
};

/// Slice at ħ^(a+shift) receives f(slice at ħ^a), summed over sources.
HbarSeries apply_shifted(const HbarSeries& s, int shift,
                         const std::function<OddPoly(const OddPoly&)>& f);

/// log(1 + x) for x with positive minimum ħ-order, kept to max_order.
HbarSeries log_one_plus(const HbarSeries& x, int max_order);

}  // namespace schurq
