#include "schurq/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace schurq {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("strict partition parts must be positive");
        if (i > 0 && parts_[i - 1] <= parts_[i]) {
            throw std::invalid_argument("strict partition parts must strictly decrease");
        }
    }
}

int StrictPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool StrictPartition::operator<(const StrictPartition& o) const {
    int wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    return parts_ > o.parts_;  // larger lex vector sorts first within a weight
}

NormalizeResult normalize(const IntVector& v) {
    std::vector<int> w = v;
    int sign = 1;
    int pair_factor = 1;

    int negatives = static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }));
    if (negatives > 1) throw MoreThanOneNegativePart("more than one negative part");

    if (negatives == 1) {
        std::size_t i = 0;
        while (w[i] >= 0) ++i;
        // Exactly one later part must equal -w[i]; otherwise Q vanishes.
        std::size_t j = 0;
        int matches = 0;
        for (std::size_t k = i + 1; k < w.size(); ++k) {
            if (w[k] == -w[i]) {
                j = k;
                ++matches;
            }
        }
        if (matches != 1) return {0, StrictPartition{}};
        long exponent = static_cast<long>(j) - static_cast<long>(i) - 1 + w[j];
        pair_factor = (exponent % 2 == 0) ? 2 : -2;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    }

    // Bubble zeros to the end: each zero/positive swap flips the sign, and
    // trailing zeros drop freely.
    long zero_swaps = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) continue;
        for (std::size_t k = i + 1; k < w.size(); ++k) {
            if (w[k] > 0) ++zero_swaps;
        }
    }
    if (zero_swaps % 2 != 0) sign = -sign;
    std::erase(w, 0);

    // Sort decreasing, tracking the permutation parity.
    long inversions = 0;
    for (std::size_t a = 0; a < w.size(); ++a) {
        for (std::size_t b = a + 1; b < w.size(); ++b) {
            if (w[a] == w[b]) return {0, StrictPartition{}};
            if (w[a] < w[b]) ++inversions;
        }
    }
    if (inversions % 2 != 0) sign = -sign;
    std::sort(w.begin(), w.end(), std::greater<int>());

    return {sign * pair_factor, StrictPartition(std::move(w))};
}

namespace {

void strict_of_weight(int remaining, int max_part, std::vector<int>& prefix,
                      std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        if (remaining - first > 0 && remaining - first > (first - 1) * first / 2) continue;
        prefix.push_back(first);
        strict_of_weight(remaining - first, first - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> enumerate_strict(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("max_weight must be non-negative");
    std::vector<StrictPartition> out;
    std::vector<int> prefix;
    for (int w = 0; w <= max_weight; ++w) {
        strict_of_weight(w, w, prefix, out);
    }
    return out;
}

StandardFormResult standard_form(const IntVector& v) {
    StandardFormResult res;
    // Class ranks 0/1/2 by residue; inversions of the stable rearrangement.
    long inversions = 0;
    std::vector<int> rank(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) throw std::invalid_argument("standard_form requires non-negative parts");
        rank[i] = v[i] % 3;
    }
    for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = a + 1; b < v.size(); ++b) {
            if (rank[a] > rank[b]) ++inversions;
        }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        switch (rank[i]) {
            case 0: res.form.ks.push_back(v[i] / 3); break;
            case 1: res.form.ms.push_back((v[i] - 1) / 3); break;
            default: res.form.ns.push_back((v[i] - 2) / 3); break;
        }
    }
    res.sign = (inversions % 2 == 0) ? 1 : -1;
    return res;
}

StandardFormResult standard_form(const StrictPartition& sp) {
    return standard_form(sp.parts());
}

IntVector StandardForm::reassemble() const {
    IntVector v;
    v.reserve(ks.size() + ms.size() + ns.size());
    for (int k : ks) v.push_back(3 * k);
    for (int m : ms) v.push_back(3 * m + 1);
    for (int n : ns) v.push_back(3 * n + 2);
    return v;
}

}  // namespace schurq
