#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "schurq/partition.hpp"

using namespace schurq;

namespace {

// Independent enumeration oracle: subsets of {1..max_weight} by weight.
std::vector<std::vector<int>> brute_strict(int max_weight) {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> found;
    for (int mask = 0; mask < (1 << (max_weight > 0 ? max_weight : 1)); ++mask) {
        std::vector<int> parts;
        int w = 0;
        for (int p = max_weight; p >= 1; --p) {
            if (mask & (1 << (p - 1))) {
                parts.push_back(p);
                w += p;
            }
        }
        if (w <= max_weight) found.push_back(parts);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        int wa = 0, wb = 0;
        for (int x : a) wa += x;
        for (int x : b) wb += x;
        if (wa != wb) return wa < wb;
        return a > b;
    });
    return found;
}

}  // namespace

TEST_CASE("normalize on already-strict input is the identity") {
    auto res = normalize({3, 2, 1});
    CHECK(res.coefficient == 1);
    CHECK(res.partition.parts() == std::vector<int>{3, 2, 1});
}

TEST_CASE("normalize kills repeated positive parts") {
    auto res = normalize({2, 2});
    CHECK(res.coefficient == 0);
    CHECK(res.partition.empty());
}

TEST_CASE("normalize strips trailing zero freely") {
    auto res = normalize({3, 0});
    CHECK(res.coefficient == 1);
    CHECK(res.partition.parts() == std::vector<int>{3});
}

TEST_CASE("normalize zero swap with positive part costs a sign") {
    auto res = normalize({0, 3});
    CHECK(res.coefficient == -1);
    CHECK(res.partition.parts() == std::vector<int>{3});

    // Two zeros swap freely: (0,0,2) -> two zero/positive swaps.
    auto res2 = normalize({0, 0, 2});
    CHECK(res2.coefficient == 1);
    CHECK(res2.partition.parts() == std::vector<int>{2});
}

TEST_CASE("normalize matched negative pair") {
    auto res = normalize({2, -1, 1});
    CHECK(res.coefficient == -2);
    CHECK(res.partition.parts() == std::vector<int>{2});
}

TEST_CASE("normalize unmatched or ambiguous negative part vanishes") {
    CHECK(normalize({3, -2}).coefficient == 0);
    CHECK(normalize({-3}).coefficient == 0);
    // match exists only before the negative part
    CHECK(normalize({1, -1, 3}).coefficient == 0);
    // two candidate matches after it
    CHECK(normalize({-1, 1, 0, 1}).coefficient == 0);
}

TEST_CASE("normalize rejects two negative parts") {
    CHECK_THROWS_AS(normalize({-1, -2, 3}), MoreThanOneNegativePart);
}

TEST_CASE("normalize negative pair with zero in between") {
    // factor (-1)^(j-i-1+lambda_j) * 2 counted on the raw vector
    auto res = normalize({2, -1, 0, 1});
    CHECK(res.coefficient == 2);
    CHECK(res.partition.parts() == std::vector<int>{2});
}

TEST_CASE("adjacent swap flips the returned coefficient") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> part(0, 6), len(2, 5);
    for (int trial = 0; trial < 300; ++trial) {
        IntVector v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v) x = part(rng);
        std::uniform_int_distribution<std::size_t> pos(0, v.size() - 2);
        std::size_t i = pos(rng);
        if (v[i] == 0 && v[i + 1] == 0) continue;
        if (v[i] == v[i + 1]) continue;  // swap of equal parts is the identity
        IntVector w = v;
        std::swap(w[i], w[i + 1]);
        auto a = normalize(v), b = normalize(w);
        CHECK(a.coefficient == -b.coefficient);
        CHECK(a.partition == b.partition);
    }
}

TEST_CASE("enumerate_strict small cases") {
    auto zero = enumerate_strict(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    auto three = enumerate_strict(3);
    REQUIRE(three.size() == 5);
    CHECK(three[0].parts() == std::vector<int>{});
    CHECK(three[1].parts() == std::vector<int>{1});
    CHECK(three[2].parts() == std::vector<int>{2});
    CHECK(three[3].parts() == std::vector<int>{3});
    CHECK(three[4].parts() == std::vector<int>{2, 1});
}

TEST_CASE("enumerate_strict matches the brute-force oracle") {
    for (int w : {5, 8}) {
        auto got = enumerate_strict(w);
        auto expected = brute_strict(w);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].parts() == expected[i]);
    }
    // frozen from the oracle: 10 partitions of weight <= 5 including the empty one
    CHECK(enumerate_strict(5).size() == 10);
}

TEST_CASE("enumerate_strict has no duplicates and is monotone in the bound") {
    auto big = enumerate_strict(9);
    std::set<std::vector<int>> seen;
    for (auto& sp : big) CHECK(seen.insert(sp.parts()).second);
    auto small = enumerate_strict(8);
    for (auto& sp : small) CHECK(seen.count(sp.parts()) == 1);
}

TEST_CASE("standard_form examples") {
    auto a = standard_form(StrictPartition({3, 2, 1}));
    CHECK(a.form.ks == std::vector<int>{1});
    CHECK(a.form.ms == std::vector<int>{0});
    CHECK(a.form.ns == std::vector<int>{0});
    CHECK(a.sign == -1);

    auto b = standard_form(StrictPartition({6, 3}));
    CHECK(b.form.ks == std::vector<int>{2, 1});
    CHECK(b.form.ms.empty());
    CHECK(b.form.ns.empty());
    CHECK(b.sign == 1);

    auto c = standard_form(StrictPartition({5, 4}));
    CHECK(c.form.ks.empty());
    CHECK(c.form.ms == std::vector<int>{1});
    CHECK(c.form.ns == std::vector<int>{1});
    CHECK(c.sign == -1);
    CHECK(c.form.reassemble() == IntVector{4, 5});
}

TEST_CASE("normalize is the identity on strict input") {
    for (auto& sp : enumerate_strict(10)) {
        auto res = normalize(sp.parts());
        CHECK(res.coefficient == 1);
        CHECK(res.partition == sp);
    }
}

TEST_CASE("standard_form reassembly normalizes back to (sign, partition)") {
    for (auto& sp : enumerate_strict(12)) {
        auto sf = standard_form(sp);
        auto norm = normalize(sf.form.reassemble());
        CHECK(norm.coefficient == sf.sign);
        CHECK(norm.partition == sp);
    }
}
