/*
   Copyright 2026 The signrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "signrep/hodge.hpp"

#include "doctest.h"
#include "signrep/error.hpp"

#include <random>

using namespace signrep;

namespace {

WeightSlopeData one_embedding(std::vector<long long> k, std::vector<long long> v) {
    WeightSlopeData d;
    d.m = k.size();
    d.d = 1;
    for (auto x : k) d.k.push_back({Rational(x)});
    for (auto x : v) d.v.push_back(Rational(x));
    return d;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

// Every pair of distinct equal-size index sets, compared directly.
Rational brute_min_gap(const WeightSlopeData& d) {
    const std::size_t n = d.m * d.d;
    std::optional<Rational> best;
    for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (std::uint32_t b = a + 1; b < (1u << n); ++b) {
            if (std::popcount(a) != std::popcount(b) || static_cast<std::size_t>(std::popcount(a)) >= n) continue;
            Rational sa = 0, sb = 0;
            for (std::size_t t = 0; t < n; ++t) {
                if (a >> t & 1) sa += d.k[t / d.d][t % d.d];
                if (b >> t & 1) sb += d.k[t / d.d][t % d.d];
            }
            Rational g = boost::multiprecision::abs(sa - sb);
            if (!best || g < *best) best = g;
        }
    return *best;
}

}  // namespace

TEST_CASE("weight sums") {
    auto d = one_embedding({0, 5}, {1, 4});
    CHECK(weight_sum(d, {}) == 0);
    CHECK(weight_sum(d, {{1, 0}}) == 5);
    CHECK(weight_sum(d, {{0, 0}, {1, 0}}) == 5);
    CHECK(kind_of([&] { weight_sum(d, {{2, 0}}); }) == ErrorKind::IndexOutOfRange);
    d.vp0 = Rational(5);
    CHECK_NOTHROW(validate(d));
    d.vp0 = Rational(6);
    CHECK(kind_of([&] { validate(d); }) == ErrorKind::InvalidWeights);
}

TEST_CASE("general position on small hand-checked data") {
    auto r = general_position(one_embedding({0, 5}, {1, 4}), Rational(3));
    CHECK(r.c_gp == 1);
    CHECK(*r.min_gap == 5);
    CHECK(r.holds);

    r = general_position(one_embedding({0, 10, 20}, {1, 9, 21}), Rational(3));
    CHECK(r.c_gp == 1);
    CHECK(*r.min_gap == 10);
    CHECK(r.holds);

    r = general_position(one_embedding({7, 7, 7}, {7, 7, 7}), Rational(1));
    CHECK_FALSE(r.holds);
    CHECK(*r.min_gap == 0);

    WeightSlopeData big;
    big.m = 5;
    big.d = 5;
    big.k.assign(5, std::vector<Rational>(5, Rational(0)));
    big.v.assign(5, Rational(0));
    CHECK(kind_of([&] { general_position(big, Rational(1)); }) == ErrorKind::TooLarge);
}

TEST_CASE("minimal gap agrees with pairwise enumeration") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        WeightSlopeData d;
        d.m = 1 + rng() % 3;
        d.d = 1 + rng() % 3;
        d.k.assign(d.m, std::vector<Rational>(d.d));
        for (std::size_t s = 0; s < d.d; ++s) {
            std::vector<Rational> col;
            for (std::size_t i = 0; i < d.m; ++i) col.push_back(Rational(static_cast<long long>(rng() % 40) - 10, 1 + rng() % 3));
            std::sort(col.begin(), col.end());
            for (std::size_t i = 0; i < d.m; ++i) d.k[i][s] = col[i];
        }
        for (std::size_t i = 0; i < d.m; ++i) d.v.push_back(Rational(static_cast<long long>(rng() % 50)));
        if (d.m * d.d < 2) continue;
        CHECK(*general_position(d, Rational(1)).min_gap == brute_min_gap(d));
    }
}

TEST_CASE("slope distance under shifts and scalings") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        auto d = random_weight_slope_data(rng, 2 + rng() % 4, 1 + rng() % 3);
        const Rational c = slope_distance(d);
        const Rational shift(static_cast<long long>(rng() % 100) - 50, 7);
        const Rational factor(1 + static_cast<long long>(rng() % 9), 1 + static_cast<long long>(rng() % 5));
        auto sh = d, sc = d;
        for (std::size_t i = 0; i < d.m; ++i) {
            // a common shift of every row sum by the same amount: shift only the first embedding
            sh.k[i][0] += shift;
            sh.v[i] += shift;
            for (auto& x : sc.k[i]) x *= factor;
            sc.v[i] *= factor;
        }
        CHECK(slope_distance(sh) == c);
        CHECK(slope_distance(sc) == c * factor);
    }
}

TEST_CASE("augmentation by a far character") {
    auto d = one_embedding({0, 5}, {1, 4});
    auto a = augment_with_character(d, std::nullopt);
    REQUIRE(a.a.has_value());
    CHECK(a.data.m == 3);
    CHECK(a.c_before == 1);
    CHECK(a.c_after == 1);
    CHECK(a.check.holds);
    CHECK(a.data.v[2] == row_weight(a.data, 2));
    CHECK(weak_admissibility_product(a.data));
    CHECK(general_position(a.data, Rational(3)).holds);

    // colliding row: 1 + 4 = 5 equals the previous top weight
    auto bad = augment_with_character(d, std::vector<Int>{4});
    CHECK_FALSE(bad.check.holds);

    auto odd = one_embedding({0, 10, 20}, {1, 9, 21});
    CHECK(kind_of([&] { augment_with_character(odd, std::vector<Int>{100}); }) == ErrorKind::OddDimension);
    CHECK(augment_with_character(odd, std::nullopt).data.m == 3);
}

TEST_CASE("canonical matching") {
    auto m = canonical_match(one_embedding({0, 10, 20}, {21, 1, 9}));
    CHECK(m.order == std::vector<std::size_t>{1, 2, 0});
    CHECK(m.matched.v == std::vector<Rational>{1, 9, 21});

    CHECK(canonical_match(one_embedding({0, 10, 20}, {1, 9, 21})).order == std::vector<std::size_t>{0, 1, 2});
    CHECK(kind_of([] { canonical_match(one_embedding({0, 10}, {5, 9})); }) == ErrorKind::AmbiguousMatching);
    CHECK(kind_of([] { canonical_match(one_embedding({0, 10}, {1, 2})); }) == ErrorKind::AmbiguousMatching);
}

TEST_CASE("refinement and partial sums on the three-row example") {
    auto matched = canonical_match(one_embedding({0, 10, 20}, {1, 9, 21})).matched;
    auto ch = choose_refinement(matched);
    CHECK(ch.s == std::vector<Rational>{9, 11, -19});
    auto ps = verify_partial_sums(matched, ch);
    CHECK(ps.holds);
    CHECK(ps.subsets == 6);
    CHECK(*ps.min_abs == 8);
    CHECK(ps.witness == std::vector<std::size_t>{1, 2});
    CHECK(ps.bound_consistent);

    CHECK(kind_of([&] { choose_refinement(matched, std::vector<std::size_t>{0, 1, 2}); }) == ErrorKind::NotTransitive);
    CHECK(kind_of([&] { choose_refinement(matched, std::vector<std::size_t>{1, 0, 2}); }) == ErrorKind::NotTransitive);
    CHECK(choose_refinement(one_embedding({4}, {4})).s == std::vector<Rational>{0});

    RefinementChoice zero{{1, 0}, {0, 3}};
    CHECK_FALSE(verify_partial_sums(one_embedding({0, 10}, {1, 9}), zero).holds);
}

TEST_CASE("transitive permutations are the m-cycles") {
    CHECK(transitive_permutations(1).size() == 1);
    CHECK(transitive_permutations(3).size() == 2);
    CHECK(transitive_permutations(6).size() == 120);
}

TEST_CASE("obstruction scan") {
    auto d = one_embedding({0, 10, 20}, {1, 9, 21});
    RefinementChoice zero{{1, 2, 0}, {0, 0, 0}};
    auto scan = scan_admissible_obstructions(d, zero, Rational(0));
    CHECK(scan.obstructions.size() == 6);
    CHECK_FALSE(scan.implication_checked);

    auto ch = choose_refinement(d);
    auto at_base = scan_admissible_obstructions(d, ch, Rational(39));
    CHECK_FALSE(at_base.zc_member);

    auto [moved, factor] = moved_point(d, ch, Rational(39));
    CHECK(factor == 4);
    auto s2 = scan_admissible_obstructions(moved, ch, Rational(39));
    CHECK(s2.zc_member);
    CHECK(s2.obstructions.empty());
    CHECK(s2.implication_checked);
}

TEST_CASE("weak admissibility identity") {
    CHECK(weak_admissibility_product(one_embedding({0, 5}, {1, 4})));
    CHECK_FALSE(weak_admissibility_product(one_embedding({0, 5}, {1, 5})));
}

TEST_CASE("generated instances pass the whole pipeline for every cycle") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 10; ++it) {
        auto d = random_weight_slope_data(rng, 2 + rng() % 4, 1 + rng() % 2);
        for (const auto& run : refine_all_cycles(d)) CHECK(run.passed);
    }
    auto run = refine(one_embedding({0, 10, 20}, {1, 9, 21}));
    CHECK(run.passed);
    CHECK(*run.partial_sums.min_abs == 8);
}
