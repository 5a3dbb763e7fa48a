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

#include "doctest.h"

#include "signrep/hodge.hpp"
#include "signrep/specialize.hpp"
#include "support/generators.hpp"

#include <algorithm>

using namespace signrep;
using namespace signrep::testing;

namespace {

/// Elements of the subgroup generated by g and c(g).
std::vector<std::size_t> stable_subgroup(const InvolutiveGroup& IG, std::size_t g) {
    const FiniteGroup& G = IG.group();
    std::vector<bool> seen(G.order(), false);
    std::vector<std::size_t> out{G.identity()};
    seen[G.identity()] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t s : {g, IG.c(g)}) {
            const std::size_t x = G.mul(out[i], s);
            if (!seen[x]) {
                seen[x] = true;
                out.push_back(x);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("perp is an involution and witnesses have sign +-1") {
    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        auto [rep, expected] = sign_pool_rep(rng);
        const InvolutiveRep twice = perp(perp(rep));
        CHECK(twice.images == rep.images);
        const auto w = intertwiner(rep);
        REQUIRE(w);
        CHECK((w->lambda == 1 || w->lambda == -1));
        CHECK(w->lambda == expected);
        CHECK(transpose(w->a) == scale(w->a, rep.field.from_int(w->lambda)));
    }
}

TEST_CASE("twisted characters are involution-compatible and keep the sign") {
    Rng rng(12);
    for (int i = 0; i < 60; ++i) {
        const InvolutiveRep rep = i % 2 ? odd_dimension_rep(rng) : sign_pool_rep(rng).rep;
        const int before = sign(rep);
        const InvolutiveRep tw = twist(rep, determinant_power(rep, static_cast<long long>(uniform_int(rng, 1, 4))));
        for (std::size_t g = 0; g < tw.group.order(); ++g) CHECK(tw.character[tw.group.c(g)] == tw.character[g]);
        CHECK(sign(tw) == before);
    }
}

TEST_CASE("Burnside span: conjugation, extension and restriction") {
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        const InvolutiveRep rep = sign_pool_rep(rng).rep;
        const std::size_t full = image_span_dimension(rep);
        CHECK(full == rep.dim * rep.dim);
        CHECK(image_span_dimension(conjugate(rep, random_invertible(rep.field, rep.dim, rng))) == full);
        CHECK(image_span_dimension(extend_scalars(rep, random_overfield(rep.field, rng))) == full);
        const auto sub = stable_subgroup(rep.group, uniform_int(rng, 0, rep.group.order() - 1));
        CHECK(image_span_dimension(restrict_rep(rep, sub).rep) <= full);
    }
}

TEST_CASE("reduction commutes with products on generated families") {
    Rng rng(14);
    for (std::size_t i = 0; i < 12; ++i) {
        const DvrRep fam = i % 2 ? split_family(i, rng) : equal_count_family(i, rng);
        const std::size_t order = fam.group.order();
        for (int k = 0; k < 10; ++k) {
            const std::size_t g = uniform_int(rng, 0, order - 1), h = uniform_int(rng, 0, order - 1);
            const std::size_t gh = fam.group.group().mul(g, h);
            CHECK(fam.dvr.reduce(fam.images[gh]) == fam.dvr.reduce(fam.images[g]) * fam.dvr.reduce(fam.images[h]));
        }
    }
}

TEST_CASE("goodness propagates and lifted idempotents double their precision") {
    Rng rng(15);
    for (std::size_t i = 0; i < 40; ++i) {
        const DvrRep fam = i < 20 ? split_family(i, rng) : equal_count_family(i - 20, rng);
        const SpecializeReport r = specialize_sign(fam, 24);
        if (r.generic_good) CHECK(r.residual_good);
        if (r.counts_equal) CHECK(r.generic_good == r.residual_good);
        for (const auto& lc : r.lifts) {
            const auto& hist = lc.lift.defect_history;
            REQUIRE(!hist.empty());
            for (std::size_t j = 1; j < hist.size(); ++j) CHECK(hist[j] >= std::min<long>(2 * hist[j - 1], 24));
            CHECK(lc.lift.tau_fixed);
            CHECK(lc.lift.defect_valuation >= 24);
        }
    }
}

TEST_CASE("augmentation keeps the slope distance and the determinant identity") {
    Rng rng(16);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 2 * uniform_int(rng, 1, 3);
        const WeightSlopeData data = random_weight_slope_data(rng, n, 1 + uniform_int(rng, 0, 1), i % 2 == 0);
        const AugmentResult res = augment_with_character(data, std::nullopt);
        CHECK(res.c_after == slope_distance(data));
        CHECK(weak_admissibility_product(res.data) == weak_admissibility_product(data));
    }
}

TEST_CASE("obstruction scans are empty on generated instances") {
    Rng rng(17);
    for (int i = 0; i < 30; ++i) {
        const WeightSlopeData data = random_weight_slope_data(rng, 2 + uniform_int(rng, 0, 3), 1 + uniform_int(rng, 0, 2));
        for (const auto& run : refine_all_cycles(data)) {
            CHECK(run.partial_sums.holds);
            CHECK(run.scan.zc_member);
            CHECK(run.scan.obstructions.empty());
        }
    }
}
