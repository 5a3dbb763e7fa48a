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

#pragma once

#include "signrep/field.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace signrep {

/// Hodge-Tate weights k[i][s] (rows i = 0..m-1, embeddings s = 0..d-1, each
/// column non-decreasing) and Frobenius slopes v[i].
struct WeightSlopeData {
    std::size_t m = 0;
    std::size_t d = 0;
    std::vector<std::vector<Rational>> k;
    std::vector<Rational> v;
    std::optional<Rational> vp0;
};

/// (row, embedding), zero-based.
using WeightIndex = std::pair<std::size_t, std::size_t>;

/// Largest total number of weight indices the subset scans will enumerate.
inline constexpr std::size_t kEnumerationCap = 24;

/// Throws InvalidWeights on shape errors, unsorted columns or an inconsistent vp0.
void validate(const WeightSlopeData& data);

Rational weight_sum(const WeightSlopeData& data, const std::vector<WeightIndex>& indices);
/// Sum of row i over all embeddings.
Rational row_weight(const WeightSlopeData& data, std::size_t i);
/// max_i min_j |v[i] - row_weight(j)|
Rational slope_distance(const WeightSlopeData& data);

struct GeneralPositionReport {
    Rational c_gp;
    Rational multiplier;
    bool holds = true;
    /// Smallest |k_I - k_J| over distinct index sets of equal size below m*d.
    std::optional<Rational> min_gap;
    /// min_gap - multiplier * c_gp
    std::optional<Rational> margin;
    std::vector<WeightIndex> worst_i;
    std::vector<WeightIndex> worst_j;
};

/// Throws TooLarge above kEnumerationCap indices.
GeneralPositionReport general_position(const WeightSlopeData& data, const Rational& multiplier);

struct AugmentResult {
    WeightSlopeData data;
    /// Empty when the input dimension is odd and auto mode left the data alone.
    std::optional<std::vector<Int>> a;
    Rational c_before;
    Rational c_after;
    GeneralPositionReport check;
    std::size_t attempts = 0;
};

/// Appends a row (m-1)/2 + a[s] with slope equal to its weight sum. With no
/// explicit a, picks a[s] = B * 3^s and doubles B until the multiplier-m check
/// passes with c_gp unchanged (AutoChoiceFailed after 8 retries). Explicit a on
/// odd-dimensional input throws OddDimension.
AugmentResult augment_with_character(const WeightSlopeData& data, const std::optional<std::vector<Int>>& a);

struct Matching {
    /// order[j] = input slope index assigned to weight row j.
    std::vector<std::size_t> order;
    /// Input data with slopes renumbered.
    WeightSlopeData matched;
};

/// Throws AmbiguousMatching on ties, collisions or non-increasing matched slopes.
Matching canonical_match(const WeightSlopeData& data);

struct RefinementChoice {
    /// Images perm[i], zero-based.
    std::vector<std::size_t> perm;
    std::vector<Rational> s;
};

/// Default is the cycle i -> i+1 mod m. Throws NotTransitive unless perm is one m-cycle.
RefinementChoice choose_refinement(const WeightSlopeData& matched,
                                   const std::optional<std::vector<std::size_t>>& perm = std::nullopt);

/// All m-cycles, in lexicographic order of their image vectors.
std::vector<std::vector<std::size_t>> transitive_permutations(std::size_t m);

struct PartialSumReport {
    bool holds = true;
    /// Empty when there is no proper nonempty subset (m = 1).
    std::optional<Rational> min_abs;
    /// Subset attaining min_abs (first in increasing bitmask order).
    std::vector<std::size_t> witness;
    std::size_t subsets = 0;
    /// |s_I| >= |k_J - k_I| - sum_{j in J} |v_j - k_j| with J = perm(I), for every I.
    bool bound_consistent = true;
    /// The lower bound is positive for every I.
    bool bound_positive = true;
};

PartialSumReport verify_partial_sums(const WeightSlopeData& matched, const RefinementChoice& choice);

struct Obstruction {
    std::vector<std::size_t> rows;
    std::vector<WeightIndex> weights;
};

struct ObstructionScan {
    bool zc_member = false;
    std::vector<Obstruction> obstructions;
    /// zc_member, all partial sums nonzero, and no obstruction.
    bool implication_checked = false;
};

/// Treats data.k as the weights at the scanned point and choice.s as the offsets.
ObstructionScan scan_admissible_obstructions(const WeightSlopeData& data, const RefinementChoice& choice,
                                             const Rational& bound);

/// The same weights multiplied by the least positive integer that pushes the
/// minimal equal-size subset gap above the bound; slopes are rebuilt as
/// weight + offset. Returns the scaled data and the factor.
std::pair<WeightSlopeData, Int> moved_point(const WeightSlopeData& matched, const RefinementChoice& choice,
                                            const Rational& bound);

/// sum v == sum k
bool weak_admissibility_product(const WeightSlopeData& data);

struct RefinePipeline {
    GeneralPositionReport position;
    Matching matching;
    RefinementChoice choice;
    PartialSumReport partial_sums;
    Rational bound;
    Int move_factor;
    ObstructionScan scan;
    bool passed = false;
};

/// Match, choose, check partial sums, then scan at a moved point with bound sum |s_i|.
RefinePipeline refine(const WeightSlopeData& data, const std::optional<std::vector<std::size_t>>& perm = std::nullopt);
/// refine() for every m-cycle, sharing one subset table.
std::vector<RefinePipeline> refine_all_cycles(const WeightSlopeData& data);

/// Random instance in general position: weights on a geometric ladder of
/// ratio >= 3, slopes offset by small pairwise-sum-free integers, slope order shuffled.
/// With balanced set the offsets only need to be distinct and nonzero, they sum
/// to zero and vP0 is filled in, so the determinant identity holds.
WeightSlopeData random_weight_slope_data(std::mt19937_64& rng, std::size_t m, std::size_t d, bool balanced = false);

}  // namespace signrep
