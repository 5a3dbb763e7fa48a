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

#include "signrep/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <variant>

namespace signrep {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string str(const Rational& q) { return q.str(); }

// Sums of every subset of a weight vector, masks bucketed by size and sorted by (sum, mask).
template <class T>
struct SubsetTable {
    std::vector<T> sum;
    std::vector<std::vector<std::uint32_t>> by_size;

    explicit SubsetTable(const std::vector<T>& w) {
        const std::size_t n = w.size();
        const std::uint32_t full = 1u << n;
        sum.assign(full, T(0));
        by_size.assign(n + 1, {});
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            const std::uint32_t low = mask & (~mask + 1);
            sum[mask] = sum[mask ^ low] + w[static_cast<std::size_t>(std::countr_zero(mask))];
        }
        for (std::uint32_t mask = 0; mask < full; ++mask) by_size[std::popcount(mask)].push_back(mask);
        for (auto& bucket : by_size)
            std::sort(bucket.begin(), bucket.end(), [&](std::uint32_t a, std::uint32_t b) {
                return sum[a] < sum[b] || (sum[a] == sum[b] && a < b);
            });
    }

    std::vector<std::uint32_t> matching(std::size_t size, const T& value) const {
        const auto& bucket = by_size[size];
        auto lo = std::lower_bound(bucket.begin(), bucket.end(), value,
                                   [&](std::uint32_t m, const T& v) { return sum[m] < v; });
        std::vector<std::uint32_t> out;
        for (; lo != bucket.end() && sum[*lo] == value; ++lo) out.push_back(*lo);
        return out;
    }
};

std::vector<WeightIndex> mask_to_indices(std::uint32_t mask, std::size_t d) {
    std::vector<WeightIndex> out;
    for (std::size_t t = 0; mask >> t; ++t)
        if (mask >> t & 1) out.emplace_back(t / d, t % d);
    return out;
}

std::vector<std::size_t> mask_to_rows(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; mask >> t; ++t)
        if (mask >> t & 1) out.push_back(t);
    return out;
}

Int lcm_of_denominators(const std::vector<Rational>& xs) {
    Int l = 1;
    for (const auto& x : xs) l = boost::multiprecision::lcm(l, Int(denominator(x)));
    return l;
}

// Weights scaled to integers with one subset table, in machine integers when the sums fit.
class Scanner {
public:
    explicit Scanner(const WeightSlopeData& data) : m_(data.m), d_(data.d) {
        require(m_ * d_ <= kEnumerationCap, ErrorKind::TooLarge,
                "subset enumeration over " + std::to_string(m_ * d_) + " weight indices exceeds the cap of " +
                    std::to_string(kEnumerationCap));
        std::vector<Rational> flat;
        for (const auto& row : data.k) flat.insert(flat.end(), row.begin(), row.end());
        scale_ = lcm_of_denominators(flat);
        std::vector<Int> w;
        Int total = 0;
        for (const auto& x : flat) {
            w.push_back(Int(numerator(x * Rational(scale_))));
            total += abs(w.back());
        }
        if (total < (Int(1) << 62)) {
            std::vector<std::int64_t> w64;
            for (const auto& x : w) w64.push_back(static_cast<std::int64_t>(x));
            table_ = SubsetTable<std::int64_t>(w64);
        } else {
            table_ = SubsetTable<Int>(w);
        }
        std::visit([&](const auto& t) { find_gap(t); }, table_);
    }

    const std::optional<Rational>& min_gap() const { return gap_; }
    std::uint32_t gap_i() const { return gap_i_; }
    std::uint32_t gap_j() const { return gap_j_; }

    // Index sets J of size |I|*d with K*k_J = K*k_I + s_I, for every proper nonempty row set I.
    std::vector<Obstruction> obstructions(const std::vector<Rational>& s, const Int& factor) const {
        std::vector<Obstruction> out;
        const std::uint32_t rows_full = 1u << m_;
        for (std::uint32_t rows = 1; rows + 1 < rows_full; ++rows) {
            Rational s_sum = 0;
            std::uint32_t cells = 0;
            for (std::size_t i = 0; i < m_; ++i)
                if (rows >> i & 1) {
                    s_sum += s[i];
                    for (std::size_t e = 0; e < d_; ++e) cells |= 1u << (i * d_ + e);
                }
            const Rational shift = s_sum * Rational(scale_) / Rational(factor);
            if (denominator(shift) != 1) continue;
            const std::size_t size = static_cast<std::size_t>(std::popcount(cells));
            std::visit(
                [&](const auto& t) {
                    using T = std::decay_t<decltype(t.sum[0])>;
                    const Int target = Int(t.sum[cells]) + numerator(shift);
                    if constexpr (std::is_same_v<T, std::int64_t>) {
                        if (abs(target) >= (Int(1) << 62)) return;
                        for (auto j : t.matching(size, static_cast<std::int64_t>(target)))
                            out.push_back(Obstruction{mask_to_rows(rows), mask_to_indices(j, d_)});
                    } else {
                        for (auto j : t.matching(size, target))
                            out.push_back(Obstruction{mask_to_rows(rows), mask_to_indices(j, d_)});
                    }
                },
                table_);
        }
        return out;
    }

private:
    template <class T>
    void find_gap(const SubsetTable<T>& t) {
        const std::size_t n = m_ * d_;
        std::optional<T> best;
        for (std::size_t r = 1; r < n; ++r) {
            const auto& b = t.by_size[r];
            for (std::size_t p = 0; p + 1 < b.size(); ++p) {
                const T diff = t.sum[b[p + 1]] - t.sum[b[p]];
                if (!best || diff < *best) {
                    best = diff;
                    gap_i_ = b[p];
                    gap_j_ = b[p + 1];
                }
            }
        }
        if (best) gap_ = Rational(Int(*best)) / Rational(scale_);
    }

    std::size_t m_, d_;
    Int scale_;
    std::variant<SubsetTable<std::int64_t>, SubsetTable<Int>> table_{SubsetTable<std::int64_t>({})};
    std::optional<Rational> gap_;
    std::uint32_t gap_i_ = 0, gap_j_ = 0;
};

GeneralPositionReport position_report(const WeightSlopeData& data, const Scanner& sc, const Rational& multiplier) {
    GeneralPositionReport r;
    r.c_gp = slope_distance(data);
    r.multiplier = multiplier;
    r.min_gap = sc.min_gap();
    if (r.min_gap) {
        r.margin = *r.min_gap - multiplier * r.c_gp;
        r.holds = *r.margin > 0;
        r.worst_i = mask_to_indices(sc.gap_i(), data.d);
        r.worst_j = mask_to_indices(sc.gap_j(), data.d);
    }
    return r;
}

Rational abs_sum(const std::vector<Rational>& xs) {
    Rational t = 0;
    for (const auto& x : xs) t += abs(x);
    return t;
}

Int move_factor(const Scanner& sc, const Rational& bound) {
    if (!sc.min_gap() || *sc.min_gap() > bound) return Int(1);
    const Rational q = bound / *sc.min_gap();
    return Int(numerator(q) / denominator(q)) + 1;
}

ObstructionScan scan_with(const Scanner& sc, const WeightSlopeData& data, const RefinementChoice& choice,
                          const Rational& bound, const Int& factor) {
    ObstructionScan out;
    out.zc_member = !sc.min_gap() || *sc.min_gap() * Rational(factor) > bound;
    out.obstructions = sc.obstructions(choice.s, factor);
    const bool sums_nonzero = verify_partial_sums(data, choice).holds;
    if (out.zc_member && sums_nonzero) {
        require(out.obstructions.empty(), ErrorKind::Internal,
                "admissible subobject found although weights are separated and partial sums are nonzero");
        out.implication_checked = true;
    }
    return out;
}

WeightSlopeData scaled(const WeightSlopeData& data, const RefinementChoice& choice, const Int& factor) {
    WeightSlopeData out = data;
    out.vp0.reset();
    for (auto& row : out.k)
        for (auto& x : row) x *= Rational(factor);
    for (std::size_t i = 0; i < out.m; ++i) out.v[i] = row_weight(out, i) + choice.s[i];
    return out;
}

RefinePipeline run_pipeline(const WeightSlopeData& data, const Scanner& sc, GeneralPositionReport pos,
                            const std::optional<std::vector<std::size_t>>& perm) {
    RefinePipeline out;
    out.position = std::move(pos);
    out.move_factor = 1;
    if (!out.position.holds) return out;
    out.matching = canonical_match(data);
    out.choice = choose_refinement(out.matching.matched, perm);
    out.partial_sums = verify_partial_sums(out.matching.matched, out.choice);
    out.bound = abs_sum(out.choice.s);
    out.move_factor = move_factor(sc, out.bound);
    out.scan = scan_with(sc, out.matching.matched, out.choice, out.bound, out.move_factor);
    out.passed = out.partial_sums.holds && out.partial_sums.bound_consistent && out.partial_sums.bound_positive &&
                 out.scan.implication_checked;
    return out;
}

}  // namespace

void validate(const WeightSlopeData& data) {
    require(data.m >= 1 && data.d >= 1, ErrorKind::InvalidWeights, "m and d must be positive");
    require(data.k.size() == data.m, ErrorKind::InvalidWeights, "weight grid must have m rows");
    require(data.v.size() == data.m, ErrorKind::InvalidWeights, "slope vector must have m entries");
    for (std::size_t i = 0; i < data.m; ++i) {
        require(data.k[i].size() == data.d, ErrorKind::InvalidWeights,
                "weight row " + std::to_string(i) + " must have d entries");
        if (i > 0)
            for (std::size_t s = 0; s < data.d; ++s)
                require(data.k[i - 1][s] <= data.k[i][s], ErrorKind::InvalidWeights,
                        "weights for embedding " + std::to_string(s) + " are not sorted at row " + std::to_string(i));
    }
    if (data.vp0) {
        Rational total = 0;
        for (const auto& row : data.k)
            for (const auto& x : row) total += x;
        require(*data.vp0 == total, ErrorKind::InvalidWeights, "vP0 differs from the total weight");
    }
}

Rational weight_sum(const WeightSlopeData& data, const std::vector<WeightIndex>& indices) {
    Rational total = 0;
    for (const auto& [i, s] : indices) {
        require(i < data.m && s < data.d, ErrorKind::IndexOutOfRange,
                "weight index (" + std::to_string(i) + "," + std::to_string(s) + ") out of range");
        total += data.k[i][s];
    }
    return total;
}

Rational row_weight(const WeightSlopeData& data, std::size_t i) {
    require(i < data.m, ErrorKind::IndexOutOfRange, "row out of range");
    return std::accumulate(data.k[i].begin(), data.k[i].end(), Rational(0));
}

Rational slope_distance(const WeightSlopeData& data) {
    Rational c = 0;
    for (std::size_t i = 0; i < data.m; ++i) {
        std::optional<Rational> best;
        for (std::size_t j = 0; j < data.m; ++j) {
            Rational dist = abs(data.v[i] - row_weight(data, j));
            if (!best || dist < *best) best = dist;
        }
        c = std::max(c, *best);
    }
    return c;
}

GeneralPositionReport general_position(const WeightSlopeData& data, const Rational& multiplier) {
    validate(data);
    return position_report(data, Scanner(data), multiplier);
}

AugmentResult augment_with_character(const WeightSlopeData& data, const std::optional<std::vector<Int>>& a) {
    validate(data);
    const std::size_t n = data.m;
    AugmentResult out;
    out.c_before = slope_distance(data);
    if (n % 2 == 1) {
        require(!a.has_value(), ErrorKind::OddDimension, "explicit augmentation needs an even dimension");
        out.data = data;
        out.c_after = out.c_before;
        out.check = general_position(data, Rational(static_cast<long long>(n)));
        return out;
    }
    const std::size_t m = n + 1;
    const Rational half(static_cast<long long>((m - 1) / 2));
    auto build = [&](const std::vector<Int>& coeffs) {
        require(coeffs.size() == data.d, ErrorKind::InvalidWeights, "need one augmentation value per embedding");
        WeightSlopeData aug = data;
        std::vector<Rational> row;
        for (std::size_t s = 0; s < data.d; ++s) {
            row.push_back(half + Rational(coeffs[s]));
            require(data.k[n - 1][s] <= row.back(), ErrorKind::InvalidWeights,
                    "augmented weight below the existing weights for embedding " + std::to_string(s));
        }
        aug.m = m;
        aug.k.push_back(row);
        aug.v.push_back(std::accumulate(row.begin(), row.end(), Rational(0)));
        if (aug.vp0) *aug.vp0 += aug.v.back();
        return aug;
    };
    const Rational mult(static_cast<long long>(m));

    if (a) {
        out.data = build(*a);
        out.a = *a;
        out.c_after = slope_distance(out.data);
        out.check = general_position(out.data, mult);
        out.attempts = 1;
        return out;
    }

    Rational max_k = 0, max_v = 0;
    for (const auto& row : data.k)
        for (const auto& x : row) max_k = std::max(max_k, Rational(abs(x)));
    for (const auto& x : data.v) max_v = std::max(max_v, Rational(abs(x)));
    const Rational raw = Rational(static_cast<long long>(m + 2)) * (out.c_before + max_k + max_v);
    Int base = numerator(raw) / denominator(raw);
    if (Rational(base) < raw) base += 1;
    if (base == 0) base = 1;
    for (std::size_t attempt = 0; attempt <= 8; ++attempt) {
        std::vector<Int> coeffs;
        Int power = 1;
        for (std::size_t s = 0; s < data.d; ++s) {
            coeffs.push_back(base * power);
            power *= 3;
        }
        WeightSlopeData aug = build(coeffs);
        GeneralPositionReport rep = general_position(aug, mult);
        const Rational c_after = slope_distance(aug);
        if (rep.holds && c_after == out.c_before) {
            out.data = std::move(aug);
            out.a = std::move(coeffs);
            out.c_after = c_after;
            out.check = std::move(rep);
            out.attempts = attempt + 1;
            return out;
        }
        base *= 2;
    }
    fail(ErrorKind::AutoChoiceFailed, "no augmentation keeps the data in general position");
}

Matching canonical_match(const WeightSlopeData& data) {
    validate(data);
    const std::size_t m = data.m;
    std::vector<Rational> rows;
    for (std::size_t j = 0; j < m; ++j) rows.push_back(row_weight(data, j));
    std::vector<std::size_t> assigned(m);
    std::vector<std::optional<std::size_t>> owner(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < m; ++j)
            if (abs(data.v[i] - rows[j]) < abs(data.v[i] - rows[best])) best = j;
        for (std::size_t j = 0; j < m; ++j)
            if (j != best && abs(data.v[i] - rows[j]) == abs(data.v[i] - rows[best]))
                fail(ErrorKind::AmbiguousMatching, "slope " + std::to_string(i) + " (" + str(data.v[i]) +
                                                       ") is equidistant from rows " + std::to_string(best) + " and " +
                                                       std::to_string(j));
        if (owner[best])
            fail(ErrorKind::AmbiguousMatching, "slopes " + std::to_string(*owner[best]) + " and " + std::to_string(i) +
                                                   " both claim row " + std::to_string(best));
        owner[best] = i;
        assigned[i] = best;
    }
    Matching out;
    out.order.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.order[assigned[i]] = i;
    out.matched = data;
    for (std::size_t j = 0; j < m; ++j) out.matched.v[j] = data.v[out.order[j]];
    for (std::size_t j = 1; j < m; ++j)
        require(out.matched.v[j - 1] < out.matched.v[j], ErrorKind::AmbiguousMatching,
                "matched slopes are not strictly increasing at row " + std::to_string(j));
    return out;
}

RefinementChoice choose_refinement(const WeightSlopeData& matched, const std::optional<std::vector<std::size_t>>& perm) {
    const std::size_t m = matched.m;
    RefinementChoice out;
    if (perm) {
        out.perm = *perm;
    } else {
        for (std::size_t i = 0; i < m; ++i) out.perm.push_back((i + 1) % m);
    }
    require(out.perm.size() == m, ErrorKind::NotTransitive, "permutation has the wrong length");
    std::vector<bool> seen(m, false);
    for (std::size_t x : out.perm) {
        require(x < m && !seen[x], ErrorKind::NotTransitive, "not a permutation of the rows");
        seen[x] = true;
    }
    std::size_t len = 0, at = 0;
    do {
        at = out.perm[at];
        ++len;
    } while (at != 0);
    require(len == m, ErrorKind::NotTransitive, "permutation is not a single cycle");
    for (std::size_t i = 0; i < m; ++i) out.s.push_back(matched.v[out.perm[i]] - row_weight(matched, i));
    return out;
}

std::vector<std::vector<std::size_t>> transitive_permutations(std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    if (m == 0) return out;
    std::vector<std::size_t> rest(m - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        std::vector<std::size_t> p(m);
        std::size_t at = 0;
        for (std::size_t x : rest) {
            p[at] = x;
            at = x;
        }
        p[at] = 0;
        out.push_back(std::move(p));
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::sort(out.begin(), out.end());
    return out;
}

PartialSumReport verify_partial_sums(const WeightSlopeData& matched, const RefinementChoice& choice) {
    const std::size_t m = matched.m;
    require(m <= kEnumerationCap, ErrorKind::TooLarge, "too many rows for subset enumeration");
    std::vector<Rational> rows, dev;
    for (std::size_t j = 0; j < m; ++j) {
        rows.push_back(row_weight(matched, j));
        dev.push_back(abs(matched.v[j] - rows.back()));
    }
    PartialSumReport out;
    const std::uint32_t full = 1u << m;
    for (std::uint32_t mask = 1; mask + 1 < full; ++mask) {
        Rational s_sum = 0, k_i = 0, k_j = 0, spread = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) {
                s_sum += choice.s[i];
                k_i += rows[i];
                const std::size_t j = choice.perm[i];
                k_j += rows[j];
                spread += dev[j];
            }
        ++out.subsets;
        const Rational mag = abs(s_sum);
        if (mag == 0) out.holds = false;
        if (!out.min_abs || mag < *out.min_abs) {
            out.min_abs = mag;
            out.witness = mask_to_rows(mask);
        }
        const Rational lower = abs(k_j - k_i) - spread;
        if (mag < lower) out.bound_consistent = false;
        if (lower <= 0) out.bound_positive = false;
    }
    return out;
}

ObstructionScan scan_admissible_obstructions(const WeightSlopeData& data, const RefinementChoice& choice,
                                             const Rational& bound) {
    validate(data);
    require(choice.s.size() == data.m, ErrorKind::InvalidWeights, "offset vector must have m entries");
    return scan_with(Scanner(data), data, choice, bound, Int(1));
}

std::pair<WeightSlopeData, Int> moved_point(const WeightSlopeData& matched, const RefinementChoice& choice,
                                            const Rational& bound) {
    validate(matched);
    const Int factor = move_factor(Scanner(matched), bound);
    return {scaled(matched, choice, factor), factor};
}

bool weak_admissibility_product(const WeightSlopeData& data) {
    Rational kt = 0, vt = 0;
    for (const auto& row : data.k)
        for (const auto& x : row) kt += x;
    for (const auto& x : data.v) vt += x;
    return kt == vt;
}

RefinePipeline refine(const WeightSlopeData& data, const std::optional<std::vector<std::size_t>>& perm) {
    validate(data);
    Scanner sc(data);
    return run_pipeline(data, sc, position_report(data, sc, Rational(static_cast<long long>(data.m))), perm);
}

std::vector<RefinePipeline> refine_all_cycles(const WeightSlopeData& data) {
    validate(data);
    Scanner sc(data);
    const auto pos = position_report(data, sc, Rational(static_cast<long long>(data.m)));
    std::vector<RefinePipeline> out;
    for (const auto& p : transitive_permutations(data.m)) out.push_back(run_pipeline(data, sc, pos, p));
    return out;
}

WeightSlopeData random_weight_slope_data(std::mt19937_64& rng, std::size_t m, std::size_t d, bool balanced) {
    require(m >= 1 && d >= 1 && m * d <= kEnumerationCap, ErrorKind::TooLarge, "generator size out of range");
    require(!balanced || m >= 2, ErrorKind::TooLarge, "balanced offsets need m >= 2");
    auto uniform = [&](long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); };

    // offsets: nonzero, |delta| < r, all pairwise sums distinct and nonzero
    const long long r = 8 * static_cast<long long>(m * m) + 8;
    std::vector<long long> delta;
    auto fresh = [&](long long cand) {
        return cand != 0 && std::find(delta.begin(), delta.end(), cand) == delta.end();
    };
    if (balanced) {
        // distinct, nonzero, zero total
        while (delta.size() < m) {
            delta.clear();
            long long total = 0;
            while (delta.size() + 1 < m) {
                const long long cand = uniform(1, r / 2) * (uniform(0, 1) ? 1 : -1);
                if (fresh(cand)) {
                    delta.push_back(cand);
                    total += cand;
                }
            }
            if (fresh(-total) && std::llabs(total) < r) delta.push_back(-total);
        }
    }
    while (delta.size() < m) {
        const long long cand = uniform(1, r - 1) * (uniform(0, 1) ? 1 : -1);
        bool ok = fresh(cand) && std::find(delta.begin(), delta.end(), -cand) == delta.end();
        std::vector<long long> sums;
        std::vector<long long> all = delta;
        all.push_back(cand);
        for (std::size_t a = 0; ok && a < all.size(); ++a)
            for (std::size_t b = a + 1; b < all.size(); ++b) sums.push_back(all[a] + all[b]);
        std::sort(sums.begin(), sums.end());
        ok = ok && std::adjacent_find(sums.begin(), sums.end()) == sums.end() &&
             std::find(sums.begin(), sums.end(), 0LL) == sums.end();
        if (ok) delta.push_back(cand);
    }

    // weight ladder with ratio at least 3; the base exceeds 2(m+1) times any offset
    std::vector<long long> ladder{2 * static_cast<long long>(m + 1) * r + uniform(0, r)};
    while (ladder.size() < m * d) ladder.push_back(3 * ladder.back() + uniform(0, ladder.back() / 2));

    const long long den = uniform(1, 6);
    WeightSlopeData out;
    out.m = m;
    out.d = d;
    out.k.assign(m, std::vector<Rational>(d));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t s = 0; s < d; ++s) out.k[i][s] = Rational(ladder[i * d + s], den);
    for (std::size_t i = 0; i < m; ++i) out.v.push_back(row_weight(out, i) + Rational(delta[i], den));
    std::shuffle(out.v.begin(), out.v.end(), rng);
    if (balanced) {
        Rational total = 0;
        for (std::size_t i = 0; i < m; ++i) total += row_weight(out, i);
        out.vp0 = total;
    }
    return out;
}

}  // namespace signrep
