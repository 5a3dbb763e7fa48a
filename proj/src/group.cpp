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

#include "signrep/group.hpp"

#include "signrep/error.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>
#include <unordered_map>

namespace signrep {

struct FiniteGroup::Impl {
    std::size_t n = 0;
    std::size_t identity = 0;
    std::vector<std::size_t> table;  // n*n, table mode only
    std::vector<std::size_t> inv;
    std::vector<std::size_t> gens;
    std::vector<std::size_t> parent, step, bfs;
    std::vector<std::size_t> right;  // n * gens.size(): g * gens[k]
    std::vector<Matrix> mats;
    std::unordered_multimap<std::size_t, std::size_t> index;

    std::size_t mul(std::size_t a, std::size_t b) const {
        if (!table.empty()) return table[a * n + b];
        thread_local std::vector<std::size_t> steps;
        steps.clear();
        for (std::size_t x = b; x != identity; x = parent[x]) steps.push_back(step[x]);
        std::size_t r = a;
        for (std::size_t i = steps.size(); i-- > 0;) r = right[r * gens.size() + steps[i]];
        return r;
    }

    // Spanning tree and right-multiplication table from the generators.
    void build_tree(const std::function<std::size_t(std::size_t, std::size_t)>& times) {
        const std::size_t k = gens.size();
        parent.assign(n, n);
        step.assign(n, 0);
        right.assign(n * k, 0);
        bfs.clear();
        std::vector<bool> seen(n, false);
        std::deque<std::size_t> q{identity};
        seen[identity] = true;
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop_front();
            bfs.push_back(x);
            for (std::size_t s = 0; s < k; ++s) {
                std::size_t y = times(x, gens[s]);
                right[x * k + s] = y;
                if (!seen[y]) {
                    seen[y] = true;
                    parent[y] = x;
                    step[y] = s;
                    q.push_back(y);
                }
            }
        }
        require(bfs.size() == n, ErrorKind::Internal, "generators do not reach every element");
    }
};

namespace {

std::size_t matrix_hash(const Matrix& m) {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& e : m.entries()) h ^= m.field().hash(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::vector<std::size_t> greedy_generators(std::size_t n, std::size_t identity,
                                           const std::function<std::size_t(std::size_t, std::size_t)>& times,
                                           const std::vector<std::size_t>& universe) {
    std::vector<std::size_t> gens;
    std::vector<bool> in(n, false);
    in[identity] = true;
    std::size_t covered = 1;
    for (std::size_t g : universe) {
        if (in[g]) continue;
        gens.push_back(g);
        // re-close the subgroup generated so far
        std::vector<std::size_t> elems;
        for (std::size_t x = 0; x < n; ++x)
            if (in[x]) elems.push_back(x);
        std::deque<std::size_t> q(elems.begin(), elems.end());
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop_front();
            for (std::size_t s : gens) {
                std::size_t y = times(x, s);
                if (!in[y]) {
                    in[y] = true;
                    ++covered;
                    q.push_back(y);
                }
            }
        }
        if (covered == universe.size()) break;
    }
    return gens;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::size_t>>& t) {
    const std::size_t n = t.size();
    require(n >= 1, ErrorKind::NotAGroup, "empty multiplication table");
    require(n <= kMaxTableOrder, ErrorKind::GroupTooLarge,
            "table groups are limited to order " + std::to_string(kMaxTableOrder));
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        require(t[a].size() == n, ErrorKind::NotAGroup, "multiplication table is not square");
        std::vector<bool> row(n, false);
        for (std::size_t b = 0; b < n; ++b) {
            require(t[a][b] < n, ErrorKind::NotAGroup, "table entry out of range");
            require(!row[t[a][b]], ErrorKind::NotAGroup, "table row is not a permutation");
            row[t[a][b]] = true;
            impl->table[a * n + b] = t[a][b];
        }
    }
    for (std::size_t b = 0; b < n; ++b) {
        std::vector<bool> col(n, false);
        for (std::size_t a = 0; a < n; ++a) {
            require(!col[t[a][b]], ErrorKind::NotAGroup, "table column is not a permutation");
            col[t[a][b]] = true;
        }
    }
    std::size_t e = n;
    for (std::size_t a = 0; a < n && e == n; ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < n && ok; ++b) ok = t[a][b] == b && t[b][a] == b;
        if (ok) e = a;
    }
    require(e < n, ErrorKind::NotAGroup, "no identity element");
    impl->identity = e;
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
        require(t[t[a][b]][c] == t[a][t[b][c]], ErrorKind::NotAGroup,
                "multiplication is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ")");
    };
    if (n <= 256) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(n);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int i = 0; i < 1 << 22; ++i) check(pick(rng), pick(rng), pick(rng));
    }
    impl->inv.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (t[a][b] == e) impl->inv[a] = b;

    auto times = [&](std::size_t a, std::size_t b) { return impl->table[a * n + b]; };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    impl->gens = greedy_generators(n, e, times, all);
    impl->build_tree(times);
    return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::from_matrices(const std::vector<Matrix>& generators, std::size_t cap) {
    require(!generators.empty(), ErrorKind::NotAGroup, "no generators");
    const Field& F = generators.front().field();
    const std::size_t d = generators.front().rows();
    for (const auto& g : generators) {
        require(g.square() && g.rows() == d, ErrorKind::DimensionMismatch, "generators of different sizes");
        require(g.field() == F, ErrorKind::FieldMismatch, "generators over different fields");
        require(try_inverse(g).has_value(), ErrorKind::Singular, "generator is not invertible");
    }
    auto impl = std::make_shared<Impl>();
    auto lookup = [&](const Matrix& m) -> std::optional<std::size_t> {
        auto [lo, hi] = impl->index.equal_range(matrix_hash(m));
        for (auto it = lo; it != hi; ++it)
            if (impl->mats[it->second] == m) return it->second;
        return std::nullopt;
    };
    auto insert = [&](Matrix m) {
        require(impl->mats.size() < cap, ErrorKind::GroupTooLarge,
                "matrix group closure exceeds " + std::to_string(cap) + " elements");
        impl->index.emplace(matrix_hash(m), impl->mats.size());
        impl->mats.push_back(std::move(m));
        return impl->mats.size() - 1;
    };
    insert(Matrix::identity(F, d));
    for (const auto& g : generators) {
        auto at = lookup(g);
        impl->gens.push_back(at ? *at : insert(g));
    }
    const std::size_t k = impl->gens.size();
    std::vector<std::size_t> right;
    for (std::size_t x = 0; x < impl->mats.size(); ++x) {
        for (std::size_t s = 0; s < k; ++s) {
            Matrix y = impl->mats[x] * impl->mats[impl->gens[s]];
            auto at = lookup(y);
            right.push_back(at ? *at : insert(std::move(y)));
        }
    }
    impl->n = impl->mats.size();
    impl->identity = 0;
    impl->build_tree([&](std::size_t a, std::size_t s) {
        std::size_t idx = std::find(impl->gens.begin(), impl->gens.end(), s) - impl->gens.begin();
        return right[a * k + idx];
    });
    impl->inv.resize(impl->n);
    for (std::size_t x = 0; x < impl->n; ++x) impl->inv[x] = *lookup(signrep::inverse(impl->mats[x]));
    return FiniteGroup(std::move(impl));
}

std::size_t FiniteGroup::order() const { return impl_->n; }
std::size_t FiniteGroup::identity() const { return impl_->identity; }
std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const { return impl_->mul(a, b); }
std::size_t FiniteGroup::inverse(std::size_t a) const { return impl_->inv[a]; }
const std::vector<std::size_t>& FiniteGroup::generators() const { return impl_->gens; }
std::size_t FiniteGroup::parent(std::size_t g) const { return impl_->parent[g]; }
std::size_t FiniteGroup::step(std::size_t g) const { return impl_->step[g]; }
const std::vector<std::size_t>& FiniteGroup::bfs_order() const { return impl_->bfs; }
bool FiniteGroup::has_matrices() const { return !impl_->mats.empty(); }

const Matrix& FiniteGroup::matrix(std::size_t g) const {
    require(has_matrices(), ErrorKind::Internal, "group has no matrix realization");
    return impl_->mats[g];
}

std::optional<std::size_t> FiniteGroup::find(const Matrix& m) const {
    auto [lo, hi] = impl_->index.equal_range(matrix_hash(m));
    for (auto it = lo; it != hi; ++it)
        if (impl_->mats[it->second] == m) return it->second;
    return std::nullopt;
}

std::size_t FiniteGroup::input_generator(std::size_t i) const { return impl_->gens.at(i); }

std::pair<FiniteGroup, std::vector<std::size_t>> FiniteGroup::subgroup(const std::vector<std::size_t>& elements) const {
    const std::size_t n = order();
    std::vector<std::size_t> pos(n, n);
    std::vector<std::size_t> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        require(sorted[i] < n, ErrorKind::NotASubgroup, "subgroup element out of range");
        pos[sorted[i]] = i;
    }
    require(pos[identity()] < n, ErrorKind::NotASubgroup, "subset does not contain the identity");
    auto times = [&](std::size_t a, std::size_t b) { return mul(a, b); };
    std::vector<std::size_t> gens = greedy_generators(n, identity(), times, sorted);
    // closure of the chosen generators must be exactly the subset
    std::vector<bool> in(n, false);
    in[identity()] = true;
    std::deque<std::size_t> q{identity()};
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        for (std::size_t s : gens) {
            std::size_t y = mul(x, s);
            require(pos[y] < n, ErrorKind::NotASubgroup, "subset is not closed under multiplication");
            if (!in[y]) {
                in[y] = true;
                ++count;
                q.push_back(y);
            }
        }
    }
    require(count == sorted.size(), ErrorKind::Internal, "subgroup closure mismatch");

    auto impl = std::make_shared<Impl>();
    const std::size_t m = sorted.size();
    impl->n = m;
    impl->identity = pos[identity()];
    impl->inv.resize(m);
    for (std::size_t i = 0; i < m; ++i) impl->inv[i] = pos[inverse(sorted[i])];
    for (std::size_t g : gens) impl->gens.push_back(pos[g]);
    if (has_matrices()) {
        for (std::size_t i = 0; i < m; ++i) {
            impl->mats.push_back(matrix(sorted[i]));
            impl->index.emplace(matrix_hash(impl->mats.back()), i);
        }
    } else {
        impl->table.resize(m * m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) impl->table[a * m + b] = pos[mul(sorted[a], sorted[b])];
    }
    impl->build_tree([&](std::size_t a, std::size_t b) { return pos[mul(sorted[a], sorted[b])]; });
    return {FiniteGroup(std::move(impl)), sorted};
}

// ------------------------------------------------------------------ involutions

InvolutiveGroup::InvolutiveGroup(FiniteGroup group, std::vector<std::size_t> c) : group_(std::move(group)), c_(std::move(c)) {
    const std::size_t n = group_.order();
    require(c_.size() == n, ErrorKind::NotAnAutomorphism, "involution has wrong length");
    for (std::size_t g = 0; g < n; ++g) {
        require(c_[g] < n, ErrorKind::NotAnAutomorphism, "involution value out of range");
        require(c_[c_[g]] == g, ErrorKind::NotAnAutomorphism, "involution does not square to the identity");
    }
    // a bijection compatible with right multiplication by generators is an automorphism
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t s : group_.generators())
            require(c_[group_.mul(g, s)] == group_.mul(c_[g], c_[s]), ErrorKind::NotAnAutomorphism,
                    "involution is not multiplicative");
}

InvolutiveGroup InvolutiveGroup::trivial_involution(FiniteGroup group) {
    std::vector<std::size_t> c(group.order());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
    return InvolutiveGroup(std::move(group), std::move(c));
}

InvolutiveGroup InvolutiveGroup::conjugation(FiniteGroup group, const Matrix& m) {
    const Matrix mi = signrep::inverse(m);
    std::vector<std::size_t> c(group.order());
    for (std::size_t g = 0; g < c.size(); ++g) {
        auto at = group.find(m * group.matrix(g) * mi);
        require(at.has_value(), ErrorKind::NotAnAutomorphism, "conjugating matrix does not normalize the group");
        c[g] = *at;
    }
    return InvolutiveGroup(std::move(group), std::move(c));
}

InvolutiveGroup InvolutiveGroup::inverse_transpose(FiniteGroup group) {
    std::vector<std::size_t> c(group.order());
    for (std::size_t g = 0; g < c.size(); ++g) {
        auto at = group.find(transpose(group.matrix(group.inverse(g))));
        require(at.has_value(), ErrorKind::NotAnAutomorphism, "group is not stable under inverse transpose");
        c[g] = *at;
    }
    return InvolutiveGroup(std::move(group), std::move(c));
}

std::pair<InvolutiveGroup, std::vector<std::size_t>> InvolutiveGroup::restrict_to(
    const std::vector<std::size_t>& elements) const {
    auto [sub, embed] = group_.subgroup(elements);
    std::vector<std::size_t> pos(order(), order());
    for (std::size_t i = 0; i < embed.size(); ++i) pos[embed[i]] = i;
    std::vector<std::size_t> c(embed.size());
    for (std::size_t i = 0; i < embed.size(); ++i) {
        std::size_t img = c_[embed[i]];
        require(pos[img] < order(), ErrorKind::NotInvolutionStable, "subgroup is not stable under the involution");
        c[i] = pos[img];
    }
    return {InvolutiveGroup(std::move(sub), std::move(c)), std::move(embed)};
}

}  // namespace signrep
