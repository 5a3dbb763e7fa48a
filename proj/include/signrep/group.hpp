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

#include "signrep/matrix.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace signrep {

/// A finite group on the element indices 0..order-1.
///
/// Built either from an explicit multiplication table or as the closure of a
/// set of invertible matrices. Every element carries a word in the chosen
/// generators (a breadth-first spanning tree), which is how homomorphisms given
/// on generators are extended to the whole group.
class FiniteGroup {
public:
    static constexpr std::size_t kMaxTableOrder = 512;
    static constexpr std::size_t kMaxClosureOrder = 100000;

    static FiniteGroup from_table(const std::vector<std::vector<std::size_t>>& table);
    /// Closure of the given invertible square matrices; element 0 is the identity
    /// and elements 1..k are the distinct generators in input order.
    static FiniteGroup from_matrices(const std::vector<Matrix>& generators,
                                     std::size_t cap = kMaxClosureOrder);

    std::size_t order() const;
    std::size_t identity() const;
    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;

    /// Generating set used for words and homomorphism checks.
    const std::vector<std::size_t>& generators() const;
    /// Spanning tree: element g (not the identity) equals parent(g) * generator step(g).
    std::size_t parent(std::size_t g) const;
    std::size_t step(std::size_t g) const;
    /// Elements in breadth-first order from the identity.
    const std::vector<std::size_t>& bfs_order() const;

    bool has_matrices() const;
    /// Matrix of an element (matrix groups only).
    const Matrix& matrix(std::size_t g) const;
    /// Index of a matrix in the group, if present (matrix groups only).
    std::optional<std::size_t> find(const Matrix& m) const;
    /// Index of a matrix generator passed to from_matrices.
    std::size_t input_generator(std::size_t i) const;

    /// Subgroup on the given elements (must be closed); returns it with the
    /// embedding of its indices into this group.
    std::pair<FiniteGroup, std::vector<std::size_t>> subgroup(const std::vector<std::size_t>& elements) const;

    struct Impl;

private:
    explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// A finite group with an automorphism c of order at most two.
class InvolutiveGroup {
public:
    /// Validates that c is an automorphism with c(c(g)) = g.
    InvolutiveGroup(FiniteGroup group, std::vector<std::size_t> c);

    static InvolutiveGroup trivial_involution(FiniteGroup group);
    /// g -> M g M^-1 on a matrix group.
    static InvolutiveGroup conjugation(FiniteGroup group, const Matrix& m);
    /// g -> transpose(g)^-1 on a matrix group.
    static InvolutiveGroup inverse_transpose(FiniteGroup group);

    const FiniteGroup& group() const { return group_; }
    std::size_t order() const { return group_.order(); }
    std::size_t c(std::size_t g) const { return c_[g]; }
    const std::vector<std::size_t>& involution() const { return c_; }

    /// Restriction to a c-stable subgroup given by element indices; returns the
    /// embedding alongside. Throws NotASubgroup or NotInvolutionStable.
    std::pair<InvolutiveGroup, std::vector<std::size_t>> restrict_to(const std::vector<std::size_t>& elements) const;

private:
    FiniteGroup group_;
    std::vector<std::size_t> c_;
};

/// Extends a map on generators to every element along the group's spanning
/// tree, then checks f(g s) = f(g) f(s) for all g and generators s.
/// Returns nullopt if that check fails.
template <class T, class Mul, class Eq>
std::optional<std::vector<T>> extend_homomorphism(const FiniteGroup& G, const std::vector<T>& on_generators,
                                                  const T& one, Mul mul, Eq eq) {
    const auto& gens = G.generators();
    std::vector<std::optional<T>> val(G.order());
    val[G.identity()] = one;
    for (std::size_t g : G.bfs_order()) {
        if (g == G.identity()) continue;
        val[g] = mul(*val[G.parent(g)], on_generators[G.step(g)]);
    }
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (!eq(*val[G.mul(g, gens[k])], mul(*val[g], on_generators[k]))) return std::nullopt;
    std::vector<T> out;
    out.reserve(val.size());
    for (auto& v : val) out.push_back(std::move(*v));
    return out;
}

}  // namespace signrep
