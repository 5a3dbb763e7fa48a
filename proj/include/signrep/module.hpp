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

#include "signrep/group.hpp"
#include "signrep/matrix.hpp"

#include <optional>
#include <vector>

namespace signrep {

/// Images of every group element, viewed as a module over the group algebra.
struct GroupModule {
    FiniteGroup group;
    std::vector<Matrix> images;

    const Field& field() const { return images.front().field(); }
    std::size_t dim() const { return images.front().rows(); }
};

/// Basis of {X : X rho(g) = rho(g) X}.
std::vector<Matrix> commutant(const GroupModule& m);

/// Smallest invariant subspace containing the given vectors (a basis).
std::vector<Vector> spin(const GroupModule& m, const std::vector<Vector>& seeds);

/// A proper nonzero invariant subspace, or nullopt if the module is
/// absolutely irreducible. Throws NotAbsolutelyIrreducible when the module is
/// irreducible over the field but splits over an extension.
std::optional<std::vector<Vector>> find_submodule(const GroupModule& m);

/// Composition series: basis T such that T^-1 rho(g) T is block upper
/// triangular with absolutely irreducible diagonal blocks.
struct CompositionSeries {
    Matrix basis;
    std::vector<std::size_t> block_dims;      // in series order
    std::vector<std::vector<Matrix>> blocks;  // diagonal blocks, per element, in series order
};

CompositionSeries composition_series(const GroupModule& m);

/// Diagonal block k of an n x n matrix partitioned by dims.
Matrix diagonal_block(const Matrix& a, const std::vector<std::size_t>& dims, std::size_t k);

}  // namespace signrep
