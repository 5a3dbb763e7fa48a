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

#include "signrep/rep.hpp"

#include <vector>

namespace signrep {

/// An even-dimensional representation r of a group H, an element c of order 2
/// outside an index-2 subgroup, an antisymmetric P and a character omega with
/// omega(c) = -1 such that transpose(r(h))^-1 = P r(h) P^-1 omega(h)^(dim-1).
struct SymplecticExtensionData {
    FiniteGroup ambient;
    std::size_t c = 0;
    std::vector<std::size_t> subgroup;
    Field field;
    std::vector<Matrix> r;      // per element of ambient
    Matrix p;
    std::vector<Elem> omega;    // per element of ambient
};

struct DescentResult {
    /// r restricted to the subgroup, with involution g -> c g c and character omega^(dim-1).
    InvolutiveRep restricted;
    /// Symmetric intertwiner r(c) P, expressed in the original basis.
    Matrix a;
    /// Basis change that diagonalized r(c) (identity if it already was diagonal).
    Matrix basis_change;
};

/// Validates the datum and returns the symmetric witness for the restriction.
/// Throws NotAntisymmetric, RelationFails, NonDiagonalizableInvolution.
DescentResult symplectic_descent(const SymplecticExtensionData& data);

struct SemidirectReport {
    bool homomorphism = false;
    std::size_t pairs_checked = 0;
    int epsilon = 0;
    /// X -> -transpose(A)^-1 transpose(X) transpose(A) coincides with X -> -P transpose(X) P^-1, P = transpose(A)^-1.
    bool maps_agree = false;
    /// P symmetric, i.e. the extension is odd.
    bool odd = false;
};

/// Extends g -> (rho(g), chi(g)^-1) by c -> (transpose(A)^-1, lambda) c and checks
/// the homomorphism property on all pairs from G and c. Throws HomomorphismFails.
SemidirectReport semidirect_extend(const InvolutiveRep& rep, const PolarizationWitness& witness);

}  // namespace signrep
