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

#include "signrep/dvr.hpp"
#include "signrep/module.hpp"

#include <optional>
#include <vector>

namespace signrep {

/// Conjugates a representation over the fraction field onto a stable lattice:
/// returns the integral representation together with the basis used.
struct StableLattice {
    Matrix basis;
    DvrRep rep;
};
StableLattice stable_lattice(const InvolutiveGroup& group, const Dvr& dvr, const std::vector<Matrix>& images,
                             const std::vector<Elem>& character);

/// The image algebra of an integral representation together with the
/// anti-involution M -> transpose(A)^-1 transpose(M) transpose(A).
struct InvolutiveAlgebra {
    DvrRep rep;
    Matrix a;
    Matrix at_inv;

    Matrix tau(const Matrix& m) const;
};

/// Requires a symmetric witness for the generic fiber. Throws WitnessInvalid
/// or NotSymmetricWitness; checks tau(rho(g)) = chi(g)^-1 rho(c(g)^-1) for all g.
InvolutiveAlgebra involution_from_witness(const DvrRep& rep, const Matrix& a);

/// Composition series of the residual fiber: the residual image algebra acts
/// on the diagonal blocks of basis^-1 * x * basis.
struct ResidualQuotient {
    Matrix basis;
    std::vector<std::size_t> block_dims;
};

struct LiftedIdempotent {
    Matrix e;
    std::size_t precision = 0;
    std::size_t target = 0;
    std::size_t iterations = 0;
    /// valuation of e^2 - e in the truncated polynomial ring at each step
    std::vector<long> defect_history;
    long defect_valuation = 0;   // v(e^2 - e), exact
    bool tau_fixed = false;      // tau(e) == e exactly
    std::size_t residual_rank = 0;
    bool trace_congruent = false;  // tr(e) = rank mod m^N
    bool ae_symmetric = false;
};

/// Lifts the central idempotent of diagonal block target. Throws NotTauFixed,
/// NotResiduallyIdempotent, PrecisionExhausted, InvalidPrecision.
LiftedIdempotent lift_idempotent_equivariant(const InvolutiveAlgebra& alg, const ResidualQuotient& quotient,
                                             std::size_t target, std::size_t precision);
/// Lifts an explicit residual idempotent lying in the residual image algebra.
LiftedIdempotent lift_idempotent_equivariant(const InvolutiveAlgebra& alg, const Matrix& eps, std::size_t precision);

struct FiberFactor {
    std::size_t dim = 0;
    std::vector<Elem> traces;  // over the fiber's field
    bool polarized = false;
    std::optional<int> sign;
};

struct ShortcutCheck {
    std::size_t generic_factor = 0;
    bool reduced_witness_invertible = false;
    std::optional<int> residual_sign;
};

struct LiftCheck {
    std::size_t generic_factor = 0;
    std::size_t residual_factor = 0;
    LiftedIdempotent lift;
    /// The isomorphism e S e = M_n(O) is not certified, only rank and trace.
    bool algebra_isomorphism_certified = false;
};

struct SpecializeReport {
    std::vector<FiberFactor> generic;
    std::vector<FiberFactor> residual;
    bool generic_good = false;
    bool residual_good = false;
    bool counts_equal = false;
    bool converse_checked = false;
    /// residual factor indices covered by each generic factor
    std::vector<std::vector<std::size_t>> matching;
    std::vector<ShortcutCheck> shortcuts;
    std::vector<LiftCheck> lifts;
    std::size_t precision = 0;
};

/// Two-fiber oracle plus the idempotent-lifting proof path. Throws
/// PropagationViolation if goodness fails to descend.
SpecializeReport specialize_sign(const DvrRep& rep, std::size_t precision = 32);

/// Factors of a composition series as representations, in canonical order
/// (dimension, then trace vector).
std::vector<InvolutiveRep> sorted_factors(const InvolutiveRep& rep, const CompositionSeries& cs);

}  // namespace signrep
