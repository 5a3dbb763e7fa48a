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
#include <string>
#include <vector>

namespace signrep {

/// A matrix representation of an involutive group twisted by a character
/// that is constant on c-orbits. Images and character values are stored for
/// every element index.
struct InvolutiveRep {
    InvolutiveGroup group;
    Field field;
    std::size_t dim = 0;
    std::vector<Matrix> images;
    std::vector<Elem> character;
};

/// Validates the homomorphism property, the identity image and the character.
InvolutiveRep make_rep(InvolutiveGroup group, Field field, std::vector<Matrix> images, std::vector<Elem> character);
/// Images and character values given on group.generators(), extended along words.
InvolutiveRep rep_from_generators(InvolutiveGroup group, Field field, const std::vector<Matrix>& generator_images,
                                  const std::vector<Elem>& generator_character);
std::vector<Elem> trivial_character(const InvolutiveGroup& group, const Field& field);
/// Character given on generators, extended multiplicatively; NonMultiplicativeCharacter if inconsistent.
std::vector<Elem> character_from_generators(const FiniteGroup& group, const Field& field, const std::vector<Elem>& values);

/// g -> transpose(rho(c(g)))^-1, with trivial character.
InvolutiveRep perp(const InvolutiveRep& rep);
/// Dimension of the span of all images; dim^2 iff absolutely irreducible.
std::size_t image_span_dimension(const InvolutiveRep& rep);
bool is_absolutely_irreducible(const InvolutiveRep& rep);

struct PolarizationWitness {
    Matrix a;    // first nonzero row-major entry is 1
    int lambda;  // transpose(a) = lambda * a
};

/// Solves perp(rho)(g) A = chi(g) A rho(g). nullopt if no invertible solution
/// exists. Throws NotAbsolutelyIrreducible or AmbiguousIntertwiner.
std::optional<PolarizationWitness> intertwiner(const InvolutiveRep& rep);
/// Throws NotPolarized if rep does not satisfy the self-duality relation.
int sign(const InvolutiveRep& rep);
/// True iff perp(rho)(g) a = chi(g) a rho(g) for all g and transpose(a) = lambda a.
bool witness_valid(const InvolutiveRep& rep, const Matrix& a, int lambda);

/// Basis of {X : to(g) X = X from(g) for all g}.
std::vector<Matrix> hom_space(const InvolutiveRep& from, const InvolutiveRep& to);
bool isomorphic(const InvolutiveRep& a, const InvolutiveRep& b);
/// Trace of every element, in index order.
std::vector<Elem> trace_vector(const InvolutiveRep& rep);

struct FactorReport {
    std::size_t dim = 0;
    bool polarized = false;
    std::optional<int> sign;  // present iff polarized
    std::optional<PolarizationWitness> witness;
};

struct GoodnessReport {
    bool good = true;
    std::vector<FactorReport> factors;
};

/// Sign of every factor; exempt factors (not polarized) do not affect the verdict.
/// Throws DuplicateFactor or NotAbsolutelyIrreducible.
GoodnessReport goodness(const std::vector<InvolutiveRep>& factors);

/// rho * psi with character chi * psi^-1 * psi^perp.
InvolutiveRep twist(const InvolutiveRep& rep, const std::vector<Elem>& psi);

struct Restriction {
    InvolutiveRep rep;
    std::vector<std::size_t> embedding;  // sub index -> parent index
    bool absolutely_irreducible = false;
};
Restriction restrict_rep(const InvolutiveRep& rep, const std::vector<std::size_t>& elements);

/// g -> m^-1 rho(g) m.
InvolutiveRep conjugate(const InvolutiveRep& rep, const Matrix& m);
/// Base change along the canonical embedding field -> target.
InvolutiveRep extend_scalars(const InvolutiveRep& rep, const Field& target);

}  // namespace signrep
