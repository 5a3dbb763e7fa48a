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

#include <optional>
#include <vector>

namespace signrep {

/// Rabin's irreducibility test over a finite field (any degree).
bool is_irreducible_finite(const Field& base, const Poly& f);

/// Distinct roots of f in F, sorted by Field::compare.
///
/// Finite fields use Cantor-Zassenhaus splitting with a fixed seed. Q uses
/// the rational root test. A function field B(t) specializes at a point where
/// f stays squarefree, Newton-lifts each simple root to a power series and
/// recovers it by rational reconstruction, keeping only exact roots.
/// Throws UnsupportedField for number fields.
std::vector<Elem> find_roots(const Field& F, const Poly& f);

std::optional<Elem> square_root(const Field& F, const Elem& a);

}  // namespace signrep
