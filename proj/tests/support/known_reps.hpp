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

namespace signrep::testing {

/// Dihedral group of order 10 in GL_2(F_19), acting on itself.
inline InvolutiveRep dihedral19() {
    Field F = Field::prime(19);
    std::vector<Matrix> gens{Matrix::from_ints(F, {{0, -1}, {1, 4}}), Matrix::from_ints(F, {{1, 4}, {0, -1}})};
    auto G = InvolutiveGroup::trivial_involution(FiniteGroup::from_matrices(gens));
    return rep_from_generators(G, F, gens, {F.one(), F.one()});
}

/// Quaternion group of order 8 in SL_2(F_5), acting on itself.
inline InvolutiveRep quaternion5() {
    Field F = Field::prime(5);
    std::vector<Matrix> gens{Matrix::from_ints(F, {{2, 0}, {0, 3}}), Matrix::from_ints(F, {{0, -1}, {1, 0}})};
    auto G = InvolutiveGroup::trivial_involution(FiniteGroup::from_matrices(gens));
    return rep_from_generators(G, F, gens, {F.one(), F.one()});
}

}  // namespace signrep::testing
