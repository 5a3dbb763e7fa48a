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

namespace signrep::testing {

/// Standard 2-dim representation of S3 over Q, integral at every prime.
inline DvrRep s3_standard(std::uint64_t p) {
    const Dvr O = Dvr::p_adic(p);
    const Field& Q = O.fraction_field();
    std::vector<Matrix> gens{Matrix::from_ints(Q, {{-1, 1}, {0, 1}}), Matrix::from_ints(Q, {{0, -1}, {1, -1}})};
    auto G = InvolutiveGroup::trivial_involution(FiniteGroup::from_matrices(gens));
    auto rep = rep_from_generators(G, Q, gens, {Q.one(), Q.one()});
    return make_dvr_rep(rep.group, O, rep.images, rep.character);
}

/// Klein four group diag(+-1, +-1) over F_p(t), conjugated by [[1, t], [0, 1]].
inline DvrRep klein_sheared(std::uint64_t p) {
    const Dvr O = Dvr::t_adic(Field::prime(p));
    const Field& L = O.fraction_field();
    Matrix m = Matrix::identity(L, 2);
    m(0, 1) = L.generator();
    const Matrix mi = inverse(m);
    std::vector<Matrix> gens{mi * Matrix::from_ints(L, {{-1, 0}, {0, 1}}) * m,
                             mi * Matrix::from_ints(L, {{1, 0}, {0, -1}}) * m};
    auto G = InvolutiveGroup::trivial_involution(FiniteGroup::from_matrices(gens));
    auto rep = rep_from_generators(G, L, gens, {L.one(), L.one()});
    return make_dvr_rep(rep.group, O, rep.images, rep.character);
}

/// Orthogonal witness for klein_sheared: transpose(m) * m.
inline Matrix klein_sheared_witness(const DvrRep& rep) {
    const Field& L = rep.dvr.fraction_field();
    Matrix m = Matrix::identity(L, 2);
    m(0, 1) = L.generator();
    return transpose(m) * m;
}

}  // namespace signrep::testing
