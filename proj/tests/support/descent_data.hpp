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

#include "signrep/descent.hpp"

#include <algorithm>

namespace signrep::testing {

/// Two-dimensional datum: H generated by the given matrices (determinants
/// +-1, containing diag(1,-1)), c = diag(1,-1), P = J, omega = det and the
/// subgroup H cap SL_2. Optionally conjugated by m.
inline SymplecticExtensionData two_dim_descent(const Field& F, const std::vector<Matrix>& gens,
                                               const std::optional<Matrix>& m = std::nullopt) {
    std::vector<Matrix> all = gens;
    const Matrix d = Matrix::from_ints(F, {{1, 0}, {0, -1}});
    all.push_back(d);
    FiniteGroup H = FiniteGroup::from_matrices(all);
    SymplecticExtensionData data{H, *H.find(d), {}, F, {}, Matrix::from_ints(F, {{0, 1}, {-1, 0}}), {}};
    for (std::size_t h = 0; h < H.order(); ++h) {
        const Elem det = determinant(H.matrix(h));
        data.r.push_back(H.matrix(h));
        data.omega.push_back(det);
        if (F.is_one(det)) data.subgroup.push_back(h);
    }
    if (m) {
        // r -> m^-1 r m, P -> m^t P m keeps the relation
        const Matrix mi = inverse(*m);
        for (auto& x : data.r) x = mi * x * *m;
        data.p = transpose(*m) * data.p * *m;
    }
    return data;
}

}  // namespace signrep::testing
