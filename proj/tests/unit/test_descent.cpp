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

#include "doctest.h"

#include "signrep/error.hpp"
#include "support/descent_data.hpp"
#include "support/known_reps.hpp"

using namespace signrep;

namespace {

std::vector<Matrix> quaternion_gens(const Field& F) {
    return {Matrix::from_ints(F, {{2, 0}, {0, 3}}), Matrix::from_ints(F, {{0, -1}, {1, 0}})};
}

}  // namespace

TEST_CASE("quaternion extended by diag(1,-1) descends to a symmetric witness") {
    Field F = Field::prime(5);
    auto data = testing::two_dim_descent(F, quaternion_gens(F));
    CHECK(data.ambient.order() == 16);
    CHECK(data.subgroup.size() == 8);
    auto res = symplectic_descent(data);
    CHECK(res.a == Matrix::from_ints(F, {{0, 1}, {1, 0}}));
    CHECK(transpose(res.a) == res.a);
    CHECK(res.basis_change == Matrix::identity(F, 2));
    CHECK(sign(res.restricted) == 1);
}

TEST_CASE("non-diagonal involution is diagonalized first") {
    Field F = Field::prime(5);
    auto data = testing::two_dim_descent(F, quaternion_gens(F), Matrix::from_ints(F, {{1, 2}, {1, 3}}));
    auto res = symplectic_descent(data);
    CHECK(transpose(res.a) == res.a);
    CHECK(witness_valid(res.restricted, res.a, 1));
    CHECK(sign(res.restricted) == 1);
}

TEST_CASE("descent rejects a symmetric P and a broken relation") {
    Field F = Field::prime(5);
    auto data = testing::two_dim_descent(F, quaternion_gens(F));
    auto bad = data;
    bad.p = Matrix::from_ints(F, {{0, 1}, {1, 0}});
    try {
        symplectic_descent(bad);
        FAIL("expected NotAntisymmetric");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAntisymmetric);
    }
    auto bad2 = data;
    bad2.p = Matrix::from_ints(F, {{0, 2}, {-2, 0}});
    bad2.p(0, 1) = F.from_int(1);
    bad2.p(1, 0) = F.from_int(-1);
    bad2.omega.assign(bad2.omega.size(), F.one());
    bad2.omega[bad2.c] = F.from_int(-1);
    CHECK_THROWS_AS(symplectic_descent(bad2), Error);
}

TEST_CASE("semidirect extension of the known fixtures") {
    auto d = testing::dihedral19();
    auto wd = *intertwiner(d);
    auto rd = semidirect_extend(d, wd);
    CHECK(rd.homomorphism);
    CHECK(rd.pairs_checked == 11 * 11);
    CHECK(rd.maps_agree);
    CHECK(rd.odd);

    auto q = testing::quaternion5();
    auto wq = *intertwiner(q);
    auto rq = semidirect_extend(q, wq);
    CHECK(rq.homomorphism);
    CHECK(rq.maps_agree);
    CHECK_FALSE(rq.odd);

    auto tampered = wd;
    tampered.a(0, 1) = d.field.from_int(5);
    try {
        semidirect_extend(d, tampered);
        FAIL("expected HomomorphismFails");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HomomorphismFails);
    }
}
