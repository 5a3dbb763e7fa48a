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
#include "support/known_reps.hpp"

#include <array>
#include <vector>

using namespace signrep;

namespace {

using M2 = std::array<long, 4>;

M2 mul_mod(const M2& a, const M2& b, long p) {
    return {(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p, (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p};
}

M2 inv_transpose_mod(const M2& a, long p) {
    long det = ((a[0] * a[3] - a[1] * a[2]) % p + p) % p;
    long di = 1;
    while (det * di % p != 1) ++di;
    // (a^-1)^t = det^-1 [[d, -c], [-b, a]]
    return {a[3] * di % p, (p - a[2]) * di % p, (p - a[1]) * di % p, a[0] * di % p};
}

// All A with inverse_transpose(g) A = A g for each generator g, by enumeration.
std::vector<M2> brute_intertwiners(const std::vector<M2>& gens, long p) {
    std::vector<M2> out;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long d = 0; d < p; ++d) {
                    M2 A{a, b, c, d};
                    bool ok = true;
                    for (const auto& g : gens) ok = ok && mul_mod(inv_transpose_mod(g, p), A, p) == mul_mod(A, g, p);
                    if (ok) out.push_back(A);
                }
    return out;
}

bool proportional(const M2& a, const M2& b, long p) {
    for (long s = 1; s < p; ++s) {
        bool eq = true;
        for (int i = 0; i < 4; ++i) eq = eq && (a[i] * s) % p == b[i];
        if (eq) return true;
    }
    return false;
}

Matrix to_matrix(const Field& F, const M2& a) { return Matrix::from_ints(F, {{a[0], a[1]}, {a[2], a[3]}}); }

}  // namespace

TEST_CASE("dihedral intertwiner matches enumeration") {
    const long p = 19;
    auto sols = brute_intertwiners({{0, 18, 1, 4}, {1, 4, 0, 18}}, p);
    REQUIRE(sols.size() == 19);  // a single line
    for (const auto& s : sols)
        if (s != M2{0, 0, 0, 0}) CHECK(proportional(s, {1, 2, 2, 1}, p));

    auto rep = testing::dihedral19();
    auto w = intertwiner(rep);
    REQUIRE(w.has_value());
    CHECK(w->a == to_matrix(rep.field, {1, 2, 2, 1}));
    CHECK(w->lambda == 1);
    CHECK(sign(rep) == 1);
    CHECK(goodness({rep}).good);
}

TEST_CASE("quaternion intertwiner matches enumeration") {
    const long p = 5;
    auto sols = brute_intertwiners({{2, 0, 0, 3}, {0, 4, 1, 0}}, p);
    REQUIRE(sols.size() == 5);
    for (const auto& s : sols)
        if (s != M2{0, 0, 0, 0}) CHECK(proportional(s, {0, 1, 4, 0}, p));

    auto rep = testing::quaternion5();
    auto w = intertwiner(rep);
    REQUIRE(w.has_value());
    CHECK(w->a == Matrix::from_ints(rep.field, {{0, 1}, {-1, 0}}));
    CHECK(w->lambda == -1);
    auto g = goodness({rep});
    CHECK_FALSE(g.good);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].sign == -1);
}

TEST_CASE("perp of the dihedral rotation") {
    auto rep = testing::dihedral19();
    auto p = perp(rep);
    std::size_t r = rep.group.group().generators()[0];
    CHECK(p.images[r] == Matrix::from_ints(rep.field, {{4, -1}, {1, 0}}));
    auto pp = perp(p);
    CHECK(pp.images == rep.images);
}

TEST_CASE("trivial one-dimensional rep") {
    Field F = Field::prime(7);
    auto G = InvolutiveGroup::trivial_involution(FiniteGroup::from_matrices({Matrix::identity(F, 1)}));
    auto rep = rep_from_generators(G, F, {Matrix::identity(F, 1)}, {F.one()});
    auto w = intertwiner(rep);
    REQUIRE(w.has_value());
    CHECK(w->a == Matrix::identity(F, 1));
    CHECK(w->lambda == 1);
    CHECK(perp(rep).images == rep.images);
}

TEST_CASE("twists keep the sign") {
    auto d = testing::dihedral19();
    const Field& F = d.field;
    // r -> 1, s -> -1
    auto psi = character_from_generators(d.group.group(), F, {F.one(), F.from_int(-1)});
    auto t = twist(d, psi);
    CHECK(sign(t) == 1);
    for (std::size_t g = 0; g < t.group.order(); ++g) CHECK(t.character[g] == t.character[t.group.c(g)]);

    auto q = testing::quaternion5();
    const Field& K = q.field;
    auto psi2 = character_from_generators(q.group.group(), K, {K.from_int(-1), K.one()});
    CHECK(sign(twist(q, psi2)) == -1);

    CHECK(twist(d, trivial_character(d.group, F)).images == d.images);
    std::vector<Elem> bad(d.group.order(), F.from_int(2));
    CHECK_THROWS_AS(twist(d, bad), Error);
}

TEST_CASE("restriction to the rotations is not absolutely irreducible") {
    auto d = testing::dihedral19();
    const auto& G = d.group.group();
    std::vector<std::size_t> rot;
    std::size_t r = G.generators()[0];
    for (std::size_t x = G.identity(), k = 0; k < 5; ++k, x = G.mul(x, r)) rot.push_back(x);
    auto res = restrict_rep(d, rot);
    CHECK_FALSE(res.absolutely_irreducible);
    CHECK(image_span_dimension(res.rep) == 2);
    CHECK_THROWS_AS(intertwiner(res.rep), Error);

    std::vector<std::size_t> all(G.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto whole = restrict_rep(d, all);
    CHECK(whole.absolutely_irreducible);
    CHECK(sign(whole.rep) == 1);
}

TEST_CASE("goodness rejects duplicate factors") {
    auto d = testing::dihedral19();
    Matrix m = Matrix::from_ints(d.field, {{1, 3}, {0, 1}});
    try {
        goodness({d, conjugate(d, m)});
        FAIL("expected DuplicateFactor");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateFactor);
    }
}
