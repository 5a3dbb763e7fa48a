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
#include "signrep/matrix.hpp"
#include "support/known_reps.hpp"

#include <array>
#include <random>
#include <set>

using namespace signrep;

namespace {

using M2 = std::array<long, 4>;  // row-major 2x2 over Z/p

M2 mul_mod(const M2& a, const M2& b, long p) {
    return {(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p, (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p};
}

M2 norm(M2 a, long p) {
    for (auto& x : a) x = ((x % p) + p) % p;
    return a;
}

// rank of a list of 4-vectors over Z/p by plain elimination
std::size_t rank_mod(std::vector<M2> rows, long p) {
    std::size_t r = 0;
    for (int c = 0; c < 4; ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        long inv = 1;
        while (rows[r][c] * inv % p != 1) ++inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            long f = rows[i][c] * inv % p;
            for (int j = 0; j < 4; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("solve_linear trivial systems") {
    Field F = Field::prime(19);
    Matrix id = Matrix::identity(F, 3);
    Vector rhs{F.from_int(4), F.from_int(7), F.from_int(-1)};
    auto s = solve_linear(id, rhs);
    REQUIRE(s.has_value());
    CHECK(s->particular == rhs);
    CHECK(s->nullspace.empty());

    auto z = solve_linear(Matrix(F, 3, 3), Vector(3, F.zero()));
    REQUIRE(z.has_value());
    CHECK(z->nullspace.size() == 3);

    Matrix sing = Matrix::from_ints(F, {{1, 2}, {2, 4}});
    CHECK_FALSE(solve_linear(sing, {F.one(), F.zero()}).has_value());
    CHECK_THROWS_AS(solve_linear(sing, {F.one()}), Error);
}

TEST_CASE("one-matrix intertwiner space over F_19 matches enumeration") {
    const long p = 19;
    const M2 r{0, 18, 1, 4}, rt{0, 1, 18, 4};
    std::size_t count = 0;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long d = 0; d < p; ++d) {
                    M2 A{a, b, c, d};
                    if (mul_mod(A, r, p) == mul_mod(rt, A, p)) ++count;
                }
    CHECK(count == 19 * 19);

    // the same system through solve_linear: unknown A row-major, A r - r^t A = 0
    Field F = Field::prime(p);
    Matrix R = Matrix::from_ints(F, {{0, -1}, {1, 4}}), Rt = transpose(R);
    Matrix sys(F, 4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                sys(i * 2 + j, i * 2 + k) = F.add(sys(i * 2 + j, i * 2 + k), R(k, j));
                sys(i * 2 + j, k * 2 + j) = F.sub(sys(i * 2 + j, k * 2 + j), Rt(i, k));
            }
    auto s = solve_linear(sys, Vector(4, F.zero()));
    REQUIRE(s.has_value());
    CHECK(s->nullspace.size() == 2);
    for (const auto& v : s->nullspace) CHECK(is_zero(unflatten(F, 4, 1, sys * v)));
}

TEST_CASE("span of the dihedral images over F_19") {
    const long p = 19;
    std::set<M2> group{{1, 0, 0, 1}};
    const std::vector<M2> gens{{0, 18, 1, 4}, {1, 4, 0, 18}};
    for (bool grew = true; grew;) {
        grew = false;
        for (const M2& x : std::vector<M2>(group.begin(), group.end()))
            for (const M2& s : gens) grew |= group.insert(norm(mul_mod(x, s, p), p)).second;
    }
    CHECK(group.size() == 10);
    CHECK(rank_mod(std::vector<M2>(group.begin(), group.end()), p) == 4);

    auto rep = testing::dihedral19();
    CHECK(rep.group.order() == 10);
    CHECK(span_dimension(rep.images) == 4);
}

TEST_CASE("span_dimension basics and invariance") {
    Field F = Field::prime(7);
    CHECK(span_dimension({Matrix::identity(F, 3)}) == 1);
    std::vector<Matrix> units;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Matrix e(F, 3, 3);
            e(i, j) = F.one();
            units.push_back(e);
        }
    CHECK(span_dimension(units) == 9);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        std::vector<Matrix> mats;
        for (int k = 0; k < 3; ++k) {
            Matrix m(F, 3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m(i, j) = (rng() % 3 == 0) ? F.random(rng) : F.zero();
            mats.push_back(m);
        }
        Matrix g(F, 3, 3);
        do {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) g(i, j) = F.random(rng);
        } while (!try_inverse(g));
        std::vector<Matrix> conj;
        for (const auto& m : mats) conj.push_back(inverse(g) * m * g);
        CHECK(span_dimension(mats) == span_dimension(conj));
    }
}

TEST_CASE("solutions substitute back exactly") {
    std::mt19937_64 rng(5);
    for (const Field& F : {Field::prime(11), Field::rationals()}) {
        for (int t = 0; t < 30; ++t) {
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
            Matrix a(F, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng() % 2 ? F.random(rng) : F.zero();
            Vector x(cols);
            for (auto& e : x) e = F.random(rng);
            Vector b = a * x;
            auto s = solve_linear(a, b);
            REQUIRE(s.has_value());
            CHECK(a * s->particular == b);
            for (const auto& v : s->nullspace) CHECK(a * v == Vector(rows, F.zero()));
            CHECK(s->nullspace.size() + rank(a) == cols);
        }
    }
}

TEST_CASE("determinant and inverse agree") {
    Field F = Field::rationals();
    Matrix m = Matrix::from_ints(F, {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    CHECK(determinant(m) == F.from_int(18));
    CHECK(m * inverse(m) == Matrix::identity(F, 3));
    CHECK_THROWS_AS(inverse(Matrix::from_ints(F, {{1, 2}, {2, 4}})), Error);
}
