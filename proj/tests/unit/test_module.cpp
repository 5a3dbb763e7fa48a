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
#include "signrep/module.hpp"

using namespace signrep;

namespace {

GroupModule module_of(const std::vector<Matrix>& gens) {
    FiniteGroup G = FiniteGroup::from_matrices(gens);
    GroupModule m{G, {}};
    for (std::size_t g = 0; g < G.order(); ++g) m.images.push_back(G.matrix(g));
    return m;
}

void check_series(const GroupModule& m, const CompositionSeries& cs) {
    const Matrix ti = inverse(cs.basis);
    for (std::size_t g = 0; g < m.images.size(); ++g) {
        const Matrix y = ti * m.images[g] * cs.basis;
        std::size_t off = 0;
        for (std::size_t b = 0; b < cs.block_dims.size(); ++b) {
            CHECK(diagonal_block(y, cs.block_dims, b) == cs.blocks[b][g]);
            // nothing below the diagonal block
            for (std::size_t i = off + cs.block_dims[b]; i < y.rows(); ++i)
                for (std::size_t j = off; j < off + cs.block_dims[b]; ++j) CHECK(y.field().is_zero(y(i, j)));
            off += cs.block_dims[b];
        }
    }
    for (const auto& blk : cs.blocks) CHECK(span_dimension(blk) == blk.front().rows() * blk.front().rows());
}

}  // namespace

TEST_CASE("conjugated direct sum over F_7 splits into its summands") {
    Field F = Field::prime(7);
    // C3 acting by diag(2, 4, 1), conjugated
    Matrix d = Matrix::diagonal(F, {F.from_int(2), F.from_int(4), F.one()});
    Matrix m = Matrix::from_ints(F, {{1, 2, 0}, {0, 1, 3}, {1, 0, 2}});
    auto mod = module_of({inverse(m) * d * m});
    auto cs = composition_series(mod);
    CHECK(cs.block_dims == std::vector<std::size_t>{1, 1, 1});
    check_series(mod, cs);
    CHECK(commutant(mod).size() == 3);
}

TEST_CASE("standard S3 rep mod 3 is a non-split extension") {
    Field F = Field::prime(3);
    auto mod = module_of({Matrix::from_ints(F, {{0, -1}, {1, -1}}), Matrix::from_ints(F, {{0, 1}, {1, 0}})});
    CHECK(mod.group.order() == 6);
    CHECK(commutant(mod).size() == 1);
    CHECK(span_dimension(mod.images) == 3);
    auto cs = composition_series(mod);
    CHECK(cs.block_dims == std::vector<std::size_t>{1, 1});
    check_series(mod, cs);
}

TEST_CASE("rotation of order 3 over Q is irreducible but not absolutely") {
    Field Q = Field::rationals();
    auto mod = module_of({Matrix::from_ints(Q, {{0, -1}, {1, -1}})});
    try {
        composition_series(mod);
        FAIL("expected NotAbsolutelyIrreducible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAbsolutelyIrreducible);
    }
}

TEST_CASE("characteristic and minimal polynomials") {
    Field Q = Field::rationals();
    Matrix a = Matrix::from_ints(Q, {{2, 1, 0}, {0, 2, 0}, {0, 0, 3}});
    // (x-2)^2 (x-3) = x^3 - 7x^2 + 16x - 12
    CHECK(charpoly(a) == poly::from_ints(Q, {-12, 16, -7, 1}));
    CHECK(minpoly(a) == poly::from_ints(Q, {-12, 16, -7, 1}));
    Matrix s = Matrix::scalar(Q, 3, Q.from_int(5));
    CHECK(minpoly(s) == poly::from_ints(Q, {-5, 1}));
    CHECK(is_zero(eval_poly(charpoly(a), a)));
    Matrix b = Matrix::from_ints(Q, {{0, 1, 2, 0}, {1, 0, 3, 1}, {4, 1, 0, 2}, {0, 2, 1, 1}});
    CHECK(is_zero(eval_poly(charpoly(b), b)));
    CHECK(charpoly(b)[0] == determinant(b));
}
