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

#include "signrep/module.hpp"

#include "signrep/error.hpp"
#include "signrep/roots.hpp"

#include <numeric>
#include <random>

namespace signrep {

namespace {

// Columns of the returned matrix: the given independent vectors, then standard
// basis vectors completing them.
Matrix complete_basis(const Field& F, std::size_t n, const std::vector<Vector>& vecs) {
    SpanBuilder span(F, n);
    std::vector<Vector> cols;
    for (const auto& v : vecs)
        if (span.add(v)) cols.push_back(v);
    for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
        Vector e(n, F.zero());
        e[i] = F.one();
        if (span.add(e)) cols.push_back(e);
    }
    Matrix t(F, n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) t(i, j) = cols[j][i];
    return t;
}

Matrix sub_block(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
    Matrix b(a.field(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = a(r0 + i, c0 + j);
    return b;
}

GroupModule transposed(const GroupModule& m) {
    GroupModule d{m.group, {}};
    for (std::size_t g = 0; g < m.images.size(); ++g) d.images.push_back(transpose(m.images[m.group.inverse(g)]));
    return d;
}

// Vectors annihilated by every vector of w under the standard pairing.
std::vector<Vector> annihilator(const Field& F, std::size_t n, const std::vector<Vector>& w) {
    Matrix a(F, w.size(), n);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = w[i][j];
    return nullspace(a);
}

std::optional<std::vector<Vector>> eigen_submodule(const GroupModule& m, const Matrix& x) {
    const Field& F = m.field();
    const std::size_t n = m.dim();
    for (const Elem& r : find_roots(F, minpoly(x))) {
        auto ker = nullspace(x - Matrix::scalar(F, n, r));
        if (!ker.empty() && ker.size() < n) return ker;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Matrix> commutant(const GroupModule& m) {
    const Field& F = m.field();
    const std::size_t n = m.dim();
    const auto& gens = m.group.generators();
    Matrix sys(F, gens.size() * n * n, n * n);
    std::size_t row = 0;
    for (std::size_t g : gens) {
        const Matrix& R = m.images[g];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row)
                for (std::size_t k = 0; k < n; ++k) {
                    sys(row, i * n + k) = F.add(sys(row, i * n + k), R(k, j));
                    sys(row, k * n + j) = F.sub(sys(row, k * n + j), R(i, k));
                }
    }
    std::vector<Matrix> out;
    for (const auto& v : nullspace(sys)) out.push_back(unflatten(F, n, n, v));
    return out;
}

std::vector<Vector> spin(const GroupModule& m, const std::vector<Vector>& seeds) {
    SpanBuilder span(m.field(), m.dim());
    std::vector<Vector> queue;
    for (const auto& v : seeds)
        if (span.add(v)) queue.push_back(v);
    for (std::size_t q = 0; q < queue.size() && span.dimension() < m.dim(); ++q)
        for (std::size_t g : m.group.generators()) {
            Vector w = m.images[g] * queue[q];
            if (span.add(w)) queue.push_back(std::move(w));
        }
    return span.basis();
}

std::optional<std::vector<Vector>> find_submodule(const GroupModule& m) {
    const Field& F = m.field();
    const std::size_t n = m.dim();
    if (n == 1) return std::nullopt;
    if (span_dimension(m.images) == n * n) return std::nullopt;

    std::mt19937_64 rng(0xc0ffee ^ n);
    auto comm = commutant(m);
    if (comm.size() > 1) {
        // a non-scalar endomorphism with an eigenvalue has a proper eigenspace
        for (const auto& x : comm)
            if (auto sub = eigen_submodule(m, x)) return sub;
        for (int attempt = 0; attempt < 64; ++attempt) {
            Matrix x(F, n, n);
            for (const auto& b : comm) x = x + scale(b, F.random(rng));
            if (auto sub = eigen_submodule(m, x)) return sub;
        }
        fail(ErrorKind::NotAbsolutelyIrreducible, "module is irreducible but its endomorphisms form a larger field");
    }

    // scalar endomorphisms but not the full algebra: reducible, search with
    // kernels of random group-algebra elements on the module and its dual
    const GroupModule dual = transposed(m);
    const std::size_t N = m.group.order();
    for (int attempt = 0; attempt < 400; ++attempt) {
        Matrix a(F, n, n);
        const int terms = 1 + attempt % 4;
        for (int k = 0; k < terms; ++k) a = a + scale(m.images[rng() % N], F.random_nonzero(rng));
        if (attempt % 3 == 2) a = a * m.images[rng() % N] + scale(m.images[rng() % N], F.random(rng));
        for (const Elem& r : find_roots(F, minpoly(a))) {
            const Matrix shifted = a - Matrix::scalar(F, n, r);
            auto ker = nullspace(shifted);
            for (std::size_t trial = 0; trial <= ker.size(); ++trial) {
                Vector v = trial < ker.size() ? ker[trial] : Vector(n, F.zero());
                if (trial == ker.size())
                    for (const auto& b : ker) {
                        Elem c = F.random(rng);
                        for (std::size_t i = 0; i < n; ++i) v[i] = F.add(v[i], F.mul(c, b[i]));
                    }
                if (std::all_of(v.begin(), v.end(), [&](const Elem& e) { return F.is_zero(e); })) continue;
                auto s = spin(m, {v});
                if (s.size() < n) return s;
            }
            auto dker = nullspace(transpose(shifted));
            for (const auto& w : dker) {
                auto s = spin(dual, {w});
                if (s.size() < n) return annihilator(F, n, s);
            }
        }
    }
    fail(ErrorKind::Internal, "no invariant subspace found in a reducible module");
}

Matrix diagonal_block(const Matrix& a, const std::vector<std::size_t>& dims, std::size_t k) {
    const std::size_t off = std::accumulate(dims.begin(), dims.begin() + static_cast<long>(k), std::size_t{0});
    return sub_block(a, off, off, dims[k], dims[k]);
}

CompositionSeries composition_series(const GroupModule& m) {
    const Field& F = m.field();
    const std::size_t n = m.dim();
    auto sub = find_submodule(m);
    if (!sub) return CompositionSeries{Matrix::identity(F, n), {n}, {m.images}};

    const std::size_t k = sub->size();
    const Matrix t = complete_basis(F, n, *sub);
    const Matrix ti = inverse(t);
    GroupModule lower{m.group, {}}, upper{m.group, {}};
    for (const auto& x : m.images) {
        const Matrix y = ti * x * t;
        lower.images.push_back(sub_block(y, 0, 0, k, k));
        upper.images.push_back(sub_block(y, k, k, n - k, n - k));
    }
    CompositionSeries a = composition_series(lower), b = composition_series(upper);
    Matrix inner(F, n, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) inner(i, j) = a.basis(i, j);
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < n - k; ++j) inner(k + i, k + j) = b.basis(i, j);
    CompositionSeries out{t * inner, a.block_dims, a.blocks};
    out.block_dims.insert(out.block_dims.end(), b.block_dims.begin(), b.block_dims.end());
    out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
    return out;
}

}  // namespace signrep
