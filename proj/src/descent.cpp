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

#include "signrep/descent.hpp"

#include "signrep/error.hpp"
#include "signrep/roots.hpp"

#include <algorithm>

namespace signrep {

namespace {

bool is_diagonal(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m.field().is_zero(m(i, j))) return false;
    return true;
}

// Columns: a basis of ker(m - s) followed by a basis of ker(m + s).
Matrix eigenbasis(const Matrix& m, const Elem& s) {
    const Field& F = m.field();
    const std::size_t n = m.rows();
    auto plus = nullspace(m - Matrix::scalar(F, n, s));
    auto minus = nullspace(m + Matrix::scalar(F, n, s));
    require(plus.size() + minus.size() == n, ErrorKind::NonDiagonalizableInvolution, "r(c) is not diagonalizable");
    Matrix b(F, n, n);
    std::size_t col = 0;
    for (const auto* space : {&plus, &minus})
        for (const auto& v : *space) {
            for (std::size_t i = 0; i < n; ++i) b(i, col) = v[i];
            ++col;
        }
    return b;
}

}  // namespace

DescentResult symplectic_descent(const SymplecticExtensionData& d) {
    const FiniteGroup& H = d.ambient;
    const Field& F = d.field;
    const std::size_t N = H.order();
    require(d.r.size() == N && d.omega.size() == N, ErrorKind::DimensionMismatch, "one value per element of H is required");
    const std::size_t dim = d.r.front().rows();
    require(dim % 2 == 0, ErrorKind::DimensionMismatch, "r must have even dimension");
    require(d.p.square() && d.p.rows() == dim, ErrorKind::DimensionMismatch, "P has the wrong size");
    require(d.c < N && d.c != H.identity() && H.mul(d.c, d.c) == H.identity(), ErrorKind::NotAGroup,
            "c must have order 2");

    std::vector<std::size_t> sub = d.subgroup;
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    require(2 * sub.size() == N, ErrorKind::NotASubgroup, "subgroup does not have index 2");
    require(!std::binary_search(sub.begin(), sub.end(), d.c), ErrorKind::NotASubgroup, "c lies in the subgroup");

    // validate r and omega as a representation of H with the involution x -> c x c
    std::vector<std::size_t> conj(N);
    for (std::size_t x = 0; x < N; ++x) conj[x] = H.mul(H.mul(d.c, x), d.c);
    InvolutiveGroup Hc(H, conj);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t s : H.generators())
            require(d.omega[H.mul(x, s)] == F.mul(d.omega[x], d.omega[s]), ErrorKind::NonMultiplicativeCharacter,
                    "omega is not multiplicative");
    require(F.is_one(F.neg(d.omega[d.c])), ErrorKind::NonMultiplicativeCharacter, "omega(c) must be -1");
    InvolutiveRep rH = make_rep(Hc, F, d.r, std::vector<Elem>(N, F.one()));

    require(transpose(d.p) == scale(d.p, F.from_int(-1)), ErrorKind::NotAntisymmetric, "P is not antisymmetric");
    const Matrix p_inv = inverse(d.p);
    const long long odd = static_cast<long long>(dim) - 1;
    for (std::size_t h = 0; h < N; ++h)
        require(transpose(inverse(rH.images[h])) == scale(d.p * rH.images[h] * p_inv, F.pow(d.omega[h], odd)),
                ErrorKind::RelationFails, "defining relation fails at element " + std::to_string(h));

    const Matrix& rc = rH.images[d.c];
    const Matrix sq = rc * rc;
    require(is_diagonal(sq), ErrorKind::NonDiagonalizableInvolution, "r(c)^2 is not scalar");
    for (std::size_t i = 1; i < dim; ++i)
        require(sq(i, i) == sq(0, 0), ErrorKind::NonDiagonalizableInvolution, "r(c)^2 is not scalar");

    Matrix m = Matrix::identity(F, dim);
    if (!is_diagonal(rc)) {
        auto s = square_root(F, sq(0, 0));
        require(s.has_value(), ErrorKind::NonDiagonalizableInvolution,
                "eigenvalues of r(c) are not defined over " + F.describe());
        m = eigenbasis(rc, *s);
    }
    const Matrix mi = inverse(m);
    const Matrix rc2 = mi * rc * m;
    const Matrix p2 = transpose(m) * d.p * m;
    const Matrix a2 = rc2 * p2;
    require(transpose(a2) == a2, ErrorKind::Internal, "r(c) P is not symmetric");
    const Matrix a = transpose(mi) * a2 * mi;

    auto [G, embed] = Hc.restrict_to(sub);
    std::vector<Matrix> imgs;
    std::vector<Elem> chi;
    for (std::size_t x : embed) {
        imgs.push_back(d.r[x]);
        chi.push_back(F.pow(d.omega[x], odd));
    }
    InvolutiveRep restricted = make_rep(G, F, std::move(imgs), std::move(chi));
    require(witness_valid(restricted, a, 1), ErrorKind::Internal, "descended witness does not intertwine");
    return DescentResult{std::move(restricted), a, m};
}

SemidirectReport semidirect_extend(const InvolutiveRep& rep, const PolarizationWitness& w) {
    const Field& F = rep.field;
    const FiniteGroup& G = rep.group.group();
    const std::size_t n = rep.dim;
    const std::size_t N = G.order();
    require(w.a.square() && w.a.rows() == n, ErrorKind::DimensionMismatch, "witness has the wrong size");
    auto at_inv_opt = try_inverse(transpose(w.a));
    require(at_inv_opt.has_value(), ErrorKind::HomomorphismFails, "witness is singular");

    struct Elt {
        Matrix x;
        Elem y;
        int e;
    };
    auto theta = [&](const Matrix& x, const Elem& y) { return std::pair{scale(transpose(inverse(x)), y), y}; };
    auto mul = [&](const Elt& a, const Elt& b) {
        if (a.e == 0) return Elt{a.x * b.x, F.mul(a.y, b.y), b.e};
        auto [tx, ty] = theta(b.x, b.y);
        return Elt{a.x * tx, F.mul(a.y, ty), (a.e + b.e) % 2};
    };
    auto same = [](const Elt& a, const Elt& b) { return a.e == b.e && a.y == b.y && a.x == b.x; };

    const Elem eps = F.from_int(w.lambda);
    std::vector<Elt> img;
    for (std::size_t g = 0; g < N; ++g) img.push_back(Elt{rep.images[g], F.inv(rep.character[g]), 0});
    const Elt tc{*at_inv_opt, eps, 1};
    // image of g c^e
    auto of = [&](std::size_t g, int e) { return e ? mul(img[g], tc) : img[g]; };

    SemidirectReport rpt;
    rpt.epsilon = w.lambda;
    // elements of G u {c} as (g, e) in normal form g c^e
    std::vector<std::pair<std::size_t, int>> pool;
    for (std::size_t g = 0; g < N; ++g) pool.emplace_back(g, 0);
    pool.emplace_back(G.identity(), 1);
    for (const auto& [g1, e1] : pool)
        for (const auto& [g2, e2] : pool) {
            // (g1 c^e1)(g2 c^e2) = g1 (c^e1 g2 c^-e1) c^(e1+e2)
            std::size_t g2c = e1 ? rep.group.c(g2) : g2;
            Elt lhs = mul(of(g1, e1), of(g2, e2));
            Elt rhs = of(G.mul(g1, g2c), (e1 + e2) % 2);
            require(same(lhs, rhs), ErrorKind::HomomorphismFails, "extended map is not multiplicative");
            ++rpt.pairs_checked;
        }
    rpt.homomorphism = true;

    // Solve for every P with T(X) P = P transpose(X) for all X, where
    // T(X) = transpose(A)^-1 transpose(X) transpose(A); the solutions form a line.
    const Matrix at = transpose(w.a);
    const Matrix& at_inv = *at_inv_opt;
    Matrix sys(F, n * n * n * n, n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix x(F, n, n);
            x(i, j) = F.one();
            const Matrix t = at_inv * transpose(x) * at;
            const Matrix xt = transpose(x);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s, ++row) {
                    for (std::size_t k = 0; k < n; ++k) {
                        sys(row, k * n + s) = F.add(sys(row, k * n + s), t(r, k));
                        sys(row, r * n + k) = F.sub(sys(row, r * n + k), xt(k, s));
                    }
                }
        }
    auto sols = nullspace(sys);
    rpt.maps_agree = sols.size() == 1 && try_inverse(unflatten(F, n, n, sols.front())).has_value();
    if (rpt.maps_agree) {
        const Matrix p = unflatten(F, n, n, sols.front());
        rpt.odd = transpose(p) == p;
    }
    return rpt;
}

}  // namespace signrep
