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
#include "signrep/roots.hpp"
#include "support/descent_data.hpp"
#include "support/families.hpp"

#include <random>

namespace signrep::testing {

using Rng = std::mt19937_64;

inline std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
    return v[uniform_int(rng, 0, v.size() - 1)];
}

inline std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (n > 2 && is_prime(n)) out.push_back(n);
    return out;
}

inline std::vector<std::uint64_t> divisors_in(std::uint64_t n, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = lo; d <= std::min(n, hi); ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

/// An element of exact multiplicative order r in F_p, r | p - 1.
inline Elem element_of_order(const Field& F, std::uint64_t r) {
    const std::uint64_t p = F.p();
    for (long long a = 2; a < static_cast<long long>(p); ++a) {
        const Elem x = F.pow(F.from_int(a), static_cast<long long>((p - 1) / r));
        bool exact = true;
        for (std::uint64_t q = 2; q <= r && exact; ++q)
            if (r % q == 0 && is_prime(q) && F.is_one(F.pow(x, static_cast<long long>(r / q)))) exact = false;
        if (exact) return x;
    }
    return F.one();
}

inline Matrix random_invertible(const Field& F, std::size_t n, Rng& rng) {
    for (;;) {
        Matrix m(F, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = F.random(rng);
        if (!F.is_zero(determinant(m))) return m;
    }
}

/// A random degree-2 extension of a finite field.
inline Field random_quadratic_extension(const Field& K, Rng& rng) {
    for (;;) {
        Poly f{K.random(rng), K.random(rng), K.one()};
        if (is_irreducible_finite(K, f)) return Field::extension(K, f);
    }
}

inline Matrix embed_matrix(const Matrix& m, const Field& target) {
    if (m.field() == target) return m;
    return map_entries(m, target, [&](const Elem& e) { return target.embed(e); });
}

/// Images m^-1 g m of a matrix group over a field containing its entries, trivial character.
inline InvolutiveRep realize(const InvolutiveGroup& G, const Field& F, const Matrix& m) {
    const Matrix mi = inverse(m);
    std::vector<Matrix> images;
    for (std::size_t g = 0; g < G.order(); ++g) images.push_back(mi * embed_matrix(G.group().matrix(g), F) * m);
    return make_rep(G, F, std::move(images), trivial_character(G, F));
}

/// psi = det^k, a character of any representation.
inline std::vector<Elem> determinant_power(const InvolutiveRep& rep, long long k) {
    std::vector<Elem> psi;
    for (const auto& m : rep.images) psi.push_back(rep.field.pow(determinant(m), k));
    return psi;
}

/// Monomial group {mu_r}^n x| C_n with c = inverse transpose: diag(zeta, 1, ..., 1)
/// and the cyclic shift. Irreducible once r >= 2 (n odd) or r >= 3 (n even).
inline InvolutiveGroup monomial_group(const Field& K, std::size_t n, std::uint64_t r) {
    Matrix d = Matrix::identity(K, n);
    d(0, 0) = element_of_order(K, r);
    std::vector<Matrix> gens{d};
    if (n > 1) {
        Matrix shift(K, n, n);
        for (std::size_t i = 0; i < n; ++i) shift((i + 1) % n, i) = K.one();
        gens.push_back(shift);
    }
    return InvolutiveGroup::inverse_transpose(FiniteGroup::from_matrices(gens));
}

/// r | p - 1 with r >= lo and n * r^n <= 1500.
inline std::vector<std::uint64_t> monomial_orders(std::uint64_t p, std::size_t n, std::uint64_t lo) {
    std::vector<std::uint64_t> out;
    for (auto r : divisors_in(p - 1, lo, p - 1)) {
        double size = static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) size *= static_cast<double>(r);
        if (size <= 1500) out.push_back(r);
    }
    return out;
}

/// Random odd-dimensional (1, 3 or 5) polarized representation: a monomial group
/// over F_p or a quadratic extension, randomly conjugated and twisted.
inline InvolutiveRep odd_dimension_rep(Rng& rng) {
    static const std::vector<std::size_t> dims{1, 3, 5};
    static const auto primes = odd_primes(5, 97);
    for (;;) {
        const std::size_t n = pick(rng, dims);
        const std::uint64_t p = pick(rng, primes);
        const auto orders = monomial_orders(p, n, 2);
        if (orders.empty()) continue;
        const Field K = Field::prime(p);
        const InvolutiveGroup G = monomial_group(K, n, pick(rng, orders));
        const Field F = uniform_int(rng, 0, 2) == 0 ? random_quadratic_extension(K, rng) : K;
        const InvolutiveRep rep = realize(G, F, random_invertible(F, n, rng));
        return twist(rep, determinant_power(rep, static_cast<long long>(uniform_int(rng, 0, 3))));
    }
}

struct SignedCase {
    InvolutiveRep rep;
    int expected_sign = 0;
};

/// Mixed pool with both signs: odd and even monomial groups (+1), dihedral
/// groups with reflections (+1), binary dihedral groups in SL_2 (-1).
inline SignedCase sign_pool_rep(Rng& rng) {
    static const auto primes = odd_primes(5, 97);
    for (;;) {
        const std::uint64_t p = pick(rng, primes);
        const Field K = Field::prime(p);
        const Field F = uniform_int(rng, 0, 3) == 0 ? random_quadratic_extension(K, rng) : K;
        switch (uniform_int(rng, 0, 3)) {
            case 0:
            case 1: {
                const std::size_t n = uniform_int(rng, 0, 1) ? 3 : 2 * uniform_int(rng, 1, 2);
                const auto orders = monomial_orders(p, n, n % 2 ? 2 : 3);
                if (orders.empty()) continue;
                const InvolutiveGroup G = monomial_group(K, n, pick(rng, orders));
                return {realize(G, F, random_invertible(F, n, rng)), 1};
            }
            default: {
                const auto orders = divisors_in(p - 1, 3, 24);
                if (orders.empty()) continue;
                const Elem b = element_of_order(K, pick(rng, orders));
                const Matrix torus = Matrix::diagonal(K, {b, K.inv(b)});
                const bool binary = uniform_int(rng, 0, 1) == 1;
                const Matrix flip =
                    binary ? Matrix::from_ints(K, {{0, -1}, {1, 0}}) : Matrix::from_ints(K, {{0, 1}, {1, 0}});
                const auto G = InvolutiveGroup::trivial_involution(FiniteGroup::from_matrices({torus, flip}));
                return {realize(G, F, random_invertible(F, 2, rng)), binary ? -1 : 1};
            }
        }
    }
}

/// A proper extension of the representation's field: quadratic over a finite
/// field, or the rational function field.
inline Field random_overfield(const Field& F, Rng& rng) {
    if (F.is_finite() && uniform_int(rng, 0, 2) != 0) return random_quadratic_extension(F, rng);
    return Field::function_field(F);
}

/// Two-dimensional descent datum over F_p with H = <S_a, diag(b, 1/b), diag(1, -1)>,
/// S_a = [[0, a], [-1/a, 0]] and b of order at least 3, randomly conjugated.
inline SymplecticExtensionData random_descent_datum(Rng& rng) {
    static const auto primes = odd_primes(5, 97);
    std::uint64_t p = pick(rng, primes);
    while (divisors_in(p - 1, 3, 12).empty()) p = pick(rng, primes);
    const Field F = Field::prime(p);
    const Elem b = element_of_order(F, pick(rng, divisors_in(p - 1, 3, 12)));
    const Elem a = F.random_nonzero(rng);
    Matrix s(F, 2, 2);
    s(0, 1) = a;
    s(1, 0) = F.neg(F.inv(a));
    const Matrix t = Matrix::diagonal(F, {b, F.inv(b)});
    std::optional<Matrix> m;
    if (uniform_int(rng, 0, 3) != 0) m = random_invertible(F, 2, rng);
    return two_dim_descent(F, {s, t}, m);
}

// ---- discrete valuation ring families ----

/// Standard representation of S_n over Q on the basis e_i - e_n.
inline Matrix permutation_standard(const Field& Q, const std::vector<std::size_t>& sigma) {
    const std::size_t n = sigma.size();
    Matrix m(Q, n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (sigma[i] + 1 != n) m(sigma[i], i) = Q.add(m(sigma[i], i), Q.one());
        if (sigma[n - 1] + 1 != n) m(sigma[n - 1], i) = Q.sub(m(sigma[n - 1], i), Q.one());
    }
    return m;
}

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
    const Field& F = a.field();
    Matrix out(F, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = F.mul(a(i, j), b(k, l));
    return out;
}

/// Rational matrix groups used for p-adic families.
enum class RationalGroup { S3, S3xC2, S3xS3, S4, S5, A4, D4 };

inline std::vector<Matrix> rational_generators(RationalGroup g) {
    const Field Q = Field::rationals();
    const Matrix s = Matrix::from_ints(Q, {{-1, 1}, {0, 1}});
    const Matrix r = Matrix::from_ints(Q, {{0, -1}, {1, -1}});
    const Matrix i2 = Matrix::identity(Q, 2);
    switch (g) {
        case RationalGroup::S3: return {s, r};
        case RationalGroup::S3xC2: return {s, r, Matrix::scalar(Q, 2, Q.from_int(-1))};
        case RationalGroup::S3xS3: return {kronecker(s, i2), kronecker(r, i2), kronecker(i2, s), kronecker(i2, r)};
        case RationalGroup::S4: return {permutation_standard(Q, {1, 0, 2, 3}), permutation_standard(Q, {1, 2, 3, 0})};
        case RationalGroup::S5:
            return {permutation_standard(Q, {1, 0, 2, 3, 4}), permutation_standard(Q, {1, 2, 3, 4, 0})};
        case RationalGroup::A4:
            return {Matrix::from_ints(Q, {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}),
                    Matrix::from_ints(Q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})};
        case RationalGroup::D4: return {Matrix::from_ints(Q, {{0, -1}, {1, 0}}), Matrix::from_ints(Q, {{1, 0}, {0, -1}})};
    }
    return {};
}

/// p-adic family of a rational group in a random stable lattice: conjugation by a
/// random integer matrix (possibly of determinant divisible by p), kept only if
/// the images stay integral.
inline DvrRep p_adic_family(RationalGroup which, std::uint64_t p, Rng& rng) {
    const Dvr O = Dvr::p_adic(p);
    const Field& Q = O.fraction_field();
    const auto gens = rational_generators(which);
    const auto G = InvolutiveGroup::trivial_involution(FiniteGroup::from_matrices(gens));
    const std::size_t n = gens.front().rows();
    for (int attempt = 0; attempt < 200; ++attempt) {
        Matrix m(Q, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Q.from_int(static_cast<long long>(uniform_int(rng, 0, 6)) - 3);
        if (Q.is_zero(determinant(m))) continue;
        const InvolutiveRep rep = realize(G, Q, m);
        bool integral = true;
        for (const auto& x : rep.images) integral = integral && O.valuation(x) >= 0;
        if (integral) return make_dvr_rep(rep.group, O, rep.images, rep.character);
    }
    const InvolutiveRep rep = realize(G, Q, Matrix::identity(Q, n));
    return make_dvr_rep(rep.group, O, rep.images, rep.character);
}

/// Constant t-adic family of a group over F_p, conjugated by a random matrix in
/// GL_n(F_p[t]) (unipotent with polynomial entries, times a constant).
inline DvrRep constant_t_adic_family(const InvolutiveGroup& G, Rng& rng) {
    const Field K = G.group().matrix(G.group().identity()).field();
    const Dvr O = Dvr::t_adic(K);
    const Field& L = O.fraction_field();
    const std::size_t n = G.group().matrix(0).rows();
    Matrix u = Matrix::identity(L, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            u(i, j) = L.add(L.embed(K.random(rng)), L.mul(L.embed(K.random(rng)), L.generator()));
    const InvolutiveRep rep = realize(G, L, embed_matrix(random_invertible(K, n, rng), L) * u);
    return make_dvr_rep(rep.group, O, rep.images, rep.character);
}

/// Families with a generically irreducible fiber whose reduction splits: the
/// residue characteristic divides the group order.
inline DvrRep split_family(std::size_t index, Rng& rng) {
    switch (index % 4) {
        case 0: return p_adic_family(RationalGroup::S3, 3, rng);
        case 1: return p_adic_family(RationalGroup::S3xC2, 3, rng);
        case 2: return p_adic_family(RationalGroup::S3xS3, 3, rng);
        default: return p_adic_family(RationalGroup::S5, 5, rng);
    }
}

/// Families whose two fibers have the same number of composition factors.
inline DvrRep equal_count_family(std::size_t index, Rng& rng) {
    auto dihedral = [&](std::uint64_t p, bool binary) {
        const Field K = Field::prime(p);
        const Elem b = element_of_order(K, pick(rng, divisors_in(p - 1, 3, 24)));
        const Matrix flip =
            binary ? Matrix::from_ints(K, {{0, -1}, {1, 0}}) : Matrix::from_ints(K, {{0, 1}, {1, 0}});
        return InvolutiveGroup::trivial_involution(
            FiniteGroup::from_matrices({Matrix::diagonal(K, {b, K.inv(b)}), flip}));
    };
    switch (index % 20) {
        case 0: return p_adic_family(RationalGroup::S3, 5, rng);
        case 1: return p_adic_family(RationalGroup::S3, 7, rng);
        case 2: return p_adic_family(RationalGroup::D4, 3, rng);
        case 3: return p_adic_family(RationalGroup::D4, 5, rng);
        case 4: return p_adic_family(RationalGroup::A4, 3, rng);
        case 5: return p_adic_family(RationalGroup::A4, 5, rng);
        case 6: return p_adic_family(RationalGroup::S4, 3, rng);
        case 7: return p_adic_family(RationalGroup::S5, 3, rng);
        case 8: return p_adic_family(RationalGroup::S3xS3, 5, rng);
        case 9: return klein_sheared(7);
        case 10: return klein_sheared(11);
        case 11: return klein_sheared(13);
        case 12: return constant_t_adic_family(dihedral(11, false), rng);
        case 13: return constant_t_adic_family(dihedral(19, false), rng);
        case 14: return constant_t_adic_family(dihedral(5, true), rng);
        case 15: return constant_t_adic_family(dihedral(13, true), rng);
        case 16: return constant_t_adic_family(monomial_group(Field::prime(7), 3, 3), rng);
        case 17: return constant_t_adic_family(monomial_group(Field::prime(5), 3, 2), rng);
        case 18: return p_adic_family(RationalGroup::S4, 5, rng);
        default: return p_adic_family(RationalGroup::D4, 7, rng);
    }
}

}  // namespace signrep::testing
