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

#include "signrep/specialize.hpp"

#include "signrep/error.hpp"
#include "signrep/poly.hpp"

#include <algorithm>
#include <functional>

namespace signrep {

namespace {

constexpr std::size_t kMaxIterations = 64;

// Group elements whose residual images form a basis of the residual image algebra.
std::vector<std::size_t> algebra_basis_elements(const FiniteGroup& G, const std::vector<Matrix>& residual) {
    const std::size_t n = residual.front().rows();
    SpanBuilder span(residual.front().field(), n * n);
    std::vector<std::size_t> chosen;
    for (std::size_t g : G.bfs_order())
        if (span.add(flatten(residual[g]))) chosen.push_back(g);
    return chosen;
}

// Coefficients a_g (over the residue field) with sum a_g rbar(g) satisfying the
// linear constraints "constraint(M) = target" given as rows over vec(M).
std::optional<Vector> solve_in_algebra(const std::vector<Matrix>& residual, const std::vector<std::size_t>& elems,
                                       const std::function<Vector(const Matrix&)>& constraint, const Vector& target) {
    const Field& k = residual.front().field();
    std::vector<Vector> cols;
    for (std::size_t g : elems) cols.push_back(constraint(residual[g]));
    Matrix sys(k, target.size(), elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j)
        for (std::size_t i = 0; i < target.size(); ++i) sys(i, j) = cols[j][i];
    auto s = solve_linear(sys, target);
    if (!s) return std::nullopt;
    return s->particular;
}

Matrix lift_combination(const DvrRep& rep, const std::vector<std::size_t>& elems, const Vector& coeffs) {
    const Field& L = rep.dvr.fraction_field();
    const std::size_t n = rep.images.front().rows();
    Matrix x(L, n, n);
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (!rep.dvr.residue_field().is_zero(coeffs[i])) x = x + scale(rep.images[elems[i]], rep.dvr.lift(coeffs[i]));
    return x;
}

Vector diagonal_blocks_vec(const Matrix& m, const Matrix& basis, const Matrix& basis_inv,
                           const std::vector<std::size_t>& dims) {
    const Matrix y = basis_inv * m * basis;
    Vector out;
    for (std::size_t b = 0; b < dims.size(); ++b) {
        Matrix blk = diagonal_block(y, dims, b);
        out.insert(out.end(), blk.entries().begin(), blk.entries().end());
    }
    return out;
}

Vector block_target(const Field& k, const std::vector<std::size_t>& dims, std::size_t target) {
    Vector out;
    for (std::size_t b = 0; b < dims.size(); ++b) {
        Matrix blk = b == target ? Matrix::identity(k, dims[b]) : Matrix(k, dims[b], dims[b]);
        out.insert(out.end(), blk.entries().begin(), blk.entries().end());
    }
    return out;
}

// Newton iteration e -> 3e^2 - 2e^3 inside O[x]/(charpoly(a0)) with
// coefficients truncated mod m^N, evaluated at a0 at the end.
LiftedIdempotent newton_lift(const InvolutiveAlgebra& alg, const Matrix& a0, std::size_t rank_target,
                             std::size_t precision) {
    const Dvr& O = alg.rep.dvr;
    const Field& L = O.fraction_field();
    const long N = static_cast<long>(precision);
    Poly chi = charpoly(a0);
    require(O.valuation(chi) >= 0, ErrorKind::Internal, "characteristic polynomial of an integral matrix is not integral");

    auto trunc = [&](Poly p) {
        for (auto& c : p) c = O.truncate(c, N);
        poly::trim(L, p);
        return p;
    };
    auto mulmod = [&](const Poly& a, const Poly& b) { return trunc(poly::rem(L, poly::mul(L, a, b), chi)); };

    LiftedIdempotent out;
    out.precision = precision;
    Poly q = trunc(poly::rem(L, poly::monomial(L, 1), chi));
    long prev = -1;
    bool converged = false;
    for (std::size_t it = 0; it <= kMaxIterations; ++it) {
        const Poly q2 = mulmod(q, q);
        const Poly u = trunc(poly::sub(L, q2, q));
        const long v = std::min(O.valuation(u), N);
        out.defect_history.push_back(v);
        if (prev >= 1) require(v >= std::min(2 * prev, N), ErrorKind::Internal, "idempotent iteration lost precision");
        prev = v;
        if (v >= N) {
            converged = true;
            out.iterations = it;
            break;
        }
        const Poly q3 = mulmod(q2, q);
        q = trunc(poly::sub(L, poly::scale(L, q2, L.from_int(3)), poly::scale(L, q3, L.from_int(2))));
    }
    require(converged, ErrorKind::PrecisionExhausted, "idempotent iteration did not converge");

    const Matrix e = eval_poly(q, a0);
    const std::size_t n = e.rows();
    out.e = e;
    out.defect_valuation = O.valuation(e * e - e);
    out.tau_fixed = alg.tau(e) == e;
    out.residual_rank = rank(O.reduce(e));
    out.trace_congruent = O.valuation(L.sub(trace(e), L.from_int(static_cast<long long>(rank_target)))) >= N;
    const Matrix ae = alg.a * e;
    out.ae_symmetric = transpose(ae) == ae;
    (void)n;
    return out;
}

Matrix half_symmetrize(const InvolutiveAlgebra& alg, const Matrix& x) {
    const Field& L = alg.rep.dvr.fraction_field();
    return scale(x + alg.tau(x), L.inv(L.from_int(2)));
}

int compare_traces(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = F.compare(a[i], b[i]);
        if (c) return c;
    }
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

std::vector<FiberFactor> fiber_report(const std::vector<InvolutiveRep>& factors, const GoodnessReport& g) {
    std::vector<FiberFactor> out;
    for (std::size_t i = 0; i < factors.size(); ++i)
        out.push_back(FiberFactor{factors[i].dim, trace_vector(factors[i]), g.factors[i].polarized, g.factors[i].sign});
    return out;
}

GoodnessReport goodness_multiplicity_free(const std::vector<InvolutiveRep>& factors, const char* fiber) {
    try {
        return goodness(factors);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DuplicateFactor)
            fail(ErrorKind::NotMultiplicityFree, std::string(fiber) + " fiber has a repeated factor");
        throw;
    }
}

std::vector<std::vector<std::size_t>> match_factors(const Dvr& O, const std::vector<InvolutiveRep>& gen,
                                                    const std::vector<InvolutiveRep>& res) {
    const Field& k = O.residue_field();
    std::vector<std::vector<Elem>> target;
    for (const auto& f : gen) {
        std::vector<Elem> t;
        for (const auto& x : trace_vector(f)) t.push_back(O.reduce(x));
        target.push_back(std::move(t));
    }
    std::vector<std::vector<Elem>> have;
    for (const auto& f : res) have.push_back(trace_vector(f));
    const std::size_t R = res.size();
    require(R < 24, ErrorKind::TooLarge, "too many residual factors to match");

    std::vector<std::vector<std::size_t>> out(gen.size());
    std::function<bool(std::size_t, std::uint32_t)> go = [&](std::size_t j, std::uint32_t used) {
        if (j == gen.size()) return used == (1u << R) - 1;
        for (std::uint32_t mask = 1; mask < (1u << R); ++mask) {
            if (mask & used) continue;
            std::size_t dim = 0;
            std::vector<Elem> sum(target[j].size(), k.zero());
            for (std::size_t i = 0; i < R; ++i)
                if (mask >> i & 1) {
                    dim += res[i].dim;
                    for (std::size_t g = 0; g < sum.size(); ++g) sum[g] = k.add(sum[g], have[i][g]);
                }
            if (dim != gen[j].dim || sum != target[j]) continue;
            out[j].clear();
            for (std::size_t i = 0; i < R; ++i)
                if (mask >> i & 1) out[j].push_back(i);
            if (go(j + 1, used | mask)) return true;
        }
        return false;
    };
    require(go(0, 0), ErrorKind::PropagationViolation, "reduced generic traces do not partition the residual factors");
    return out;
}

}  // namespace

StableLattice stable_lattice(const InvolutiveGroup& group, const Dvr& O, const std::vector<Matrix>& images,
                             const std::vector<Elem>& character) {
    const Field& L = O.fraction_field();
    const std::size_t n = images.front().rows();
    std::vector<Vector> vecs;
    for (const auto& m : images)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = m(i, j);
            vecs.push_back(std::move(v));
        }
    std::vector<Vector> basis;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t best = vecs.size();
        long bv = Dvr::kInfinite;
        for (std::size_t k = 0; k < vecs.size(); ++k) {
            long v = O.valuation(vecs[k][r]);
            if (v < bv) {
                bv = v;
                best = k;
            }
        }
        require(best < vecs.size(), ErrorKind::Internal, "lattice generators do not span");
        Vector piv = vecs[best];
        vecs.erase(vecs.begin() + static_cast<long>(best));
        const Elem inv = L.inv(piv[r]);
        for (auto& v : vecs) {
            if (L.is_zero(v[r])) continue;
            const Elem f = L.mul(v[r], inv);
            for (std::size_t i = 0; i < n; ++i) v[i] = L.sub(v[i], L.mul(f, piv[i]));
        }
        basis.push_back(std::move(piv));
    }
    Matrix t(L, n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) t(i, j) = basis[j][i];
    const Matrix ti = inverse(t);
    std::vector<Matrix> conj;
    for (const auto& m : images) conj.push_back(ti * m * t);
    return StableLattice{t, make_dvr_rep(group, O, std::move(conj), character)};
}

Matrix InvolutiveAlgebra::tau(const Matrix& m) const { return at_inv * transpose(m) * transpose(a); }

InvolutiveAlgebra involution_from_witness(const DvrRep& rep, const Matrix& a) {
    const InvolutiveRep gen = generic_fiber(rep);
    if (!witness_valid(gen, a, 1)) {
        if (witness_valid(gen, a, -1)) fail(ErrorKind::NotSymmetricWitness, "witness is antisymmetric");
        fail(ErrorKind::WitnessInvalid, "matrix does not intertwine the dual and the twisted representation");
    }
    InvolutiveAlgebra alg{rep, a, inverse(transpose(a))};
    const Field& L = rep.dvr.fraction_field();
    const FiniteGroup& G = rep.group.group();
    for (std::size_t g = 0; g < G.order(); ++g) {
        const Matrix expect = scale(rep.images[G.inverse(rep.group.c(g))], L.inv(rep.character[g]));
        require(alg.tau(rep.images[g]) == expect, ErrorKind::WitnessInvalid, "involution disagrees on a group element");
    }
    for (std::size_t s : G.generators())
        for (std::size_t t : G.generators())
            require(alg.tau(rep.images[s] * rep.images[t]) == alg.tau(rep.images[t]) * alg.tau(rep.images[s]),
                    ErrorKind::Internal, "involution is not an anti-automorphism");
    return alg;
}

LiftedIdempotent lift_idempotent_equivariant(const InvolutiveAlgebra& alg, const ResidualQuotient& q,
                                             std::size_t target, std::size_t precision) {
    require(precision >= 1, ErrorKind::InvalidPrecision, "precision must be at least 1");
    require(target < q.block_dims.size(), ErrorKind::IndexOutOfRange, "no such residual block");
    const Dvr& O = alg.rep.dvr;
    const Field& k = O.residue_field();
    std::vector<Matrix> residual;
    for (const auto& m : alg.rep.images) residual.push_back(O.reduce(m));
    const Matrix qi = inverse(q.basis);
    const auto elems = algebra_basis_elements(alg.rep.group.group(), residual);
    auto coeffs = solve_in_algebra(
        residual, elems, [&](const Matrix& m) { return diagonal_blocks_vec(m, q.basis, qi, q.block_dims); },
        block_target(k, q.block_dims, target));
    require(coeffs.has_value(), ErrorKind::NotResiduallyIdempotent, "block idempotent is not in the residual algebra");
    const Matrix x = lift_combination(alg.rep, elems, *coeffs);
    const Matrix a0 = half_symmetrize(alg, x);
    require(diagonal_blocks_vec(O.reduce(a0), q.basis, qi, q.block_dims) == block_target(k, q.block_dims, target),
            ErrorKind::NotTauFixed, "residual idempotent is not fixed by the involution");
    LiftedIdempotent out = newton_lift(alg, a0, q.block_dims[target], precision);
    out.target = target;
    return out;
}

LiftedIdempotent lift_idempotent_equivariant(const InvolutiveAlgebra& alg, const Matrix& eps, std::size_t precision) {
    require(precision >= 1, ErrorKind::InvalidPrecision, "precision must be at least 1");
    const Dvr& O = alg.rep.dvr;
    require(eps * eps == eps, ErrorKind::NotResiduallyIdempotent, "residual target is not idempotent");
    std::vector<Matrix> residual;
    for (const auto& m : alg.rep.images) residual.push_back(O.reduce(m));
    const auto elems = algebra_basis_elements(alg.rep.group.group(), residual);
    auto coeffs = solve_in_algebra(residual, elems, [](const Matrix& m) { return flatten(m); }, flatten(eps));
    require(coeffs.has_value(), ErrorKind::NotResiduallyIdempotent, "residual target is not in the residual algebra");
    const Matrix a0 = half_symmetrize(alg, lift_combination(alg.rep, elems, *coeffs));
    require(O.reduce(a0) == eps, ErrorKind::NotTauFixed, "residual idempotent is not fixed by the involution");
    return newton_lift(alg, a0, rank(eps), precision);
}

std::vector<InvolutiveRep> sorted_factors(const InvolutiveRep& rep, const CompositionSeries& cs) {
    std::vector<InvolutiveRep> out;
    for (std::size_t b = 0; b < cs.blocks.size(); ++b)
        out.push_back(InvolutiveRep{rep.group, rep.field, cs.block_dims[b], cs.blocks[b], rep.character});
    std::stable_sort(out.begin(), out.end(), [&](const InvolutiveRep& a, const InvolutiveRep& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return compare_traces(rep.field, trace_vector(a), trace_vector(b)) < 0;
    });
    return out;
}

SpecializeReport specialize_sign(const DvrRep& rep, std::size_t precision) {
    require(precision >= 1, ErrorKind::InvalidPrecision, "precision must be at least 1");
    const Dvr& O = rep.dvr;
    const Field& L = O.fraction_field();
    const FiniteGroup& G = rep.group.group();

    const InvolutiveRep gen = generic_fiber(rep);
    const InvolutiveRep res = residual_fiber(rep);
    const auto gen_factors = sorted_factors(gen, composition_series(GroupModule{G, gen.images}));
    const auto res_factors = sorted_factors(res, composition_series(GroupModule{G, res.images}));
    const GoodnessReport gg = goodness_multiplicity_free(gen_factors, "generic");
    const GoodnessReport rg = goodness_multiplicity_free(res_factors, "residual");

    SpecializeReport out;
    out.precision = precision;
    out.generic = fiber_report(gen_factors, gg);
    out.residual = fiber_report(res_factors, rg);
    out.generic_good = gg.good;
    out.residual_good = rg.good;
    out.counts_equal = gen_factors.size() == res_factors.size();
    out.matching = match_factors(O, gen_factors, res_factors);

    require(!out.generic_good || out.residual_good, ErrorKind::PropagationViolation,
            "generic fiber is good but the residual fiber is not");
    if (out.counts_equal) {
        require(!out.residual_good || out.generic_good, ErrorKind::PropagationViolation,
                "factor counts agree and the residual fiber is good but the generic fiber is not");
        for (std::size_t j = 0; j < gen_factors.size(); ++j) {
            const std::size_t i = out.matching[j].front();
            require(out.generic[j].polarized == out.residual[i].polarized && out.generic[j].sign == out.residual[i].sign,
                    ErrorKind::PropagationViolation, "matched factors have different signs");
        }
        out.converse_checked = true;
    }

    for (std::size_t j = 0; j < gen_factors.size(); ++j) {
        if (!gg.factors[j].polarized || gg.factors[j].sign != 1) continue;
        const InvolutiveRep& tj = gen_factors[j];
        const StableLattice lat = stable_lattice(rep.group, O, tj.images, tj.character);
        const Matrix a = transpose(lat.basis) * gg.factors[j].witness->a * lat.basis;
        const InvolutiveRep lat_res = residual_fiber(lat.rep);
        const CompositionSeries rcs = composition_series(GroupModule{G, lat_res.images});

        if (rcs.blocks.size() == 1) {
            // residually absolutely irreducible: a scaled witness is integral and invertible
            const long v = O.valuation(a);
            const Matrix unit = scale(a, L.inv(L.pow(O.uniformizer(), static_cast<long long>(v))));
            const Matrix abar = O.reduce(unit);
            ShortcutCheck sc{j, try_inverse(abar).has_value(), std::nullopt};
            const Field& k = O.residue_field();
            if (transpose(abar) == abar)
                sc.residual_sign = 1;
            else if (transpose(abar) == scale(abar, k.from_int(-1)))
                sc.residual_sign = -1;
            const std::size_t i = out.matching[j].front();
            require(sc.reduced_witness_invertible && sc.residual_sign == out.residual[i].sign,
                    ErrorKind::PropagationViolation, "reduced witness does not give the residual sign");
            out.shortcuts.push_back(sc);
            continue;
        }

        const InvolutiveAlgebra alg = involution_from_witness(lat.rep, a);
        const ResidualQuotient quotient{rcs.basis, rcs.block_dims};
        for (std::size_t b = 0; b < rcs.blocks.size(); ++b) {
            const InvolutiveRep blk{rep.group, O.residue_field(), rcs.block_dims[b], rcs.blocks[b], res.character};
            std::size_t which = res_factors.size();
            for (std::size_t i : out.matching[j])
                if (isomorphic(blk, res_factors[i])) which = i;
            require(which < res_factors.size(), ErrorKind::Internal, "residual block not found among residual factors");
            if (!out.residual[which].polarized) continue;
            LiftCheck lc{j, which, lift_idempotent_equivariant(alg, quotient, b, precision), false};
            const auto& e = lc.lift;
            require(e.defect_valuation >= static_cast<long>(precision) && e.tau_fixed &&
                        e.residual_rank == rcs.block_dims[b] && e.trace_congruent && e.ae_symmetric,
                    ErrorKind::PropagationViolation, "lifted idempotent fails its checks");
            require(out.residual[which].sign == 1, ErrorKind::PropagationViolation,
                    "symmetric lifted idempotent but residual sign is not +1");
            out.lifts.push_back(std::move(lc));
        }
    }
    return out;
}

}  // namespace signrep
