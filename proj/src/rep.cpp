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

#include "signrep/rep.hpp"

#include "signrep/error.hpp"

namespace signrep {

namespace {

void check_character(const InvolutiveGroup& G, const Field& F, const std::vector<Elem>& chi) {
    const FiniteGroup& g = G.group();
    require(chi.size() == G.order(), ErrorKind::NonMultiplicativeCharacter, "character has wrong length");
    for (std::size_t x = 0; x < G.order(); ++x) {
        F.validate(chi[x]);
        require(!F.is_zero(chi[x]), ErrorKind::NonMultiplicativeCharacter, "character takes the value 0");
        for (std::size_t s : g.generators())
            require(chi[g.mul(x, s)] == F.mul(chi[x], chi[s]), ErrorKind::NonMultiplicativeCharacter,
                    "character is not multiplicative");
    }
    require(F.is_one(chi[g.identity()]), ErrorKind::NonMultiplicativeCharacter, "character is not 1 at the identity");
    for (std::size_t x = 0; x < G.order(); ++x)
        require(chi[G.c(x)] == chi[x], ErrorKind::IncompatibleCharacter, "character is not constant on c-orbits");
}

// Coefficient matrix of X -> to(g) X - scalar(g) X from(g) stacked over generators.
Matrix intertwining_system(const FiniteGroup& G, const std::vector<Matrix>& to, const std::vector<Matrix>& from,
                           const std::vector<Elem>* scalar) {
    const Field& F = from.front().field();
    const std::size_t m = to.front().rows(), n = from.front().rows();
    const auto& gens = G.generators();
    Matrix sys(F, gens.size() * m * n, m * n);
    std::size_t row = 0;
    for (std::size_t g : gens) {
        const Matrix& P = to[g];
        const Matrix& R = from[g];
        const Elem s = scalar ? (*scalar)[g] : F.one();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row) {
                for (std::size_t k = 0; k < m; ++k) sys(row, k * n + j) = F.add(sys(row, k * n + j), P(i, k));
                for (std::size_t k = 0; k < n; ++k)
                    sys(row, i * n + k) = F.sub(sys(row, i * n + k), F.mul(s, R(k, j)));
            }
    }
    return sys;
}

}  // namespace

InvolutiveRep make_rep(InvolutiveGroup group, Field field, std::vector<Matrix> images, std::vector<Elem> character) {
    const FiniteGroup& G = group.group();
    require(images.size() == G.order(), ErrorKind::DimensionMismatch, "one image per group element is required");
    const std::size_t n = images.front().rows();
    require(n >= 1, ErrorKind::DimensionMismatch, "representation of dimension 0");
    for (const auto& m : images) {
        require(m.square() && m.rows() == n, ErrorKind::DimensionMismatch, "images of different sizes");
        require(m.field() == field, ErrorKind::FieldMismatch, "image over a different field");
        for (const auto& e : m.entries()) field.validate(e);
    }
    require(images[G.identity()] == Matrix::identity(field, n), ErrorKind::NotAHomomorphism,
            "identity does not map to the identity matrix");
    for (std::size_t x = 0; x < G.order(); ++x)
        for (std::size_t s : G.generators())
            require(images[G.mul(x, s)] == images[x] * images[s], ErrorKind::NotAHomomorphism,
                    "images are not multiplicative");
    check_character(group, field, character);
    return InvolutiveRep{std::move(group), std::move(field), n, std::move(images), std::move(character)};
}

std::vector<Elem> character_from_generators(const FiniteGroup& group, const Field& field, const std::vector<Elem>& values) {
    require(values.size() == group.generators().size(), ErrorKind::DimensionMismatch,
            "one character value per generator is required");
    auto ext = extend_homomorphism<Elem>(
        group, values, field.one(), [&](const Elem& a, const Elem& b) { return field.mul(a, b); },
        [](const Elem& a, const Elem& b) { return a == b; });
    require(ext.has_value(), ErrorKind::NonMultiplicativeCharacter, "character values are not multiplicative");
    return *ext;
}

InvolutiveRep rep_from_generators(InvolutiveGroup group, Field field, const std::vector<Matrix>& generator_images,
                                  const std::vector<Elem>& generator_character) {
    const FiniteGroup& G = group.group();
    require(generator_images.size() == G.generators().size(), ErrorKind::DimensionMismatch,
            "one image per generator is required");
    const std::size_t n = generator_images.front().rows();
    for (const auto& m : generator_images) {
        require(m.square() && m.rows() == n, ErrorKind::DimensionMismatch, "images of different sizes");
        require(m.field() == field, ErrorKind::FieldMismatch, "image over a different field");
    }
    auto imgs = extend_homomorphism<Matrix>(
        G, generator_images, Matrix::identity(field, n), [](const Matrix& a, const Matrix& b) { return a * b; },
        [](const Matrix& a, const Matrix& b) { return a == b; });
    require(imgs.has_value(), ErrorKind::NotAHomomorphism, "generator images do not define a homomorphism");
    std::vector<Elem> chi = character_from_generators(G, field, generator_character);
    return make_rep(std::move(group), std::move(field), std::move(*imgs), std::move(chi));
}

std::vector<Elem> trivial_character(const InvolutiveGroup& group, const Field& field) {
    return std::vector<Elem>(group.order(), field.one());
}

InvolutiveRep perp(const InvolutiveRep& rep) {
    InvolutiveRep r = rep;
    for (std::size_t g = 0; g < rep.group.order(); ++g) r.images[g] = transpose(inverse(rep.images[rep.group.c(g)]));
    r.character = trivial_character(rep.group, rep.field);
    return r;
}

std::size_t image_span_dimension(const InvolutiveRep& rep) {
    const std::size_t n = rep.dim;
    SpanBuilder span(rep.field, n * n);
    for (std::size_t g : rep.group.group().bfs_order()) {
        span.add(flatten(rep.images[g]));
        if (span.dimension() == n * n) break;
    }
    return span.dimension();
}

bool is_absolutely_irreducible(const InvolutiveRep& rep) { return image_span_dimension(rep) == rep.dim * rep.dim; }

std::optional<PolarizationWitness> intertwiner(const InvolutiveRep& rep) {
    require(is_absolutely_irreducible(rep), ErrorKind::NotAbsolutelyIrreducible,
            "images span a proper subspace of the matrix algebra");
    const Field& F = rep.field;
    const std::size_t n = rep.dim;
    const InvolutiveRep p = perp(rep);
    auto basis = nullspace(intertwining_system(rep.group.group(), p.images, rep.images, &rep.character));
    if (basis.empty()) return std::nullopt;
    require(basis.size() == 1, ErrorKind::AmbiguousIntertwiner,
            "intertwiner space has dimension " + std::to_string(basis.size()));
    Vector v = basis.front();
    std::size_t first = 0;
    while (F.is_zero(v[first])) ++first;
    const Elem inv = F.inv(v[first]);
    for (auto& x : v) x = F.mul(x, inv);
    Matrix a = unflatten(F, n, n, v);
    require(try_inverse(a).has_value(), ErrorKind::Internal, "intertwiner of an irreducible rep is singular");

    const std::size_t i = first / n, j = first % n;
    const Elem lam = F.div(a(j, i), a(i, j));
    int lambda = 0;
    if (F.is_one(lam))
        lambda = 1;
    else if (F.is_one(F.neg(lam)))
        lambda = -1;
    require(lambda != 0, ErrorKind::Internal, "symmetry scalar of the intertwiner is not +-1");
    require(transpose(a) == scale(a, F.from_int(lambda)), ErrorKind::Internal,
            "intertwiner is neither symmetric nor antisymmetric");
    if (n % 2 == 1) require(lambda == 1, ErrorKind::Internal, "odd-dimensional intertwiner is antisymmetric");
    return PolarizationWitness{std::move(a), lambda};
}

int sign(const InvolutiveRep& rep) {
    auto w = intertwiner(rep);
    require(w.has_value(), ErrorKind::NotPolarized, "representation is not conjugate-self-dual for this character");
    return w->lambda;
}

bool witness_valid(const InvolutiveRep& rep, const Matrix& a, int lambda) {
    const Field& F = rep.field;
    if (a.rows() != rep.dim || !a.square() || a.field() != F) return false;
    if (!try_inverse(a)) return false;
    if (transpose(a) != scale(a, F.from_int(lambda))) return false;
    const InvolutiveRep p = perp(rep);
    for (std::size_t g = 0; g < rep.group.order(); ++g)
        if (p.images[g] * a != scale(a * rep.images[g], rep.character[g])) return false;
    return true;
}

std::vector<Matrix> hom_space(const InvolutiveRep& from, const InvolutiveRep& to) {
    require(from.group.order() == to.group.order(), ErrorKind::DimensionMismatch, "representations of different groups");
    require(from.field == to.field, ErrorKind::FieldMismatch, "representations over different fields");
    std::vector<Matrix> out;
    for (auto& v : nullspace(intertwining_system(from.group.group(), to.images, from.images, nullptr)))
        out.push_back(unflatten(from.field, to.dim, from.dim, v));
    return out;
}

std::vector<Elem> trace_vector(const InvolutiveRep& rep) {
    std::vector<Elem> t;
    t.reserve(rep.images.size());
    for (const auto& m : rep.images) t.push_back(trace(m));
    return t;
}

bool isomorphic(const InvolutiveRep& a, const InvolutiveRep& b) {
    if (a.dim != b.dim) return false;
    if (trace_vector(a) != trace_vector(b)) return false;
    for (const auto& x : hom_space(a, b))
        if (try_inverse(x)) return true;
    return false;
}

GoodnessReport goodness(const std::vector<InvolutiveRep>& factors) {
    GoodnessReport report;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        require(is_absolutely_irreducible(factors[i]), ErrorKind::NotAbsolutelyIrreducible,
                "factor " + std::to_string(i) + " is not absolutely irreducible");
        for (std::size_t j = 0; j < i; ++j)
            require(!isomorphic(factors[j], factors[i]), ErrorKind::DuplicateFactor,
                    "factors " + std::to_string(j) + " and " + std::to_string(i) + " are isomorphic");
    }
    for (const auto& f : factors) {
        FactorReport fr;
        fr.dim = f.dim;
        fr.witness = intertwiner(f);
        fr.polarized = fr.witness.has_value();
        if (fr.polarized) {
            fr.sign = fr.witness->lambda;
            if (fr.witness->lambda != 1) report.good = false;
        }
        report.factors.push_back(std::move(fr));
    }
    return report;
}

InvolutiveRep twist(const InvolutiveRep& rep, const std::vector<Elem>& psi) {
    const Field& F = rep.field;
    const FiniteGroup& G = rep.group.group();
    require(psi.size() == G.order(), ErrorKind::NonMultiplicativeCharacter, "twisting character has wrong length");
    for (std::size_t x = 0; x < G.order(); ++x) {
        require(!F.is_zero(psi[x]), ErrorKind::NonMultiplicativeCharacter, "twisting character takes the value 0");
        for (std::size_t s : G.generators())
            require(psi[G.mul(x, s)] == F.mul(psi[x], psi[s]), ErrorKind::NonMultiplicativeCharacter,
                    "twisting character is not multiplicative");
    }
    InvolutiveRep r = rep;
    for (std::size_t g = 0; g < G.order(); ++g) {
        r.images[g] = scale(rep.images[g], psi[g]);
        // chi * psi^-1 * psi^perp, where psi^perp(g) = psi(c(g))^-1
        r.character[g] = F.div(rep.character[g], F.mul(psi[g], psi[rep.group.c(g)]));
    }
    return r;
}

Restriction restrict_rep(const InvolutiveRep& rep, const std::vector<std::size_t>& elements) {
    auto [sub, embed] = rep.group.restrict_to(elements);
    std::vector<Matrix> imgs;
    std::vector<Elem> chi;
    for (std::size_t g : embed) {
        imgs.push_back(rep.images[g]);
        chi.push_back(rep.character[g]);
    }
    Restriction r{InvolutiveRep{std::move(sub), rep.field, rep.dim, std::move(imgs), std::move(chi)},
                  std::move(embed), false};
    r.absolutely_irreducible = is_absolutely_irreducible(r.rep);
    return r;
}

InvolutiveRep conjugate(const InvolutiveRep& rep, const Matrix& m) {
    const Matrix mi = inverse(m);
    InvolutiveRep r = rep;
    for (auto& x : r.images) x = mi * x * m;
    return r;
}

InvolutiveRep extend_scalars(const InvolutiveRep& rep, const Field& target) {
    require(target.kind() == FieldKind::extension || target.kind() == FieldKind::function_field,
            ErrorKind::FieldMismatch, "target is not an extension");
    require(target.base() == rep.field, ErrorKind::FieldMismatch, "target does not extend the coefficient field");
    auto up = [&](const Elem& e) { return target.embed(e); };
    InvolutiveRep r{rep.group, target, rep.dim, {}, {}};
    for (const auto& m : rep.images) r.images.push_back(map_entries(m, target, up));
    for (const auto& x : rep.character) r.character.push_back(up(x));
    return r;
}

}  // namespace signrep
