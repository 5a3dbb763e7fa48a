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

#include "signrep/dvr.hpp"

#include "signrep/error.hpp"
#include "signrep/poly.hpp"

namespace signrep {

namespace {

long int_valuation(Int n, std::uint64_t p) {
    if (n == 0) return Dvr::kInfinite;
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Int pow_int(std::uint64_t p, long k) {
    Int r = 1;
    for (long i = 0; i < k; ++i) r *= p;
    return r;
}

}  // namespace

Dvr Dvr::t_adic(const Field& coefficients) {
    require(coefficients.kind() != FieldKind::function_field, ErrorKind::UnsupportedField,
            "coefficient field of a t-adic ring must not itself be a function field");
    return Dvr(DvrKind::t_adic, Field::function_field(coefficients), coefficients, 0);
}

Dvr Dvr::p_adic(std::uint64_t p) {
    Field residue = Field::prime(p);  // rejects 2 and composites
    return Dvr(DvrKind::p_adic, Field::rationals(), std::move(residue), p);
}

long Dvr::valuation(const Elem& x) const {
    if (fraction_.is_zero(x)) return kInfinite;
    if (kind_ == DvrKind::p_adic) {
        const auto& q = std::get<Rational>(x.v);
        return int_valuation(boost::multiprecision::numerator(q), p_) -
               int_valuation(boost::multiprecision::denominator(q), p_);
    }
    const auto& r = std::get<RatFn>(x.v);
    return poly::order_at_zero(residue_, r.num) - poly::order_at_zero(residue_, r.den);
}

long Dvr::valuation(const Matrix& m) const {
    long v = kInfinite;
    for (const auto& e : m.entries()) v = std::min(v, valuation(e));
    return v;
}

long Dvr::valuation(const Poly& coeffs) const {
    long v = kInfinite;
    for (const auto& e : coeffs) v = std::min(v, valuation(e));
    return v;
}

Elem Dvr::reduce(const Elem& x) const {
    const long v = valuation(x);
    require(v >= 0, ErrorKind::NotIntegral, "element " + fraction_.to_string(x) + " is not integral");
    if (v > 0) return residue_.zero();
    if (kind_ == DvrKind::p_adic) {
        const auto& q = std::get<Rational>(x.v);
        return residue_.from_rational(q);
    }
    const auto& r = std::get<RatFn>(x.v);
    return residue_.div(r.num.front(), r.den.front());
}

Matrix Dvr::reduce(const Matrix& m) const {
    return map_entries(m, residue_, [&](const Elem& e) { return reduce(e); });
}

Elem Dvr::lift(const Elem& r) const {
    residue_.validate(r);
    if (kind_ == DvrKind::p_adic) return Elem(Rational(Int(std::get<std::uint64_t>(r.v))));
    return fraction_.embed(r);
}

Matrix Dvr::lift(const Matrix& m) const {
    return map_entries(m, fraction_, [&](const Elem& e) { return lift(e); });
}

Elem Dvr::uniformizer() const {
    if (kind_ == DvrKind::p_adic) return fraction_.from_int(static_cast<long long>(p_));
    return fraction_.generator();
}

Elem Dvr::truncate(const Elem& x, long k) const {
    require(valuation(x) >= 0, ErrorKind::NotIntegral, "truncation of a non-integral element");
    if (k <= 0) return fraction_.zero();
    if (kind_ == DvrKind::p_adic) {
        const auto& q = std::get<Rational>(x.v);
        const Int mod = pow_int(p_, k);
        Int num = boost::multiprecision::numerator(q) % mod;
        Int den = boost::multiprecision::denominator(q) % mod;
        // den is a unit mod p^k; invert by the extended Euclidean algorithm
        Int r0 = mod, r1 = den, s0 = 0, s1 = 1;
        while (r1 != 0) {
            Int qq = r0 / r1;
            Int t = r0 - qq * r1;
            r0 = r1;
            r1 = t;
            t = s0 - qq * s1;
            s0 = s1;
            s1 = t;
        }
        Int v = (num * s0) % mod;
        if (v < 0) v += mod;
        return Elem(Rational(v));
    }
    const auto& r = std::get<RatFn>(x.v);
    const Field& B = residue_;
    const std::size_t K = static_cast<std::size_t>(k);
    // power series of num/den to K terms
    Poly inv(K, B.zero());
    const Elem c0 = B.inv(r.den.front());
    inv[0] = c0;
    for (std::size_t i = 1; i < K; ++i) {
        Elem acc = B.zero();
        for (std::size_t j = 1; j <= i && j < r.den.size(); ++j) acc = B.add(acc, B.mul(r.den[j], inv[i - j]));
        inv[i] = B.neg(B.mul(acc, c0));
    }
    Poly s(K, B.zero());
    for (std::size_t i = 0; i < r.num.size() && i < K; ++i)
        for (std::size_t j = 0; i + j < K; ++j) s[i + j] = B.add(s[i + j], B.mul(r.num[i], inv[j]));
    poly::trim(B, s);
    return Elem(RatFn{std::move(s), {B.one()}});
}

std::string Dvr::describe() const {
    if (kind_ == DvrKind::p_adic) return "Z_(" + std::to_string(p_) + ")";
    return residue_.describe() + "[t]_(t)";
}

DvrRep make_dvr_rep(InvolutiveGroup group, Dvr dvr, std::vector<Matrix> images, std::vector<Elem> character) {
    InvolutiveRep generic = make_rep(group, dvr.fraction_field(), images, character);
    for (std::size_t g = 0; g < generic.images.size(); ++g) {
        require(dvr.valuation(generic.images[g]) >= 0, ErrorKind::NotIntegral,
                "image of element " + std::to_string(g) + " has a non-integral entry");
        require(dvr.is_unit(determinant(generic.images[g])), ErrorKind::NotIntegral,
                "image of element " + std::to_string(g) + " is not invertible over the ring");
        require(dvr.is_unit(generic.character[g]), ErrorKind::NotIntegral, "character value is not a unit");
    }
    return DvrRep{std::move(group), std::move(dvr), std::move(generic.images), std::move(generic.character)};
}

InvolutiveRep generic_fiber(const DvrRep& rep) {
    return InvolutiveRep{rep.group, rep.dvr.fraction_field(), rep.images.front().rows(), rep.images, rep.character};
}

InvolutiveRep residual_fiber(const DvrRep& rep) {
    InvolutiveRep r{rep.group, rep.dvr.residue_field(), rep.images.front().rows(), {}, {}};
    for (const auto& m : rep.images) r.images.push_back(rep.dvr.reduce(m));
    for (const auto& x : rep.character) r.character.push_back(rep.dvr.reduce(x));
    return r;
}

}  // namespace signrep
