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

/**
 * @file field.hpp
 * @brief Exact coefficient fields with canonical element forms.
 *
 * A Field is a cheap, immutable handle to a field descriptor. Elements (Elem)
 * carry only their canonical value; every arithmetic operation goes through the
 * Field that owns them, in the style of a ring context. Supported fields:
 *
 * - the rationals Q (reduced fractions),
 * - prime fields F_p for odd primes p < 2^31 (least nonnegative residues),
 * - simple extensions base[x]/(f) by a monic irreducible f (reduced residues),
 * - rational function fields base(t) (coprime numerator/denominator, monic
 *   denominator); used as the fraction field of t-adic valuation rings.
 *
 * Characteristic 2 is rejected everywhere.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace signrep {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Elem;
/// Dense polynomial, coefficients from low to high degree, no trailing zeros.
using Poly = std::vector<Elem>;

struct RatFn {
    Poly num;
    Poly den;
};

struct Elem {
    std::variant<std::uint64_t, Rational, Poly, RatFn> v{std::uint64_t{0}};

    Elem() = default;
    explicit Elem(std::uint64_t r) : v(r) {}
    explicit Elem(Rational q) : v(std::move(q)) {}
    explicit Elem(Poly p) : v(std::move(p)) {}
    explicit Elem(RatFn f) : v(std::move(f)) {}
};

bool operator==(const Elem& a, const Elem& b);
inline bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

enum class FieldKind { rationals, prime, extension, function_field };

class Field {
public:
    /// The rationals.
    Field();

    static Field rationals();
    static Field prime(std::uint64_t p);
    /// Simple extension base[x]/(modulus). Irreducibility is verified for
    /// finite bases (any degree) and for rational bases up to degree 3;
    /// otherwise `certified` must be set by the caller.
    static Field extension(const Field& base, const Poly& modulus, bool certified = false);
    static Field function_field(const Field& base);

    FieldKind kind() const;
    /// 0 for characteristic zero.
    std::uint64_t characteristic() const;
    /// Prime of a prime field.
    std::uint64_t p() const;
    const Field& base() const;
    const Poly& modulus() const;
    std::size_t degree() const;
    bool is_finite() const;
    /// Cardinality of a finite field.
    Int size() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(long long n) const;
    Elem from_integer(const Int& n) const;
    /// Image of a rational number; throws DivisionByZero if the denominator
    /// vanishes in this characteristic.
    Elem from_rational(const Rational& q) const;
    /// Embedding of an element of base() (extensions and function fields).
    Elem embed(const Elem& base_elem) const;
    /// The generator x (extension) or t (function field).
    Elem generator() const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, long long e) const;
    Elem pow(const Elem& a, const Int& e) const;

    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    /// Deterministic total order on canonical forms.
    int compare(const Elem& a, const Elem& b) const;
    std::size_t hash(const Elem& a) const;

    /// Canonical string form: "p/q" for Q, least residue for F_p,
    /// "(c0,c1,...)" for extensions, "(num)/(den)" for function fields.
    std::string to_string(const Elem& a) const;
    Elem parse(const std::string& s) const;

    /// Uniform for finite fields; small random rationals otherwise.
    Elem random(std::mt19937_64& rng) const;
    /// Random nonzero element.
    Elem random_nonzero(std::mt19937_64& rng) const;

    /// Throws unless the value has the canonical shape of this field.
    void validate(const Elem& a) const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    /// Human-readable descriptor, e.g. "F_19" or "F_5[x]/(x^2+3)".
    std::string describe() const;

    struct Impl;

private:
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);

}  // namespace signrep
