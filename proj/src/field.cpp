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

#include "signrep/field.hpp"

#include "signrep/error.hpp"
#include "signrep/poly.hpp"
#include "signrep/roots.hpp"

#include <functional>

namespace signrep {

struct Field::Impl {
    FieldKind kind = FieldKind::rationals;
    std::uint64_t p = 0;
    std::optional<Field> base;
    Poly modulus;
    std::size_t degree = 1;
};

namespace {

using Kind = FieldKind;

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_int(const Int& n, std::uint64_t p) {
    Int r = n % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_int(const Int& n) {
    std::size_t h = n < 0 ? 1 : 0;
    Int a = abs(n);
    while (a != 0) {
        h = mix(h, static_cast<std::size_t>(static_cast<std::uint64_t>(a & 0xffffffffffffffffULL)));
        a >>= 64;
    }
    return h;
}

// Split "(a,(b,c),d)" into top-level items; returns false if not parenthesized.
bool split_parenthesized(const std::string& s, char open, char close, std::vector<std::string>& items) {
    if (s.size() < 2 || s.front() != open || s.back() != close) return false;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            items.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    items.push_back(cur);
    return depth == 0;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

Rational parse_rational(const std::string& text) {
    std::string s = strip(text);
    require(!s.empty(), ErrorKind::ParseError, "empty number");
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto to_int = [](std::string t) {
        if (!t.empty() && t[0] == '+') t = t.substr(1);
        return Int(t);
    };
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        require(valid_int(s), ErrorKind::ParseError, "not an integer: '" + s + "'");
        return Rational(to_int(s));
    }
    std::string n = strip(s.substr(0, slash)), d = strip(s.substr(slash + 1));
    require(valid_int(n) && valid_int(d), ErrorKind::ParseError, "not a rational: '" + s + "'");
    Int den = to_int(d);
    require(den != 0, ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    return Rational(to_int(n), den);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool operator==(const Elem& a, const Elem& b) {
    if (a.v.index() != b.v.index()) return false;
    switch (a.v.index()) {
        case 0: return std::get<0>(a.v) == std::get<0>(b.v);
        case 1: return std::get<1>(a.v) == std::get<1>(b.v);
        case 2: return std::get<2>(a.v) == std::get<2>(b.v);
        default: {
            const auto& x = std::get<3>(a.v);
            const auto& y = std::get<3>(b.v);
            return x.num == y.num && x.den == y.den;
        }
    }
}

Field::Field() : Field(rationals()) {}

Field Field::rationals() {
    static const std::shared_ptr<const Impl> q = std::make_shared<Impl>();
    return Field(q);
}

Field Field::prime(std::uint64_t p) {
    require(p != 2, ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
    require(is_prime(p), ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    require(p < (1ULL << 31), ErrorKind::UnsupportedField, "prime must be below 2^31");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::prime;
    impl->p = p;
    return Field(impl);
}

Field Field::extension(const Field& base, const Poly& modulus, bool certified) {
    Poly f = modulus;
    poly::trim(base, f);
    require(f.size() >= 2, ErrorKind::ReducibleModulus, "modulus must have degree >= 1");
    require(base.is_one(f.back()), ErrorKind::ReducibleModulus, "modulus must be monic");
    for (const auto& c : f) base.validate(c);
    const std::size_t n = f.size() - 1;
    if (n > 1) {
        if (base.is_finite()) {
            require(is_irreducible_finite(base, f), ErrorKind::ReducibleModulus,
                    poly::to_string(base, f) + " is reducible over " + base.describe());
        } else if (base.kind() == Kind::rationals && n <= 3) {
            require(find_roots(base, f).empty(), ErrorKind::ReducibleModulus,
                    poly::to_string(base, f) + " has a rational root");
        } else {
            require(certified, ErrorKind::UnsupportedField,
                    "irreducibility of a degree-" + std::to_string(n) + " modulus over " + base.describe() +
                        " cannot be verified; supply an explicit certificate");
        }
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::extension;
    impl->base = base;
    impl->modulus = std::move(f);
    impl->degree = n;
    return Field(impl);
}

Field Field::function_field(const Field& base) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::function_field;
    impl->base = base;
    return Field(impl);
}

FieldKind Field::kind() const { return impl_->kind; }

std::uint64_t Field::characteristic() const {
    switch (impl_->kind) {
        case Kind::rationals: return 0;
        case Kind::prime: return impl_->p;
        default: return impl_->base->characteristic();
    }
}

std::uint64_t Field::p() const { return impl_->p; }

const Field& Field::base() const {
    require(impl_->base.has_value(), ErrorKind::UnsupportedField, describe() + " has no base field");
    return *impl_->base;
}

const Poly& Field::modulus() const { return impl_->modulus; }

std::size_t Field::degree() const { return impl_->degree; }

bool Field::is_finite() const {
    switch (impl_->kind) {
        case Kind::prime: return true;
        case Kind::extension: return impl_->base->is_finite();
        default: return false;
    }
}

Int Field::size() const {
    require(is_finite(), ErrorKind::UnsupportedField, describe() + " is infinite");
    if (impl_->kind == Kind::prime) return Int(impl_->p);
    Int q = impl_->base->size();
    return boost::multiprecision::pow(q, static_cast<unsigned>(impl_->degree));
}

Elem Field::zero() const {
    switch (impl_->kind) {
        case Kind::rationals: return Elem(Rational(0));
        case Kind::prime: return Elem(std::uint64_t{0});
        case Kind::extension: return Elem(Poly{});
        default: return Elem(RatFn{{}, {impl_->base->one()}});
    }
}

Elem Field::one() const {
    switch (impl_->kind) {
        case Kind::rationals: return Elem(Rational(1));
        case Kind::prime: return Elem(std::uint64_t{1});
        case Kind::extension: return embed(impl_->base->one());
        default: return embed(impl_->base->one());
    }
}

Elem Field::from_int(long long n) const { return from_integer(Int(n)); }

Elem Field::from_integer(const Int& n) const {
    switch (impl_->kind) {
        case Kind::rationals: return Elem(Rational(n));
        case Kind::prime: return Elem(reduce_int(n, impl_->p));
        default: return embed(impl_->base->from_integer(n));
    }
}

Elem Field::from_rational(const Rational& q) const {
    if (impl_->kind == Kind::rationals) return Elem(q);
    Elem d = from_integer(boost::multiprecision::denominator(q));
    require(!is_zero(d), ErrorKind::DivisionByZero,
            "denominator of " + q.str() + " vanishes in " + describe());
    return div(from_integer(boost::multiprecision::numerator(q)), d);
}

Elem Field::embed(const Elem& b) const {
    const Field& B = base();
    B.validate(b);
    if (impl_->kind == Kind::extension) return Elem(poly::constant(B, b));
    return Elem(RatFn{poly::constant(B, b), {B.one()}});
}

Elem Field::generator() const {
    const Field& B = base();
    if (impl_->kind == Kind::extension) {
        if (impl_->degree == 1) return embed(B.neg(impl_->modulus[0]));
        return Elem(Poly{B.zero(), B.one()});
    }
    return Elem(RatFn{Poly{B.zero(), B.one()}, {B.one()}});
}

namespace {

RatFn normalize_ratfn(const Field& B, Poly num, Poly den) {
    require(!den.empty(), ErrorKind::DivisionByZero, "rational function with zero denominator");
    if (num.empty()) return RatFn{{}, {B.one()}};
    if (den.size() > 1) {
        Poly g = poly::gcd(B, num, den);
        if (g.size() > 1) {
            num = poly::divmod(B, num, g).first;
            den = poly::divmod(B, den, g).first;
        }
    }
    if (!B.is_one(den.back())) {
        Elem li = B.inv(den.back());
        num = poly::scale(B, num, li);
        den = poly::scale(B, den, li);
    }
    return RatFn{std::move(num), std::move(den)};
}

}  // namespace

Elem Field::add(const Elem& a, const Elem& b) const {
    switch (impl_->kind) {
        case Kind::rationals: return Elem(std::get<Rational>(a.v) + std::get<Rational>(b.v));
        case Kind::prime: {
            std::uint64_t s = std::get<std::uint64_t>(a.v) + std::get<std::uint64_t>(b.v);
            return Elem(s >= impl_->p ? s - impl_->p : s);
        }
        case Kind::extension: return Elem(poly::add(*impl_->base, std::get<Poly>(a.v), std::get<Poly>(b.v)));
        default: {
            const Field& B = *impl_->base;
            const auto& x = std::get<RatFn>(a.v);
            const auto& y = std::get<RatFn>(b.v);
            if (x.den == y.den) return Elem(normalize_ratfn(B, poly::add(B, x.num, y.num), x.den));
            Poly num = poly::add(B, poly::mul(B, x.num, y.den), poly::mul(B, y.num, x.den));
            return Elem(normalize_ratfn(B, std::move(num), poly::mul(B, x.den, y.den)));
        }
    }
}

Elem Field::neg(const Elem& a) const {
    switch (impl_->kind) {
        case Kind::rationals: return Elem(Rational(-std::get<Rational>(a.v)));
        case Kind::prime: {
            std::uint64_t x = std::get<std::uint64_t>(a.v);
            return Elem(x == 0 ? 0 : impl_->p - x);
        }
        case Kind::extension: return Elem(poly::neg(*impl_->base, std::get<Poly>(a.v)));
        default: {
            const auto& x = std::get<RatFn>(a.v);
            return Elem(RatFn{poly::neg(*impl_->base, x.num), x.den});
        }
    }
}

Elem Field::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Field::mul(const Elem& a, const Elem& b) const {
    switch (impl_->kind) {
        case Kind::rationals: return Elem(std::get<Rational>(a.v) * std::get<Rational>(b.v));
        case Kind::prime: return Elem((std::get<std::uint64_t>(a.v) * std::get<std::uint64_t>(b.v)) % impl_->p);
        case Kind::extension: {
            const Field& B = *impl_->base;
            Poly prod = poly::mul(B, std::get<Poly>(a.v), std::get<Poly>(b.v));
            if (prod.size() >= impl_->modulus.size()) prod = poly::rem(B, prod, impl_->modulus);
            return Elem(std::move(prod));
        }
        default: {
            const Field& B = *impl_->base;
            const auto& x = std::get<RatFn>(a.v);
            const auto& y = std::get<RatFn>(b.v);
            if (x.num.empty() || y.num.empty()) return zero();
            if (x.den.size() == 1 && y.den.size() == 1)
                return Elem(RatFn{poly::mul(B, x.num, y.num), {B.one()}});
            Poly g1 = poly::gcd(B, x.num, y.den), g2 = poly::gcd(B, y.num, x.den);
            Poly xn = g1.size() > 1 ? poly::divmod(B, x.num, g1).first : x.num;
            Poly yd = g1.size() > 1 ? poly::divmod(B, y.den, g1).first : y.den;
            Poly yn = g2.size() > 1 ? poly::divmod(B, y.num, g2).first : y.num;
            Poly xd = g2.size() > 1 ? poly::divmod(B, x.den, g2).first : x.den;
            Poly den = poly::mul(B, xd, yd);
            Poly num = poly::mul(B, xn, yn);
            if (!B.is_one(den.back())) {
                Elem li = B.inv(den.back());
                num = poly::scale(B, num, li);
                den = poly::scale(B, den, li);
            }
            return Elem(RatFn{std::move(num), std::move(den)});
        }
    }
}

Elem Field::inv(const Elem& a) const {
    require(!is_zero(a), ErrorKind::DivisionByZero, "inverse of zero in " + describe());
    switch (impl_->kind) {
        case Kind::rationals: return Elem(Rational(1) / std::get<Rational>(a.v));
        case Kind::prime: return Elem(mod_inverse(std::get<std::uint64_t>(a.v), impl_->p));
        case Kind::extension: {
            const Field& B = *impl_->base;
            auto r = poly::xgcd(B, std::get<Poly>(a.v), impl_->modulus);
            require(r.g.size() == 1, ErrorKind::Internal, "extension element not invertible");
            return Elem(poly::rem(B, r.s, impl_->modulus));
        }
        default: {
            const auto& x = std::get<RatFn>(a.v);
            return Elem(normalize_ratfn(*impl_->base, x.den, x.num));
        }
    }
}

Elem Field::div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

Elem Field::pow(const Elem& a, long long e) const {
    if (e < 0) return pow(inv(a), Int(-Int(e)));
    return pow(a, Int(e));
}

Elem Field::pow(const Elem& a, const Int& e) const {
    if (e < 0) return pow(inv(a), Int(-e));
    Elem result = one();
    Elem b = a;
    Int k = e;
    while (k > 0) {
        if (boost::multiprecision::bit_test(k, 0)) result = mul(result, b);
        k >>= 1;
        if (k > 0) b = mul(b, b);
    }
    return result;
}

bool Field::is_zero(const Elem& a) const {
    switch (a.v.index()) {
        case 0: return std::get<0>(a.v) == 0;
        case 1: return std::get<1>(a.v) == 0;
        case 2: return std::get<2>(a.v).empty();
        default: return std::get<3>(a.v).num.empty();
    }
}

bool Field::is_one(const Elem& a) const { return a == one(); }

int Field::compare(const Elem& a, const Elem& b) const {
    switch (impl_->kind) {
        case Kind::rationals: {
            const auto& x = std::get<Rational>(a.v);
            const auto& y = std::get<Rational>(b.v);
            return x < y ? -1 : (y < x ? 1 : 0);
        }
        case Kind::prime: {
            auto x = std::get<std::uint64_t>(a.v), y = std::get<std::uint64_t>(b.v);
            return x < y ? -1 : (y < x ? 1 : 0);
        }
        case Kind::extension: return poly::compare(*impl_->base, std::get<Poly>(a.v), std::get<Poly>(b.v));
        default: {
            const auto& x = std::get<RatFn>(a.v);
            const auto& y = std::get<RatFn>(b.v);
            int c = poly::compare(*impl_->base, x.num, y.num);
            return c != 0 ? c : poly::compare(*impl_->base, x.den, y.den);
        }
    }
}

std::size_t Field::hash(const Elem& a) const {
    switch (impl_->kind) {
        case Kind::rationals: {
            const auto& q = std::get<Rational>(a.v);
            return mix(hash_int(boost::multiprecision::numerator(q)), hash_int(boost::multiprecision::denominator(q)));
        }
        case Kind::prime: return std::hash<std::uint64_t>{}(std::get<std::uint64_t>(a.v));
        case Kind::extension: {
            std::size_t h = 17;
            for (const auto& c : std::get<Poly>(a.v)) h = mix(h, impl_->base->hash(c));
            return h;
        }
        default: {
            std::size_t h = 29;
            const auto& f = std::get<RatFn>(a.v);
            for (const auto& c : f.num) h = mix(h, impl_->base->hash(c));
            h = mix(h, 0x5bd1e995);
            for (const auto& c : f.den) h = mix(h, impl_->base->hash(c));
            return h;
        }
    }
}

std::string Field::to_string(const Elem& a) const {
    switch (impl_->kind) {
        case Kind::rationals: return std::get<Rational>(a.v).str();
        case Kind::prime: return std::to_string(std::get<std::uint64_t>(a.v));
        case Kind::extension: {
            const auto& p = std::get<Poly>(a.v);
            if (p.empty()) return "(0)";
            std::string out = "(";
            for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + impl_->base->to_string(p[i]);
            return out + ")";
        }
        default: {
            const auto& f = std::get<RatFn>(a.v);
            auto list = [&](const Poly& p) {
                if (p.empty()) return std::string("[0]");
                std::string out = "[";
                for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + impl_->base->to_string(p[i]);
                return out + "]";
            };
            return list(f.num) + "/" + list(f.den);
        }
    }
}

Elem Field::parse(const std::string& text) const {
    std::string s = strip(text);
    switch (impl_->kind) {
        case Kind::rationals:
        case Kind::prime: return from_rational(parse_rational(s));
        case Kind::extension: {
            const Field& B = *impl_->base;
            std::vector<std::string> items;
            if (!split_parenthesized(s, '(', ')', items)) return embed(B.parse(s));
            Poly p;
            for (const auto& it : items) p.push_back(B.parse(it));
            poly::trim(B, p);
            if (p.size() >= impl_->modulus.size()) p = poly::rem(B, p, impl_->modulus);
            return Elem(std::move(p));
        }
        default: {
            const Field& B = *impl_->base;
            // "[n0,n1,...]/[d0,...]" or "[n0,...]" or a base element
            if (s.empty() || s.front() != '[') return embed(B.parse(s));
            std::size_t close = 0;
            int depth = 0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] == '[' || s[i] == '(') ++depth;
                if (s[i] == ']' || s[i] == ')') --depth;
                if (depth == 0) {
                    close = i;
                    break;
                }
            }
            auto parse_list = [&](const std::string& part) {
                std::vector<std::string> items;
                require(split_parenthesized(part, '[', ']', items), ErrorKind::ParseError,
                        "malformed polynomial '" + part + "'");
                Poly p;
                for (const auto& it : items) p.push_back(B.parse(it));
                poly::trim(B, p);
                return p;
            };
            Poly num = parse_list(s.substr(0, close + 1));
            Poly den{B.one()};
            std::string rest = strip(s.substr(close + 1));
            if (!rest.empty()) {
                require(rest[0] == '/', ErrorKind::ParseError, "malformed rational function '" + s + "'");
                den = parse_list(strip(rest.substr(1)));
            }
            return Elem(normalize_ratfn(B, std::move(num), std::move(den)));
        }
    }
}

Elem Field::random(std::mt19937_64& rng) const {
    switch (impl_->kind) {
        case Kind::rationals: {
            std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
            return Elem(Rational(num(rng), den(rng)));
        }
        case Kind::prime: return Elem(std::uniform_int_distribution<std::uint64_t>(0, impl_->p - 1)(rng));
        case Kind::extension: {
            Poly p;
            for (std::size_t i = 0; i < impl_->degree; ++i) p.push_back(impl_->base->random(rng));
            poly::trim(*impl_->base, p);
            return Elem(std::move(p));
        }
        default: {
            const Field& B = *impl_->base;
            Poly num{B.random(rng), B.random(rng)};
            poly::trim(B, num);
            return Elem(normalize_ratfn(B, std::move(num), {B.one()}));
        }
    }
}

Elem Field::random_nonzero(std::mt19937_64& rng) const {
    for (;;) {
        Elem e = random(rng);
        if (!is_zero(e)) return e;
    }
}

void Field::validate(const Elem& a) const {
    auto bad = [&](const std::string& why) { fail(ErrorKind::FieldMismatch, "element is not canonical in " + describe() + ": " + why); };
    switch (impl_->kind) {
        case Kind::rationals:
            if (a.v.index() != 1) bad("expected a rational");
            break;
        case Kind::prime:
            if (a.v.index() != 0) bad("expected a residue");
            if (std::get<0>(a.v) >= impl_->p) bad("residue out of range");
            break;
        case Kind::extension: {
            if (a.v.index() != 2) bad("expected a polynomial residue");
            const auto& p = std::get<2>(a.v);
            if (p.size() > impl_->degree) bad("residue not reduced");
            if (!p.empty() && impl_->base->is_zero(p.back())) bad("residue not trimmed");
            for (const auto& c : p) impl_->base->validate(c);
            break;
        }
        default: {
            if (a.v.index() != 3) bad("expected a rational function");
            const auto& f = std::get<3>(a.v);
            if (f.den.empty() || !impl_->base->is_one(f.den.back())) bad("denominator not monic");
            for (const auto& c : f.num) impl_->base->validate(c);
            for (const auto& c : f.den) impl_->base->validate(c);
            break;
        }
    }
}

bool Field::operator==(const Field& other) const {
    if (impl_ == other.impl_) return true;
    if (impl_->kind != other.impl_->kind) return false;
    switch (impl_->kind) {
        case Kind::rationals: return true;
        case Kind::prime: return impl_->p == other.impl_->p;
        case Kind::extension: return *impl_->base == *other.impl_->base && impl_->modulus == other.impl_->modulus;
        default: return *impl_->base == *other.impl_->base;
    }
}

std::string Field::describe() const {
    switch (impl_->kind) {
        case Kind::rationals: return "Q";
        case Kind::prime: return "F_" + std::to_string(impl_->p);
        case Kind::extension:
            return impl_->base->describe() + "[x]/(" + poly::to_string(*impl_->base, impl_->modulus) + ")";
        default: return impl_->base->describe() + "(t)";
    }
}

}  // namespace signrep
