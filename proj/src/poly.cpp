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

#include "signrep/poly.hpp"

#include "signrep/error.hpp"

#include <algorithm>

namespace signrep::poly {

long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

void trim(const Field& F, Poly& p) {
    while (!p.empty() && F.is_zero(p.back())) p.pop_back();
}

Poly from_ints(const Field& F, std::initializer_list<long long> coeffs) {
    Poly p;
    for (long long c : coeffs) p.push_back(F.from_int(c));
    trim(F, p);
    return p;
}

Poly constant(const Field& F, const Elem& c) {
    if (F.is_zero(c)) return {};
    return {c};
}

Poly monomial(const Field& F, std::size_t k) {
    Poly p(k + 1, F.zero());
    p[k] = F.one();
    return p;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
    const Poly& big = a.size() >= b.size() ? a : b;
    const Poly& small = a.size() >= b.size() ? b : a;
    Poly r = big;
    for (std::size_t i = 0; i < small.size(); ++i) r[i] = F.add(r[i], small[i]);
    trim(F, r);
    return r;
}

Poly neg(const Field& F, const Poly& a) {
    Poly r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(F.neg(c));
    return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) { return add(F, a, neg(F, b)); }

Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(F, r);
    return r;
}

Poly scale(const Field& F, const Poly& a, const Elem& c) {
    if (F.is_zero(c)) return {};
    Poly r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(F.mul(x, c));
    trim(F, r);
    return r;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
    require(!b.empty(), ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    Poly r = a;
    Poly q(a.size() - b.size() + 1, F.zero());
    const Elem lead_inv = F.inv(b.back());
    const bool monic_divisor = F.is_one(b.back());
    for (std::size_t k = q.size(); k-- > 0;) {
        const Elem& top = r[k + b.size() - 1];
        if (F.is_zero(top)) continue;
        Elem c = monic_divisor ? top : F.mul(top, lead_inv);
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
        q[k] = std::move(c);
    }
    trim(F, q);
    trim(F, r);
    return {q, r};
}

Poly rem(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly monic(const Field& F, const Poly& a) {
    if (a.empty() || F.is_one(a.back())) return a;
    return scale(F, a, F.inv(a.back()));
}

Poly gcd(const Field& F, const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly r = rem(F, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(F, x);
}

Xgcd xgcd(const Field& F, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = constant(F, F.one()), s1;
    Poly t0, t1 = constant(F, F.one());
    while (!r1.empty()) {
        auto [q, r] = divmod(F, r0, r1);
        Poly s2 = sub(F, s0, mul(F, q, s1));
        Poly t2 = sub(F, t0, mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {{}, {}, {}};
    const Elem li = F.inv(r0.back());
    return {scale(F, r0, li), scale(F, s0, li), scale(F, t0, li)};
}

Elem eval(const Field& F, const Poly& p, const Elem& x) {
    Elem acc = F.zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = F.add(F.mul(acc, x), p[i]);
    return acc;
}

Poly derivative(const Field& F, const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(F.mul(F.from_int(static_cast<long long>(i)), p[i]));
    trim(F, d);
    return d;
}

Poly powmod(const Field& F, const Poly& base, const Int& e, const Poly& m) {
    Poly result = rem(F, constant(F, F.one()), m);
    Poly b = rem(F, base, m);
    const unsigned bits = e == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        result = rem(F, mul(F, result, result), m);
        if (boost::multiprecision::bit_test(e, i)) result = rem(F, mul(F, result, b), m);
    }
    return result;
}

Poly shift(const Field& F, const Poly& p, const Elem& a) {
    // Horner in the polynomial ring: acc = acc*(x+a) + c
    Poly acc;
    const Poly lin = [&] {
        Poly l{a, F.one()};
        trim(F, l);
        return l;
    }();
    for (std::size_t i = p.size(); i-- > 0;) acc = add(F, mul(F, acc, lin), constant(F, p[i]));
    return acc;
}

long order_at_zero(const Field& F, const Poly& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!F.is_zero(p[i])) return static_cast<long>(i);
    return -1;
}

int compare(const Field& F, const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        int c = F.compare(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string to_string(const Field& F, const Poly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (F.is_zero(p[i])) continue;
        if (!out.empty()) out += "+";
        const bool unit = F.is_one(p[i]) && i > 0;
        if (!unit) out += F.to_string(p[i]);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace signrep::poly
