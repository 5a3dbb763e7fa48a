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

#include "signrep/roots.hpp"

#include "signrep/error.hpp"
#include "signrep/poly.hpp"

#include <algorithm>
#include <map>

namespace signrep {

namespace {

// ---------------------------------------------------------------- finite fields

void split_linear(const Field& F, const Poly& g, const Int& q, std::mt19937_64& rng, std::vector<Elem>& out) {
    const long n = poly::degree(g);
    if (n <= 0) return;
    if (n == 1) {
        out.push_back(F.neg(g[0]));
        return;
    }
    const Int half = (q - 1) / 2;
    for (int attempt = 0; attempt < 256; ++attempt) {
        Poly lin{F.random(rng), F.one()};
        poly::trim(F, lin);
        Poly h = poly::sub(F, poly::powmod(F, lin, half, g), poly::constant(F, F.one()));
        Poly d = poly::gcd(F, g, h);
        const long dd = poly::degree(d);
        if (dd > 0 && dd < n) {
            split_linear(F, d, q, rng, out);
            split_linear(F, poly::divmod(F, g, d).first, q, rng, out);
            return;
        }
    }
    fail(ErrorKind::Internal, "root splitting did not converge");
}

std::vector<Elem> finite_roots(const Field& F, const Poly& f) {
    Poly m = poly::monic(F, f);
    if (poly::degree(m) < 1) return {};
    const Int q = F.size();
    Poly x = poly::monomial(F, 1);
    Poly xq = poly::powmod(F, x, q, m);
    Poly g = poly::gcd(F, m, poly::sub(F, xq, poly::rem(F, x, m)));
    std::vector<Elem> out;
    std::mt19937_64 rng(0x5eed5eedULL);
    split_linear(F, g, q, rng, out);
    return out;
}

// ---------------------------------------------------------------- rationals

std::vector<Int> divisors(const Int& n_in) {
    Int n = abs(n_in);
    std::map<Int, unsigned> factors;
    for (Int d = 2; d * d <= n && d <= 1000000; ++d) {
        while (n % d == 0) {
            ++factors[d];
            n /= d;
        }
    }
    if (n > 1) {
        require(n < Int(1000000) * Int(1000000), ErrorKind::UnsupportedField,
                "coefficient too large for the rational root test");
        ++factors[n];
    }
    std::vector<Int> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t cur = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

std::vector<Elem> rational_roots(const Field& Q, const Poly& f) {
    if (poly::degree(f) < 1) return {};
    Int l = 1;
    for (const auto& c : f) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(std::get<Rational>(c.v)));
    std::vector<Int> a;
    for (const auto& c : f) {
        Rational v = std::get<Rational>(c.v) * l;
        a.push_back(boost::multiprecision::numerator(v));
    }
    std::vector<Elem> out;
    std::size_t shift = 0;
    while (shift < a.size() && a[shift] == 0) ++shift;
    if (shift > 0) out.push_back(Q.zero());
    a.erase(a.begin(), a.begin() + static_cast<long>(shift));
    if (a.size() >= 2) {
        Poly g;
        for (const auto& c : a) g.push_back(Elem(Rational(c)));
        for (const Int& d : divisors(a.front())) {
            for (const Int& e : divisors(a.back())) {
                if (boost::multiprecision::gcd(d, e) != 1) continue;
                for (int sgn : {1, -1}) {
                    Elem r(Rational(d * sgn, e));
                    if (Q.is_zero(poly::eval(Q, g, r))) out.push_back(r);
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- function fields

using Series = Poly;  // truncated power series over the base field

Series series_trunc(const Field& B, Series s, std::size_t prec) {
    if (s.size() > prec) s.resize(prec);
    poly::trim(B, s);
    return s;
}

Series series_mul(const Field& B, const Series& a, const Series& b, std::size_t prec) {
    if (a.empty() || b.empty()) return {};
    Series r(std::min(prec, a.size() + b.size() - 1), B.zero());
    for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
        if (B.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size() && i + j < prec; ++j) r[i + j] = B.add(r[i + j], B.mul(a[i], b[j]));
    }
    poly::trim(B, r);
    return r;
}

Series series_inv(const Field& B, const Series& a, std::size_t prec) {
    require(!a.empty() && !B.is_zero(a[0]), ErrorKind::DivisionByZero, "series not invertible");
    Series r(prec, B.zero());
    const Elem c0 = B.inv(a[0]);
    r[0] = c0;
    for (std::size_t k = 1; k < prec; ++k) {
        Elem acc = B.zero();
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc = B.add(acc, B.mul(a[j], r[k - j]));
        r[k] = B.neg(B.mul(acc, c0));
    }
    poly::trim(B, r);
    return r;
}

// coefficient polys in t, indexed by the power of x
using BiPoly = std::vector<Poly>;

Series bipoly_eval(const Field& B, const BiPoly& G, const Series& y, std::size_t prec) {
    Series acc;
    for (std::size_t i = G.size(); i-- > 0;)
        acc = series_trunc(B, poly::add(B, series_mul(B, acc, y, prec), G[i]), prec);
    return acc;
}

BiPoly bipoly_derivative(const Field& B, const BiPoly& G) {
    BiPoly d;
    for (std::size_t i = 1; i < G.size(); ++i) d.push_back(poly::scale(B, G[i], B.from_int(static_cast<long long>(i))));
    return d;
}

Elem ratfn_from(const Field& L, const Poly& num, const Poly& den) {
    const Field& B = L.base();
    Elem n = L.zero(), tpow = L.one();
    const Elem t = L.generator();
    for (const auto& c : num) {
        n = L.add(n, L.mul(L.embed(c), tpow));
        tpow = L.mul(tpow, t);
    }
    Elem d = L.zero();
    tpow = L.one();
    for (const auto& c : den) {
        d = L.add(d, L.mul(L.embed(c), tpow));
        tpow = L.mul(tpow, t);
    }
    (void)B;
    return L.div(n, d);
}

std::vector<Elem> candidate_points(const Field& B, std::size_t count) {
    std::vector<Elem> pts;
    if (B.is_finite() && B.size() <= 64) {
        // every element, small ones first
        std::mt19937_64 rng(7);
        pts.push_back(B.zero());
        for (long long k = 1; static_cast<std::size_t>(pts.size()) < count && Int(k) < B.size() * 4; ++k) {
            Elem e = B.random(rng);
            if (std::find(pts.begin(), pts.end(), e) == pts.end()) pts.push_back(e);
        }
        return pts;
    }
    for (long long k = 0; pts.size() < count; ++k) {
        pts.push_back(B.from_int(k));
        if (k > 0) pts.push_back(B.from_int(-k));
    }
    return pts;
}

std::vector<Elem> function_field_roots(const Field& L, const Poly& f_in) {
    const Field& B = L.base();
    Poly f = poly::monic(L, f_in);
    const long n = poly::degree(f);
    if (n < 1) return {};
    Poly fd = poly::derivative(L, f);
    require(!fd.empty(), ErrorKind::UnsupportedField, "inseparable polynomial over " + L.describe());
    Poly sqf = poly::divmod(L, f, poly::gcd(L, f, fd)).first;

    // clear denominators: G(t, x) with coefficients in B[t]
    Poly den_lcm{B.one()};
    for (const auto& c : sqf) {
        const auto& d = std::get<RatFn>(c.v).den;
        den_lcm = poly::divmod(B, poly::mul(B, den_lcm, d), poly::gcd(B, den_lcm, d)).first;
    }
    BiPoly G;
    for (const auto& c : sqf) {
        const auto& r = std::get<RatFn>(c.v);
        G.push_back(poly::mul(B, r.num, poly::divmod(B, den_lcm, r.den).first));
    }

    constexpr std::size_t kMaxDegree = 64;
    constexpr std::size_t kPrec = 2 * kMaxDegree + 2;

    for (const Elem& a : candidate_points(B, 40)) {
        BiPoly Ga;
        Poly at_point;
        for (const auto& c : G) {
            Ga.push_back(poly::shift(B, c, a));
            at_point.push_back(Ga.back().empty() ? B.zero() : Ga.back()[0]);
        }
        poly::trim(B, at_point);
        if (poly::degree(at_point) != static_cast<long>(G.size()) - 1) continue;
        Poly sd = poly::derivative(B, at_point);
        if (sd.empty() || poly::degree(poly::gcd(B, at_point, sd)) != 0) continue;

        std::vector<Elem> residual = find_roots(B, at_point);
        std::vector<Elem> out;
        const BiPoly Gd = bipoly_derivative(B, Ga);
        const Elem minus_a = B.neg(a);
        for (const Elem& r0 : residual) {
            Series y = poly::constant(B, r0);
            for (std::size_t prec = 2;; prec = std::min(2 * prec, kPrec)) {
                Series num = bipoly_eval(B, Ga, y, prec);
                Series den = bipoly_eval(B, Gd, y, prec);
                y = series_trunc(B, poly::sub(B, y, series_mul(B, num, series_inv(B, den, prec), prec)), prec);
                if (prec == kPrec) break;
            }
            for (std::size_t D = 1; D <= kMaxDegree; D *= 2) {
                const std::size_t P = 2 * D + 1;
                Poly r0p = poly::monomial(B, P), r1p = series_trunc(B, y, P);
                Poly t0, t1 = poly::constant(B, B.one());
                while (poly::degree(r1p) > static_cast<long>(D)) {
                    auto [q, r] = poly::divmod(B, r0p, r1p);
                    Poly t2 = poly::sub(B, t0, poly::mul(B, q, t1));
                    r0p = std::move(r1p);
                    r1p = std::move(r);
                    t0 = std::move(t1);
                    t1 = std::move(t2);
                }
                if (t1.empty()) continue;
                Elem cand = ratfn_from(L, poly::shift(B, r1p, minus_a), poly::shift(B, t1, minus_a));
                if (L.is_zero(poly::eval(L, f, cand))) {
                    out.push_back(cand);
                    break;
                }
            }
        }
        return out;
    }
    fail(ErrorKind::UnsupportedField, "no good specialization point found for root finding over " + L.describe());
}

}  // namespace

bool is_irreducible_finite(const Field& base, const Poly& f_in) {
    Poly f = poly::monic(base, f_in);
    const long n = poly::degree(f);
    if (n <= 1) return n == 1;
    const Int q = base.size();
    Poly x = poly::rem(base, poly::monomial(base, 1), f);
    std::vector<Poly> frob{x};  // frob[i] = x^(q^i) mod f
    for (long i = 1; i <= n; ++i) frob.push_back(poly::powmod(base, frob.back(), q, f));
    if (frob[static_cast<std::size_t>(n)] != x) return false;
    long m = n;
    for (long r = 2; r <= m; ++r) {
        if (m % r != 0) continue;
        while (m % r == 0) m /= r;
        Poly g = poly::gcd(base, f, poly::sub(base, frob[static_cast<std::size_t>(n / r)], x));
        if (poly::degree(g) != 0) return false;
    }
    return true;
}

std::vector<Elem> find_roots(const Field& F, const Poly& f_in) {
    Poly f = f_in;
    poly::trim(F, f);
    std::vector<Elem> roots;
    if (F.is_finite()) {
        roots = finite_roots(F, f);
    } else if (F.kind() == FieldKind::rationals) {
        roots = rational_roots(F, f);
    } else if (F.kind() == FieldKind::function_field) {
        roots = function_field_roots(F, f);
    } else {
        fail(ErrorKind::UnsupportedField, "root finding over " + F.describe() + " is not supported");
    }
    std::sort(roots.begin(), roots.end(), [&](const Elem& a, const Elem& b) { return F.compare(a, b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<Elem> square_root(const Field& F, const Elem& a) {
    if (F.is_zero(a)) return F.zero();
    Poly f{F.neg(a), F.zero(), F.one()};
    auto r = find_roots(F, f);
    if (r.empty()) return std::nullopt;
    return r.front();
}

}  // namespace signrep
