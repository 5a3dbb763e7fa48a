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

#include "signrep/field.hpp"

#include <initializer_list>
#include <string>
#include <utility>

// Dense univariate polynomials over a Field. Inputs and outputs are trimmed.
namespace signrep::poly {

/// -1 for the zero polynomial.
long degree(const Poly& p);
void trim(const Field& F, Poly& p);
Poly from_ints(const Field& F, std::initializer_list<long long> coeffs);
Poly constant(const Field& F, const Elem& c);
/// x^k
Poly monomial(const Field& F, std::size_t k);

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, const Elem& c);
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly rem(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& F, const Poly& a, const Poly& b);

struct Xgcd {
    Poly g, s, t;  // s*a + t*b = g, g monic
};
Xgcd xgcd(const Field& F, const Poly& a, const Poly& b);

Elem eval(const Field& F, const Poly& p, const Elem& x);
Poly derivative(const Field& F, const Poly& p);
/// base^e mod m
Poly powmod(const Field& F, const Poly& base, const Int& e, const Poly& m);
/// p(x + a)
Poly shift(const Field& F, const Poly& p, const Elem& a);
/// Lowest index with a nonzero coefficient; -1 for zero.
long order_at_zero(const Field& F, const Poly& p);

int compare(const Field& F, const Poly& a, const Poly& b);
std::string to_string(const Field& F, const Poly& p, const std::string& var = "x");

}  // namespace signrep::poly
