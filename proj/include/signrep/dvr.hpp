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

#include "signrep/rep.hpp"

#include <climits>
#include <string>

namespace signrep {

enum class DvrKind { t_adic, p_adic };

/// An exact discrete valuation ring inside its fraction field: rational
/// functions over a coefficient field that are regular at t = 0, or rationals
/// whose denominator is prime to p.
class Dvr {
public:
    static constexpr long kInfinite = LONG_MAX;

    static Dvr t_adic(const Field& coefficients);
    static Dvr p_adic(std::uint64_t p);

    DvrKind kind() const { return kind_; }
    const Field& fraction_field() const { return fraction_; }
    const Field& residue_field() const { return residue_; }
    /// Residue characteristic for p-adic rings.
    std::uint64_t p() const { return p_; }

    /// kInfinite for zero.
    long valuation(const Elem& x) const;
    /// Minimum over the entries.
    long valuation(const Matrix& m) const;
    long valuation(const Poly& coeffs) const;
    bool is_integral(const Elem& x) const { return valuation(x) >= 0; }
    bool is_unit(const Elem& x) const { return valuation(x) == 0; }

    /// Image in the residue field; throws NotIntegral.
    Elem reduce(const Elem& x) const;
    Matrix reduce(const Matrix& m) const;
    /// Canonical lift of a residue (constant, or least nonnegative integer).
    Elem lift(const Elem& r) const;
    Matrix lift(const Matrix& m) const;
    /// t or p.
    Elem uniformizer() const;
    /// Canonical representative of an integral x modulo m^k: a polynomial of
    /// degree < k, or an integer in [0, p^k).
    Elem truncate(const Elem& x, long k) const;

    std::string describe() const;
    bool operator==(const Dvr& o) const { return kind_ == o.kind_ && fraction_ == o.fraction_; }

private:
    Dvr(DvrKind kind, Field fraction, Field residue, std::uint64_t p)
        : kind_(kind), fraction_(std::move(fraction)), residue_(std::move(residue)), p_(p) {}
    DvrKind kind_;
    Field fraction_;
    Field residue_;
    std::uint64_t p_;
};

/// A representation with integral images, unit determinants and unit character values.
struct DvrRep {
    InvolutiveGroup group;
    Dvr dvr;
    std::vector<Matrix> images;
    std::vector<Elem> character;
};

/// Validates integrality, units and the homomorphism property.
DvrRep make_dvr_rep(InvolutiveGroup group, Dvr dvr, std::vector<Matrix> images, std::vector<Elem> character);
InvolutiveRep generic_fiber(const DvrRep& rep);
InvolutiveRep residual_fiber(const DvrRep& rep);

}  // namespace signrep
