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

#include <stdexcept>
#include <string>
#include <string_view>

namespace signrep {

enum class ErrorKind {
    // fields and linear algebra
    EvenCharacteristic,
    NotPrime,
    ReducibleModulus,
    UnsupportedField,
    FieldMismatch,
    DimensionMismatch,
    DivisionByZero,
    Singular,
    ParseError,
    // groups and representations
    NotAGroup,
    NotAnAutomorphism,
    NotAHomomorphism,
    NonMultiplicativeCharacter,
    IncompatibleCharacter,
    NotAbsolutelyIrreducible,
    NotPolarized,
    AmbiguousIntertwiner,
    DuplicateFactor,
    NotASubgroup,
    NotInvolutionStable,
    NotAntisymmetric,
    RelationFails,
    NonDiagonalizableInvolution,
    HomomorphismFails,
    GroupTooLarge,
    // discrete valuation rings
    NotIntegral,
    ModularCharacteristic,
    NotMultiplicityFree,
    NotResiduallyIdempotent,
    NotTauFixed,
    PrecisionExhausted,
    WitnessInvalid,
    NotSymmetricWitness,
    PropagationViolation,
    InvalidPrecision,
    // weights and slopes
    IndexOutOfRange,
    TooLarge,
    AutoChoiceFailed,
    OddDimension,
    AmbiguousMatching,
    NotTransitive,
    InvalidWeights,
    // internal consistency
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace signrep
