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

#include "signrep/error.hpp"

namespace signrep {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::UnsupportedField: return "UnsupportedField";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotAGroup: return "NotAGroup";
        case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
        case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
        case ErrorKind::NonMultiplicativeCharacter: return "NonMultiplicativeCharacter";
        case ErrorKind::IncompatibleCharacter: return "IncompatibleCharacter";
        case ErrorKind::NotAbsolutelyIrreducible: return "NotAbsolutelyIrreducible";
        case ErrorKind::NotPolarized: return "NotPolarized";
        case ErrorKind::AmbiguousIntertwiner: return "AmbiguousIntertwiner";
        case ErrorKind::DuplicateFactor: return "DuplicateFactor";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::NotInvolutionStable: return "NotInvolutionStable";
        case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorKind::RelationFails: return "RelationFails";
        case ErrorKind::NonDiagonalizableInvolution: return "NonDiagonalizableInvolution";
        case ErrorKind::HomomorphismFails: return "HomomorphismFails";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::NotIntegral: return "NotIntegral";
        case ErrorKind::ModularCharacteristic: return "ModularCharacteristic";
        case ErrorKind::NotMultiplicityFree: return "NotMultiplicityFree";
        case ErrorKind::NotResiduallyIdempotent: return "NotResiduallyIdempotent";
        case ErrorKind::NotTauFixed: return "NotTauFixed";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::WitnessInvalid: return "WitnessInvalid";
        case ErrorKind::NotSymmetricWitness: return "NotSymmetricWitness";
        case ErrorKind::PropagationViolation: return "PropagationViolation";
        case ErrorKind::InvalidPrecision: return "InvalidPrecision";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::AutoChoiceFailed: return "AutoChoiceFailed";
        case ErrorKind::OddDimension: return "OddDimension";
        case ErrorKind::AmbiguousMatching: return "AmbiguousMatching";
        case ErrorKind::NotTransitive: return "NotTransitive";
        case ErrorKind::InvalidWeights: return "InvalidWeights";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace signrep
