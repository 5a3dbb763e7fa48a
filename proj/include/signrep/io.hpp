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

#include "signrep/dvr.hpp"
#include "signrep/hodge.hpp"
#include "signrep/rep.hpp"

#include <json.hpp>

#include <string>

// JSON reading and writing. Parse errors are ParseError with a JSON pointer
// to the offending value at the start of the message.
namespace signrep::io {

using Json = nlohmann::json;

Json parse_document(const std::string& text);
/// Sorted keys, two-space indent, trailing newline.
std::string canonical(const Json& j);
/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

Field parse_field(const Json& j, const std::string& ptr = "");
Json field_to_json(const Field& F);
Elem parse_elem(const Field& F, const Json& j, const std::string& ptr);
Json elem_to_json(const Field& F, const Elem& x);
Matrix parse_matrix(const Field& F, const Json& j, const std::string& ptr);
Json matrix_to_json(const Matrix& m);
Rational parse_rational(const Json& j, const std::string& ptr);
/// "p/q", or "p" for integers.
Json rational_to_json(const Rational& q);

/// Representation document: field, group (table or generators), character, images.
InvolutiveRep parse_rep(const Json& j);
/// Table-mode document for any representation.
Json rep_to_json(const InvolutiveRep& rep);

/// Representation document over a valuation ring, with a "dvr" member.
DvrRep parse_family(const Json& j);
/// "precision" member, if any.
std::optional<std::size_t> family_precision(const Json& j);

/// Weight document; slopes are multiplied by "scale".
WeightSlopeData parse_weights(const Json& j);
Json weights_to_json(const WeightSlopeData& data);

}  // namespace signrep::io
