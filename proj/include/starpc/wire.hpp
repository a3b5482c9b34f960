// Copyright 2026 The starpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings shared by transcripts, configs and server messages.
//
//   field:       {"p": 2, "m": 2, "modulus": [1, 1, 1]}
//   element:     canonical string, e.g. "11" for x + 1 in GF(4)
//   polynomial:  [{"exponents": [1, 1], "coeff": "1"}, ...], graded-lex
//                order, [] for the zero polynomial
//   code:        {"field": ..., "N": 3, "K": 2, "kind": "generic"|"rs",
//                 "generator": [row-major element strings], "alpha": [...]}

#ifndef STARPC_WIRE_HPP_
#define STARPC_WIRE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "starpc/code.hpp"
#include "starpc/field.hpp"
#include "starpc/matrix.hpp"
#include "starpc/polynomial.hpp"

namespace starpc {

using Json = nlohmann::json;

Json FieldToJson(const Field& f);
// Accepts {"p"}, {"p","m"} (default modulus) or {"p","m","modulus"}.
Field FieldFromJson(const Json& j);

Json SymbolsToJson(const Field& f, std::span<const Symbol> values);
std::vector<Symbol> SymbolsFromJson(const Field& f, const Json& j);

Json PolynomialToJson(const Polynomial& p);
Polynomial PolynomialFromJson(const Json& j, const Field& coeffs,
                              std::size_t arity);

// Nested rows of element strings.
Json MatrixToJson(const Matrix& m);
Matrix MatrixFromJson(const Json& j, const Field& f);

Json CodeToJson(const LinearCode& c);
// `default_field` is used when the descriptor has no "field" entry.
// Kinds: "generic" (generator required), "rs" (alpha and K), "rep" (N).
LinearCode CodeFromJson(const Json& j,
                        const std::optional<Field>& default_field = {});

}  // namespace starpc

#endif  // STARPC_WIRE_HPP_
