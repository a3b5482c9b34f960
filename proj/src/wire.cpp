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

#include "starpc/wire.hpp"

#include "starpc/error.hpp"

namespace starpc {

namespace {

template <typename T>
T Get(const Json& j, const char* key) {
  Require(j.is_object() && j.contains(key), Errc::kParse,
          std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    Fail(Errc::kParse, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json FieldToJson(const Field& f) {
  Json j = {{"p", f.characteristic()}, {"m", f.degree()}};
  if (f.degree() > 1) j["modulus"] = f.modulus();
  return j;
}

Field FieldFromJson(const Json& j) {
  const auto p = Get<std::uint32_t>(j, "p");
  const auto m = j.contains("m") ? Get<std::uint32_t>(j, "m") : 1U;
  if (m > 1 && j.contains("modulus")) {
    return Field::Extension(p, m,
                            Get<std::vector<std::uint32_t>>(j, "modulus"));
  }
  return Field::Standard(p, m);
}

Json SymbolsToJson(const Field& f, std::span<const Symbol> values) {
  Json out = Json::array();
  for (Symbol s : values) out.push_back(f.format(s));
  return out;
}

std::vector<Symbol> SymbolsFromJson(const Field& f, const Json& j) {
  Require(j.is_array(), Errc::kParse, "expected an array of elements");
  std::vector<Symbol> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    Require(e.is_string(), Errc::kParse, "elements are encoded as strings");
    out.push_back(f.parse(e.get<std::string>()));
  }
  return out;
}

Json PolynomialToJson(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"exponents", m.exponents()},
                   {"coeff", p.coefficient_field().format(c)}});
  }
  return out;
}

Polynomial PolynomialFromJson(const Json& j, const Field& coeffs,
                              std::size_t arity) {
  Require(j.is_array(), Errc::kParse, "polynomial must be a JSON array");
  Polynomial out(coeffs, arity);
  for (const auto& term : j) {
    auto exps = Get<std::vector<std::uint32_t>>(term, "exponents");
    Require(exps.size() == arity, Errc::kParse,
            "monomial has " + std::to_string(exps.size()) +
                " exponents, expected " + std::to_string(arity));
    out.add_term(Monomial(std::move(exps)),
                 coeffs.parse(Get<std::string>(term, "coeff")));
  }
  return out;
}

Json MatrixToJson(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out.push_back(SymbolsToJson(m.field(), m.row(r)));
  }
  return out;
}

Matrix MatrixFromJson(const Json& j, const Field& f) {
  Require(j.is_array(), Errc::kParse, "matrix must be an array of rows");
  std::vector<Symbol> entries;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    auto row = SymbolsFromJson(f, j[r]);
    if (r == 0) cols = row.size();
    Require(row.size() == cols, Errc::kParse, "ragged matrix");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(f, j.size(), cols, std::move(entries));
}

Json CodeToJson(const LinearCode& c) {
  Json j = {{"field", FieldToJson(c.field())},
            {"N", c.length()},
            {"K", c.dimension()},
            {"kind", c.kind() == CodeKind::kReedSolomon ? "rs" : "generic"},
            {"generator", SymbolsToJson(c.field(), c.generator().entries())}};
  if (c.kind() == CodeKind::kReedSolomon) {
    j["alpha"] = SymbolsToJson(c.field(), c.alpha());
  }
  return j;
}

LinearCode CodeFromJson(const Json& j, const std::optional<Field>& default_field) {
  Require(j.is_object(), Errc::kParse, "code descriptor must be an object");
  std::optional<Field> f;
  if (j.contains("field")) {
    f = FieldFromJson(j.at("field"));
  } else {
    f = default_field;
  }
  Require(f.has_value(), Errc::kParse, "code descriptor has no field");
  const std::string kind =
      j.contains("kind") ? Get<std::string>(j, "kind") : "generic";

  if (kind == "rep") {
    return RepetitionCode(Get<std::size_t>(j, "N"), *f);
  }
  if (kind == "rs") {
    const auto alpha = SymbolsFromJson(*f, j.at("alpha"));
    const auto k = Get<std::size_t>(j, "K");
    LinearCode rs = ReedSolomonCode(*f, alpha, k);
    if (j.contains("generator")) {
      // A stored generator (e.g. systematic form) must span the same code.
      const auto g = SymbolsFromJson(*f, j.at("generator"));
      LinearCode given(Matrix(*f, k, alpha.size(), g));
      Require(given == rs, Errc::kParse,
              "generator does not span RS_K(alpha)");
      return given.WithEvaluationVector(alpha);
    }
    return rs;
  }
  Require(kind == "generic", Errc::kParse, "unknown code kind '" + kind + "'");
  const Json& gj = j.at("generator");
  Matrix g(*f, 0, 0);
  if (!gj.empty() && gj.front().is_array()) {
    g = MatrixFromJson(gj, *f);
  } else {
    const auto entries = SymbolsFromJson(*f, gj);
    const auto k = Get<std::size_t>(j, "K");
    Require(k > 0 && entries.size() % k == 0, Errc::kParse,
            "generator length is not a multiple of K");
    g = Matrix(*f, k, entries.size() / k, entries);
  }
  if (j.contains("N")) {
    Require(Get<std::size_t>(j, "N") == g.cols(), Errc::kParse,
            "N does not match the generator");
  }
  if (j.contains("K")) {
    Require(Get<std::size_t>(j, "K") == g.rows(), Errc::kParse,
            "K does not match the generator");
  }
  return LinearCode(std::move(g));
}

}  // namespace starpc
