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

#include "starpc/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "starpc/error.hpp"
#include "starpc/linalg.hpp"
#include "starpc/matrix.hpp"

namespace starpc {

Monomial Monomial::Variable(std::size_t arity, std::size_t index) {
  Require(index < arity, Errc::kInvalidArgument, "variable index out of range");
  std::vector<std::uint32_t> e(arity, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

std::uint32_t Monomial::degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0U);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Larger leading exponents sort first.
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.exponents_[i] != b.exponents_[i]) {
      return b.exponents_[i] <=> a.exponents_[i];
    }
  }
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(Field coeffs, std::size_t arity)
    : field_(std::move(coeffs)), arity_(arity) {
  Require(field_.is_prime_field(), Errc::kInvalidArgument,
          "polynomial coefficients must live in a prime field");
  Require(arity_ >= 1, Errc::kInvalidArgument,
          "polynomials need at least one variable");
}

Polynomial Polynomial::FromMonomial(Field coeffs, const Monomial& m,
                                    Symbol coeff) {
  Polynomial out(std::move(coeffs), m.arity());
  out.add_term(m, coeff);
  return out;
}

std::uint32_t Polynomial::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Symbol Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Symbol c) {
  Require(m.arity() == arity_, Errc::kInvalidArgument,
          "monomial arity does not match polynomial");
  Require(field_.contains(c), Errc::kInvalidArgument,
          "coefficient out of range for " + field_.name());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  Require(field_ == other.field_, Errc::kOwnerMismatch,
          "polynomials over different coefficient fields");
  Require(arity_ == other.arity_, Errc::kInvalidArgument,
          "polynomials with different variable counts");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_compatible(other);
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_compatible(other);
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, field_.neg(c));
  return out;
}

Polynomial Polynomial::scaled(Symbol c) const {
  Polynomial out(field_, arity_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, field_.mul(v, c));
  return out;
}

Symbol Polynomial::evaluate(const Field& values_field,
                            std::span<const Symbol> x) const {
  Require(values_field.characteristic() == field_.characteristic(),
          Errc::kCharacteristicMismatch,
          "cannot evaluate " + field_.name() + " polynomial over " +
              values_field.name());
  Require(x.size() == arity_, Errc::kInvalidArgument,
          "evaluation point has " + std::to_string(x.size()) +
              " coordinates, polynomial has " + std::to_string(arity_) +
              " variables");
  Symbol sum = 0;
  for (const auto& [m, c] : terms_) {
    Symbol term = c;  // prime-subfield symbols embed unchanged
    for (std::size_t i = 0; i < arity_ && term != 0; ++i) {
      const std::uint32_t e = m.exponents()[i];
      if (e > 0) term = values_field.mul(term, values_field.pow(x[i], e));
    }
    sum = values_field.add(sum, term);
  }
  return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

Polynomial LinearCombine(std::span<const Symbol> scalars,
                         std::span<const Polynomial> polys) {
  Require(scalars.size() == polys.size(), Errc::kInvalidArgument,
          "scalar and polynomial counts differ");
  Require(!polys.empty(), Errc::kInvalidArgument,
          "linear combination of an empty family");
  const Field& f = polys.front().coefficient_field();
  Polynomial out(f, polys.front().arity());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    Require(polys[i].coefficient_field() == f, Errc::kOwnerMismatch,
            "polynomials over different coefficient fields");
    Require(polys[i].arity() == out.arity(), Errc::kInvalidArgument,
            "polynomials with different variable counts");
    if (scalars[i] == 0) continue;
    for (const auto& [m, c] : polys[i].terms()) {
      out.add_term(m, f.mul(c, scalars[i]));
    }
  }
  return out;
}

namespace {

void ExponentsOfDegree(std::size_t arity, std::uint32_t remaining,
                       std::vector<std::uint32_t>& prefix,
                       std::vector<Monomial>& out) {
  if (prefix.size() + 1 == arity) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    prefix.push_back(e);
    ExponentsOfDegree(arity, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> MonomialBasis(std::size_t arity,
                                    std::uint32_t max_degree) {
  Require(arity >= 1 && max_degree >= 1, Errc::kInvalidArgument,
          "monomial basis needs M >= 1 and G >= 1");
  std::vector<Monomial> out;
  std::vector<std::uint32_t> prefix;
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    ExponentsOfDegree(arity, d, prefix, out);
  }
  return out;
}

QuerySpace::QuerySpace(Field field, std::size_t arity,
                       std::vector<Polynomial> basis, std::uint32_t max_degree,
                       bool monomial)
    : field_(std::move(field)),
      arity_(arity),
      basis_(std::move(basis)),
      max_degree_(max_degree),
      monomial_(monomial) {}

QuerySpace QuerySpace::Polynomials(Field coeffs, std::size_t arity,
                                   std::uint32_t max_degree) {
  std::vector<Polynomial> basis;
  for (const auto& m : MonomialBasis(arity, max_degree)) {
    basis.push_back(Polynomial::FromMonomial(coeffs, m));
  }
  return QuerySpace(std::move(coeffs), arity, std::move(basis), max_degree,
                    true);
}

namespace {

// Rows are the basis polynomials written over the union of their monomials.
Matrix CoefficientMatrix(const Field& f, std::span<const Polynomial> polys,
                         std::vector<Monomial>& support) {
  std::vector<Monomial> all;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) all.push_back(m);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  support = all;
  Matrix a(f, polys.size(), all.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const auto& [m, c] : polys[i].terms()) {
      auto pos = std::lower_bound(all.begin(), all.end(), m) - all.begin();
      a(i, static_cast<std::size_t>(pos)) = c;
    }
  }
  return a;
}

}  // namespace

QuerySpace QuerySpace::FromBasis(std::vector<Polynomial> basis) {
  Require(!basis.empty(), Errc::kInvalidArgument, "query space basis is empty");
  const Field f = basis.front().coefficient_field();
  const std::size_t arity = basis.front().arity();
  for (const auto& p : basis) {
    Require(p.coefficient_field() == f && p.arity() == arity,
            Errc::kInvalidArgument, "basis polynomials are incompatible");
  }
  std::vector<Monomial> support;
  Require(Rank(CoefficientMatrix(f, basis, support)) == basis.size(),
          Errc::kInvalidArgument, "query space basis is linearly dependent");
  return QuerySpace(f, arity, std::move(basis), 0, false);
}

Polynomial QuerySpace::combine(std::span<const Symbol> coords) const {
  Require(coords.size() == basis_.size(), Errc::kInvalidArgument,
          "coordinate vector length does not match query space dimension");
  return LinearCombine(coords, basis_);
}

std::vector<Symbol> QuerySpace::coordinates(const Polynomial& f) const {
  Require(f.coefficient_field() == field_ && f.arity() == arity_,
          Errc::kInvalidArgument, "polynomial is incompatible with the space");
  std::vector<Symbol> out(basis_.size(), 0);
  if (monomial_) {
    for (const auto& [m, c] : f.terms()) {
      const bool in_space = m.degree() >= 1 && m.degree() <= max_degree_;
      Require(in_space, Errc::kInvalidArgument,
              "polynomial has a term outside P_" + std::to_string(max_degree_));
      auto it = std::lower_bound(
          basis_.begin(), basis_.end(), m,
          [](const Polynomial& p, const Monomial& key) {
            return p.terms().begin()->first < key;
          });
      out[static_cast<std::size_t>(it - basis_.begin())] = c;
    }
    return out;
  }
  std::vector<Polynomial> family = basis_;
  family.push_back(f);
  std::vector<Monomial> support;
  const Matrix a = CoefficientMatrix(field_, family, support);
  std::vector<std::size_t> rows(basis_.size());
  std::iota(rows.begin(), rows.end(), 0);
  const std::size_t last = basis_.size();
  try {
    return SolveLinear(a.select_rows(rows), a.row(last));
  } catch (const Error& e) {
    if (e.code() != Errc::kNoSolution) throw;
    Fail(Errc::kInvalidArgument, "polynomial is outside the query space");
  }
}

Polynomial QuerySpace::sample(Rng& rng) const {
  std::vector<Symbol> coords(basis_.size());
  for (auto& c : coords) {
    c = static_cast<Symbol>(UniformBelow(rng, field_.order()));
  }
  return combine(coords);
}

}  // namespace starpc
