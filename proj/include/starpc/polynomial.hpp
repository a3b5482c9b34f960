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

// Sparse multivariate polynomials with prime-field coefficients, and the
// query spaces built from them.

#ifndef STARPC_POLYNOMIAL_HPP_
#define STARPC_POLYNOMIAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "starpc/field.hpp"
#include "starpc/random.hpp"

namespace starpc {

class Monomial {
 public:
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : exponents_(std::move(exponents)) {}

  static Monomial Variable(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return exponents_.size(); }
  std::uint32_t degree() const noexcept;
  const std::vector<std::uint32_t>& exponents() const noexcept {
    return exponents_;
  }

  // Graded lexicographic: lower total degree first; within a degree, the
  // larger exponent of X1 first, then X2, and so on.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

class Polynomial {
 public:
  // Zero polynomial in `arity` variables over the prime field `coeffs`.
  Polynomial(Field coeffs, std::size_t arity);

  static Polynomial FromMonomial(Field coeffs, const Monomial& m,
                                 Symbol coeff = 1);

  const Field& coefficient_field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::uint32_t degree() const noexcept;

  // Terms in graded-lex order; all coefficients nonzero.
  const std::map<Monomial, Symbol>& terms() const noexcept { return terms_; }
  Symbol coefficient(const Monomial& m) const;

  // Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, Symbol c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial scaled(Symbol c) const;

  // Value at x, coefficients embedded into x's field.
  Symbol evaluate(const Field& values_field, std::span<const Symbol> x) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;

  Field field_;
  std::size_t arity_;
  std::map<Monomial, Symbol> terms_;
};

// sum_i scalars[i] * polys[i]; throws on length or arity mismatch.
Polynomial LinearCombine(std::span<const Symbol> scalars,
                         std::span<const Polynomial> polys);

// All monomials in `arity` variables with 1 <= degree <= max_degree, in
// graded-lex order. There are C(arity + max_degree, arity) - 1 of them.
std::vector<Monomial> MonomialBasis(std::size_t arity, std::uint32_t max_degree);

// An F-linear space of query functions given by an ordered basis of
// linearly independent polynomials. Elements are identified with their
// coordinate vectors in F^Q.
class QuerySpace {
 public:
  // P_G: polynomials of degree <= G without constant term.
  static QuerySpace Polynomials(Field coeffs, std::size_t arity,
                                std::uint32_t max_degree);

  // Arbitrary basis; throws kInvalidArgument when dependent.
  static QuerySpace FromBasis(std::vector<Polynomial> basis);

  const Field& coefficient_field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  // Max degree for P_G spaces, 0 for custom bases.
  std::uint32_t max_degree() const noexcept { return max_degree_; }
  bool is_monomial_space() const noexcept { return monomial_; }

  Polynomial combine(std::span<const Symbol> coords) const;
  // Throws kInvalidArgument when f is outside the space.
  std::vector<Symbol> coordinates(const Polynomial& f) const;

  // Uniform element: each coordinate i.i.d. uniform over F.
  Polynomial sample(Rng& rng) const;

 private:
  QuerySpace(Field field, std::size_t arity, std::vector<Polynomial> basis,
             std::uint32_t max_degree, bool monomial);

  Field field_;
  std::size_t arity_;
  std::vector<Polynomial> basis_;
  std::uint32_t max_degree_;
  bool monomial_;
};

}  // namespace starpc

#endif  // STARPC_POLYNOMIAL_HPP_
