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

// Exact arithmetic in GF(p) and GF(p^m).
//
// An element of GF(p^m) is the polynomial c_0 + c_1 x + ... + c_{m-1} x^{m-1}
// reduced modulo a monic irreducible of degree m. It is packed into a single
// integer Symbol as the base-p number sum_i c_i p^i, so the prime subfield
// GF(p) occupies exactly the symbols [0, p) and embedding GF(p) -> GF(p^m)
// leaves the packed value unchanged.

#ifndef STARPC_FIELD_HPP_
#define STARPC_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace starpc {

using Symbol = std::uint32_t;

// Largest supported field order.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

namespace detail {
struct FieldData;
}

// Immutable handle to a finite field description. Copies share the same
// underlying tables; two handles compare equal when p, m and the modulus
// agree, regardless of where they were constructed.
class Field {
 public:
  // GF(p). Throws kInvalidArgument when p is not prime or too large.
  static Field Prime(std::uint32_t p);

  // GF(p^m) modulo the given monic polynomial (m+1 little-endian
  // coefficients). The modulus is checked for irreducibility by trial
  // division.
  static Field Extension(std::uint32_t p, std::uint32_t m,
                         std::vector<std::uint32_t> modulus);

  // GF(p^m) with the shipped default modulus for GF(4), GF(8), GF(9) and
  // GF(16); other orders use the lexicographically first monic irreducible.
  static Field Standard(std::uint32_t p, std::uint32_t m = 1);

  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  std::uint32_t order() const noexcept;
  // Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept;

  bool is_prime_field() const noexcept { return degree() == 1; }
  bool in_prime_subfield(Symbol a) const noexcept {
    return a < characteristic();
  }
  bool contains(Symbol a) const noexcept { return a < order(); }

  Symbol zero() const noexcept { return 0; }
  Symbol one() const noexcept { return 1; }

  Symbol add(Symbol a, Symbol b) const noexcept;
  Symbol sub(Symbol a, Symbol b) const noexcept;
  Symbol neg(Symbol a) const noexcept;
  Symbol mul(Symbol a, Symbol b) const noexcept;
  // Throws kDivisionByZero on a == 0.
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
  Symbol pow(Symbol a, std::uint64_t e) const noexcept;

  // Image of an integer in the prime subfield.
  Symbol from_integer(std::int64_t v) const noexcept;

  // Little-endian base-p digits, always degree() of them.
  std::vector<std::uint32_t> digits(Symbol a) const;
  Symbol from_digits(std::span<const std::uint32_t> digits) const;

  // Canonical text form: the m base-p digits little-endian, concatenated.
  // For p > 10 with m > 1 digits are decimal and separated by ':'.
  std::string format(Symbol a) const;
  Symbol parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;
};

std::ostream& operator<<(std::ostream& os, const Field& f);

bool IsPrime(std::uint64_t n) noexcept;

// True iff the monic polynomial (little-endian, degree >= 1) has no monic
// factor of degree 1..deg/2 over Z_p.
bool IsIrreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

// Value type pairing a symbol with its field. Arithmetic between elements of
// structurally different fields throws kOwnerMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Symbol value);

  const Field& field() const noexcept { return field_; }
  Symbol value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inv() const;
  std::string str() const { return field_.format(value_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Field field_;
  Symbol value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

// Constant-polynomial image of a prime-subfield element in `target`.
// Throws kCharacteristicMismatch when the characteristics differ and
// kInvalidArgument when `a` is not in the prime subfield.
FieldElement Embed(const FieldElement& a, const Field& target);

}  // namespace starpc

#endif  // STARPC_FIELD_HPP_
