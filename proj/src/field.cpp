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

#include "starpc/field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <utility>

#include "starpc/error.hpp"

namespace starpc {

namespace detail {

struct FieldData {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::uint32_t order = 2;
  std::vector<std::uint32_t> modulus;  // m+1 entries, monic; empty if m == 1
  std::uint32_t modulus_bits = 0;      // p == 2: modulus as a bit mask
};

}  // namespace detail

namespace {

using Poly = std::vector<std::uint32_t>;

// Max degree is 20 (order <= 2^20), so products have < 40 coefficients.
constexpr std::size_t kMaxDigits = 24;

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t InvModPrime(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo b over Z_p; b must be nonzero after trimming.
void PolyDivMod(Poly a, const Poly& b, std::uint32_t p, Poly& quot,
                Poly& rem) {
  Trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = InvModPrime(b.back(), p);
  quot.assign(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t c =
        static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    quot[shift] = static_cast<std::uint32_t>(c);
    for (std::size_t j = 0; j <= db; ++j) {
      const std::uint64_t sub = c * b[j] % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
    }
    Trim(a);
  }
  rem = std::move(a);
}

Poly PolyMul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  Trim(out);
  return out;
}

Poly PolySub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t x = i < a.size() ? a[i] : 0;
    const std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  Trim(out);
  return out;
}

std::uint64_t CheckedOrder(std::uint32_t p, std::uint32_t m) {
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    order *= p;
    Require(order <= kMaxFieldOrder, Errc::kInvalidArgument,
            "field order exceeds 2^20");
  }
  return order;
}

Poly DefaultModulus(std::uint32_t p, std::uint32_t m) {
  if (p == 2 && m == 2) return {1, 1, 1};
  if (p == 2 && m == 3) return {1, 1, 0, 1};
  if (p == 3 && m == 2) return {1, 0, 1};
  if (p == 2 && m == 4) return {1, 1, 0, 0, 1};
  // Lexicographically first monic irreducible, low coefficients varying
  // fastest.
  const std::uint64_t count = CheckedOrder(p, m);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(m + 1, 0);
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (IsIrreducible(p, f)) return f;
  }
  Fail(Errc::kInternal, "no irreducible polynomial found");
}

}  // namespace

bool IsPrime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool IsIrreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  Trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  Poly quot, rem;
  for (std::size_t k = 1; 2 * k <= deg; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(k + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[k] = 1;
      PolyDivMod(f, g, p, quot, rem);
      if (rem.empty()) return false;
    }
  }
  return true;
}

Field Field::Prime(std::uint32_t p) {
  Require(IsPrime(p), Errc::kInvalidArgument,
          "field characteristic " + std::to_string(p) + " is not prime");
  CheckedOrder(p, 1);
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->m = 1;
  data->order = p;
  return Field(std::move(data));
}

Field Field::Extension(std::uint32_t p, std::uint32_t m,
                       std::vector<std::uint32_t> modulus) {
  Require(m >= 1, Errc::kInvalidArgument, "extension degree must be >= 1");
  if (m == 1) return Prime(p);
  Require(IsPrime(p), Errc::kInvalidArgument,
          "field characteristic " + std::to_string(p) + " is not prime");
  const std::uint64_t order = CheckedOrder(p, m);
  Require(modulus.size() == m + 1 && modulus.back() == 1,
          Errc::kInvalidArgument, "modulus must be monic of degree m");
  for (std::uint32_t c : modulus) {
    Require(c < p, Errc::kInvalidArgument,
            "modulus coefficient out of range");
  }
  Require(IsIrreducible(p, modulus), Errc::kInvalidArgument,
          "modulus is reducible over Z_p");
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->m = m;
  data->order = static_cast<std::uint32_t>(order);
  data->modulus = std::move(modulus);
  if (p == 2) {
    for (std::uint32_t i = 0; i <= m; ++i) {
      data->modulus_bits |= data->modulus[i] << i;
    }
  }
  return Field(std::move(data));
}

Field Field::Standard(std::uint32_t p, std::uint32_t m) {
  if (m == 1) return Prime(p);
  Require(IsPrime(p), Errc::kInvalidArgument,
          "field characteristic " + std::to_string(p) + " is not prime");
  CheckedOrder(p, m);
  return Extension(p, m, DefaultModulus(p, m));
}

std::uint32_t Field::characteristic() const noexcept { return data_->p; }
std::uint32_t Field::degree() const noexcept { return data_->m; }
std::uint32_t Field::order() const noexcept { return data_->order; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept {
  return data_->modulus;
}

Symbol Field::add(Symbol a, Symbol b) const noexcept {
  const auto& d = *data_;
  if (d.m == 1) {
    const Symbol s = a + b;
    return s >= d.p ? s - d.p : s;
  }
  if (d.p == 2) return a ^ b;
  Symbol out = 0, scale = 1;
  for (std::uint32_t i = 0; i < d.m; ++i) {
    out += ((a % d.p + b % d.p) % d.p) * scale;
    a /= d.p;
    b /= d.p;
    scale *= d.p;
  }
  return out;
}

Symbol Field::neg(Symbol a) const noexcept {
  const auto& d = *data_;
  if (d.m == 1) return a == 0 ? 0 : d.p - a;
  if (d.p == 2) return a;
  Symbol out = 0, scale = 1;
  for (std::uint32_t i = 0; i < d.m; ++i) {
    const Symbol c = a % d.p;
    out += (c == 0 ? 0 : d.p - c) * scale;
    a /= d.p;
    scale *= d.p;
  }
  return out;
}

Symbol Field::sub(Symbol a, Symbol b) const noexcept {
  return add(a, neg(b));
}

Symbol Field::mul(Symbol a, Symbol b) const noexcept {
  const auto& d = *data_;
  if (d.m == 1) {
    return static_cast<Symbol>(static_cast<std::uint64_t>(a) * b % d.p);
  }
  if (d.p == 2) {
    std::uint64_t prod = 0;
    for (std::uint32_t i = 0; i < d.m; ++i) {
      if ((b >> i) & 1U) prod ^= static_cast<std::uint64_t>(a) << i;
    }
    for (std::uint32_t i = 2 * d.m - 2; i >= d.m; --i) {
      if ((prod >> i) & 1U) {
        prod ^= static_cast<std::uint64_t>(d.modulus_bits) << (i - d.m);
      }
    }
    return static_cast<Symbol>(prod);
  }
  std::array<std::uint32_t, kMaxDigits> da{}, db{};
  std::array<std::uint64_t, 2 * kMaxDigits> prod{};
  for (std::uint32_t i = 0; i < d.m; ++i) {
    da[i] = a % d.p;
    db[i] = b % d.p;
    a /= d.p;
    b /= d.p;
  }
  for (std::uint32_t i = 0; i < d.m; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < d.m; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % d.p;
    }
  }
  for (std::uint32_t i = 2 * d.m - 2; i >= d.m; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j <= d.m; ++j) {
      const std::uint64_t s = c * d.modulus[j] % d.p;
      prod[i - d.m + j] = (prod[i - d.m + j] + d.p - s) % d.p;
    }
  }
  Symbol out = 0;
  for (std::uint32_t i = d.m; i-- > 0;) {
    out = out * d.p + static_cast<Symbol>(prod[i]);
  }
  return out;
}

Symbol Field::inv(Symbol a) const {
  Require(a != 0, Errc::kDivisionByZero, "inverse of zero");
  const auto& d = *data_;
  if (d.m == 1) return InvModPrime(a, d.p);
  // Extended Euclid on (modulus, a) over Z_p.
  Poly r0(d.modulus.begin(), d.modulus.end());
  Poly r1 = digits(a);
  Trim(r1);
  Poly s0, s1{1};
  Poly quot, rem;
  while (!r1.empty()) {
    PolyDivMod(r0, r1, d.p, quot, rem);
    Poly s2 = PolySub(s0, PolyMul(quot, s1, d.p), d.p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint32_t c_inv = InvModPrime(r0[0], d.p);
  for (auto& c : s0) {
    c = static_cast<std::uint32_t>(std::uint64_t{c} * c_inv % d.p);
  }
  s0.resize(d.m, 0);
  return from_digits(s0);
}

Symbol Field::pow(Symbol a, std::uint64_t e) const noexcept {
  Symbol result = 1;
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Symbol Field::from_integer(std::int64_t v) const noexcept {
  const std::int64_t p = data_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Symbol>(r);
}

std::vector<std::uint32_t> Field::digits(Symbol a) const {
  std::vector<std::uint32_t> out(data_->m);
  for (auto& c : out) {
    c = a % data_->p;
    a /= data_->p;
  }
  return out;
}

Symbol Field::from_digits(std::span<const std::uint32_t> digits) const {
  Require(digits.size() == data_->m, Errc::kInvalidArgument,
          "digit count must equal the extension degree");
  Symbol out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    Require(digits[i] < data_->p, Errc::kInvalidArgument,
            "digit out of range");
    out = out * data_->p + digits[i];
  }
  return out;
}

std::string Field::format(Symbol a) const {
  const auto& d = *data_;
  if (d.m == 1) return std::to_string(a);
  std::string out;
  const auto ds = digits(a);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (d.p > 10) {
      if (i > 0) out.push_back(':');
      out += std::to_string(ds[i]);
    } else {
      out.push_back(static_cast<char>('0' + ds[i]));
    }
  }
  return out;
}

Symbol Field::parse(std::string_view text) const {
  const auto& d = *data_;
  auto bad = [&]() {
    return Error(Errc::kParse, "invalid element '" + std::string(text) +
                                   "' for " + name());
  };
  std::vector<std::uint32_t> ds;
  if (d.m == 1 || d.p > 10) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = d.m == 1 ? text.size() : text.find(':', pos);
      if (end == std::string_view::npos) end = text.size();
      std::uint32_t v = 0;
      const char* first = text.data() + pos;
      const char* last = text.data() + end;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last || first == last) throw bad();
      ds.push_back(v);
      pos = end + 1;
      if (end == text.size()) break;
    }
    if (d.m == 1) {
      if (ds.size() != 1 || ds[0] >= d.p) throw bad();
      return ds[0];
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw bad();
      ds.push_back(static_cast<std::uint32_t>(ch - '0'));
    }
  }
  if (ds.size() != d.m) throw bad();
  for (auto c : ds) {
    if (c >= d.p) throw bad();
  }
  return from_digits(ds);
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << data_->p;
  if (data_->m > 1) os << "^" << data_->m;
  os << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->m == b.data_->m &&
         a.data_->modulus == b.data_->modulus;
}

std::ostream& operator<<(std::ostream& os, const Field& f) {
  return os << f.name();
}

FieldElement::FieldElement(Field field, Symbol value)
    : field_(std::move(field)), value_(value) {
  Require(field_.contains(value_), Errc::kInvalidArgument,
          "symbol out of range for " + field_.name());
}

namespace {

void CheckOwner(const FieldElement& a, const FieldElement& b) {
  Require(a.field() == b.field(), Errc::kOwnerMismatch,
          "operands belong to different fields: " + a.field().name() +
              " vs " + b.field().name());
}

}  // namespace

FieldElement FieldElement::inv() const {
  return FieldElement(field_, field_.inv(value_));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  CheckOwner(a, b);
  return FieldElement(a.field_, a.field_.add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  CheckOwner(a, b);
  return FieldElement(a.field_, a.field_.sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  CheckOwner(a, b);
  return FieldElement(a.field_, a.field_.mul(a.value_, b.value_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  CheckOwner(a, b);
  return FieldElement(a.field_, a.field_.div(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.field_, a.field_.neg(a.value_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.str();
}

FieldElement Embed(const FieldElement& a, const Field& target) {
  Require(a.field().characteristic() == target.characteristic(),
          Errc::kCharacteristicMismatch,
          "cannot embed " + a.field().name() + " into " + target.name());
  Require(a.field().in_prime_subfield(a.value()), Errc::kInvalidArgument,
          "only prime-subfield elements can be embedded");
  return FieldElement(target, a.value());
}

}  // namespace starpc
