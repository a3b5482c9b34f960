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

#include "starpc/rational.hpp"

#include "starpc/error.hpp"

namespace starpc {

using boost::multiprecision::cpp_int;

std::string FormatFraction(const Rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string FormatDecimal(const Rational& r, int digits) {
  cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const cpp_int scaled = (num * scale * 2 + den) / (den * 2);
  const cpp_int whole = scaled / scale;
  std::string frac = cpp_int(scaled % scale).str();
  if (digits > 0) frac.insert(0, digits - frac.size(), '0');
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

Rational ParseFraction(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(cpp_int(text));
    return Rational(cpp_int(text.substr(0, slash)),
                    cpp_int(text.substr(slash + 1)));
  } catch (const std::exception&) {
    Fail(Errc::kParse, "invalid fraction '" + text + "'");
  }
}

}  // namespace starpc
