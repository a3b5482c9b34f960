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

#ifndef STARPC_RATIONAL_HPP_
#define STARPC_RATIONAL_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace starpc {

using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, or "p" when q == 1.
std::string FormatFraction(const Rational& r);

// Fixed-point decimal rendering with `digits` places, rounded half up.
std::string FormatDecimal(const Rational& r, int digits = 6);

// Inverse of FormatFraction.
Rational ParseFraction(const std::string& text);

}  // namespace starpc

#endif  // STARPC_RATIONAL_HPP_
