// Copyright 2026 The bireg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "bireg/errors.hpp"

// Boost 1.74's mixed integer/rational operator== recurses forever under the
// C++20 reversed-operand rules. Exact non-template overloads win overload
// resolution and route through rational == rational.
namespace boost {

#define BIREG_RATIONAL_EQ(Int)                                                   \
  inline bool operator==(const rational<std::int64_t>& a, Int b) {               \
    return a.operator==(rational<std::int64_t>(b));                             \
  }                                                                              \
  inline bool operator==(Int b, const rational<std::int64_t>& a) {               \
    return a.operator==(rational<std::int64_t>(b));                             \
  }
BIREG_RATIONAL_EQ(int)
BIREG_RATIONAL_EQ(long)
BIREG_RATIONAL_EQ(long long)
#undef BIREG_RATIONAL_EQ

}  // namespace boost

namespace bireg {

using Rational = boost::rational<std::int64_t>;

// Canonical "p/q" text form; the denominator is always written.
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw PreconditionError("malformed rational: " + text);
  }
}

}  // namespace bireg
