// Copyright 2026 The forcelab Authors
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

#ifndef FORCELAB_RATIONAL_HPP_
#define FORCELAB_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace forcelab {

// Canonical (reduced, positive denominator) arbitrary-precision rational.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts "p", "p/q" and "-p/q"; throws Error(kParse) otherwise.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_half_integer(const Rational& value) {
  return value.get_den() == 1 || value.get_den() == 2;
}

}  // namespace forcelab

#endif  // FORCELAB_RATIONAL_HPP_
