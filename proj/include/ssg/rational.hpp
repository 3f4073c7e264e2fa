// Copyright 2026 The ssg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SSG_RATIONAL_HPP_
#define SSG_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ssg {

// Arbitrary-precision rational, always kept canonical.
using Rational = mpq_class;

// Accepts "p/q", an integer, or a finite decimal such as "0.55".
// Throws std::invalid_argument on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// Lowest-terms "p/q"; integers print with denominator 1.
std::string format_rational(const Rational& r);

// Twelve significant digits.
std::string format_double(double x);

inline Rational pow2(int exponent) {
  Rational r(1);
  if (exponent >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), exponent);
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), -exponent);
  }
  return r;
}

}  // namespace ssg

#endif  // SSG_RATIONAL_HPP_
