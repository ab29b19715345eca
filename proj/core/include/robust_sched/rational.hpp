// Copyright 2026 The robust_sched Authors
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

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "robust_sched/types.hpp"

namespace robust_sched {

/// Exact rational time value. Lower bounds divide total work by the machine
/// count, so they are kept as num/den instead of floating point; regret
/// comparisons inside the heuristics then stay exact.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Time value) : num_(value) {}  // NOLINT: implicit by design of arithmetic
  Rational(Time num, Time den);

  [[nodiscard]] constexpr Time num() const { return num_; }
  [[nodiscard]] constexpr Time den() const { return den_; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
  [[nodiscard]] double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  /// "a" for integers, "a/b" otherwise.
  [[nodiscard]] std::string to_string() const;
  /// Decimal rendering with at most `digits` fractional digits, trailing zeros trimmed.
  [[nodiscard]] std::string to_decimal(int digits = 6) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  __extension__ typedef __int128 Wide;

  Time num_ = 0;
  Time den_ = 1;
};

}  // namespace robust_sched
