// Copyright 2026 The bsa-synth Authors
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
#include <string>

namespace bsa {

/// An exact rotation angle (numerator / denominator) * pi.
///
/// The denominator is a power of two no larger than kMaxDenominator and the
/// fraction is kept in lowest terms with the value wrapped into (-pi, pi].
/// Every value therefore has exactly one representation, so equality is
/// plain member comparison.
class Angle {
 public:
  static constexpr std::int64_t kMaxDenominator = 64;

  constexpr Angle() = default;

  /// Builds (numerator / denominator) * pi. Throws AngleError when the
  /// reduced denominator is not a power of two or exceeds kMaxDenominator.
  static Angle fraction(std::int64_t numerator, std::int64_t denominator);

  static Angle zero() { return Angle{}; }
  static Angle pi() { return fraction(1, 1); }

  /// Parses "p/q" or "p" (a multiple of pi).
  static Angle parse(const std::string& text);

  std::int64_t numerator() const { return numerator_; }
  std::int64_t denominator() const { return denominator_; }

  bool is_zero() const { return numerator_ == 0; }
  double radians() const;

  /// Value in units of pi/kMaxDenominator, wrapped into [0, 2*kMaxDenominator).
  std::int64_t units() const;
  static Angle from_units(std::int64_t units);

  Angle abs() const;

  Angle operator-() const;
  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b) { return a + (-b); }
  Angle& operator+=(const Angle& other) { return *this = *this + other; }

  friend bool operator==(const Angle&, const Angle&) = default;
  /// Orders by value within (-pi, pi].
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

  /// "p/q" as used in the circuit text format, e.g. "-1/4" or "1/1".
  std::string to_fraction() const;
  /// Human rendering in (-pi, pi], e.g. "-π/4", "3π/4", "π", "0".
  std::string to_pretty() const;
  /// Human rendering with the value moved into [0, 2pi), e.g. "7π/4".
  std::string to_pretty_positive() const;

 private:
  constexpr Angle(std::int64_t n, std::int64_t d) : numerator_(n), denominator_(d) {}

  std::int64_t numerator_ = 0;
  std::int64_t denominator_ = 1;
};

/// Exact sum modulo 2pi.
inline Angle angle_add(const Angle& a, const Angle& b) { return a + b; }

}  // namespace bsa
