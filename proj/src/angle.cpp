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

#include "bsa/angle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numbers>
#include <numeric>

#include "bsa/error.hpp"

namespace bsa {
namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

std::int64_t parse_int(const std::string& text, const std::string& whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw AngleError("malformed angle '" + whole + "'");
  }
  return value;
}

std::string pretty(std::int64_t num, std::int64_t den) {
  if (num == 0) return "0";
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  if (num != 1) out += std::to_string(num);
  out += "π";
  if (den != 1) out += "/" + std::to_string(den);
  return out;
}

}  // namespace

Angle Angle::fraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw AngleError("angle denominator is zero");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
  numerator /= g;
  denominator /= g;
  if (!is_power_of_two(denominator)) {
    throw AngleError("angle " + std::to_string(numerator) + "/" + std::to_string(denominator) +
                     " is not a dyadic multiple of pi");
  }
  if (denominator > kMaxDenominator) {
    throw AngleError("angle denominator " + std::to_string(denominator) + " exceeds " +
                     std::to_string(kMaxDenominator));
  }
  const std::int64_t period = 2 * denominator;
  std::int64_t wrapped = numerator % period;
  if (wrapped < 0) wrapped += period;
  if (wrapped > denominator) wrapped -= period;
  if (wrapped == 0) return Angle{0, 1};
  return Angle{wrapped, denominator};
}

Angle Angle::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return fraction(parse_int(text, text), 1);
  return fraction(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

double Angle::radians() const {
  return std::numbers::pi * static_cast<double>(numerator_) / static_cast<double>(denominator_);
}

std::int64_t Angle::units() const {
  const std::int64_t period = 2 * kMaxDenominator;
  std::int64_t u = numerator_ * (kMaxDenominator / denominator_);
  u %= period;
  if (u < 0) u += period;
  return u;
}

Angle Angle::from_units(std::int64_t units) { return fraction(units, kMaxDenominator); }

Angle Angle::abs() const { return numerator_ < 0 ? -*this : *this; }

Angle Angle::operator-() const { return fraction(-numerator_, denominator_); }

Angle operator+(const Angle& a, const Angle& b) {
  const std::int64_t den = std::max(a.denominator_, b.denominator_);
  return Angle::fraction(a.numerator_ * (den / a.denominator_) + b.numerator_ * (den / b.denominator_),
                         den);
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  return a.numerator_ * b.denominator_ <=> b.numerator_ * a.denominator_;
}

std::string Angle::to_fraction() const {
  return std::to_string(numerator_) + "/" + std::to_string(denominator_);
}

std::string Angle::to_pretty() const { return pretty(numerator_, denominator_); }

std::string Angle::to_pretty_positive() const {
  if (numerator_ < 0) return pretty(numerator_ + 2 * denominator_, denominator_);
  return pretty(numerator_, denominator_);
}

}  // namespace bsa
