// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#include "corpusdiv/fraction.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "corpusdiv/error.hpp"

namespace corpusdiv {

namespace {

using Wide = __int128;

std::int64_t parse_int(std::string_view text) {
  if (text.empty()) throw Error(Errc::invalid_fraction, "empty number");
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0)
    throw Error(Errc::invalid_fraction, "bad number '" + std::string(text) + "'");
  return value;
}

}  // namespace

Fraction Fraction::of(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0)
    throw Error(Errc::invalid_fraction, "denominator must be positive");
  if (numerator < 0)
    throw Error(Errc::invalid_fraction, "numerator must be non-negative");
  const std::int64_t g = std::gcd(numerator, denominator);  // > 0: denominator > 0
  Fraction f;
  f.num_ = numerator / g;
  f.den_ = denominator / g;
  return f;
}

Fraction Fraction::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return of(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18)
      throw Error(Errc::invalid_fraction, "bad decimal '" + std::string(text) + "'");
    std::int64_t den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t whole_part = whole.empty() ? 0 : parse_int(whole);
    const std::int64_t frac_part = parse_int(frac);
    if (whole_part > (std::numeric_limits<std::int64_t>::max() - frac_part) / den)
      throw Error(Errc::invalid_fraction, "decimal out of range");
    return of(whole_part * den + frac_part, den);
  }
  return of(parse_int(text), 1);
}

bool Fraction::exceeded_by(std::int64_t amount, std::int64_t total) const noexcept {
  return static_cast<Wide>(amount) * den_ > static_cast<Wide>(num_) * total;
}

bool Fraction::times_total_below(std::int64_t total, std::int64_t value) const noexcept {
  return static_cast<Wide>(num_) * total < static_cast<Wide>(value) * den_;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  const Wide num = static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_;
  const Wide den = static_cast<Wide>(a.den_) * b.den_;
  constexpr Wide limit = std::numeric_limits<std::int64_t>::max();
  if (num > limit || den > limit)
    throw Error(Errc::invalid_fraction, "fraction sum out of range");
  return Fraction::of(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::string Fraction::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace corpusdiv
