// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CORPUSDIV_FRACTION_HPP
#define CORPUSDIV_FRACTION_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace corpusdiv {

// Exact non-negative rational. All threshold decisions in the splitter go
// through integer cross-multiplication on this type; no floating point is
// involved anywhere in a division decision, so results are bit-identical
// across platforms.
class Fraction {
 public:
  constexpr Fraction() = default;

  // Normalizes to lowest terms. Throws Errc::invalid_fraction unless
  // denominator > 0 and numerator >= 0.
  static Fraction of(std::int64_t numerator, std::int64_t denominator);

  // Accepts "N/D" (e.g. "1/10") or a decimal string (e.g. "0.1", ".125"),
  // both converted exactly. Plain integers ("0", "1") are also accepted.
  static Fraction parse(std::string_view text);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  bool positive() const noexcept { return num_ > 0; }
  bool below_one() const noexcept { return num_ < den_; }

  // amount > (*this) * total, exactly.
  bool exceeded_by(std::int64_t amount, std::int64_t total) const noexcept;

  // (*this) * total < value, exactly.
  bool times_total_below(std::int64_t total, std::int64_t value) const noexcept;

  // Exact sum; throws Errc::invalid_fraction on int64 overflow.
  friend Fraction operator+(const Fraction& a, const Fraction& b);

  friend bool operator==(const Fraction&, const Fraction&) = default;

  std::string str() const;  // "1/10"

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace corpusdiv

#endif  // CORPUSDIV_FRACTION_HPP
