// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace edublock
{
using int128 = __int128;

/// floor(num / den + 1/2) for den > 0, i.e. round-half-up division.
int128 div_round_half_up(int128 num, int128 den);

/// Multiplies with overflow detection, throwing Error(Overflow).
int128 checked_mul(int128 a, int128 b);

/// Decimal fixed-point number with four fractional digits. All simulation
/// arithmetic goes through this type; floating point is never used.
class Fixed
{
public:
    static constexpr std::int64_t kScale = 10'000;
    static constexpr int kDigits = 4;

    constexpr Fixed() noexcept = default;

    static constexpr Fixed from_raw(std::int64_t raw) noexcept { return Fixed{raw}; }
    static constexpr Fixed from_int(std::int64_t units) noexcept { return Fixed{units * kScale}; }

    /// Accepts "123", "123.4" ... "123.4567" and an optional leading '-'.
    /// More than four fractional digits is an error, not a rounding.
    static Fixed parse(std::string_view text);

    constexpr std::int64_t raw() const noexcept { return raw_; }

    /// Always four fractional digits: "10000.0000".
    std::string str() const;

    constexpr auto operator<=>(const Fixed&) const = default;

    Fixed operator+(Fixed o) const;
    Fixed operator-(Fixed o) const;
    Fixed& operator+=(Fixed o) { return *this = *this + o; }
    Fixed& operator-=(Fixed o) { return *this = *this - o; }

private:
    constexpr explicit Fixed(std::int64_t raw) noexcept : raw_{raw} {}

    std::int64_t raw_ = 0;
};

/// Round-half-up fixed-point product.
Fixed mul(Fixed a, Fixed b);
/// Round-half-up fixed-point quotient; b must be positive.
Fixed div(Fixed a, Fixed b);

/// Exact rational, always reduced with a positive denominator. Used where
/// values such as one third must compare exactly (cost ratios).
class Ratio
{
public:
    Ratio() = default;
    Ratio(int128 num, int128 den = 1);

    static Ratio of(Fixed f) { return {f.raw(), Fixed::kScale}; }

    int128 num() const noexcept { return num_; }
    int128 den() const noexcept { return den_; }

    Ratio operator+(const Ratio& o) const;
    Ratio operator*(const Ratio& o) const;
    Ratio operator/(const Ratio& o) const;
    bool operator==(const Ratio& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Ratio& o) const;

    /// "p/q", or "p" when the denominator is 1.
    std::string exact() const;
    /// Decimal with the given number of fractional digits, rounded half up.
    std::string decimal(int digits = Fixed::kDigits) const;
    /// Parses the output of exact().
    static Ratio parse(std::string_view text);

private:
    int128 num_ = 0;
    int128 den_ = 1;
};

std::string to_string(int128 v);
}  // namespace edublock
