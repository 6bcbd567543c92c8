// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/error.hpp>
#include <edublock/fixed.hpp>

#include <algorithm>
#include <charconv>

namespace edublock
{
namespace
{
int128 floor_div(int128 a, int128 b)
{
    int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

int128 gcd128(int128 a, int128 b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0)
    {
        const int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw Error{Errc::Overflow, "fixed-point value out of range"};
    return static_cast<std::int64_t>(v);
}

int128 pow10(int n)
{
    int128 p = 1;
    while (n-- > 0)
        p *= 10;
    return p;
}
}  // namespace

int128 div_round_half_up(int128 num, int128 den)
{
    if (den <= 0)
        throw Error{Errc::MalformedInput, "non-positive divisor"};
    return floor_div(checked_mul(num, 2) + den, checked_mul(den, 2));
}

int128 checked_mul(int128 a, int128 b)
{
    int128 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error{Errc::Overflow, "128-bit multiplication overflow"};
    return out;
}

std::string to_string(int128 v)
{
    if (v == 0)
        return "0";
    const bool neg = v < 0;
    std::string out;
    while (v != 0)
    {
        const int digit = static_cast<int>(v % 10);
        out += static_cast<char>('0' + (neg ? -digit : digit));
        v /= 10;
    }
    if (neg)
        out += '-';
    std::reverse(out.begin(), out.end());
    return out;
}

Fixed Fixed::parse(std::string_view text)
{
    const auto fail = [&] { return Error{Errc::MalformedInput, "bad fixed-point literal '" + std::string{text} + "'"}; };
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && s.front() == '-')
    {
        neg = true;
        s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    const auto int_part = s.substr(0, dot);
    const auto frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() || (dot != std::string_view::npos && frac_part.empty()) ||
        frac_part.size() > static_cast<std::size_t>(kDigits))
        throw fail();
    const auto all_digits = [](std::string_view p) {
        return std::all_of(p.begin(), p.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!all_digits(int_part) || !all_digits(frac_part))
        throw fail();

    std::int64_t whole = 0;
    const auto [ptr, ec] = std::from_chars(int_part.data(), int_part.data() + int_part.size(), whole);
    if (ec != std::errc{} || ptr != int_part.data() + int_part.size())
        throw fail();
    std::int64_t frac = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(kDigits); ++i)
        frac = frac * 10 + (i < frac_part.size() ? frac_part[i] - '0' : 0);

    const int128 raw = checked_mul(whole, kScale) + frac;
    return Fixed{narrow(neg ? -raw : raw)};
}

std::string Fixed::str() const
{
    const int128 v = raw_;
    const int128 mag = v < 0 ? -v : v;
    std::string frac = to_string(mag % kScale);
    frac.insert(0, kDigits - frac.size(), '0');
    return (v < 0 ? "-" : "") + to_string(mag / kScale) + "." + frac;
}

Fixed Fixed::operator+(Fixed o) const
{
    return Fixed{narrow(static_cast<int128>(raw_) + o.raw_)};
}

Fixed Fixed::operator-(Fixed o) const
{
    return Fixed{narrow(static_cast<int128>(raw_) - o.raw_)};
}

Fixed mul(Fixed a, Fixed b)
{
    return Fixed::from_raw(narrow(div_round_half_up(static_cast<int128>(a.raw()) * b.raw(), Fixed::kScale)));
}

Fixed div(Fixed a, Fixed b)
{
    if (b.raw() <= 0)
        throw Error{Errc::MalformedInput, "fixed-point divisor must be positive"};
    return Fixed::from_raw(narrow(div_round_half_up(static_cast<int128>(a.raw()) * Fixed::kScale, b.raw())));
}

Ratio::Ratio(int128 num, int128 den)
{
    if (den == 0)
        throw Error{Errc::MalformedInput, "zero denominator"};
    if (den < 0)
    {
        num = -num;
        den = -den;
    }
    const int128 g = gcd128(num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

Ratio Ratio::operator+(const Ratio& o) const
{
    return {checked_mul(num_, o.den_) + checked_mul(o.num_, den_), checked_mul(den_, o.den_)};
}

Ratio Ratio::operator*(const Ratio& o) const
{
    const int128 g1 = gcd128(num_, o.den_) == 0 ? 1 : gcd128(num_, o.den_);
    const int128 g2 = gcd128(o.num_, den_) == 0 ? 1 : gcd128(o.num_, den_);
    return {checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1)};
}

Ratio Ratio::operator/(const Ratio& o) const
{
    if (o.num_ == 0)
        throw Error{Errc::MalformedInput, "division by zero ratio"};
    return *this * Ratio{o.den_, o.num_};
}

std::strong_ordering Ratio::operator<=>(const Ratio& o) const
{
    const int128 lhs = checked_mul(num_, o.den_);
    const int128 rhs = checked_mul(o.num_, den_);
    return lhs <=> rhs;
}

std::string Ratio::exact() const
{
    if (den_ == 1)
        return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

std::string Ratio::decimal(int digits) const
{
    const int128 scale = pow10(digits);
    const int128 scaled = div_round_half_up(checked_mul(num_, scale), den_);
    const int128 mag = scaled < 0 ? -scaled : scaled;
    std::string out = (scaled < 0 ? "-" : "") + to_string(mag / scale);
    if (digits > 0)
    {
        std::string frac = to_string(mag % scale);
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

Ratio Ratio::parse(std::string_view text)
{
    const auto parse_int = [&](std::string_view s) {
        if (s.empty())
            throw Error{Errc::MalformedInput, "bad ratio '" + std::string{text} + "'"};
        bool neg = false;
        if (s.front() == '-')
        {
            neg = true;
            s.remove_prefix(1);
        }
        if (s.empty())
            throw Error{Errc::MalformedInput, "bad ratio '" + std::string{text} + "'"};
        int128 v = 0;
        for (const char c : s)
        {
            if (c < '0' || c > '9')
                throw Error{Errc::MalformedInput, "bad ratio '" + std::string{text} + "'"};
            v = checked_mul(v, 10) + (c - '0');
        }
        return neg ? -v : v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return {parse_int(text), 1};
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}
}  // namespace edublock
