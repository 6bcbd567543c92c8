// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edublock
{
using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Lowercase hex with a "0x" prefix.
std::string to_hex(ByteView data);

/// Strict inverse of to_hex: requires the "0x" prefix and lowercase digits,
/// so every byte string has exactly one accepted text form.
Bytes from_hex(std::string_view text);

inline ByteView as_bytes(std::string_view s) noexcept
{
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

/// Canonical binary writer: big-endian integers, u32 length prefixes for
/// variable-size fields. See docs/FORMATS.md.
class Encoder
{
public:
    Encoder& u8(std::uint8_t v);
    Encoder& u32(std::uint32_t v);
    Encoder& u64(std::uint64_t v);
    Encoder& i64(std::int64_t v) { return u64(static_cast<std::uint64_t>(v)); }
    Encoder& raw(ByteView data);
    Encoder& bytes(ByteView data);
    Encoder& str(std::string_view s) { return bytes(as_bytes(s)); }

    template <std::size_t N>
    Encoder& fixed(const std::array<std::uint8_t, N>& a)
    {
        return raw(a);
    }

    const Bytes& data() const noexcept { return out_; }
    Bytes take() noexcept { return std::move(out_); }

private:
    Bytes out_;
};

/// Reader matching Encoder. Throws Error(MalformedInput) on truncation.
class Decoder
{
public:
    explicit Decoder(ByteView data) noexcept : data_{data} {}

    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
    ByteView raw(std::size_t n);
    Bytes bytes();
    std::string str();

    template <std::size_t N>
    std::array<std::uint8_t, N> fixed()
    {
        std::array<std::uint8_t, N> out{};
        const auto src = raw(N);
        std::copy(src.begin(), src.end(), out.begin());
        return out;
    }

    bool empty() const noexcept { return pos_ == data_.size(); }
    /// Throws unless every byte was consumed.
    void expect_end() const;

private:
    ByteView data_;
    std::size_t pos_ = 0;
};
}  // namespace edublock
