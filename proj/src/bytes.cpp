// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/bytes.hpp>
#include <edublock/error.hpp>

#include <algorithm>

namespace edublock
{
namespace
{
constexpr char kDigits[] = "0123456789abcdef";

int nibble(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    return -1;
}
}  // namespace

std::string to_hex(ByteView data)
{
    std::string out;
    out.reserve(2 + 2 * data.size());
    out += "0x";
    for (const auto b : data)
    {
        out += kDigits[b >> 4];
        out += kDigits[b & 0xf];
    }
    return out;
}

Bytes from_hex(std::string_view text)
{
    if (text.size() < 2 || text[0] != '0' || text[1] != 'x' || text.size() % 2 != 0)
        throw Error{Errc::MalformedInput, "hex string must be 0x-prefixed with even length"};
    Bytes out;
    out.reserve((text.size() - 2) / 2);
    for (std::size_t i = 2; i < text.size(); i += 2)
    {
        const int hi = nibble(text[i]);
        const int lo = nibble(text[i + 1]);
        if (hi < 0 || lo < 0)
            throw Error{Errc::MalformedInput, "invalid hex digit"};
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

Encoder& Encoder::u8(std::uint8_t v)
{
    out_.push_back(v);
    return *this;
}

Encoder& Encoder::u32(std::uint32_t v)
{
    for (int shift = 24; shift >= 0; shift -= 8)
        out_.push_back(static_cast<std::uint8_t>(v >> shift));
    return *this;
}

Encoder& Encoder::u64(std::uint64_t v)
{
    for (int shift = 56; shift >= 0; shift -= 8)
        out_.push_back(static_cast<std::uint8_t>(v >> shift));
    return *this;
}

Encoder& Encoder::raw(ByteView data)
{
    out_.insert(out_.end(), data.begin(), data.end());
    return *this;
}

Encoder& Encoder::bytes(ByteView data)
{
    if (data.size() > UINT32_MAX)
        throw Error{Errc::Overflow, "byte field longer than 2^32-1"};
    u32(static_cast<std::uint32_t>(data.size()));
    return raw(data);
}

ByteView Decoder::raw(std::size_t n)
{
    if (data_.size() - pos_ < n)
        throw Error{Errc::MalformedInput, "truncated input"};
    const auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
}

std::uint8_t Decoder::u8()
{
    return raw(1)[0];
}

std::uint32_t Decoder::u32()
{
    std::uint32_t v = 0;
    for (const auto b : raw(4))
        v = (v << 8) | b;
    return v;
}

std::uint64_t Decoder::u64()
{
    std::uint64_t v = 0;
    for (const auto b : raw(8))
        v = (v << 8) | b;
    return v;
}

Bytes Decoder::bytes()
{
    const auto n = u32();
    const auto src = raw(n);
    return {src.begin(), src.end()};
}

std::string Decoder::str()
{
    const auto n = u32();
    const auto src = raw(n);
    return {src.begin(), src.end()};
}

void Decoder::expect_end() const
{
    if (pos_ != data_.size())
        throw Error{Errc::MalformedInput, "trailing bytes"};
}
}  // namespace edublock
