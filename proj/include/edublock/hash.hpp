// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/bytes.hpp>
#include <edublock/error.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace edublock
{
/// Fixed-width opaque byte string with canonical 0x-hex text form.
template <std::size_t N, typename Tag>
struct FixedBytes
{
    static constexpr std::size_t size = N;

    std::array<std::uint8_t, N> bytes{};

    auto operator<=>(const FixedBytes&) const = default;

    static FixedBytes from_hex(std::string_view text)
    {
        const auto raw = edublock::from_hex(text);
        if (raw.size() != N)
            throw Error{Errc::MalformedInput, "wrong byte length for fixed-size value"};
        FixedBytes out;
        std::copy(raw.begin(), raw.end(), out.bytes.begin());
        return out;
    }

    std::string hex() const { return to_hex(bytes); }
    ByteView view() const noexcept { return bytes; }
    bool is_zero() const noexcept
    {
        for (const auto b : bytes)
            if (b != 0)
                return false;
        return true;
    }
};

struct HashTag;
struct AddressTag;

using Hash256 = FixedBytes<32, HashTag>;
using Address = FixedBytes<20, AddressTag>;

/// Name of the repo-wide 256-bit hash, reported in config output and
/// committed into every chain's state.
inline constexpr std::string_view kHashName = "sha256";

Hash256 sha256(ByteView data);
inline Hash256 sha256(std::string_view text)
{
    return sha256(as_bytes(text));
}

/// Incremental SHA-256 over OpenSSL EVP. Reusable after finish().
class Sha256
{
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    Sha256& update(ByteView data);
    Hash256 finish();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Address derived from a human-readable label: last 20 bytes of sha256(label).
Address named_address(std::string_view label);
}  // namespace edublock

template <std::size_t N, typename Tag>
struct std::hash<edublock::FixedBytes<N, Tag>>
{
    std::size_t operator()(const edublock::FixedBytes<N, Tag>& v) const noexcept
    {
        std::size_t h = 0;
        for (std::size_t i = 0; i < sizeof(std::size_t) && i < N; ++i)
            h = (h << 8) | v.bytes[i];
        return h;
    }
};
