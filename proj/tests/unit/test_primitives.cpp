// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/bytes.hpp>
#include <edublock/error.hpp>
#include <edublock/fixed.hpp>
#include <edublock/hash.hpp>

#include "doctest.h"

#include <random>

using namespace edublock;

namespace
{
template <typename F>
Errc code_of(F&& f)
{
    try
    {
        f();
    }
    catch (const Error& e)
    {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::NotFound;
}
}  // namespace

TEST_CASE("hex is lowercase with prefix")
{
    const Bytes b{0x00, 0xab, 0xff};
    CHECK(to_hex(b) == "0x00abff");
    CHECK(from_hex("0x00abff") == b);
    CHECK(from_hex("0x").empty());
    CHECK(code_of([] { from_hex("00abff"); }) == Errc::MalformedInput);
    CHECK(code_of([] { from_hex("0x00ABFF"); }) == Errc::MalformedInput);
    CHECK(code_of([] { from_hex("0xabc"); }) == Errc::MalformedInput);
    CHECK(code_of([] { from_hex("0xzz"); }) == Errc::MalformedInput);
    CHECK(code_of([] { Address::from_hex("0x00"); }) == Errc::MalformedInput);
}

TEST_CASE("encoder and decoder round trip")
{
    Encoder enc;
    enc.u8(7).u32(0xdeadbeef).u64(1ULL << 40).i64(-5).str("team").bytes(Bytes{1, 2});
    const auto data = enc.take();
    CHECK(data.size() == 1 + 4 + 8 + 8 + 4 + 4 + 4 + 2);
    CHECK(data[1] == 0xde);

    Decoder dec{data};
    CHECK(dec.u8() == 7);
    CHECK(dec.u32() == 0xdeadbeef);
    CHECK(dec.u64() == 1ULL << 40);
    CHECK(dec.i64() == -5);
    CHECK(dec.str() == "team");
    CHECK(dec.bytes() == Bytes{1, 2});
    CHECK(dec.empty());
    dec.expect_end();
    CHECK(code_of([&] { dec.u8(); }) == Errc::MalformedInput);

    Decoder extra{data};
    extra.u8();
    CHECK(code_of([&] { extra.expect_end(); }) == Errc::MalformedInput);

    const Bytes lying{0, 0, 0, 9, 1};
    Decoder short_len{lying};
    CHECK(code_of([&] { short_len.bytes(); }) == Errc::MalformedInput);
}

TEST_CASE("incremental hashing matches one-shot")
{
    Sha256 h;
    h.update(as_bytes("ab")).update(as_bytes("c"));
    CHECK(h.finish() == sha256(std::string_view{"abc"}));
}

TEST_CASE("fixed-point parsing and printing")
{
    CHECK(Fixed::parse("10000").raw() == 100'000'000);
    CHECK(Fixed::parse("15.80").raw() == 158'000);
    CHECK(Fixed::parse("0.0001").raw() == 1);
    CHECK(Fixed::parse("-2.5").raw() == -25'000);
    CHECK(Fixed::from_int(10'000).str() == "10000.0000");
    CHECK(Fixed::from_raw(-1).str() == "-0.0001");
    CHECK(Fixed::from_raw(5).str() == "0.0005");
    for (const auto* bad : {"", ".5", "1.", "1.00001", "1e3", "+1", "1,0", "--1", " 1"})
        CHECK_MESSAGE(code_of([&] { Fixed::parse(bad); }) == Errc::MalformedInput, bad);
    CHECK(code_of([] { Fixed::parse("9999999999999999999"); }) == Errc::MalformedInput);
}

TEST_CASE("round half up")
{
    CHECK(div_round_half_up(5, 2) == 3);
    CHECK(div_round_half_up(4, 3) == 1);
    CHECK(div_round_half_up(5, 3) == 2);
    CHECK(div_round_half_up(-5, 2) == -2);
    CHECK(div_round_half_up(0, 7) == 0);
    CHECK(mul(Fixed::parse("1.5"), Fixed::parse("1.1")).str() == "1.6500");
    CHECK(mul(Fixed::parse("0.0001"), Fixed::parse("0.5")).str() == "0.0001");
    CHECK(div(Fixed::from_int(1), Fixed::from_int(3)).str() == "0.3333");
    CHECK(div(Fixed::from_int(2), Fixed::from_int(3)).str() == "0.6667");
}

TEST_CASE("fixed str and parse round trip")
{
    std::mt19937_64 rng{7};
    for (int i = 0; i < 1000; ++i)
    {
        const auto raw = static_cast<std::int64_t>(rng() % 2'000'000'000'000ULL) - 1'000'000'000'000LL;
        const auto f = Fixed::from_raw(raw);
        CHECK(Fixed::parse(f.str()) == f);
    }
}

TEST_CASE("ratios stay exact")
{
    const Ratio third{1, 3};
    CHECK((third * Ratio{3}) == Ratio{1});
    CHECK((Ratio{7, 10} / Ratio{3}) == Ratio{7, 30});
    CHECK(Ratio{2, 4} == Ratio{1, 2});
    CHECK(Ratio{1, -2} == Ratio{-1, 2});
    CHECK(Ratio{7, 10}.decimal() == "0.7000");
    CHECK(Ratio{7, 30}.decimal() == "0.2333");
    CHECK(Ratio{2, 3}.decimal() == "0.6667");
    CHECK(Ratio{1, 8}.decimal(2) == "0.13");
    CHECK(Ratio{7, 30}.exact() == "7/30");
    CHECK(Ratio{5}.exact() == "5");
    CHECK(Ratio::parse("7/30") == Ratio{7, 30});
    CHECK(Ratio::parse("12") == Ratio{12});
    CHECK(Ratio{1, 3} < Ratio{1, 2});
    CHECK(code_of([] { Ratio(1, 0); }) == Errc::MalformedInput);
}

TEST_CASE("error names round trip")
{
    for (int i = 0; i <= static_cast<int>(Errc::NotFound); ++i)
    {
        const auto c = static_cast<Errc>(i);
        CHECK(parse_errc(to_string(c)) == c);
    }
    CHECK_FALSE(parse_errc("NoSuchCode").has_value());
    const Error e{Errc::BadNonce, "expected 1"};
    CHECK(std::string{e.what()} == "BadNonce: expected 1");
}
