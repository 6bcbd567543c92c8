// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include "helpers.hpp"

#include <edublock/chain/persist.hpp>
#include <edublock/error.hpp>

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace edublock;
using namespace edublock::test;

namespace
{
std::filesystem::path temp_file(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "edublock-persist-test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in{p, std::ios::binary};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::filesystem::path& p, const std::string& s)
{
    std::ofstream out{p, std::ios::binary | std::ios::trunc};
    out << s;
}

std::unique_ptr<Chain> sample_chain()
{
    auto chain = make_chain(small_genesis(4));
    chain->submit(deploy_tx(alice, 0));
    chain->produce_block();
    const auto contract = vm::derive_contract_address(alice, 0);
    chain->submit(
        call_tx(bob, 0, contract, "commit_report", report_v1::commit_report_args("team-1", 1, three_metrics())));
    chain->submit(call_tx(bob, 1, contract, "commit_report", report_v1::commit_report_args("team-1", 1, three_metrics())));
    chain->produce_block();
    return chain;
}
}  // namespace

TEST_CASE("records round trip")
{
    const auto chain = sample_chain();
    const auto ledger = chain->ledger();
    const auto line = encode_block_record(ledger.blocks[0], &ledger.genesis);
    const auto decoded = decode_block_record(line);
    CHECK(decoded.block == ledger.blocks[0]);
    REQUIRE(decoded.genesis);
    CHECK(*decoded.genesis == ledger.genesis);
    CHECK(line.find("\"0x") != std::string::npos);

    const auto second = decode_block_record(encode_block_record(ledger.blocks[2]));
    CHECK(second.block == ledger.blocks[2]);
    CHECK_FALSE(second.genesis);
}

TEST_CASE("persist and load preserve the head")
{
    const auto chain = sample_chain();
    const auto path = temp_file("roundtrip.jsonl");
    persist(chain->ledger(), path);
    const auto ledger = load(path);
    CHECK(ledger.blocks.size() == 3);
    Chain loaded{ledger, vm::HandlerRegistry::with_builtins(), std::make_shared<VirtualClock>()};
    CHECK(loaded.head_hash() == chain->head_hash());
    CHECK(loaded.receipts_at(2) == chain->receipts_at(2));
    CHECK_FALSE(loaded.receipts_at(2)[1].success);  // write-once violation replays as a failure
}

TEST_CASE("empty file is an empty ledger; truncation is corruption")
{
    const auto empty = temp_file("empty.jsonl");
    spit(empty, "");
    CHECK(load(empty).empty());

    const auto chain = sample_chain();
    const auto path = temp_file("truncated.jsonl");
    persist(chain->ledger(), path);
    auto text = slurp(path);
    text.pop_back();
    spit(path, text);
    try
    {
        load(path);
        FAIL("truncated file loaded");
    }
    catch (const Error& e)
    {
        CHECK(e.code() == Errc::CorruptRecord);
    }
}

TEST_CASE("non-canonical records are rejected")
{
    const auto chain = sample_chain();
    auto line = encode_block_record(chain->ledger().blocks[1]);
    const auto field = line.find("\"block_hash\":\"0x");
    REQUIRE(field != std::string::npos);
    const auto pos = line.find_first_of("abcdef", field + 15);
    REQUIRE(pos != std::string::npos);
    line[pos] = static_cast<char>(std::toupper(static_cast<unsigned char>(line[pos])));
    CHECK_THROWS_AS(decode_block_record(line), Error);
    CHECK_THROWS_AS(decode_block_record(" " + encode_block_record(chain->ledger().blocks[1])), Error);
}

TEST_CASE("appender writes only new blocks")
{
    auto chain = make_chain(small_genesis(4));
    const auto path = temp_file("append.jsonl");
    ChainFileAppender appender{path};
    appender.reset(chain->ledger());
    chain->submit(deploy_tx(alice, 0));
    chain->produce_block();
    appender.sync(*chain);
    appender.sync(*chain);
    const auto ledger = load(path);
    CHECK(ledger.blocks.size() == 2);
    CHECK(ledger.blocks.back().block_hash == chain->head_hash());
}

TEST_CASE("single-byte mutations never load silently")
{
    const auto chain = sample_chain();
    const auto path = temp_file("fuzz.jsonl");
    persist(chain->ledger(), path);
    const auto original = slurp(path);

    std::mt19937_64 rng{2026};
    int detected = 0;
    constexpr int kTrials = 100;
    for (int i = 0; i < kTrials; ++i)
    {
        auto text = original;
        const auto at = rng() % text.size();
        char c = 0;
        do
            c = static_cast<char>(rng() % 256);
        while (c == text[at]);
        text[at] = c;
        try
        {
            const auto ledger = parse_ledger(text);
            if (verify_chain(ledger, chain->registry()))
                ++detected;
            else
                CHECK_MESSAGE(false, "mutation at ", at, " accepted");
        }
        catch (const Error&)
        {
            ++detected;
        }
    }
    CHECK(detected == kTrials);
}
