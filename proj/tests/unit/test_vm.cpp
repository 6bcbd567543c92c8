// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include "helpers.hpp"

#include <edublock/error.hpp>

#include "doctest.h"

#include <random>

using namespace edublock;
using namespace edublock::test;

namespace
{
struct Fixture
{
    State state = genesis_state(small_genesis());
    std::shared_ptr<vm::HandlerRegistry> reg = vm::HandlerRegistry::with_builtins();
    std::uint64_t alice_nonce = 0;
    std::uint64_t bob_nonce = 0;

    vm::ExecutionResult deploy(std::uint64_t gas_limit = 100'000)
    {
        auto r = vm::execute(state, deploy_tx(alice, alice_nonce, gas_limit), *reg);
        ++alice_nonce;
        state.accounts[alice].nonce = alice_nonce;
        return r;
    }

    vm::ExecutionResult call(const Address& contract, std::string method, Bytes args, std::uint64_t gas_limit = 100'000)
    {
        auto r = vm::execute(state, call_tx(bob, bob_nonce, contract, std::move(method), std::move(args), gas_limit), *reg);
        ++bob_nonce;
        return r;
    }
};
}  // namespace

TEST_CASE("deploy writes benchmarks and costs create plus writes")
{
    Fixture f;
    const auto r = f.deploy();
    REQUIRE(r.success);
    CHECK(r.gas_used == 47'000);
    CHECK(r.gas_used == vm::gas_for(r.trace, f.state.params.gas));
    const auto* c = f.state.find_contract(*r.created_address);
    REQUIRE(c);
    CHECK(c->storage.size() == 3);
    CHECK(c->storage.contains(report_v1::benchmark_key(0)));
    CHECK(vm::view_call(f.state, *r.created_address, "get_benchmarks", {}, *f.reg) ==
          report_v1::encode_metrics(three_metrics(1000)));
}

TEST_CASE("deploy failures")
{
    Fixture f;
    auto tx = deploy_tx(alice, 0, 1'000);
    auto r = vm::execute(f.state, tx, *f.reg);
    CHECK_FALSE(r.success);
    CHECK(r.failure == Errc::OutOfGas);
    CHECK(r.gas_used == 1'000);
    CHECK(f.state.contracts.empty());

    tx = Transaction::make(alice, 0, ContractCreate{"no_such_handler", {}}, 100'000, 1);
    r = vm::execute(f.state, tx, *f.reg);
    CHECK(r.failure == Errc::UnknownHandler);

    // occupy the address the next deploy would use
    const auto target = vm::derive_contract_address(alice, 0);
    f.state.accounts[target] = {target, 0, 0, 0};
    r = vm::execute(f.state, deploy_tx(alice, 0), *f.reg);
    CHECK(r.failure == Errc::AddressCollision);

    Fixture g;
    tx = Transaction::make(alice, 0, ContractCreate{"report_v1", Bytes{1, 2, 3}}, 100'000, 1);
    r = vm::execute(g.state, tx, *g.reg);
    CHECK(r.failure == Errc::BadArguments);
    CHECK(g.state.contracts.empty());
}

TEST_CASE("commit_report costs base plus one write per metric")
{
    Fixture f;
    const auto c = *f.deploy().created_address;
    const auto r = f.call(c, "commit_report", report_v1::commit_report_args("team-1", 1, three_metrics()));
    REQUIRE(r.success);
    CHECK(r.gas_used == 36'000);
    CHECK(r.gas_used == vm::gas_for(r.trace, f.state.params.gas));

    const auto got = vm::view_call(f.state, c, "get_report", report_v1::get_report_args("team-1", 1), *f.reg);
    CHECK(report_v1::decode_metrics(got) == three_metrics());
    CHECK_THROWS_AS(vm::view_call(f.state, c, "get_report", report_v1::get_report_args("team-1", 2), *f.reg), Error);

    const auto read = f.call(c, "get_report", report_v1::get_report_args("team-1", 1));
    CHECK(read.gas_used == 21'000 + 3 * 200);
    CHECK(read.output == got);
}

TEST_CASE("digests are write-once too")
{
    Fixture f;
    const auto c = *f.deploy().created_address;
    const auto d = sha256(std::string_view{"batch"});
    CHECK(f.call(c, "commit_digest", report_v1::commit_digest_args(4, d)).gas_used == 26'000);
    const auto again = f.call(c, "commit_digest", report_v1::commit_digest_args(4, sha256(std::string_view{"other"})));
    CHECK(again.failure == Errc::ImmutableOverwrite);
    CHECK(vm::view_call(f.state, c, "get_digest", report_v1::get_digest_args(4), *f.reg) ==
          Bytes{d.bytes.begin(), d.bytes.end()});
}

TEST_CASE("re-commits fail with ImmutableOverwrite and leave storage untouched")
{
    Fixture f;
    const auto c = *f.deploy().created_address;
    REQUIRE(f.call(c, "commit_report", report_v1::commit_report_args("team-1", 1, three_metrics())).success);
    const auto snapshot = f.state.find_contract(c)->storage;

    std::mt19937_64 rng{11};
    for (int i = 0; i < 100; ++i)
    {
        report_v1::Metrics m;
        const auto n = 1 + rng() % 5;
        for (std::size_t k = 0; k < n; ++k)
            m.push_back({"m" + std::to_string(k), Fixed::from_raw(static_cast<std::int64_t>(rng() % 1'000'000))});
        const auto r = f.call(c, "commit_report", report_v1::commit_report_args("team-1", 1, m));
        CHECK(r.failure == Errc::ImmutableOverwrite);
        CHECK(r.gas_used == 21'000);
    }
    CHECK(f.state.find_contract(c)->storage == snapshot);
}

TEST_CASE("bad arguments and unknown targets")
{
    Fixture f;
    const auto c = *f.deploy().created_address;
    CHECK(f.call(c, "commit_report", Bytes{0, 0}).failure == Errc::BadArguments);
    CHECK(f.call(c, "commit_report", report_v1::commit_report_args("team-1", 1, {})).failure == Errc::BadArguments);
    const report_v1::Metrics dup{{"likes", Fixed::from_int(1)}, {"likes", Fixed::from_int(2)}};
    CHECK(f.call(c, "commit_report", report_v1::commit_report_args("team-1", 1, dup)).failure == Errc::BadArguments);
    const report_v1::Metrics negative{{"likes", Fixed::from_int(-1)}};
    CHECK(f.call(c, "commit_report", report_v1::commit_report_args("team-1", 1, negative)).failure ==
          Errc::BadArguments);
    CHECK(f.call(c, "frobnicate", {}).failure == Errc::UnknownMethod);
    CHECK(f.call(named_address("nowhere"), "get_benchmarks", {}).failure == Errc::UnknownContract);
    // nothing from the failed commits reached storage
    CHECK(f.state.find_contract(c)->storage.size() == 3);
}

TEST_CASE("out of gas mid-call rolls back and charges the limit")
{
    Fixture f;
    const auto c = *f.deploy().created_address;
    const auto r = f.call(c, "commit_report", report_v1::commit_report_args("team-1", 1, three_metrics()), 30'000);
    CHECK(r.failure == Errc::OutOfGas);
    CHECK(r.gas_used == 30'000);
    CHECK(f.state.find_contract(c)->storage.size() == 3);
    CHECK(f.call(c, "commit_report", report_v1::commit_report_args("team-1", 1, three_metrics())).success);
}

TEST_CASE("view calls cannot write")
{
    Fixture f;
    const auto c = *f.deploy().created_address;
    try
    {
        vm::view_call(f.state, c, "commit_report", report_v1::commit_report_args("team-1", 1, three_metrics()), *f.reg);
        FAIL("view call wrote");
    }
    catch (const Error& e)
    {
        CHECK(e.code() == Errc::WriteInViewCall);
    }
}

TEST_CASE("round_of_call")
{
    CHECK(report_v1::round_of_call("commit_report", report_v1::commit_report_args("t", 9, three_metrics())) == 9);
    CHECK(report_v1::round_of_call("commit_digest", report_v1::commit_digest_args(4, Hash256{})) == 4);
    CHECK_THROWS_AS(report_v1::round_of_call("get_benchmarks", {}), Error);
}
