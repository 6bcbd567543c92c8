// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/error.hpp>
#include <edublock/sim/simulation.hpp>

#include "doctest.h"

using namespace edublock;
using namespace edublock::sim;

namespace
{
struct Session
{
    SimulationConfig config;
    std::shared_ptr<Chain> chain;
    std::unique_ptr<Simulation> sim;

    explicit Session(std::uint32_t teams = 3, std::uint32_t rounds = 16, ConsensusMode mode = ConsensusMode::pow)
    {
        config.team_count = teams;
        config.total_rounds = rounds;
        config.seed = 42;
        chain = std::make_shared<Chain>(simulation_genesis(config, mode, 4), vm::HandlerRegistry::with_builtins(),
            std::make_shared<VirtualClock>());
        sim = std::make_unique<Simulation>(config, chain);
    }

    void play_round()
    {
        const auto round = sim->status().current_round;
        for (const auto& t : config.team_names())
            sim->submit_decision(scripted_agent_decide(config, t, round, config.seed));
        sim->close_round();
    }
};

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

TEST_CASE("init deploys the contract with benchmarks")
{
    Session s;
    CHECK(code_of([&] { s.sim->close_round(); }) == Errc::NotInitialized);
    const auto init = s.sim->init();
    CHECK(init.receipt.gas_used == 47'000);
    const auto state = s.chain->state();
    const auto* c = state.find_contract(init.report_contract);
    REQUIRE(c);
    CHECK(c->storage.size() == 3);
    for (const auto& t : s.config.team_names())
        CHECK(state.accounts.contains(team_address(t)));
    CHECK(s.sim->onchain_benchmarks() == s.config.benchmarks);
    CHECK(s.sim->status().current_round == 1);
    CHECK(code_of([&] { s.sim->init(); }) == Errc::AlreadyInitialized);
}

TEST_CASE("init with admin overrides")
{
    Session s;
    MetricValues b{Fixed::from_int(10), Fixed::from_int(20), Fixed::from_int(30)};
    s.sim->init(b, 7);
    CHECK(s.sim->onchain_benchmarks() == b);
    CHECK(s.sim->config().seed == 7);
}

TEST_CASE("decision rules")
{
    Session s;
    s.sim->init();
    auto d = scripted_agent_decide(s.config, "team-1", 1, 1);
    CHECK(code_of([&] {
        auto wrong = d;
        wrong.round = 2;
        s.sim->submit_decision(wrong);
    }) == Errc::WrongRound);
    CHECK(code_of([&] {
        auto wrong = d;
        wrong.team = "team-9";
        s.sim->submit_decision(wrong);
    }) == Errc::UnknownTeam);
    CHECK(code_of([&] {
        auto wrong = d;
        wrong.budgets[0] -= Fixed::from_raw(1);
        s.sim->submit_decision(wrong);
    }) == Errc::BudgetMismatch);
    CHECK(code_of([&] {
        auto wrong = d;
        wrong.chosen_device = "brick";
        s.sim->submit_decision(wrong);
    }) == Errc::UnknownDevice);
    s.sim->submit_decision(d);
    CHECK(code_of([&] { s.sim->submit_decision(d); }) == Errc::DuplicateDecision);

    try
    {
        s.sim->close_round();
        FAIL("closed with missing teams");
    }
    catch (const Error& e)
    {
        CHECK(e.code() == Errc::MissingDecisions);
        CHECK(e.detail() == "team-2,team-3");
    }
    const auto st = s.sim->status();
    CHECK(st.submitted == std::vector<std::string>{"team-1"});
    CHECK(st.missing == std::vector<std::string>{"team-2", "team-3"});
}

TEST_CASE("closing a round commits reports through the rollup")
{
    Session s;
    s.sim->init();
    const auto height = s.chain->height();
    s.play_round();
    CHECK(s.chain->height() == height + 1);
    const auto summary = s.sim->summaries().back();
    CHECK(summary.round == 1);
    CHECK(summary.reports.size() == 3);
    CHECK(summary.receipts.size() == 4);
    CHECK(s.sim->status().current_round == 2);
    for (const auto& r : summary.reports)
    {
        CHECK(s.sim->report(r.team, 1) == r);
        CHECK(report_v1::decode_metrics(s.sim->report_bytes(r.team, 1)) == to_contract_metrics(r.metrics));
    }
    const auto stored = scaling::stored_batch_digest(*s.chain, *s.sim->report_contract(), 1);
    REQUIRE(stored);
    CHECK(*stored == summary.batch_digest);
    CHECK(summary.finality.finalized_at >= summary.finality.submitted_at);
    CHECK(summary.finality.finality_ms > 0);
}

TEST_CASE("full protocol: fifteen rounds then complete")
{
    Session s;
    s.sim->init();
    for (int i = 0; i < 15; ++i)
        s.play_round();
    const auto st = s.sim->status();
    CHECK(st.complete);
    CHECK(st.committed_rounds == 15);
    CHECK(s.sim->finality().size() == 15);
    CHECK(code_of([&] { s.sim->close_round(); }) == Errc::SimulationComplete);
    CHECK(code_of([&] {
        s.sim->submit_decision(scripted_agent_decide(s.config, "team-1", 16, 1));
    }) == Errc::SimulationComplete);

    // monotone per team, and every report readable on-chain
    for (const auto& t : s.config.team_names())
    {
        auto prev = s.sim->report(t, 1);
        for (std::uint64_t r = 2; r <= 15; ++r)
        {
            const auto cur = s.sim->report(t, r);
            for (const auto m : kMetrics)
                CHECK(cur.metrics[m] >= prev.metrics[m]);
            prev = cur;
        }
    }
    CHECK_FALSE(verify_chain(s.chain->ledger(), s.chain->registry()).has_value());
    const auto csv = s.sim->reports_csv();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 46);
}

TEST_CASE("proof-of-stake sessions work the same")
{
    Session s{2, 4, ConsensusMode::pos};
    s.sim->init();
    for (int i = 0; i < 3; ++i)
        s.play_round();
    CHECK(s.sim->status().complete);
    CHECK_FALSE(verify_chain(s.chain->ledger(), s.chain->registry()).has_value());
}
