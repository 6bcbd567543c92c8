// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Headless acceptance gate. One PASS/FAIL line per criterion; exit status is
// non-zero if any criterion fails.
#include "in_contract_model.hpp"

#include <edublock/chain/persist.hpp>
#include <edublock/consensus/consensus.hpp>
#include <edublock/error.hpp>
#include <edublock/metrics/metrics.hpp>
#include <edublock/scaling/shards.hpp>
#include <edublock/sim/simulation.hpp>

#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fmt/core.h>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#ifndef EDUBLOCK_CLI
#error "EDUBLOCK_CLI must name the command-line binary"
#endif

using namespace edublock;
namespace fs = std::filesystem;

namespace
{
struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in{p, std::ios::binary};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in{text};
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in{line};
    while (std::getline(in, cell, sep))
        out.push_back(cell);
    return out;
}

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "edublock-acceptance" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

struct CliRun
{
    int status = -1;
    double seconds = 0;
    fs::path dir;
};

CliRun run_simulate(const std::string& name)
{
    CliRun run;
    run.dir = scratch(name);
    const auto cmd = fmt::format("\"{}\" --log-level warn simulate --rounds 16 --teams 3 --seed 42 --difficulty 12 "
                                 "--export-dir \"{}\" > \"{}\" 2>&1",
        EDUBLOCK_CLI, run.dir.string(), (run.dir / "stdout.txt").string());
    const auto start = std::chrono::steady_clock::now();
    run.status = std::system(cmd.c_str());
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
}

std::shared_ptr<Chain> sim_chain(const sim::SimulationConfig& c, unsigned bits)
{
    return std::make_shared<Chain>(sim::simulation_genesis(c, ConsensusMode::pow, bits),
        vm::HandlerRegistry::with_builtins(), std::make_shared<VirtualClock>());
}

Hash256 random_hash(std::mt19937_64& rng)
{
    Hash256 h;
    for (auto& b : h.bytes)
        b = static_cast<std::uint8_t>(rng());
    return h;
}

Outcome end_to_end()
{
    const auto run = run_simulate("e2e");
    if (run.status != 0)
        return {false, fmt::format("simulate exited with status {}", run.status)};

    const auto ledger = load(run.dir / "chain.jsonl");
    const auto reports = lines_of(slurp(run.dir / "reports.csv"));
    const auto finality = lines_of(slurp(run.dir / "finality.csv"));
    const std::size_t report_rows = reports.empty() ? 0 : reports.size() - 1;
    const std::size_t samples = finality.empty() ? 0 : finality.size() - 1;

    // every report row must be readable from the contract on the persisted chain
    Chain replay{ledger, vm::HandlerRegistry::with_builtins(), std::make_shared<VirtualClock>()};
    const auto contract = vm::derive_contract_address(sim::operator_address(), 0);
    std::size_t onchain = 0;
    std::set<std::uint64_t> rounds;
    for (std::size_t i = 1; i < reports.size(); ++i)
    {
        const auto cells = split(reports[i], ',');
        const auto round = std::stoull(cells.at(1));
        replay.view_call(contract, "get_report", report_v1::get_report_args(cells.at(0), round));
        ++onchain;
        rounds.insert(round);
    }

    const bool pass = rounds.size() == 15 && report_rows == 45 && onchain == 45 && samples == 15 && run.seconds < 60;
    return {pass, fmt::format("committed_rounds={} reports={} onchain={} finality_samples={} runtime={:.2f}s",
                      rounds.size(), report_rows, onchain, samples, run.seconds)};
}

Outcome cost_ratio()
{
    sim::SimulationConfig c;
    c.total_rounds = 16;
    c.seed = 42;
    auto chain = sim_chain(c, 0);
    sim::Simulation session{c, chain};
    session.init();
    for (std::uint64_t round = 1; round <= c.last_round(); ++round)
    {
        for (const auto& t : c.team_names())
            session.submit_decision(sim::scripted_agent_decide(c, t, round, c.seed));
        session.close_round();
    }
    const auto profiles = metrics::default_profiles();
    const auto csv = lines_of(metrics::costs_csv(metrics::cost_report(*chain, profiles)));

    // round -> profile -> (normalized gas, fee), from the exact columns
    std::map<std::uint64_t, std::map<std::string, std::pair<Ratio, Ratio>>> table;
    const auto header = split(csv.at(0), ',');
    const auto col = [&](std::string_view name) {
        return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
    };
    for (std::size_t i = 1; i < csv.size(); ++i)
    {
        const auto cells = split(csv[i], ',');
        table[std::stoull(cells.at(col("round")))][cells.at(col("profile"))] = {
            Ratio::parse(cells.at(col("avg_normalized_gas_exact"))), Ratio::parse(cells.at(col("avg_fee_wei_exact")))};
    }

    std::size_t bad = 0;
    for (const auto& [round, row] : table)
        for (const auto* other : {"polkadot", "cardano"})
        {
            const auto& eth = row.at("ethereum");
            const auto& alt = row.at(other);
            if (eth.first != alt.first * Ratio{3} || eth.second != alt.second * Ratio{3})
                ++bad;
        }
    const auto anchor = metrics::tx_cost(metrics::kStandardRoundRecordGas, profiles.at(0)).normalized_gas;
    const bool pass = table.size() == 15 && bad == 0 && anchor == Ratio{7, 10};
    return {pass, fmt::format("rounds={} ratio_violations={} standard_record_normalized={}", table.size(), bad,
                      anchor.decimal(1))};
}

Outcome immutability()
{
    sim::SimulationConfig c;
    auto chain = sim_chain(c, 0);
    sim::Simulation session{c, chain};
    const auto contract = session.init().report_contract;
    for (const auto& t : c.team_names())
        session.submit_decision(sim::scripted_agent_decide(c, t, 1, 5));
    session.close_round();
    const auto before = chain->state().find_contract(contract)->storage;

    std::mt19937_64 rng{77};
    const auto teams = c.team_names();
    const auto op = sim::operator_address();
    int refused = 0;
    constexpr int kAttempts = 100;
    for (int i = 0; i < kAttempts; ++i)
    {
        report_v1::Metrics m;
        const auto n = 1 + rng() % 4;
        for (std::size_t k = 0; k < n; ++k)
            m.push_back({"metric-" + std::to_string(rng() % 8), Fixed::from_raw(static_cast<std::int64_t>(rng() % 1'000'000'000))});
        std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
        m.erase(std::unique(m.begin(), m.end(), [](const auto& a, const auto& b) { return a.name == b.name; }),
            m.end());
        // alternate between report slots and the round digest
        Bytes args = i % 5 == 4 ? report_v1::commit_digest_args(1, random_hash(rng))
                                : report_v1::commit_report_args(teams[rng() % teams.size()], 1, m);
        const std::string method = i % 5 == 4 ? "commit_digest" : "commit_report";
        chain->submit(Transaction::make(op, chain->next_nonce(op), ContractCall{contract, method, std::move(args)},
            100'000, 1));
        const auto produced = chain->produce_block();
        if (produced.receipts.size() == 1 && !produced.receipts[0].success &&
            produced.receipts[0].failure_reason == to_string(Errc::ImmutableOverwrite))
            ++refused;
    }
    const bool unchanged = chain->state().find_contract(contract)->storage == before;
    return {refused == kAttempts && unchanged,
        fmt::format("refused={}/{} storage_unchanged={}", refused, kAttempts, unchanged)};
}

Outcome rollup_equivalence()
{
    std::mt19937_64 rng{4141};
    constexpr int kSets = 50;
    std::size_t compared = 0;
    std::size_t mismatched = 0;
    for (int set = 0; set < kSets; ++set)
    {
        sim::SimulationConfig c;
        c.team_count = 3;
        c.total_rounds = 6;
        c.seed = rng();

        auto rollup_chain = sim_chain(c, 0);
        sim::Simulation session{c, rollup_chain};
        const auto rollup_contract = session.init().report_contract;

        auto registry = vm::HandlerRegistry::with_builtins();
        registry->add(std::string{test::InContractModel::kHandlerId}, std::make_shared<test::InContractModel>(c));
        Chain ref{sim::simulation_genesis(c, ConsensusMode::pow, 0), registry, std::make_shared<VirtualClock>()};
        const auto op = sim::operator_address();
        ref.submit(Transaction::make(op, 0,
            ContractCreate{std::string{test::InContractModel::kHandlerId},
                report_v1::encode_metrics(sim::to_contract_metrics(c.benchmarks))},
            100'000, 1));
        const auto ref_contract = *ref.produce_block().receipts.at(0).created_address;

        const auto agent_seed = rng();
        for (std::uint64_t round = 1; round <= c.last_round(); ++round)
        {
            for (const auto& t : c.team_names())
            {
                const auto d = sim::scripted_agent_decide(c, t, round, agent_seed);
                session.submit_decision(d);
                const auto who = sim::team_address(t);
                ref.submit(Transaction::make(who, ref.next_nonce(who),
                    ContractCall{ref_contract, "decide", sim::encode_decision(d)}, 100'000, 1));
                ref.produce_block();
            }
            session.close_round();
        }
        for (std::uint64_t round = 1; round <= c.last_round(); ++round)
            for (const auto& t : c.team_names())
            {
                const auto args = report_v1::get_report_args(t, round);
                ++compared;
                try
                {
                    if (rollup_chain->view_call(rollup_contract, "get_report", args) !=
                        ref.view_call(ref_contract, "get_report", args))
                        ++mismatched;
                }
                catch (const Error&)
                {
                    ++mismatched;
                }
            }
    }
    return {compared == kSets * 15 && mismatched == 0,
        fmt::format("sets={} reports_compared={} mismatched={}", kSets, compared, mismatched)};
}

Outcome pow_soundness()
{
    sim::SimulationConfig c;
    Chain chain{sim::simulation_genesis(c, ConsensusMode::pow, 12), vm::HandlerRegistry::with_builtins(),
        std::make_shared<VirtualClock>()};
    constexpr int kBlocks = 1'000;
    const auto op = sim::operator_address();
    chain.submit(Transaction::make(op, 0,
        ContractCreate{std::string{report_v1::kHandlerId}, report_v1::encode_metrics(sim::to_contract_metrics(c.benchmarks))},
        100'000, 1));
    const auto contract = *chain.produce_block().receipts.at(0).created_address;
    // empty blocks are refused, so each block carries one read call
    for (int i = 1; i < kBlocks; ++i)
    {
        chain.submit(Transaction::make(op, chain.next_nonce(op), ContractCall{contract, "get_benchmarks", {}}, 100'000, 1));
        chain.produce_block();
    }
    std::size_t failures = 0;
    for (const auto& b : chain.blocks_from(1))
        if (!consensus::verify_pow(b))
            ++failures;
    const bool chain_ok = !verify_chain(chain.ledger(), chain.registry()).has_value();

    std::mt19937_64 rng{12'14};
    constexpr int kTrials = 50;
    double sum12 = 0;
    double sum14 = 0;
    for (int i = 0; i < kTrials; ++i)
    {
        HeaderFields h;
        h.height = static_cast<std::uint64_t>(i) + 1;
        h.parent_hash = random_hash(rng);
        h.tx_root = random_hash(rng);
        h.state_digest = random_hash(rng);
        h.timestamp = static_cast<std::int64_t>(rng() % 1'000'000);
        sum12 += static_cast<double>(consensus::mine_pow(h, 12).pow_nonce);
        sum14 += static_cast<double>(consensus::mine_pow(h, 14).pow_nonce);
    }
    const double mean12 = sum12 / kTrials;
    const double mean14 = sum14 / kTrials;
    return {failures == 0 && chain_ok && chain.height() == kBlocks && mean14 > mean12,
        fmt::format("blocks={} verify_failures={} chain_valid={} mean_nonce_d12={:.1f} mean_nonce_d14={:.1f}",
            chain.height(), failures, chain_ok, mean12, mean14)};
}

Outcome pos_proportionality()
{
    const std::array<std::uint64_t, 3> weights{1, 3, 6};
    consensus::StakeTable stakes;
    std::vector<Address> order;
    for (std::size_t i = 0; i < weights.size(); ++i)
    {
        const auto a = named_address("validator-" + std::to_string(i + 1));
        stakes[a] = weights[i] * 1'000'000'000'000'000'000ULL;
        order.push_back(a);
    }
    std::mt19937_64 rng{6};
    constexpr int kDraws = 10'000;
    std::map<Address, int> hits;
    for (int i = 0; i < kDraws; ++i)
        ++hits[consensus::select_validator(stakes, random_hash(rng))];

    bool pass = true;
    std::string detail = fmt::format("draws={}", kDraws);
    for (std::size_t i = 0; i < order.size(); ++i)
    {
        const double p = static_cast<double>(weights[i]) / 10.0;
        const double sd = std::sqrt(kDraws * p * (1 - p));
        const double z = (hits[order[i]] - kDraws * p) / sd;
        pass = pass && std::abs(z) <= 4.0;
        detail += fmt::format(" stake{}={:.4f}(z={:+.2f})", weights[i], hits[order[i]] / double(kDraws), z);
    }
    return {pass, detail};
}

Outcome integrity()
{
    sim::SimulationConfig c;
    c.total_rounds = 4;
    auto chain = sim_chain(c, 8);
    sim::Simulation session{c, chain};
    session.init();
    for (std::uint64_t round = 1; round <= c.last_round(); ++round)
    {
        for (const auto& t : c.team_names())
            session.submit_decision(sim::scripted_agent_decide(c, t, round, 9));
        session.close_round();
    }
    const auto dir = scratch("integrity");
    const auto path = dir / "chain.jsonl";
    persist(chain->ledger(), path);
    const auto loaded = load(path);
    const bool head_ok = !loaded.blocks.empty() && loaded.blocks.back().block_hash == chain->head_hash() &&
                         !verify_chain(loaded, chain->registry()).has_value();

    const auto original = slurp(path);
    std::mt19937_64 rng{2'0'0};
    constexpr int kMutations = 200;
    int detected = 0;
    for (int i = 0; i < kMutations; ++i)
    {
        auto text = original;
        const auto at = rng() % text.size();
        char ch = 0;
        do
            ch = static_cast<char>(rng() % 256);
        while (ch == text[at]);
        text[at] = ch;
        try
        {
            if (verify_chain(parse_ledger(text), chain->registry()))
                ++detected;
        }
        catch (const Error&)
        {
            ++detected;
        }
    }
    return {head_ok && detected == kMutations,
        fmt::format("head_preserved={} mutations_detected={}/{}", head_ok, detected, kMutations)};
}

Outcome determinism()
{
    const auto a = run_simulate("det-a");
    const auto b = run_simulate("det-b");
    if (a.status != 0 || b.status != 0)
        return {false, fmt::format("simulate exit status {} / {}", a.status, b.status)};
    std::string differing;
    for (const auto* name : {"chain.jsonl", "finality.csv", "costs.csv", "reports.csv"})
    {
        const auto x = slurp(a.dir / name);
        if (x.empty() || x != slurp(b.dir / name))
            differing += fmt::format(" {}", name);
    }
    return {differing.empty(), differing.empty() ? "chain.jsonl finality.csv costs.csv reports.csv identical"
                                                 : "differing:" + differing};
}

Outcome sharding()
{
    constexpr std::size_t kTxs = 10'000;
    constexpr std::uint32_t kShards = 4;
    const auto w = scaling::make_shard_workload(kTxs, kShards);
    const auto one = scaling::sharded_throughput_bench(w, 1);
    const auto four = scaling::sharded_throughput_bench(w, kShards);

    const double fair = static_cast<double>(kTxs) / kShards;
    double worst = 0;
    std::size_t routed = 0;
    for (const auto n : four.occupancy)
    {
        worst = std::max(worst, std::abs(static_cast<double>(n) - fair) / fair);
        routed += n;
    }
    const bool pass = one.merged_digest == four.merged_digest && one.rejected.empty() && four.rejected.empty() &&
                      routed == kTxs && four.occupancy.size() == kShards && worst <= 0.05;
    return {pass, fmt::format("txs={} digests_equal={} rejected={} max_occupancy_skew={:.2f}% tps_1={:.0f} tps_4={:.0f}",
                      routed, one.merged_digest == four.merged_digest, four.rejected.size(), worst * 100, one.tps,
                      four.tps)};
}
}  // namespace

int main()
{
    spdlog::set_level(spdlog::level::err);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"end-to-end run", end_to_end},
        {"cost ratio", cost_ratio},
        {"immutability", immutability},
        {"rollup equivalence", rollup_equivalence},
        {"proof-of-work soundness", pow_soundness},
        {"stake proportionality", pos_proportionality},
        {"chain integrity and persistence", integrity},
        {"determinism", determinism},
        {"sharding", sharding},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try
        {
            o = criteria[i].second();
        }
        catch (const std::exception& e)
        {
            o = {false, fmt::format("exception: {}", e.what())};
        }
        const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        fmt::print("criterion {}: {} {} ({}) [{:.2f}s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
            o.detail, secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    fmt::print("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
