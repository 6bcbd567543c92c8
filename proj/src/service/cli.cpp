// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/chain/persist.hpp>
#include <edublock/error.hpp>
#include <edublock/scaling/shards.hpp>
#include <edublock/service/cli.hpp>
#include <edublock/service/service.hpp>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <csignal>
#include <fstream>
#include <thread>

namespace edublock::cli
{
namespace
{
void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out{path, std::ios::binary | std::ios::trunc};
    if (!out || !(out << content) || !out.flush())
        throw Error{Errc::IoFailure, "cannot write " + path.string()};
}

service::AppConfig load_or_default(const std::optional<std::filesystem::path>& path)
{
    return path ? service::load_app_config(*path) : service::default_app_config();
}
}  // namespace

SimulateSummary simulate(const SimulateOptions& o)
{
    if (o.agents != "scripted")
        throw Error{Errc::InvalidConfig, "only scripted agents run headless"};
    auto config = load_or_default(o.config);
    config.simulation.total_rounds = o.rounds;
    config.simulation.team_count = o.teams;
    config.simulation.seed = o.seed;
    config.consensus = parse_consensus_mode(o.consensus);
    config.difficulty_bits = o.difficulty;
    config.team_tokens.clear();
    config.validate();

    auto clock = std::make_shared<VirtualClock>(0, 1, o.hash_rate);
    auto chain = service::make_chain(config, clock);
    sim::Simulation session{
        config.simulation, chain, scaling::TxPolicy{100'000, config.profile().gas_price_wei()}};
    session.init();

    const auto teams = config.simulation.team_names();
    for (std::uint64_t round = 1; round <= config.simulation.last_round(); ++round)
    {
        for (const auto& team : teams)
            session.submit_decision(sim::scripted_agent_decide(config.simulation, team, round, o.seed));
        session.close_round();
    }

    std::filesystem::create_directories(o.export_dir);
    persist(chain->ledger(), o.export_dir / "chain.jsonl");
    const auto samples = session.finality();
    write_file(o.export_dir / "finality.csv", metrics::finality_csv(samples));
    write_file(o.export_dir / "costs.csv", metrics::costs_csv(metrics::cost_report(*chain, config.profiles)));
    write_file(o.export_dir / "reports.csv", session.reports_csv());

    SimulateSummary s;
    s.committed_rounds = session.status().committed_rounds;
    for (const auto& summary : session.summaries())
        for (const auto& r : summary.reports)
        {
            (void)session.report_bytes(r.team, r.round);  // must be readable on-chain
            ++s.reports;
        }
    s.finality_samples = samples.size();
    s.chain_height = chain->height();
    return s;
}

int run_simulate(const SimulateOptions& o)
{
    try
    {
        const auto s = simulate(o);
        fmt::print("committed_rounds={} reports={} finality_samples={} chain_height={} export_dir={}\n",
            s.committed_rounds, s.reports, s.finality_samples, s.chain_height, o.export_dir.string());
        return 0;
    }
    catch (const std::exception& e)
    {
        spdlog::error("simulate failed: {}", e.what());
        return 1;
    }
}

int run_serve(const ServeOptions& o)
{
    try
    {
        auto config = load_or_default(o.config);
        if (o.consensus)
            config.consensus = parse_consensus_mode(*o.consensus);
        if (o.difficulty)
            config.difficulty_bits = *o.difficulty;
        if (o.profile)
            config.simulation.network_profile = *o.profile;
        config.validate();

        sigset_t signals;
        sigemptyset(&signals);
        sigaddset(&signals, SIGINT);
        sigaddset(&signals, SIGTERM);
        pthread_sigmask(SIG_BLOCK, &signals, nullptr);

        auto chain = service::make_chain(config, std::make_shared<SystemClock>());
        service::Service svc{config, chain, o.chain_file};

        std::thread waiter{[&] {
            int sig = 0;
            sigwait(&signals, &sig);
            spdlog::info("signal {} received, shutting down", sig);
            svc.stop();
        }};

        const bool ok = svc.listen(o.host, o.port);
        if (!ok)
        {
            spdlog::error("cannot listen on {}:{}", o.host, o.port);
            pthread_kill(waiter.native_handle(), SIGTERM);
        }
        waiter.join();
        svc.sync_chain_file();
        spdlog::info("ledger persisted to {} (height {})", o.chain_file.string(), chain->height());
        return ok ? 0 : 1;
    }
    catch (const std::exception& e)
    {
        spdlog::error("serve failed: {}", e.what());
        return 1;
    }
}

int run_bench(const BenchOptions& o)
{
    try
    {
        std::filesystem::create_directories(o.export_dir);
        if (o.mode == "tps")
        {
            const auto report = metrics::tps_benchmark(o.txs, metrics::TpsConfig{o.difficulty, 100});
            write_file(o.export_dir / "tps.csv", metrics::tps_csv(std::span{&report, 1}));
            fmt::print("tps={:.1f} blocks={} elapsed_ms={:.1f} (reference: bitcoin {} tps, visa {} tps)\n", report.tps,
                report.blocks, report.elapsed_ms, metrics::TpsReport::kBitcoinTps, metrics::TpsReport::kVisaTps);
            return 0;
        }
        if (o.mode == "shards")
        {
            const auto workload = scaling::make_shard_workload(o.txs, o.shards);
            std::vector<scaling::ShardBenchResult> results;
            results.push_back(scaling::sharded_throughput_bench(workload, 1));
            if (o.shards != 1)
                results.push_back(scaling::sharded_throughput_bench(workload, o.shards));
            write_file(o.export_dir / "shards.csv", scaling::shards_csv(results));
            for (const auto& r : results)
                fmt::print("shards={} tps={:.1f} rejected={} digest={}\n", r.shard_count, r.tps, r.rejected.size(),
                    r.merged_digest.hex());
            const bool same = results.front().merged_digest == results.back().merged_digest;
            fmt::print("merged digest {} the sequential digest\n", same ? "matches" : "DIFFERS FROM");
            return same ? 0 : 1;
        }
        spdlog::error("unknown bench mode '{}'", o.mode);
        return 2;
    }
    catch (const std::exception& e)
    {
        spdlog::error("bench failed: {}", e.what());
        return 1;
    }
}

int run_verify(const std::filesystem::path& chain_file)
{
    try
    {
        const auto ledger = load(chain_file);
        if (const auto v = verify_chain(ledger, *vm::HandlerRegistry::with_builtins()))
        {
            fmt::print("INVALID at height {}: {} ({})\n", v->height, v->rule, v->detail);
            return 1;
        }
        fmt::print("OK {} blocks\n", ledger.blocks.size());
        return 0;
    }
    catch (const Error& e)
    {
        fmt::print("INVALID: {}\n", e.what());
        return 1;
    }
}
}  // namespace edublock::cli
