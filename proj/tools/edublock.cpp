// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/service/cli.hpp>

#include "CLI11.hpp"

#include <spdlog/spdlog.h>

int main(int argc, char** argv)
{
    namespace cli = edublock::cli;

    CLI::App app{"edublock: classroom marketing simulation on a minimal blockchain"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string log_level = "info";
    app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off");

    cli::ServeOptions serve;
    std::string serve_chain_file = serve.chain_file.string();
    std::string serve_config;
    std::string serve_consensus;
    unsigned serve_difficulty = 0;
    std::string serve_profile;
    auto* serve_cmd = app.add_subcommand("serve", "run the HTTP/JSON service");
    serve_cmd->add_option("--host", serve.host, "bind address");
    serve_cmd->add_option("--port", serve.port, "TCP port")->check(CLI::Range(1, 65535));
    serve_cmd->add_option("--config", serve_config, "JSON config file")->check(CLI::ExistingFile);
    serve_cmd->add_option("--chain-file", serve_chain_file, "ledger file, rewritten on start");
    serve_cmd->add_option("--consensus", serve_consensus, "pow or pos")->check(CLI::IsMember({"pow", "pos"}));
    serve_cmd->add_option("--difficulty", serve_difficulty, "leading zero bits")->check(CLI::Range(0u, 32u));
    serve_cmd->add_option("--profile", serve_profile, "network profile")
        ->check(CLI::IsMember({"ethereum", "polkadot", "cardano"}));

    cli::SimulateOptions sim;
    std::string sim_export = sim.export_dir.string();
    std::string sim_config;
    auto* sim_cmd = app.add_subcommand("simulate", "headless scripted run");
    sim_cmd->add_option("--rounds", sim.rounds, "iterations including setup")->check(CLI::Range(2u, 1000u));
    sim_cmd->add_option("--teams", sim.teams, "number of teams")->check(CLI::Range(1u, 1000u));
    sim_cmd->add_option("--seed", sim.seed, "simulation seed");
    sim_cmd->add_option("--agents", sim.agents, "agent kind")->check(CLI::IsMember({"scripted"}));
    sim_cmd->add_option("--export-dir", sim_export, "output directory");
    sim_cmd->add_option("--config", sim_config, "JSON config file")->check(CLI::ExistingFile);
    sim_cmd->add_option("--consensus", sim.consensus, "pow or pos")->check(CLI::IsMember({"pow", "pos"}));
    sim_cmd->add_option("--difficulty", sim.difficulty, "leading zero bits")->check(CLI::Range(0u, 32u));
    sim_cmd->add_option("--hash-rate", sim.hash_rate, "virtual miner hashes per second")
        ->check(CLI::PositiveNumber);

    cli::BenchOptions bench;
    std::string bench_export = bench.export_dir.string();
    auto* bench_cmd = app.add_subcommand("bench", "throughput benchmarks");
    bench_cmd->add_option("--mode", bench.mode, "tps or shards")->check(CLI::IsMember({"tps", "shards"}));
    bench_cmd->add_option("--txs", bench.txs, "transaction count")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--shards", bench.shards, "shard count")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--difficulty", bench.difficulty, "leading zero bits")->check(CLI::Range(0u, 32u));
    bench_cmd->add_option("--export-dir", bench_export, "output directory");

    std::string verify_file;
    auto* verify_cmd = app.add_subcommand("verify", "check a ledger file");
    verify_cmd->add_option("--chain-file", verify_file, "ledger file")->required();

    CLI11_PARSE(app, argc, argv);
    spdlog::set_level(spdlog::level::from_str(log_level));

    if (*serve_cmd)
    {
        serve.chain_file = serve_chain_file;
        if (!serve_config.empty())
            serve.config = serve_config;
        if (!serve_consensus.empty())
            serve.consensus = serve_consensus;
        if (serve_cmd->count("--difficulty") > 0)
            serve.difficulty = serve_difficulty;
        if (!serve_profile.empty())
            serve.profile = serve_profile;
        return cli::run_serve(serve);
    }
    if (*sim_cmd)
    {
        sim.export_dir = sim_export;
        if (!sim_config.empty())
            sim.config = sim_config;
        return cli::run_simulate(sim);
    }
    if (*bench_cmd)
    {
        bench.export_dir = bench_export;
        return cli::run_bench(bench);
    }
    return cli::run_verify(verify_file);
}
