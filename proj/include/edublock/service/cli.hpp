// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/types.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace edublock::cli
{
struct ServeOptions
{
    std::string host = "0.0.0.0";
    int port = 8080;
    std::optional<std::filesystem::path> config;
    std::filesystem::path chain_file = "chain.jsonl";
    std::optional<std::string> consensus;
    std::optional<unsigned> difficulty;
    std::optional<std::string> profile;
};

struct SimulateOptions
{
    std::uint32_t rounds = 16;
    std::uint32_t teams = 3;
    std::uint64_t seed = 42;
    std::string agents = "scripted";
    std::filesystem::path export_dir = "out";
    std::optional<std::filesystem::path> config;
    std::string consensus = "pow";
    unsigned difficulty = 16;
    /// Hash rate of the virtual miner clock.
    std::uint64_t hash_rate = 32'768;
};

struct SimulateSummary
{
    std::uint64_t committed_rounds = 0;
    std::size_t reports = 0;
    std::size_t finality_samples = 0;
    std::uint64_t chain_height = 0;
};

struct BenchOptions
{
    std::string mode = "tps";
    std::size_t txs = 10'000;
    std::uint32_t shards = 4;
    unsigned difficulty = 0;
    std::filesystem::path export_dir = "out";
};

/// Each returns the process exit code.
int run_serve(const ServeOptions& options);
int run_simulate(const SimulateOptions& options);
int run_bench(const BenchOptions& options);
int run_verify(const std::filesystem::path& chain_file);

/// The simulate pipeline without printing; throws on failure.
SimulateSummary simulate(const SimulateOptions& options);
}  // namespace edublock::cli
