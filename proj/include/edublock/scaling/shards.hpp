// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/chain.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace edublock::scaling
{
/// Address read as a 160-bit big-endian integer, modulo shard_count.
/// Throws ZeroShards.
std::uint32_t shard_of(const Address& address, std::uint32_t shard_count);

/// Independent transactions with disjoint senders, plus the genesis they run
/// against. Each shard has its own report contract, so every generated
/// transaction stays within its sender's shard.
struct ShardWorkload
{
    GenesisSpec genesis;
    std::vector<Transaction> txs;
    std::uint32_t planned_shards = 1;
};

ShardWorkload make_shard_workload(std::size_t tx_count, std::uint32_t shard_count);

struct ShardBenchResult
{
    std::uint32_t shard_count = 0;
    std::size_t tx_count = 0;
    double elapsed_ms = 0;
    double tps = 0;
    Hash256 merged_digest;
    /// Transactions routed to each shard.
    std::vector<std::size_t> occupancy;
    /// Transactions whose sender and target sit in different shards.
    std::vector<Hash256> rejected;
};

/// Partitions the genesis state and the transactions by shard, applies each
/// shard's transactions independently (in parallel when asked), merges the
/// shard states in shard order and credits the summed fees to the coinbase.
ShardBenchResult sharded_throughput_bench(
    const ShardWorkload& workload, std::uint32_t shard_count, bool parallel = true);

std::string shards_csv(std::span<const ShardBenchResult> results);
}  // namespace edublock::scaling
