// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/chain.hpp>
#include <edublock/sim/model.hpp>

#include <map>
#include <string>
#include <vector>

namespace edublock::scaling
{
/// Gas terms attached to every transaction the platform submits.
struct TxPolicy
{
    std::uint64_t gas_limit = 100'000;
    std::uint64_t gas_price = 15'800'000'000;  // 15.80 Gwei
};

/// One round's off-chain execution. Only the reports and the digest ever
/// reach the chain; decisions stay here.
struct RollupBatch
{
    std::uint64_t round = 0;
    std::vector<sim::RoundDecision> decisions;
    std::vector<sim::ActivityReport> reports;
    Hash256 batch_digest;
};

/// Latest committed report per team (round-0 baselines before round 1).
using ReportBook = std::map<std::string, sim::ActivityReport>;

/// Runs the response model for every team without touching chain state.
/// Decisions and reports are ordered by team id. Throws MixedRounds,
/// DuplicateTeam or UnknownTeam (no previous report for the team).
RollupBatch execute_batch_offchain(
    const ReportBook& previous, const sim::SimulationConfig& config, std::vector<sim::RoundDecision> decisions);

struct RollupCommit
{
    std::uint64_t block_height = 0;
    Hash256 block_hash;
    /// One receipt per team report in batch order, then the digest receipt.
    std::vector<Receipt> receipts;
};

/// Submits one commit_report call per report plus one commit_digest call and
/// produces the block that includes them. Throws the contract's error (for
/// example ImmutableOverwrite) if any of those calls failed on-chain.
RollupCommit commit_rollup(Chain& chain, const RollupBatch& batch, const Address& committer,
    const Address& report_contract, const TxPolicy& policy);

/// Rebuilds a round's batch digest from on-chain report storage.
Hash256 onchain_batch_digest(
    const Chain& chain, const Address& report_contract, std::uint64_t round, std::vector<std::string> teams);

/// Stored digest for a round, if committed.
std::optional<Hash256> stored_batch_digest(const Chain& chain, const Address& report_contract, std::uint64_t round);
}  // namespace edublock::scaling
