// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/chain.hpp>
#include <edublock/metrics/metrics.hpp>
#include <edublock/scaling/rollup.hpp>
#include <edublock/sim/model.hpp>

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace edublock::sim
{
inline constexpr std::uint64_t kGenesisBalance = 1'000'000'000'000'000'000ULL;  // 1 ether

Address operator_address();
Address team_address(std::string_view team);
Address miner_address();
/// Validators 1..3 hold stakes of 1, 3 and 6 ether in proof-of-stake mode.
std::vector<Account> default_validators();

/// Genesis for a session: operator, one account per team, the miner and
/// (proof of stake) the validators.
GenesisSpec simulation_genesis(const SimulationConfig& config, ConsensusMode mode, unsigned difficulty_bits);

struct InitResult
{
    Address report_contract;
    std::uint64_t block_height = 0;
    Hash256 block_hash;
    Receipt receipt;
};

struct RoundSummary
{
    std::uint64_t round = 0;
    std::uint64_t block_height = 0;
    Hash256 block_hash;
    Hash256 batch_digest;
    std::vector<ActivityReport> reports;
    /// Receipts of the report commits (team order) followed by the digest commit.
    std::vector<Receipt> receipts;
    metrics::FinalitySample finality;
};

struct SimulationStatus
{
    bool initialized = false;
    bool complete = false;
    std::uint64_t current_round = 0;
    std::uint64_t committed_rounds = 0;
    std::vector<std::string> submitted;
    std::vector<std::string> missing;
    std::optional<Address> report_contract;
};

class Simulation
{
public:
    Simulation(SimulationConfig config, std::shared_ptr<Chain> chain, scaling::TxPolicy policy = {});

    /// Deploys the report contract with the benchmarks as init payload.
    /// Overrides apply before deployment.
    InitResult init(
        std::optional<MetricValues> benchmarks = std::nullopt, std::optional<std::uint64_t> seed = std::nullopt);

    void submit_decision(RoundDecision decision);

    /// Throws MissingDecisions with the absent teams as a comma list.
    RoundSummary close_round();

    SimulationStatus status() const;
    SimulationConfig config() const;
    std::vector<RoundSummary> summaries() const;
    std::vector<metrics::FinalitySample> finality() const;
    std::optional<Address> report_contract() const;

    /// Raw get_report output for a committed report; NotFound otherwise.
    Bytes report_bytes(std::string_view team, std::uint64_t round) const;
    ActivityReport report(std::string_view team, std::uint64_t round) const;
    /// Baseline read back from the contract's benchmark entries.
    MetricValues onchain_benchmarks() const;

    Chain& chain() const noexcept { return *chain_; }
    const scaling::TxPolicy& policy() const noexcept { return policy_; }

    /// team,round,likes,post_engagement,page_views,gas_used,fee_wei
    std::string reports_csv() const;

private:
    Address require_contract() const;

    mutable std::mutex mutex_;
    SimulationConfig config_;
    std::shared_ptr<Chain> chain_;
    scaling::TxPolicy policy_;
    std::optional<Address> contract_;
    std::uint64_t current_round_ = 0;
    scaling::ReportBook book_;
    std::map<std::string, RoundDecision> pending_;
    std::vector<RoundSummary> summaries_;
    metrics::FinalitySeries finality_;
};
}  // namespace edublock::sim
