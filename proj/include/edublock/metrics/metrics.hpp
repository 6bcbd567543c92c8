// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/chain.hpp>
#include <edublock/fixed.hpp>

#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace edublock::metrics
{
/// Fee model of a target network. Ethereum is measured; the others are
/// predictions expressed as a fee factor relative to Ethereum.
struct NetworkProfile
{
    std::string name;
    Fixed gas_price_gwei;
    Ratio fee_factor{1};
    bool predicted = false;

    /// gas_price_gwei * 10^9, exact.
    std::uint64_t gas_price_wei() const;
};

/// ethereum (15.80 Gwei, factor 1), polkadot and cardano (factor 1/3, predicted).
std::vector<NetworkProfile> default_profiles();
const NetworkProfile& find_profile(std::span<const NetworkProfile> profiles, std::string_view name);

/// Divisor mapping gas onto the normalized unit of the cost charts.
inline constexpr std::uint64_t kNormalizationDivisor = 100'000;
/// A standard per-team round record, the calibration anchor (0.7 normalized).
inline constexpr std::uint64_t kStandardRoundRecordGas = 70'000;

struct TxCost
{
    Ratio fee_wei;
    Ratio normalized_gas;
};

/// fee_wei = gas * gwei * 10^9 * fee_factor; normalized = gas * fee_factor / 100,000.
TxCost tx_cost(std::uint64_t gas_used, const NetworkProfile& profile);

/// Finality is inclusion of a round's rollup transactions in one sealed
/// block (depth 1).
struct FinalitySample
{
    std::uint64_t round = 0;
    std::int64_t submitted_at = 0;
    std::int64_t finalized_at = 0;
    std::int64_t finality_ms = 0;

    bool operator==(const FinalitySample&) const = default;
};

/// Throws NegativeDuration if finalized_at precedes submitted_at.
FinalitySample record_finality(std::uint64_t round, std::int64_t submitted_at, std::int64_t finalized_at);

/// Append-only per-round finality series.
class FinalitySeries
{
public:
    const FinalitySample& record(std::uint64_t round, std::int64_t submitted_at, std::int64_t finalized_at);
    std::vector<FinalitySample> samples() const;

private:
    mutable std::mutex mutex_;
    std::vector<FinalitySample> samples_;
};

struct CostRow
{
    std::uint64_t round = 0;
    std::string profile;
    bool predicted = false;
    std::size_t tx_count = 0;
    Ratio avg_normalized_gas;
    Ratio avg_fee_wei;
};

/// Average cost of each round's committed report-contract transactions
/// (commit_report and commit_digest) under every profile. Rows are ordered by
/// round, then by profile order.
std::vector<CostRow> cost_report(const Chain& chain, std::span<const NetworkProfile> profiles);

struct TpsConfig
{
    unsigned difficulty_bits = 0;
    std::size_t txs_per_block = 100;
};

struct TpsReport
{
    static constexpr double kBitcoinTps = 4.6;
    static constexpr double kVisaTps = 1700.0;

    std::size_t tx_count = 0;
    unsigned difficulty_bits = 0;
    std::size_t blocks = 0;
    double elapsed_ms = 0;
    double tps = 0;
};

/// Wall-clock throughput of block production over tx_count independent
/// report commits, one sender each.
TpsReport tps_benchmark(std::size_t tx_count, const TpsConfig& config = {});

std::string finality_csv(std::span<const FinalitySample> samples);
std::string costs_csv(std::span<const CostRow> rows);
std::string tps_csv(std::span<const TpsReport> reports);
}  // namespace edublock::metrics
