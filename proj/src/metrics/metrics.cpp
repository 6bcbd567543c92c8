// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/error.hpp>
#include <edublock/metrics/metrics.hpp>
#include <edublock/vm/report_contract.hpp>

#include <fmt/format.h>

#include <chrono>
#include <map>

namespace edublock::metrics
{
std::uint64_t NetworkProfile::gas_price_wei() const
{
    // Fixed has four decimals; 10^9 / 10^4 = 10^5
    const int128 wei = checked_mul(gas_price_gwei.raw(), 100'000);
    if (wei < 0 || wei > static_cast<int128>(std::numeric_limits<std::uint64_t>::max()))
        throw Error{Errc::Overflow, "gas price"};
    return static_cast<std::uint64_t>(wei);
}

std::vector<NetworkProfile> default_profiles()
{
    const auto gwei = Fixed::parse("15.80");
    return {
        {"ethereum", gwei, Ratio{1}, false},
        {"polkadot", gwei, Ratio{1, 3}, true},
        {"cardano", gwei, Ratio{1, 3}, true},
    };
}

const NetworkProfile& find_profile(std::span<const NetworkProfile> profiles, std::string_view name)
{
    for (const auto& p : profiles)
        if (p.name == name)
            return p;
    throw Error{Errc::InvalidConfig, "unknown network profile '" + std::string{name} + "'"};
}

TxCost tx_cost(std::uint64_t gas_used, const NetworkProfile& profile)
{
    const Ratio gas{static_cast<int128>(gas_used)};
    return {gas * Ratio{static_cast<int128>(profile.gas_price_wei())} * profile.fee_factor,
        gas * profile.fee_factor / Ratio{kNormalizationDivisor}};
}

FinalitySample record_finality(std::uint64_t round, std::int64_t submitted_at, std::int64_t finalized_at)
{
    if (finalized_at < submitted_at)
        throw Error{Errc::NegativeDuration,
            "finalized at " + std::to_string(finalized_at) + " before submission at " + std::to_string(submitted_at)};
    return {round, submitted_at, finalized_at, finalized_at - submitted_at};
}

const FinalitySample& FinalitySeries::record(std::uint64_t round, std::int64_t submitted_at, std::int64_t finalized_at)
{
    auto sample = record_finality(round, submitted_at, finalized_at);
    std::lock_guard lock{mutex_};
    return samples_.emplace_back(sample);
}

std::vector<FinalitySample> FinalitySeries::samples() const
{
    std::lock_guard lock{mutex_};
    return samples_;
}

std::vector<CostRow> cost_report(const Chain& chain, std::span<const NetworkProfile> profiles)
{
    struct Totals
    {
        std::uint64_t gas = 0;
        std::size_t count = 0;
    };
    std::map<std::uint64_t, Totals> per_round;

    const auto state = chain.state();
    for (const auto& block : chain.blocks_from(1))
    {
        const auto receipts = chain.receipts_at(block.height);
        for (std::size_t i = 0; i < block.transactions.size(); ++i)
        {
            const auto* call = std::get_if<ContractCall>(&block.transactions[i].kind);
            if (call == nullptr || (call->method != "commit_report" && call->method != "commit_digest"))
                continue;
            const auto* contract = state.find_contract(call->target);
            if (contract == nullptr || contract->handler_id != report_v1::kHandlerId)
                continue;
            std::uint64_t round = 0;
            try
            {
                round = report_v1::round_of_call(call->method, call->args);
            }
            catch (const Error&)
            {
                continue;  // malformed arguments carry no round
            }
            auto& t = per_round[round];
            t.gas += receipts.at(i).gas_used;
            ++t.count;
        }
    }

    std::vector<CostRow> rows;
    for (const auto& [round, totals] : per_round)
    {
        const Ratio avg_gas{static_cast<int128>(totals.gas), static_cast<int128>(totals.count)};
        for (const auto& profile : profiles)
        {
            rows.push_back({round, profile.name, profile.predicted, totals.count,
                avg_gas * profile.fee_factor / Ratio{kNormalizationDivisor},
                avg_gas * Ratio{static_cast<int128>(profile.gas_price_wei())} * profile.fee_factor});
        }
    }
    return rows;
}

TpsReport tps_benchmark(std::size_t tx_count, const TpsConfig& config)
{
    if (tx_count == 0)
        throw Error{Errc::InvalidConfig, "tx_count must be at least 1"};
    if (config.txs_per_block == 0)
        throw Error{Errc::InvalidConfig, "txs_per_block must be at least 1"};

    GenesisSpec genesis;
    genesis.params.mode = ConsensusMode::pow;
    genesis.params.difficulty_bits = config.difficulty_bits;
    genesis.params.coinbase = named_address("tps-coinbase");
    genesis.alloc.push_back({genesis.params.coinbase, 0, 0, 0});
    const auto contract = named_address("tps-report-contract");
    genesis.contracts.push_back({contract, std::string{report_v1::kHandlerId}, {}});

    std::vector<Transaction> txs;
    txs.reserve(tx_count);
    for (std::size_t i = 0; i < tx_count; ++i)
    {
        const auto sender = named_address("tps-sender-" + std::to_string(i));
        genesis.alloc.push_back({sender, 1'000'000'000, 0, 0});
        const report_v1::Metrics metrics{{"likes", Fixed::from_int(static_cast<std::int64_t>(i))}};
        txs.push_back(Transaction::make(sender, 0,
            ContractCall{contract, "commit_report", report_v1::commit_report_args(sender.hex(), 1, metrics)}, 100'000,
            1));
    }

    Chain chain{genesis, vm::HandlerRegistry::with_builtins(), std::make_shared<SystemClock>()};
    for (auto& tx : txs)
        chain.submit(std::move(tx));

    TpsReport report;
    report.tx_count = tx_count;
    report.difficulty_bits = config.difficulty_bits;
    const auto start = std::chrono::steady_clock::now();
    while (chain.mempool_size() > 0)
    {
        chain.produce_block(config.txs_per_block);
        ++report.blocks;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    report.elapsed_ms = elapsed.count();
    report.tps = static_cast<double>(tx_count) / std::max(elapsed.count() / 1000.0, 1e-9);
    return report;
}

std::string finality_csv(std::span<const FinalitySample> samples)
{
    std::string out = "round,finality_ms\n";
    for (const auto& s : samples)
        out += fmt::format("{},{}\n", s.round, s.finality_ms);
    return out;
}

std::string costs_csv(std::span<const CostRow> rows)
{
    std::string out =
        "round,profile,basis,avg_normalized_gas,avg_fee_wei,avg_normalized_gas_exact,avg_fee_wei_exact\n";
    for (const auto& r : rows)
        out += fmt::format("{},{},{},{},{},{},{}\n", r.round, r.profile, r.predicted ? "predicted" : "measured",
            r.avg_normalized_gas.decimal(), r.avg_fee_wei.decimal(), r.avg_normalized_gas.exact(),
            r.avg_fee_wei.exact());
    return out;
}

std::string tps_csv(std::span<const TpsReport> reports)
{
    std::string out = "tx_count,difficulty_bits,blocks,elapsed_ms,tps,reference_bitcoin_tps,reference_visa_tps\n";
    for (const auto& r : reports)
        out += fmt::format("{},{},{},{:.3f},{:.3f},{},{}\n", r.tx_count, r.difficulty_bits, r.blocks, r.elapsed_ms,
            r.tps, TpsReport::kBitcoinTps, TpsReport::kVisaTps);
    return out;
}
}  // namespace edublock::metrics
