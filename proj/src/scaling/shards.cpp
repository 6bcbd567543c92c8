// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/error.hpp>
#include <edublock/scaling/shards.hpp>
#include <edublock/vm/report_contract.hpp>

#include <fmt/format.h>

#include <chrono>
#include <future>

namespace edublock::scaling
{
std::uint32_t shard_of(const Address& address, std::uint32_t shard_count)
{
    if (shard_count == 0)
        throw Error{Errc::ZeroShards};
    // Horner over the big-endian bytes keeps the remainder below 2^40.
    std::uint64_t rem = 0;
    for (const auto b : address.bytes)
        rem = ((rem << 8) | b) % shard_count;
    return static_cast<std::uint32_t>(rem);
}

namespace
{
constexpr std::uint64_t kSenderBalance = 1'000'000'000'000'000'000ULL;
constexpr std::uint64_t kBenchGasLimit = 100'000;
constexpr std::uint64_t kBenchGasPrice = 1'000'000'000;

Address contract_for_shard(std::uint32_t shard, std::uint32_t shard_count)
{
    for (std::uint32_t i = 0;; ++i)
    {
        const auto a = named_address(fmt::format("shard-contract:{}:{}", shard, i));
        if (shard_of(a, shard_count) == shard)
            return a;
    }
}

struct ShardRun
{
    State state;
    std::uint64_t fees = 0;
    std::size_t applied = 0;
};

ShardRun run_shard(State state, const std::vector<const Transaction*>& txs, const vm::HandlerRegistry& registry)
{
    ShardRun run{std::move(state), 0, 0};
    for (const auto* tx : txs)
    {
        run.fees += apply_transaction(run.state, *tx, registry).fee;
        ++run.applied;
    }
    return run;
}
}  // namespace

ShardWorkload make_shard_workload(std::size_t tx_count, std::uint32_t shard_count)
{
    if (shard_count == 0)
        throw Error{Errc::ZeroShards};
    ShardWorkload w;
    w.planned_shards = shard_count;
    w.genesis.params.difficulty_bits = 0;
    w.genesis.params.coinbase = named_address("shard-coinbase");
    w.genesis.alloc.push_back({w.genesis.params.coinbase, 0, 0, 0});

    std::vector<Address> contracts;
    for (std::uint32_t s = 0; s < shard_count; ++s)
    {
        contracts.push_back(contract_for_shard(s, shard_count));
        w.genesis.contracts.push_back({contracts.back(), std::string{report_v1::kHandlerId}, {}});
    }

    const report_v1::Metrics metrics{{"likes", Fixed::from_int(1)}};
    w.txs.reserve(tx_count);
    for (std::size_t i = 0; i < tx_count; ++i)
    {
        const auto sender = named_address(fmt::format("shard-sender:{}", i));
        w.genesis.alloc.push_back({sender, kSenderBalance, 0, 0});
        const auto& target = contracts[shard_of(sender, shard_count)];
        w.txs.push_back(Transaction::make(sender, 0,
            ContractCall{target, "commit_report", report_v1::commit_report_args(sender.hex(), 1, metrics)},
            kBenchGasLimit, kBenchGasPrice));
    }
    return w;
}

ShardBenchResult sharded_throughput_bench(const ShardWorkload& workload, std::uint32_t shard_count, bool parallel)
{
    if (shard_count == 0)
        throw Error{Errc::ZeroShards};
    const auto registry = vm::HandlerRegistry::with_builtins();
    const auto genesis = genesis_state(workload.genesis);

    ShardBenchResult result;
    result.shard_count = shard_count;
    result.tx_count = workload.txs.size();
    result.occupancy.assign(shard_count, 0);

    std::vector<State> shard_states(shard_count);
    for (auto& s : shard_states)
        s.params = genesis.params;
    for (const auto& [addr, account] : genesis.accounts)
        shard_states[shard_of(addr, shard_count)].accounts.emplace(addr, account);
    for (const auto& [addr, contract] : genesis.contracts)
        shard_states[shard_of(addr, shard_count)].contracts.emplace(addr, contract);

    std::vector<std::vector<const Transaction*>> routed(shard_count);
    for (const auto& tx : workload.txs)
    {
        const auto shard = shard_of(tx.sender, shard_count);
        ++result.occupancy[shard];
        if (const auto* call = std::get_if<ContractCall>(&tx.kind);
            call != nullptr && shard_of(call->target, shard_count) != shard)
        {
            result.rejected.push_back(tx.tx_id);
            continue;
        }
        routed[shard].push_back(&tx);
    }

    const auto start = std::chrono::steady_clock::now();
    std::vector<ShardRun> runs;
    if (parallel && shard_count > 1)
    {
        std::vector<std::future<ShardRun>> futures;
        for (std::uint32_t s = 0; s < shard_count; ++s)
            futures.push_back(std::async(std::launch::async, run_shard, std::move(shard_states[s]),
                std::cref(routed[s]), std::cref(*registry)));
        for (auto& f : futures)
            runs.push_back(f.get());
    }
    else
    {
        for (std::uint32_t s = 0; s < shard_count; ++s)
            runs.push_back(run_shard(std::move(shard_states[s]), routed[s], *registry));
    }

    State merged;
    merged.params = genesis.params;
    std::uint64_t fees = 0;
    std::size_t applied = 0;
    for (auto& run : runs)
    {
        merged.accounts.merge(run.state.accounts);
        merged.contracts.merge(run.state.contracts);
        fees += run.fees;
        applied += run.applied;
    }
    consensus::reward_producer(merged, merged.params.coinbase, fees);
    const auto stop = std::chrono::steady_clock::now();

    result.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    result.tps = result.elapsed_ms > 0 ? static_cast<double>(applied) * 1000.0 / result.elapsed_ms : 0.0;
    result.merged_digest = merged.digest();
    return result;
}

std::string shards_csv(std::span<const ShardBenchResult> results)
{
    std::string out = "shard_count,tx_count,elapsed_ms,tps\n";
    for (const auto& r : results)
        out += fmt::format("{},{},{:.3f},{:.1f}\n", r.shard_count, r.tx_count, r.elapsed_ms, r.tps);
    return out;
}
}  // namespace edublock::scaling
