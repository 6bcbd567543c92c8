// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/state.hpp>
#include <edublock/clock.hpp>
#include <edublock/consensus/consensus.hpp>
#include <edublock/vm/vm.hpp>

#include <deque>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace edublock
{
/// Everything needed to rebuild the genesis state.
struct GenesisSpec
{
    ChainParams params;
    std::int64_t timestamp = 0;
    std::vector<Account> alloc;
    /// Contracts installed at genesis (benchmarks use this to place one
    /// contract per shard).
    std::vector<Contract> contracts;

    bool operator==(const GenesisSpec&) const = default;
};

/// Append-only block history plus the genesis description it starts from.
struct Ledger
{
    GenesisSpec genesis;
    std::vector<Block> blocks;

    bool empty() const noexcept { return blocks.empty(); }
};

State genesis_state(const GenesisSpec& spec);

/// Height-0 block over genesis_state(spec), sealed for the spec's mode.
Block make_genesis(const GenesisSpec& spec);

struct ApplyResult
{
    Receipt receipt;
    /// gas_used * gas_price, owed to the block producer.
    std::uint64_t fee = 0;
};

/// Validates and executes one transaction against state.
///
/// Validation failures (UnknownSender, BadNonce, InsufficientBalance,
/// InvalidTransaction) throw Error and leave state untouched. Contract-level
/// failures return a failure receipt; they still charge gas and bump the
/// sender nonce.
ApplyResult apply_transaction(State& state, const Transaction& tx, const vm::HandlerRegistry& registry);

struct Violation
{
    std::uint64_t height = 0;
    std::string rule;
    std::string detail;
};

/// Checks linkage, hashes, seals, transaction ids and that replay from
/// genesis reproduces every stored state digest. Returns the first violation.
std::optional<Violation> verify_chain(const Ledger& ledger, const vm::HandlerRegistry& registry);

struct DroppedTx
{
    Hash256 tx_id;
    Errc reason;
};

struct ProducedBlock
{
    Block block;
    std::vector<Receipt> receipts;
    std::vector<DroppedTx> dropped;
    Address producer;
    std::uint64_t total_fees = 0;
};

struct ReceiptRecord
{
    Receipt receipt;
    std::uint64_t block_height = 0;
};

/// A single node: ledger, world state and mempool.
///
/// Mutations (produce_block) are serialized by one writer lock. Readers see
/// only fully committed blocks and may run concurrently with mining, since
/// the new state is built on a private copy and swapped in at the end.
class Chain
{
public:
    Chain(GenesisSpec genesis, std::shared_ptr<const vm::HandlerRegistry> registry, std::shared_ptr<Clock> clock);

    /// Rebuilds a node by replaying a loaded ledger. Throws
    /// Error(CorruptRecord) naming the first block that fails verification.
    Chain(const Ledger& ledger, std::shared_ptr<const vm::HandlerRegistry> registry, std::shared_ptr<Clock> clock);

    Chain(const Chain&) = delete;
    Chain& operator=(const Chain&) = delete;

    /// Queues a transaction; returns its id. The id must match the fields.
    Hash256 submit(Transaction tx);

    /// Committed nonce plus transactions from this sender still queued.
    std::uint64_t next_nonce(const Address& sender) const;

    /// Drains up to max_txs queued transactions (FIFO) into a sealed block.
    /// Invalid transactions are dropped and logged.
    ProducedBlock produce_block(std::size_t max_txs = std::numeric_limits<std::size_t>::max());

    std::uint64_t height() const;
    Hash256 head_hash() const;
    std::optional<Block> block(std::uint64_t height) const;
    std::vector<Receipt> receipts_at(std::uint64_t height) const;
    std::optional<ReceiptRecord> receipt(const Hash256& tx_id) const;
    State state() const;
    Ledger ledger() const;
    /// Blocks from the given height to the head.
    std::vector<Block> blocks_from(std::uint64_t height) const;
    std::size_t mempool_size() const;

    Bytes view_call(const Address& target, std::string_view method, ByteView args) const;

    const ChainParams& params() const noexcept { return genesis_.params; }
    const GenesisSpec& genesis() const noexcept { return genesis_; }
    const vm::HandlerRegistry& registry() const noexcept { return *registry_; }
    Clock& clock() const noexcept { return *clock_; }

private:
    void commit(Block block, State state, std::vector<Receipt> receipts);

    GenesisSpec genesis_;
    std::shared_ptr<const vm::HandlerRegistry> registry_;
    std::shared_ptr<Clock> clock_;
    std::unique_ptr<consensus::Engine> engine_;

    std::mutex writer_mutex_;
    mutable std::mutex mempool_mutex_;
    std::deque<Transaction> mempool_;

    mutable std::shared_mutex state_mutex_;
    std::vector<Block> blocks_;
    std::vector<std::vector<Receipt>> receipts_;
    std::unordered_map<Hash256, std::pair<std::uint64_t, std::size_t>> receipt_index_;
    State state_;
};
}  // namespace edublock
