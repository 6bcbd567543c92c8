// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/chain/chain.hpp>
#include <edublock/error.hpp>

#include <spdlog/spdlog.h>

namespace edublock
{
namespace
{
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw Error{Errc::Overflow, "u64 addition"};
    return a + b;
}

struct ReplayOutcome
{
    std::optional<Violation> violation;
    State state;
    std::vector<std::vector<Receipt>> receipts;
};

ReplayOutcome replay(const Ledger& ledger, const vm::HandlerRegistry& registry)
{
    ReplayOutcome out;
    const auto fail = [&](std::uint64_t height, std::string rule, std::string detail) {
        out.violation = Violation{height, std::move(rule), std::move(detail)};
        return std::move(out);
    };

    if (ledger.blocks.empty())
        return fail(0, "genesis", "ledger has no blocks");

    std::unique_ptr<consensus::Engine> engine;
    try
    {
        out.state = genesis_state(ledger.genesis);
        engine = consensus::make_engine(ledger.genesis.params);
    }
    catch (const Error& e)
    {
        return fail(0, "genesis", e.what());
    }

    const auto& genesis = ledger.blocks.front();
    if (genesis.height != 0 || !genesis.parent_hash.is_zero() || !genesis.transactions.empty())
        return fail(0, "genesis", "genesis must have height 0, zero parent and no transactions");
    if (genesis.compute_hash() != genesis.block_hash)
        return fail(0, "block_hash", "stored hash does not match header");
    if (genesis.state_digest != out.state.digest())
        return fail(0, "state_digest", "genesis state does not match allocation");
    if (!engine->verify(genesis, out.state, Hash256{}))
        return fail(0, "seal", "genesis seal does not verify");
    out.receipts.emplace_back();

    for (std::size_t i = 1; i < ledger.blocks.size(); ++i)
    {
        const auto& block = ledger.blocks[i];
        const auto& prev = ledger.blocks[i - 1];
        if (block.height != i)
            return fail(i, "height", "expected " + std::to_string(i) + ", found " + std::to_string(block.height));
        if (block.parent_hash != prev.block_hash)
            return fail(i, "parent_hash", "does not link to block " + std::to_string(i - 1));
        for (const auto& tx : block.transactions)
            if (tx.compute_id() != tx.tx_id)
                return fail(i, "tx_id", tx.tx_id.hex());
        if (block.compute_hash() != block.block_hash)
            return fail(i, "block_hash", "stored hash does not match header");
        if (!engine->verify(block, out.state, prev.block_hash))
            return fail(i, "seal", "seal does not verify");

        std::vector<Receipt> receipts;
        try
        {
            const auto producer = engine->producer(out.state, prev.block_hash);
            std::uint64_t fees = 0;
            for (const auto& tx : block.transactions)
            {
                auto applied = apply_transaction(out.state, tx, registry);
                fees = checked_add(fees, applied.fee);
                receipts.push_back(std::move(applied.receipt));
            }
            consensus::reward_producer(out.state, producer, fees);
        }
        catch (const Error& e)
        {
            return fail(i, "transaction", e.what());
        }
        if (out.state.digest() != block.state_digest)
            return fail(i, "state_digest", "replayed state differs from stored digest");
        out.receipts.push_back(std::move(receipts));
    }
    return out;
}
}  // namespace

State genesis_state(const GenesisSpec& spec)
{
    State state;
    state.params = spec.params;
    for (const auto& account : spec.alloc)
        if (!state.accounts.emplace(account.address, account).second)
            throw Error{Errc::InvalidConfig, "duplicate genesis account " + account.address.hex()};
    for (const auto& contract : spec.contracts)
    {
        if (state.occupied(contract.address))
            throw Error{Errc::InvalidConfig, "genesis contract address collision " + contract.address.hex()};
        state.contracts.emplace(contract.address, contract);
    }
    return state;
}

Block make_genesis(const GenesisSpec& spec)
{
    const auto state = genesis_state(spec);
    const auto engine = consensus::make_engine(spec.params);
    HeaderFields header{0, Hash256{}, spec.timestamp, tx_list_digest({}), {}, state.digest()};
    VirtualClock scratch;
    const auto hash = engine->seal(header, state, scratch);
    return Block{0, Hash256{}, spec.timestamp, {}, header.seal, header.state_digest, hash};
}

ApplyResult apply_transaction(State& state, const Transaction& tx, const vm::HandlerRegistry& registry)
{
    const auto* sender = state.find_account(tx.sender);
    if (sender == nullptr)
        throw Error{Errc::UnknownSender, tx.sender.hex()};
    if (tx.compute_id() != tx.tx_id)
        throw Error{Errc::InvalidTransaction, "tx_id does not match fields"};
    if (tx.gas_limit == 0)
        throw Error{Errc::InvalidTransaction, "gas_limit must be positive"};
    if (tx.nonce != sender->nonce)
        throw Error{Errc::BadNonce,
            "expected " + std::to_string(sender->nonce) + ", got " + std::to_string(tx.nonce)};
    const unsigned __int128 max_fee = static_cast<unsigned __int128>(tx.gas_limit) * tx.gas_price;
    if (max_fee > sender->balance)
        throw Error{Errc::InsufficientBalance,
            "balance " + std::to_string(sender->balance) + " below gas_limit * gas_price"};

    auto result = vm::execute(state, tx, registry);

    // gas_used <= gas_limit, so fee <= max_fee <= balance
    const auto fee = result.gas_used * tx.gas_price;
    auto* account = state.find_account(tx.sender);
    account->balance -= fee;
    account->nonce += 1;

    Receipt receipt;
    receipt.tx_id = tx.tx_id;
    receipt.success = result.success;
    if (result.failure)
        receipt.failure_reason = std::string{to_string(*result.failure)};
    receipt.gas_used = result.gas_used;
    receipt.created_address = result.created_address;
    receipt.output = std::move(result.output);
    return {std::move(receipt), fee};
}

std::optional<Violation> verify_chain(const Ledger& ledger, const vm::HandlerRegistry& registry)
{
    return replay(ledger, registry).violation;
}

Chain::Chain(GenesisSpec genesis, std::shared_ptr<const vm::HandlerRegistry> registry, std::shared_ptr<Clock> clock)
  : genesis_{std::move(genesis)},
    registry_{std::move(registry)},
    clock_{std::move(clock)},
    engine_{consensus::make_engine(genesis_.params)}
{
    auto state = genesis_state(genesis_);
    if (genesis_.params.mode == ConsensusMode::pow && state.find_account(genesis_.params.coinbase) == nullptr)
        throw Error{Errc::InvalidConfig, "coinbase account missing from genesis allocation"};
    commit(make_genesis(genesis_), std::move(state), {});
}

Chain::Chain(const Ledger& ledger, std::shared_ptr<const vm::HandlerRegistry> registry, std::shared_ptr<Clock> clock)
  : genesis_{ledger.genesis}, registry_{std::move(registry)}, clock_{std::move(clock)}
{
    auto outcome = replay(ledger, *registry_);
    if (outcome.violation)
        throw Error{Errc::CorruptRecord, "block " + std::to_string(outcome.violation->height) + " (" +
                                             outcome.violation->rule + "): " + outcome.violation->detail};
    engine_ = consensus::make_engine(genesis_.params);
    blocks_ = ledger.blocks;
    receipts_ = std::move(outcome.receipts);
    for (std::uint64_t h = 0; h < receipts_.size(); ++h)
        for (std::size_t i = 0; i < receipts_[h].size(); ++i)
            receipt_index_.emplace(receipts_[h][i].tx_id, std::pair{h, i});
    state_ = std::move(outcome.state);
}

Hash256 Chain::submit(Transaction tx)
{
    if (tx.compute_id() != tx.tx_id)
        throw Error{Errc::InvalidTransaction, "tx_id does not match fields"};
    const auto id = tx.tx_id;
    std::lock_guard lock{mempool_mutex_};
    mempool_.push_back(std::move(tx));
    return id;
}

std::uint64_t Chain::next_nonce(const Address& sender) const
{
    std::uint64_t nonce = 0;
    {
        std::shared_lock lock{state_mutex_};
        if (const auto* account = state_.find_account(sender))
            nonce = account->nonce;
    }
    std::lock_guard lock{mempool_mutex_};
    for (const auto& tx : mempool_)
        if (tx.sender == sender)
            ++nonce;
    return nonce;
}

ProducedBlock Chain::produce_block(std::size_t max_txs)
{
    std::lock_guard writer{writer_mutex_};

    State state;
    Hash256 parent_hash;
    std::uint64_t height = 0;
    {
        std::shared_lock lock{state_mutex_};
        state = state_;
        parent_hash = blocks_.back().block_hash;
        height = blocks_.back().height + 1;
    }

    ProducedBlock out;
    try
    {
        out.producer = engine_->producer(state, parent_hash);
    }
    catch (const Error& e)
    {
        throw Error{Errc::SealFailure, e.what()};
    }

    std::vector<Transaction> candidates;
    {
        std::lock_guard lock{mempool_mutex_};
        if (mempool_.empty())
            throw Error{Errc::EmptyMempool};
        while (!mempool_.empty() && candidates.size() < max_txs)
        {
            candidates.push_back(std::move(mempool_.front()));
            mempool_.pop_front();
        }
    }

    std::vector<Transaction> included;
    for (auto& tx : candidates)
    {
        try
        {
            auto applied = apply_transaction(state, tx, *registry_);
            out.total_fees = checked_add(out.total_fees, applied.fee);
            out.receipts.push_back(std::move(applied.receipt));
            included.push_back(std::move(tx));
        }
        catch (const Error& e)
        {
            spdlog::warn("dropping transaction {}: {}", tx.tx_id.hex(), e.what());
            out.dropped.push_back({tx.tx_id, e.code()});
        }
    }
    consensus::reward_producer(state, out.producer, out.total_fees);

    HeaderFields header{height, parent_hash, clock_->now_ms(), tx_list_digest(included), {}, state.digest()};
    const auto hash = engine_->seal(header, state, *clock_);
    out.block = Block{height, parent_hash, header.timestamp, std::move(included), header.seal, header.state_digest,
        hash};

    commit(out.block, std::move(state), out.receipts);
    return out;
}

void Chain::commit(Block block, State state, std::vector<Receipt> receipts)
{
    std::unique_lock lock{state_mutex_};
    const auto height = block.height;
    for (std::size_t i = 0; i < receipts.size(); ++i)
        receipt_index_.insert_or_assign(receipts[i].tx_id, std::pair{height, i});
    blocks_.push_back(std::move(block));
    receipts_.push_back(std::move(receipts));
    state_ = std::move(state);
}

std::uint64_t Chain::height() const
{
    std::shared_lock lock{state_mutex_};
    return blocks_.back().height;
}

Hash256 Chain::head_hash() const
{
    std::shared_lock lock{state_mutex_};
    return blocks_.back().block_hash;
}

std::optional<Block> Chain::block(std::uint64_t height) const
{
    std::shared_lock lock{state_mutex_};
    if (height >= blocks_.size())
        return std::nullopt;
    return blocks_[height];
}

std::vector<Receipt> Chain::receipts_at(std::uint64_t height) const
{
    std::shared_lock lock{state_mutex_};
    if (height >= receipts_.size())
        return {};
    return receipts_[height];
}

std::optional<ReceiptRecord> Chain::receipt(const Hash256& tx_id) const
{
    std::shared_lock lock{state_mutex_};
    const auto it = receipt_index_.find(tx_id);
    if (it == receipt_index_.end())
        return std::nullopt;
    const auto [height, index] = it->second;
    return ReceiptRecord{receipts_[height][index], height};
}

State Chain::state() const
{
    std::shared_lock lock{state_mutex_};
    return state_;
}

Ledger Chain::ledger() const
{
    std::shared_lock lock{state_mutex_};
    return {genesis_, blocks_};
}

std::vector<Block> Chain::blocks_from(std::uint64_t height) const
{
    std::shared_lock lock{state_mutex_};
    if (height >= blocks_.size())
        return {};
    return {blocks_.begin() + static_cast<std::ptrdiff_t>(height), blocks_.end()};
}

std::size_t Chain::mempool_size() const
{
    std::lock_guard lock{mempool_mutex_};
    return mempool_.size();
}

Bytes Chain::view_call(const Address& target, std::string_view method, ByteView args) const
{
    std::shared_lock lock{state_mutex_};
    return vm::view_call(state_, target, method, args, *registry_);
}
}  // namespace edublock
