// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/clock.hpp>
#include <edublock/consensus/consensus.hpp>
#include <edublock/error.hpp>

#include <bit>
#include <limits>

namespace edublock::consensus
{
namespace
{
class PowEngine final : public Engine
{
public:
    explicit PowEngine(const ChainParams& params) : params_{params}
    {
        if (params.difficulty_bits > kMaxDeskDifficulty)
            throw Error{Errc::DifficultyOutOfRange, std::to_string(params.difficulty_bits)};
    }

    ConsensusMode mode() const noexcept override { return ConsensusMode::pow; }

    Address producer(const State& parent_state, const Hash256&) const override
    {
        if (parent_state.find_account(params_.coinbase) == nullptr)
            throw Error{Errc::UnknownProducer, params_.coinbase.hex()};
        return params_.coinbase;
    }

    Hash256 seal(HeaderFields& header, const State&, Clock& clock) const override
    {
        const auto solution = mine_pow(header, params_.difficulty_bits);
        clock.charge_hashes(solution.attempts);
        header.seal = PowSeal{solution.pow_nonce, static_cast<std::uint8_t>(params_.difficulty_bits)};
        return solution.block_hash;
    }

    bool verify(const Block& block, const State&, const Hash256&) const override
    {
        const auto* seal = std::get_if<PowSeal>(&block.seal);
        return seal != nullptr && seal->difficulty_bits == params_.difficulty_bits && verify_pow(block);
    }

private:
    ChainParams params_;
};

class PosEngine final : public Engine
{
public:
    ConsensusMode mode() const noexcept override { return ConsensusMode::pos; }

    Address producer(const State& parent_state, const Hash256& parent_hash) const override
    {
        try
        {
            return select_validator(stake_table(parent_state), parent_hash);
        }
        catch (const Error& e)
        {
            throw Error{Errc::SealFailure, e.what()};
        }
    }

    Hash256 seal(HeaderFields& header, const State& parent_state, Clock&) const override
    {
        header.seal = PosSeal{producer(parent_state, header.parent_hash), header.parent_hash};
        return hash_block(header);
    }

    bool verify(const Block& block, const State& parent_state, const Hash256& parent_hash) const override
    {
        const auto* seal = std::get_if<PosSeal>(&block.seal);
        if (seal == nullptr || seal->selection_seed != parent_hash)
            return false;
        try
        {
            return seal->validator == select_validator(stake_table(parent_state), seal->selection_seed);
        }
        catch (const Error&)
        {
            return false;
        }
    }
};
}  // namespace

unsigned leading_zero_bits(const Hash256& hash) noexcept
{
    unsigned bits = 0;
    for (const auto b : hash.bytes)
    {
        if (b != 0)
            return bits + static_cast<unsigned>(std::countl_zero(b));
        bits += 8;
    }
    return bits;
}

PowSolution mine_pow(HeaderFields header, unsigned difficulty_bits)
{
    if (difficulty_bits > 255)
        throw Error{Errc::DifficultyOutOfRange, std::to_string(difficulty_bits)};
    const auto difficulty = static_cast<std::uint8_t>(difficulty_bits);
    for (std::uint64_t nonce = 0;; ++nonce)
    {
        header.seal = PowSeal{nonce, difficulty};
        const auto hash = hash_block(header);
        if (leading_zero_bits(hash) >= difficulty_bits)
            return {nonce, hash, nonce + 1};
        if (nonce == std::numeric_limits<std::uint64_t>::max())
            throw Error{Errc::Exhausted};
    }
}

bool verify_pow(const Block& block)
{
    const auto* seal = std::get_if<PowSeal>(&block.seal);
    if (seal == nullptr)
        return false;
    const auto hash = block.compute_hash();
    return hash == block.block_hash && leading_zero_bits(hash) >= seal->difficulty_bits;
}

StakeTable stake_table(const State& state)
{
    StakeTable out;
    for (const auto& [address, account] : state.accounts)
        if (account.stake > 0)
            out.emplace(address, account.stake);
    return out;
}

Address select_validator(const StakeTable& stakes, const Hash256& seed)
{
    unsigned __int128 total = 0;
    for (const auto& [_, stake] : stakes)
        total += stake;
    if (total == 0)
        throw Error{Errc::NoStakers};

    unsigned __int128 r = 0;
    for (const auto b : seed.bytes)
        r = (r * 256 + b) % total;

    unsigned __int128 cumulative = 0;
    for (const auto& [address, stake] : stakes)
    {
        cumulative += stake;
        if (r < cumulative)
            return address;
    }
    throw Error{Errc::NoStakers};  // unreachable: r < total
}

void reward_producer(State& state, const Address& producer, std::uint64_t total_fees)
{
    auto* account = state.find_account(producer);
    if (account == nullptr)
        throw Error{Errc::UnknownProducer, producer.hex()};
    if (account->balance > std::numeric_limits<std::uint64_t>::max() - total_fees)
        throw Error{Errc::Overflow, "producer balance"};
    account->balance += total_fees;
}

std::unique_ptr<Engine> make_engine(const ChainParams& params)
{
    if (params.mode == ConsensusMode::pow)
        return std::make_unique<PowEngine>(params);
    return std::make_unique<PosEngine>();
}
}  // namespace edublock::consensus
