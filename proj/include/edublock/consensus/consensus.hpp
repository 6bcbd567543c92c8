// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/state.hpp>

#include <cstdint>
#include <map>
#include <memory>

namespace edublock
{
class Clock;
}

namespace edublock::consensus
{
/// Number of leading zero bits of the hash read as a big-endian integer.
unsigned leading_zero_bits(const Hash256& hash) noexcept;

struct PowSolution
{
    std::uint64_t pow_nonce = 0;
    Hash256 block_hash;
    /// Header hashes evaluated, i.e. pow_nonce + 1.
    std::uint64_t attempts = 0;
};

/// Smallest nonce, searched upward from zero, whose header hash has at least
/// difficulty_bits leading zero bits. The seal in header is replaced.
PowSolution mine_pow(HeaderFields header, unsigned difficulty_bits);

/// Block carries a PowSeal, its hash recomputes, and the hash meets the
/// seal's difficulty.
bool verify_pow(const Block& block);

using StakeTable = std::map<Address, std::uint64_t>;

/// Accounts with non-zero stake.
StakeTable stake_table(const State& state);

/// Stake-weighted draw. r = (seed as 256-bit big-endian integer) mod total
/// stake; walk accounts in ascending address order accumulating stake and
/// return the first whose cumulative total exceeds r.
Address select_validator(const StakeTable& stakes, const Hash256& seed);

/// Credits the block's fees to its producer. Fees only, no subsidy.
void reward_producer(State& state, const Address& producer, std::uint64_t total_fees);

/// Seals blocks for one consensus mode. Both engines are fully determined by
/// the chain params, so verification needs no extra configuration.
class Engine
{
public:
    virtual ~Engine() = default;

    virtual ConsensusMode mode() const noexcept = 0;

    /// Account credited with the fees of the next block.
    virtual Address producer(const State& parent_state, const Hash256& parent_hash) const = 0;

    /// Fills header.seal and returns the resulting block hash.
    virtual Hash256 seal(HeaderFields& header, const State& parent_state, Clock& clock) const = 0;

    /// Seal check for a block on top of parent_state / parent_hash.
    virtual bool verify(const Block& block, const State& parent_state, const Hash256& parent_hash) const = 0;
};

std::unique_ptr<Engine> make_engine(const ChainParams& params);
}  // namespace edublock::consensus
