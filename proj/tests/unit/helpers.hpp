// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/chain.hpp>
#include <edublock/vm/report_contract.hpp>

#include <memory>

namespace edublock::test
{
inline const Address alice = named_address("alice");
inline const Address bob = named_address("bob");
inline const Address miner = named_address("miner");

inline GenesisSpec small_genesis(unsigned bits = 4, ConsensusMode mode = ConsensusMode::pow)
{
    GenesisSpec g;
    g.params.mode = mode;
    g.params.difficulty_bits = bits;
    g.params.coinbase = miner;
    g.alloc = {{alice, 1'000'000'000'000, 0, 0}, {bob, 1'000'000'000'000, 0, 0}, {miner, 0, 0, 0}};
    if (mode == ConsensusMode::pos)
    {
        g.alloc[0].stake = 1;
        g.alloc[1].stake = 3;
    }
    return g;
}

inline std::unique_ptr<Chain> make_chain(const GenesisSpec& g)
{
    return std::make_unique<Chain>(g, vm::HandlerRegistry::with_builtins(), std::make_shared<VirtualClock>());
}

inline report_v1::Metrics three_metrics(std::int64_t base = 1)
{
    return {{"likes", Fixed::from_int(base)}, {"post_engagement", Fixed::from_int(base + 1)},
        {"page_views", Fixed::from_int(base + 2)}};
}

inline Transaction deploy_tx(const Address& from, std::uint64_t nonce, std::uint64_t gas_limit = 100'000,
    std::uint64_t price = 10)
{
    return Transaction::make(from, nonce,
        ContractCreate{std::string{report_v1::kHandlerId}, report_v1::encode_metrics(three_metrics(1000))}, gas_limit,
        price);
}

inline Transaction call_tx(const Address& from, std::uint64_t nonce, const Address& target, std::string method,
    Bytes args, std::uint64_t gas_limit = 100'000, std::uint64_t price = 10)
{
    return Transaction::make(from, nonce, ContractCall{target, std::move(method), std::move(args)}, gas_limit, price);
}
}  // namespace edublock::test
