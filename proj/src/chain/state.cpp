// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/chain/state.hpp>

namespace edublock
{
Bytes State::encode() const
{
    Encoder enc;
    enc.str(kHashName)
        .u8(static_cast<std::uint8_t>(params.mode))
        .u8(static_cast<std::uint8_t>(params.difficulty_bits))
        .fixed(params.coinbase.bytes)
        .u64(params.gas.tx_base)
        .u64(params.gas.storage_write_per_key)
        .u64(params.gas.storage_read_per_key)
        .u64(params.gas.create_base);

    enc.u32(static_cast<std::uint32_t>(accounts.size()));
    for (const auto& [address, account] : accounts)
        enc.fixed(address.bytes).u64(account.balance).u64(account.nonce).u64(account.stake);

    enc.u32(static_cast<std::uint32_t>(contracts.size()));
    for (const auto& [address, contract] : contracts)
    {
        enc.fixed(address.bytes).str(contract.handler_id).u32(static_cast<std::uint32_t>(contract.storage.size()));
        for (const auto& [key, value] : contract.storage)
            enc.bytes(key).bytes(value);
    }
    return enc.take();
}

Account* State::find_account(const Address& a)
{
    const auto it = accounts.find(a);
    return it == accounts.end() ? nullptr : &it->second;
}

const Account* State::find_account(const Address& a) const
{
    const auto it = accounts.find(a);
    return it == accounts.end() ? nullptr : &it->second;
}

Contract* State::find_contract(const Address& a)
{
    const auto it = contracts.find(a);
    return it == contracts.end() ? nullptr : &it->second;
}

const Contract* State::find_contract(const Address& a) const
{
    const auto it = contracts.find(a);
    return it == contracts.end() ? nullptr : &it->second;
}
}  // namespace edublock
