// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/types.hpp>

#include <map>
#include <string>

namespace edublock
{
struct Contract
{
    Address address;
    std::string handler_id;
    std::map<Bytes, Bytes> storage;

    bool operator==(const Contract&) const = default;
};

/// World state: chain rules, externally owned accounts and contracts.
struct State
{
    ChainParams params;
    std::map<Address, Account> accounts;
    std::map<Address, Contract> contracts;

    /// Canonical serialization (docs/FORMATS.md); ordered maps give the
    /// ascending address and key order the format requires.
    Bytes encode() const;
    Hash256 digest() const { return sha256(encode()); }

    Account* find_account(const Address& a);
    const Account* find_account(const Address& a) const;
    Contract* find_contract(const Address& a);
    const Contract* find_contract(const Address& a) const;

    /// True if either an account or a contract lives at the address.
    bool occupied(const Address& a) const { return accounts.contains(a) || contracts.contains(a); }

    bool operator==(const State&) const = default;
};
}  // namespace edublock
