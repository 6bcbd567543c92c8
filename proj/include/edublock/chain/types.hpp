// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/bytes.hpp>
#include <edublock/hash.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace edublock
{
struct GasSchedule
{
    std::uint64_t tx_base = 21'000;
    std::uint64_t storage_write_per_key = 5'000;
    std::uint64_t storage_read_per_key = 200;
    std::uint64_t create_base = 32'000;

    bool operator==(const GasSchedule&) const = default;
};

enum class ConsensusMode : std::uint8_t
{
    pow = 0,
    pos = 1,
};

std::string_view to_string(ConsensusMode mode) noexcept;
ConsensusMode parse_consensus_mode(std::string_view text);

/// Highest difficulty accepted for desk-scale operation.
inline constexpr unsigned kMaxDeskDifficulty = 32;

/// Chain-wide rules. Committed into every state digest, so a ledger cannot
/// be replayed under different rules without detection.
struct ChainParams
{
    ConsensusMode mode = ConsensusMode::pow;
    unsigned difficulty_bits = 16;
    /// Fee recipient of proof-of-work blocks (single producer).
    Address coinbase{};
    GasSchedule gas{};

    bool operator==(const ChainParams&) const = default;
};

struct Account
{
    Address address;
    std::uint64_t balance = 0;  // wei
    std::uint64_t nonce = 0;
    std::uint64_t stake = 0;  // wei

    bool operator==(const Account&) const = default;
};

struct ContractCreate
{
    std::string handler_id;
    Bytes init_payload;

    bool operator==(const ContractCreate&) const = default;
};

struct ContractCall
{
    Address target;
    std::string method;
    Bytes args;

    bool operator==(const ContractCall&) const = default;
};

using TxKind = std::variant<ContractCreate, ContractCall>;

struct Transaction
{
    Address sender;
    std::uint64_t nonce = 0;
    TxKind kind;
    std::uint64_t gas_limit = 0;
    std::uint64_t gas_price = 0;  // wei per gas unit
    Hash256 tx_id;

    /// Canonical serialization of every field except tx_id.
    Bytes encode_body() const;
    Hash256 compute_id() const { return sha256(encode_body()); }

    /// Builds a transaction with its tx_id filled in.
    static Transaction make(Address sender, std::uint64_t nonce, TxKind kind, std::uint64_t gas_limit,
        std::uint64_t gas_price);

    bool operator==(const Transaction&) const = default;
};

struct PowSeal
{
    std::uint64_t pow_nonce = 0;
    std::uint8_t difficulty_bits = 0;

    bool operator==(const PowSeal&) const = default;
};

struct PosSeal
{
    Address validator;
    Hash256 selection_seed;

    bool operator==(const PosSeal&) const = default;
};

using ConsensusSeal = std::variant<PowSeal, PosSeal>;

/// Everything that goes into a block hash.
struct HeaderFields
{
    std::uint64_t height = 0;
    Hash256 parent_hash{};
    std::int64_t timestamp = 0;
    Hash256 tx_root{};
    ConsensusSeal seal{};
    Hash256 state_digest{};

    Bytes encode() const;
};

Hash256 hash_block(const HeaderFields& header);

/// Digest of an ordered transaction list: sha256(u32 count || tx_id...).
Hash256 tx_list_digest(const std::vector<Transaction>& txs);

struct Block
{
    std::uint64_t height = 0;
    Hash256 parent_hash{};
    std::int64_t timestamp = 0;
    std::vector<Transaction> transactions;
    ConsensusSeal seal{};
    Hash256 state_digest{};
    Hash256 block_hash{};

    HeaderFields header() const;
    Hash256 compute_hash() const { return hash_block(header()); }

    bool operator==(const Block&) const = default;
};

struct Receipt
{
    Hash256 tx_id;
    bool success = true;
    std::string failure_reason;
    std::uint64_t gas_used = 0;
    std::optional<Address> created_address;
    Bytes output;

    bool operator==(const Receipt&) const = default;
};
}  // namespace edublock
