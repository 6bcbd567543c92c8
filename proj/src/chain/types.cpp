// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/chain/types.hpp>
#include <edublock/error.hpp>

namespace edublock
{
namespace
{
void encode_seal(Encoder& enc, const ConsensusSeal& seal)
{
    if (const auto* pow = std::get_if<PowSeal>(&seal))
        enc.u8(0).u64(pow->pow_nonce).u8(pow->difficulty_bits);
    else
    {
        const auto& pos = std::get<PosSeal>(seal);
        enc.u8(1).fixed(pos.validator.bytes).fixed(pos.selection_seed.bytes);
    }
}
}  // namespace

std::string_view to_string(ConsensusMode mode) noexcept
{
    return mode == ConsensusMode::pow ? "pow" : "pos";
}

ConsensusMode parse_consensus_mode(std::string_view text)
{
    if (text == "pow")
        return ConsensusMode::pow;
    if (text == "pos")
        return ConsensusMode::pos;
    throw Error{Errc::InvalidConfig, "unknown consensus mode '" + std::string{text} + "'"};
}

Bytes Transaction::encode_body() const
{
    Encoder enc;
    enc.fixed(sender.bytes).u64(nonce);
    if (const auto* create = std::get_if<ContractCreate>(&kind))
        enc.u8(0).str(create->handler_id).bytes(create->init_payload);
    else
    {
        const auto& call = std::get<ContractCall>(kind);
        enc.u8(1).fixed(call.target.bytes).str(call.method).bytes(call.args);
    }
    enc.u64(gas_limit).u64(gas_price);
    return enc.take();
}

Transaction Transaction::make(
    Address sender, std::uint64_t nonce, TxKind kind, std::uint64_t gas_limit, std::uint64_t gas_price)
{
    Transaction tx{sender, nonce, std::move(kind), gas_limit, gas_price, {}};
    tx.tx_id = tx.compute_id();
    return tx;
}

Bytes HeaderFields::encode() const
{
    Encoder enc;
    enc.u64(height).fixed(parent_hash.bytes).i64(timestamp).fixed(tx_root.bytes);
    encode_seal(enc, seal);
    enc.fixed(state_digest.bytes);
    return enc.take();
}

Hash256 hash_block(const HeaderFields& header)
{
    return sha256(header.encode());
}

Hash256 tx_list_digest(const std::vector<Transaction>& txs)
{
    Encoder enc;
    enc.u32(static_cast<std::uint32_t>(txs.size()));
    for (const auto& tx : txs)
        enc.fixed(tx.tx_id.bytes);
    return sha256(enc.data());
}

HeaderFields Block::header() const
{
    return {height, parent_hash, timestamp, tx_list_digest(transactions), seal, state_digest};
}
}  // namespace edublock
