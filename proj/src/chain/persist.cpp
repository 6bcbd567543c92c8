// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/chain/persist.hpp>
#include <edublock/error.hpp>

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace edublock
{
namespace
{
using json = nlohmann::ordered_json;

json seal_to_json(const ConsensusSeal& seal)
{
    if (const auto* pow = std::get_if<PowSeal>(&seal))
        return {{"type", "pow"}, {"pow_nonce", pow->pow_nonce}, {"difficulty_bits", pow->difficulty_bits}};
    const auto& pos = std::get<PosSeal>(seal);
    return {{"type", "pos"}, {"validator", pos.validator.hex()}, {"selection_seed", pos.selection_seed.hex()}};
}

ConsensusSeal seal_from_json(const json& j)
{
    const auto type = j.at("type").get<std::string>();
    if (type == "pow")
    {
        const auto bits = j.at("difficulty_bits").get<unsigned>();
        if (bits > 255)
            throw Error{Errc::CorruptRecord, "difficulty_bits out of range"};
        return PowSeal{j.at("pow_nonce").get<std::uint64_t>(), static_cast<std::uint8_t>(bits)};
    }
    if (type == "pos")
        return PosSeal{Address::from_hex(j.at("validator").get<std::string>()),
            Hash256::from_hex(j.at("selection_seed").get<std::string>())};
    throw Error{Errc::CorruptRecord, "unknown seal type"};
}

json tx_to_json(const Transaction& tx)
{
    json j;
    j["tx_id"] = tx.tx_id.hex();
    j["sender"] = tx.sender.hex();
    j["nonce"] = tx.nonce;
    if (const auto* create = std::get_if<ContractCreate>(&tx.kind))
    {
        j["kind"] = "create";
        j["handler_id"] = create->handler_id;
        j["init_payload"] = to_hex(create->init_payload);
    }
    else
    {
        const auto& call = std::get<ContractCall>(tx.kind);
        j["kind"] = "call";
        j["target"] = call.target.hex();
        j["method"] = call.method;
        j["args"] = to_hex(call.args);
    }
    j["gas_limit"] = tx.gas_limit;
    j["gas_price"] = tx.gas_price;
    return j;
}

Transaction tx_from_json(const json& j)
{
    Transaction tx;
    tx.tx_id = Hash256::from_hex(j.at("tx_id").get<std::string>());
    tx.sender = Address::from_hex(j.at("sender").get<std::string>());
    tx.nonce = j.at("nonce").get<std::uint64_t>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "create")
        tx.kind = ContractCreate{j.at("handler_id").get<std::string>(),
            from_hex(j.at("init_payload").get<std::string>())};
    else if (kind == "call")
        tx.kind = ContractCall{Address::from_hex(j.at("target").get<std::string>()), j.at("method").get<std::string>(),
            from_hex(j.at("args").get<std::string>())};
    else
        throw Error{Errc::CorruptRecord, "unknown transaction kind"};
    tx.gas_limit = j.at("gas_limit").get<std::uint64_t>();
    tx.gas_price = j.at("gas_price").get<std::uint64_t>();
    return tx;
}

json genesis_to_json(const GenesisSpec& g)
{
    json alloc = json::array();
    for (const auto& a : g.alloc)
        alloc.push_back(
            {{"address", a.address.hex()}, {"balance", a.balance}, {"nonce", a.nonce}, {"stake", a.stake}});
    json contracts = json::array();
    for (const auto& c : g.contracts)
    {
        json storage = json::array();
        for (const auto& [key, value] : c.storage)
            storage.push_back({{"key", to_hex(key)}, {"value", to_hex(value)}});
        contracts.push_back({{"address", c.address.hex()}, {"handler_id", c.handler_id}, {"storage", storage}});
    }
    const auto& gas = g.params.gas;
    return {{"hash", kHashName},
        {"consensus", to_string(g.params.mode)},
        {"difficulty_bits", g.params.difficulty_bits},
        {"coinbase", g.params.coinbase.hex()},
        {"gas_schedule",
            {{"tx_base", gas.tx_base},
                {"storage_write_per_key", gas.storage_write_per_key},
                {"storage_read_per_key", gas.storage_read_per_key},
                {"create_base", gas.create_base}}},
        {"alloc", alloc},
        {"contracts", contracts}};
}

GenesisSpec genesis_from_json(const json& j)
{
    if (j.at("hash").get<std::string>() != kHashName)
        throw Error{Errc::CorruptRecord, "chain file uses a different hash function"};
    GenesisSpec g;
    g.params.mode = parse_consensus_mode(j.at("consensus").get<std::string>());
    g.params.difficulty_bits = j.at("difficulty_bits").get<unsigned>();
    g.params.coinbase = Address::from_hex(j.at("coinbase").get<std::string>());
    const auto& gas = j.at("gas_schedule");
    g.params.gas = {gas.at("tx_base").get<std::uint64_t>(), gas.at("storage_write_per_key").get<std::uint64_t>(),
        gas.at("storage_read_per_key").get<std::uint64_t>(), gas.at("create_base").get<std::uint64_t>()};
    for (const auto& a : j.at("alloc"))
        g.alloc.push_back({Address::from_hex(a.at("address").get<std::string>()), a.at("balance").get<std::uint64_t>(),
            a.at("nonce").get<std::uint64_t>(), a.at("stake").get<std::uint64_t>()});
    for (const auto& c : j.at("contracts"))
    {
        Contract contract{Address::from_hex(c.at("address").get<std::string>()), c.at("handler_id").get<std::string>(),
            {}};
        for (const auto& e : c.at("storage"))
            contract.storage.emplace(from_hex(e.at("key").get<std::string>()), from_hex(e.at("value").get<std::string>()));
        g.contracts.push_back(std::move(contract));
    }
    return g;
}
}  // namespace

std::string encode_block_record(const Block& block, const GenesisSpec* genesis)
{
    json txs = json::array();
    for (const auto& tx : block.transactions)
        txs.push_back(tx_to_json(tx));
    json j;
    j["height"] = block.height;
    j["parent_hash"] = block.parent_hash.hex();
    j["timestamp"] = block.timestamp;
    j["transactions"] = std::move(txs);
    j["seal"] = seal_to_json(block.seal);
    j["state_digest"] = block.state_digest.hex();
    j["block_hash"] = block.block_hash.hex();
    if (genesis != nullptr)
        j["genesis"] = genesis_to_json(*genesis);
    return j.dump();
}

DecodedRecord decode_block_record(std::string_view line)
{
    DecodedRecord out;
    try
    {
        const auto j = json::parse(line);
        auto& b = out.block;
        b.height = j.at("height").get<std::uint64_t>();
        b.parent_hash = Hash256::from_hex(j.at("parent_hash").get<std::string>());
        b.timestamp = j.at("timestamp").get<std::int64_t>();
        for (const auto& tx : j.at("transactions"))
            b.transactions.push_back(tx_from_json(tx));
        b.seal = seal_from_json(j.at("seal"));
        b.state_digest = Hash256::from_hex(j.at("state_digest").get<std::string>());
        b.block_hash = Hash256::from_hex(j.at("block_hash").get<std::string>());
        if (j.contains("genesis"))
            out.genesis = genesis_from_json(j.at("genesis"));
    }
    catch (const json::exception& e)
    {
        throw Error{Errc::CorruptRecord, e.what()};
    }
    catch (const Error& e)
    {
        throw Error{Errc::CorruptRecord, e.detail()};
    }

    if (encode_block_record(out.block, out.genesis ? &*out.genesis : nullptr) != line)
        throw Error{Errc::CorruptRecord, "record is not in canonical form"};
    for (const auto& tx : out.block.transactions)
        if (tx.compute_id() != tx.tx_id)
            throw Error{Errc::CorruptRecord, "tx_id mismatch " + tx.tx_id.hex()};
    if (out.block.compute_hash() != out.block.block_hash)
        throw Error{Errc::CorruptRecord, "block_hash mismatch at height " + std::to_string(out.block.height)};
    return out;
}

void persist(const Ledger& ledger, const std::filesystem::path& path)
{
    std::ofstream file{path, std::ios::binary | std::ios::trunc};
    if (!file)
        throw Error{Errc::IoFailure, "cannot open " + path.string()};
    for (std::size_t i = 0; i < ledger.blocks.size(); ++i)
        file << encode_block_record(ledger.blocks[i], i == 0 ? &ledger.genesis : nullptr) << '\n';
    if (!file.flush())
        throw Error{Errc::IoFailure, "write failed for " + path.string()};
}

Ledger load(const std::filesystem::path& path)
{
    std::ifstream file{path, std::ios::binary};
    if (!file)
        throw Error{Errc::IoFailure, "cannot open " + path.string()};
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_ledger(buffer.str());
}

Ledger parse_ledger(std::string_view content)
{
    Ledger ledger;
    std::size_t pos = 0;
    for (std::size_t record = 0; pos < content.size(); ++record)
    {
        const auto end = content.find('\n', pos);
        if (end == std::string::npos)
            throw Error{Errc::CorruptRecord, "record " + std::to_string(record) + ": unterminated (truncated file?)"};
        const auto line = content.substr(pos, end - pos);
        pos = end + 1;
        try
        {
            auto decoded = decode_block_record(line);
            if ((record == 0) != decoded.genesis.has_value())
                throw Error{Errc::CorruptRecord, "genesis description must appear on the first record only"};
            if (decoded.genesis)
                ledger.genesis = std::move(*decoded.genesis);
            ledger.blocks.push_back(std::move(decoded.block));
        }
        catch (const Error& e)
        {
            throw Error{Errc::CorruptRecord, "record " + std::to_string(record) + ": " + e.detail()};
        }
    }
    return ledger;
}

void ChainFileAppender::reset(const Ledger& ledger)
{
    persist(ledger, path_);
    written_ = ledger.blocks.size();
}

void ChainFileAppender::sync(const Chain& chain)
{
    const auto blocks = chain.blocks_from(written_);
    if (blocks.empty())
        return;
    std::ofstream file{path_, std::ios::binary | std::ios::app};
    if (!file)
        throw Error{Errc::IoFailure, "cannot open " + path_.string()};
    for (const auto& block : blocks)
        file << encode_block_record(block, block.height == 0 ? &chain.genesis() : nullptr) << '\n';
    if (!file.flush())
        throw Error{Errc::IoFailure, "write failed for " + path_.string()};
    written_ += blocks.size();
}
}  // namespace edublock
