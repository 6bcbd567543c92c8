// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/vm/report_contract.hpp>
#include <edublock/vm/vm.hpp>

#include <algorithm>
#include <limits>

namespace edublock::vm
{
namespace
{
bool starts_with(const Bytes& key, ByteView prefix)
{
    return key.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), key.begin());
}

ExecutionResult failure_result(Errc code, std::string detail, std::uint64_t gas_used, const ExecutionTrace& trace)
{
    ExecutionResult r;
    r.success = false;
    r.failure = code;
    r.detail = std::move(detail);
    r.gas_used = gas_used;
    r.trace = trace;
    return r;
}

/// Maps a handler-raised error onto a failure result. OutOfGas consumes the
/// whole limit, every other failure pays for the work done so far.
ExecutionResult from_error(const Error& e, const StorageContext& ctx, std::uint64_t gas_limit)
{
    const auto gas = e.code() == Errc::OutOfGas ? gas_limit : ctx.gas_used();
    return failure_result(e.code(), e.what(), gas, ctx.trace());
}
}  // namespace

std::uint64_t gas_for(const ExecutionTrace& trace, const GasSchedule& schedule)
{
    return (trace.create ? schedule.create_base : schedule.tx_base) +
           trace.reads * schedule.storage_read_per_key + trace.writes * schedule.storage_write_per_key;
}

StorageContext::StorageContext(
    const std::map<Bytes, Bytes>& committed, const GasSchedule& schedule, std::uint64_t gas_limit, bool read_only)
  : committed_{committed}, schedule_{schedule}, gas_limit_{gas_limit}, read_only_{read_only}
{}

void StorageContext::charge(std::uint64_t gas)
{
    if (gas > gas_limit_ - gas_used_)
        throw Error{Errc::OutOfGas};
    gas_used_ += gas;
}

std::optional<Bytes> StorageContext::read(const Bytes& key)
{
    charge(schedule_.storage_read_per_key);
    ++trace_.reads;
    if (const auto it = pending_.find(key); it != pending_.end())
        return it->second;
    if (const auto it = committed_.find(key); it != committed_.end())
        return it->second;
    return std::nullopt;
}

void StorageContext::write(Bytes key, Bytes value)
{
    if (read_only_)
        throw Error{Errc::WriteInViewCall};
    charge(schedule_.storage_write_per_key);
    ++trace_.writes;
    pending_[std::move(key)] = std::move(value);
}

bool StorageContext::has_prefix(ByteView prefix) const
{
    const Bytes p{prefix.begin(), prefix.end()};
    for (const auto* m : {&pending_, &committed_})
    {
        const auto it = m->lower_bound(p);
        if (it != m->end() && starts_with(it->first, prefix))
            return true;
    }
    return false;
}

std::vector<std::pair<Bytes, Bytes>> StorageContext::read_prefix(ByteView prefix)
{
    const Bytes p{prefix.begin(), prefix.end()};
    std::map<Bytes, Bytes> merged;
    for (auto it = committed_.lower_bound(p); it != committed_.end() && starts_with(it->first, prefix); ++it)
        merged.insert(*it);
    for (auto it = pending_.lower_bound(p); it != pending_.end() && starts_with(it->first, prefix); ++it)
        merged.insert_or_assign(it->first, it->second);

    std::vector<std::pair<Bytes, Bytes>> out;
    for (auto& entry : merged)
    {
        charge(schedule_.storage_read_per_key);
        ++trace_.reads;
        out.emplace_back(entry.first, std::move(entry.second));
    }
    return out;
}

void HandlerRegistry::add(std::string id, std::shared_ptr<const ContractHandler> handler)
{
    handlers_.insert_or_assign(std::move(id), std::move(handler));
}

const ContractHandler* HandlerRegistry::find(std::string_view id) const
{
    const auto it = handlers_.find(id);
    return it == handlers_.end() ? nullptr : it->second.get();
}

std::vector<std::string> HandlerRegistry::ids() const
{
    std::vector<std::string> out;
    for (const auto& [id, _] : handlers_)
        out.push_back(id);
    return out;
}

std::shared_ptr<HandlerRegistry> HandlerRegistry::with_builtins()
{
    auto registry = std::make_shared<HandlerRegistry>();
    registry->add(std::string{report_v1::kHandlerId}, std::make_shared<report_v1::ReportHandler>());
    return registry;
}

Address derive_contract_address(const Address& creator, std::uint64_t nonce)
{
    Encoder enc;
    enc.fixed(creator.bytes).u64(nonce);
    const auto digest = sha256(enc.data());
    Address out;
    std::copy(digest.bytes.end() - Address::size, digest.bytes.end(), out.bytes.begin());
    return out;
}

ExecutionResult deploy_contract(State& state, const Transaction& tx, const HandlerRegistry& registry)
{
    const auto& create = std::get<ContractCreate>(tx.kind);
    const std::map<Bytes, Bytes> empty;
    StorageContext ctx{empty, state.params.gas, tx.gas_limit, false};
    ctx.trace().create = true;
    try
    {
        ctx.charge(state.params.gas.create_base);
        const auto* handler = registry.find(create.handler_id);
        if (handler == nullptr)
            throw Error{Errc::UnknownHandler, create.handler_id};
        const auto address = derive_contract_address(tx.sender, tx.nonce);
        if (state.occupied(address))
            throw Error{Errc::AddressCollision, address.hex()};

        handler->init(ctx, create.init_payload);

        state.contracts.emplace(address, Contract{address, create.handler_id, ctx.take_writes()});
        ExecutionResult r;
        r.gas_used = ctx.gas_used();
        r.created_address = address;
        r.trace = ctx.trace();
        return r;
    }
    catch (const Error& e)
    {
        return from_error(e, ctx, tx.gas_limit);
    }
}

ExecutionResult call_contract(State& state, const Transaction& tx, const HandlerRegistry& registry)
{
    const auto& call = std::get<ContractCall>(tx.kind);
    Contract* contract = state.find_contract(call.target);
    const std::map<Bytes, Bytes> empty;
    StorageContext ctx{contract ? contract->storage : empty, state.params.gas, tx.gas_limit, false};
    try
    {
        ctx.charge(state.params.gas.tx_base);
        if (contract == nullptr)
            throw Error{Errc::UnknownContract, call.target.hex()};
        const auto* handler = registry.find(contract->handler_id);
        if (handler == nullptr)
            throw Error{Errc::UnknownHandler, contract->handler_id};

        auto output = handler->call(ctx, call.method, call.args);

        for (auto& [key, value] : ctx.take_writes())
            contract->storage.insert_or_assign(key, std::move(value));
        ExecutionResult r;
        r.gas_used = ctx.gas_used();
        r.output = std::move(output);
        r.trace = ctx.trace();
        return r;
    }
    catch (const Error& e)
    {
        return from_error(e, ctx, tx.gas_limit);
    }
}

ExecutionResult execute(State& state, const Transaction& tx, const HandlerRegistry& registry)
{
    if (std::holds_alternative<ContractCreate>(tx.kind))
        return deploy_contract(state, tx, registry);
    return call_contract(state, tx, registry);
}

Bytes view_call(const State& state, const Address& target, std::string_view method, ByteView args,
    const HandlerRegistry& registry)
{
    const auto* contract = state.find_contract(target);
    if (contract == nullptr)
        throw Error{Errc::UnknownContract, target.hex()};
    const auto* handler = registry.find(contract->handler_id);
    if (handler == nullptr)
        throw Error{Errc::UnknownHandler, contract->handler_id};
    StorageContext ctx{contract->storage, state.params.gas, std::numeric_limits<std::uint64_t>::max(), true};
    return handler->call(ctx, method, args);
}
}  // namespace edublock::vm
