// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/state.hpp>
#include <edublock/error.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edublock::vm
{
/// Operation counts a call was charged for. Gas is always
/// base + reads * read_cost + writes * write_cost, except after OutOfGas
/// where the whole limit is charged.
struct ExecutionTrace
{
    bool create = false;
    std::uint32_t reads = 0;
    std::uint32_t writes = 0;
};

/// Gas predicted by the schedule for an operation trace.
std::uint64_t gas_for(const ExecutionTrace& trace, const GasSchedule& schedule);

/// Metered, journaled view of one contract's storage. Writes are buffered and
/// only applied by the runtime when the call succeeds.
class StorageContext
{
public:
    StorageContext(const std::map<Bytes, Bytes>& committed, const GasSchedule& schedule, std::uint64_t gas_limit,
        bool read_only);

    std::optional<Bytes> read(const Bytes& key);
    void write(Bytes key, Bytes value);

    /// Existence check used by write-once logic. Not charged: it is part of
    /// the write it guards.
    bool has_prefix(ByteView prefix) const;

    /// Every entry whose key starts with prefix, in key order; one read
    /// charge per entry returned.
    std::vector<std::pair<Bytes, Bytes>> read_prefix(ByteView prefix);

    void charge(std::uint64_t gas);

    std::uint64_t gas_used() const noexcept { return gas_used_; }
    const ExecutionTrace& trace() const noexcept { return trace_; }
    ExecutionTrace& trace() noexcept { return trace_; }
    std::map<Bytes, Bytes> take_writes() noexcept { return std::move(pending_); }

private:
    const std::map<Bytes, Bytes>& committed_;
    std::map<Bytes, Bytes> pending_;
    const GasSchedule& schedule_;
    std::uint64_t gas_limit_;
    std::uint64_t gas_used_ = 0;
    bool read_only_;
    ExecutionTrace trace_;
};

/// A registered native contract. Handlers are stateless; all contract state
/// lives in storage.
class ContractHandler
{
public:
    virtual ~ContractHandler() = default;

    virtual void init(StorageContext& storage, ByteView payload) const = 0;
    virtual Bytes call(StorageContext& storage, std::string_view method, ByteView args) const = 0;
};

/// Fixed set of handlers known to a node, keyed by handler id.
class HandlerRegistry
{
public:
    void add(std::string id, std::shared_ptr<const ContractHandler> handler);
    const ContractHandler* find(std::string_view id) const;
    std::vector<std::string> ids() const;

    /// Registry with the built-in report_v1 handler.
    static std::shared_ptr<HandlerRegistry> with_builtins();

private:
    std::map<std::string, std::shared_ptr<const ContractHandler>, std::less<>> handlers_;
};

struct ExecutionResult
{
    bool success = true;
    std::optional<Errc> failure;
    std::string detail;
    std::uint64_t gas_used = 0;
    std::optional<Address> created_address;
    Bytes output;
    ExecutionTrace trace;
};

/// Last 20 bytes of sha256(creator || u64 nonce).
Address derive_contract_address(const Address& creator, std::uint64_t nonce);

/// Runs a ContractCreate. Never throws for contract-level failures; those
/// come back as failure results and leave the state untouched.
ExecutionResult deploy_contract(State& state, const Transaction& tx, const HandlerRegistry& registry);

/// Runs a ContractCall, with the same failure contract as deploy_contract.
ExecutionResult call_contract(State& state, const Transaction& tx, const HandlerRegistry& registry);

/// Dispatches on the transaction kind.
ExecutionResult execute(State& state, const Transaction& tx, const HandlerRegistry& registry);

/// Read-only call outside any transaction (explorer and API reads). Throws
/// Error on failure, including WriteInViewCall if the method writes.
Bytes view_call(const State& state, const Address& target, std::string_view method, ByteView args,
    const HandlerRegistry& registry);
}  // namespace edublock::vm
