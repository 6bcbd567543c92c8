// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace edublock
{
/// Domain error codes shared by every module. The service layer maps them
/// onto HTTP statuses, receipts carry their names as failure reasons.
enum class Errc
{
    // chain-core
    BadNonce,
    InsufficientBalance,
    UnknownSender,
    InvalidTransaction,
    EmptyMempool,
    SealFailure,
    CorruptRecord,
    IoFailure,
    // consensus
    Exhausted,
    NoStakers,
    UnknownProducer,
    DifficultyOutOfRange,
    // contract-vm
    UnknownHandler,
    AddressCollision,
    OutOfGas,
    UnknownContract,
    UnknownMethod,
    ImmutableOverwrite,
    BadArguments,
    WriteInViewCall,
    // scaling
    MixedRounds,
    DuplicateTeam,
    ZeroShards,
    CrossShardTx,
    // simulation
    AlreadyInitialized,
    NotInitialized,
    WrongRound,
    UnknownTeam,
    DuplicateDecision,
    BudgetMismatch,
    UnknownDevice,
    MissingDecisions,
    SimulationComplete,
    InvalidConfig,
    // metrics
    NegativeDuration,
    // general
    MalformedInput,
    Overflow,
    NotFound,
};

std::string_view to_string(Errc code) noexcept;
std::optional<Errc> parse_errc(std::string_view name) noexcept;

class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string{to_string(code)} + (detail.empty() ? "" : ": " + detail)),
        code_{code},
        detail_{detail}
    {}

    explicit Error(Errc code) : Error(code, {}) {}

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};
}  // namespace edublock
