// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0

#include <edublock/error.hpp>

namespace edublock
{
std::string_view to_string(Errc code) noexcept
{
    switch (code)
    {
    case Errc::BadNonce: return "BadNonce";
    case Errc::InsufficientBalance: return "InsufficientBalance";
    case Errc::UnknownSender: return "UnknownSender";
    case Errc::InvalidTransaction: return "InvalidTransaction";
    case Errc::EmptyMempool: return "EmptyMempool";
    case Errc::SealFailure: return "SealFailure";
    case Errc::CorruptRecord: return "CorruptRecord";
    case Errc::IoFailure: return "IoFailure";
    case Errc::Exhausted: return "Exhausted";
    case Errc::NoStakers: return "NoStakers";
    case Errc::UnknownProducer: return "UnknownProducer";
    case Errc::DifficultyOutOfRange: return "DifficultyOutOfRange";
    case Errc::UnknownHandler: return "UnknownHandler";
    case Errc::AddressCollision: return "AddressCollision";
    case Errc::OutOfGas: return "OutOfGas";
    case Errc::UnknownContract: return "UnknownContract";
    case Errc::UnknownMethod: return "UnknownMethod";
    case Errc::ImmutableOverwrite: return "ImmutableOverwrite";
    case Errc::BadArguments: return "BadArguments";
    case Errc::WriteInViewCall: return "WriteInViewCall";
    case Errc::MixedRounds: return "MixedRounds";
    case Errc::DuplicateTeam: return "DuplicateTeam";
    case Errc::ZeroShards: return "ZeroShards";
    case Errc::CrossShardTx: return "CrossShardTx";
    case Errc::AlreadyInitialized: return "AlreadyInitialized";
    case Errc::NotInitialized: return "NotInitialized";
    case Errc::WrongRound: return "WrongRound";
    case Errc::UnknownTeam: return "UnknownTeam";
    case Errc::DuplicateDecision: return "DuplicateDecision";
    case Errc::BudgetMismatch: return "BudgetMismatch";
    case Errc::UnknownDevice: return "UnknownDevice";
    case Errc::MissingDecisions: return "MissingDecisions";
    case Errc::SimulationComplete: return "SimulationComplete";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::NegativeDuration: return "NegativeDuration";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::Overflow: return "Overflow";
    case Errc::NotFound: return "NotFound";
    }
    return "Unknown";
}

std::optional<Errc> parse_errc(std::string_view name) noexcept
{
    for (int i = 0; i <= static_cast<int>(Errc::NotFound); ++i)
        if (to_string(static_cast<Errc>(i)) == name)
            return static_cast<Errc>(i);
    return std::nullopt;
}
}  // namespace edublock
