// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/fixed.hpp>
#include <edublock/vm/vm.hpp>

#include <string>
#include <string_view>
#include <vector>

/// The activity-report contract. Storage layout (all keys length-prefixed,
/// integers big-endian, see docs/FORMATS.md):
///
///   str("bench")  u32(index)                        -> metric entry
///   str("report") str(team) u64(round) u32(index)   -> metric entry
///   str("digest") u64(round)                        -> 32-byte batch digest
///
/// A metric entry is str(name) i64(fixed-point raw value, scale 10^4).
/// Reports and digests are write-once.
namespace edublock::report_v1
{
inline constexpr std::string_view kHandlerId = "report_v1";

struct MetricEntry
{
    std::string name;
    Fixed value;

    bool operator==(const MetricEntry&) const = default;
};

using Metrics = std::vector<MetricEntry>;

/// u32 count followed by each entry.
Bytes encode_metrics(const Metrics& metrics);
Metrics decode_metrics(ByteView data);

Bytes commit_report_args(std::string_view team, std::uint64_t round, const Metrics& metrics);
Bytes get_report_args(std::string_view team, std::uint64_t round);
Bytes commit_digest_args(std::uint64_t round, const Hash256& digest);
Bytes get_digest_args(std::uint64_t round);

Bytes benchmark_key(std::uint32_t index);
Bytes report_prefix(std::string_view team, std::uint64_t round);
Bytes report_key(std::string_view team, std::uint64_t round, std::uint32_t index);
Bytes digest_key(std::uint64_t round);

/// Round number carried by commit_report / commit_digest arguments.
std::uint64_t round_of_call(std::string_view method, ByteView args);

class ReportHandler final : public vm::ContractHandler
{
public:
    void init(vm::StorageContext& storage, ByteView payload) const override;
    Bytes call(vm::StorageContext& storage, std::string_view method, ByteView args) const override;
};
}  // namespace edublock::report_v1
