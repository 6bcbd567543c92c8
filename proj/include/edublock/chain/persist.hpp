// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/chain.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace edublock
{
/// One chain-file line for a block. The genesis record additionally carries
/// the genesis description under "genesis". Field order and encoding are
/// fixed (docs/FORMATS.md); the output has no insignificant whitespace.
std::string encode_block_record(const Block& block, const GenesisSpec* genesis = nullptr);

struct DecodedRecord
{
    Block block;
    std::optional<GenesisSpec> genesis;
};

/// Parses one line. Throws Error(CorruptRecord) if the line is not the exact
/// canonical encoding of a block, or if a tx_id or the block hash does not
/// recompute.
DecodedRecord decode_block_record(std::string_view line);

/// Writes the whole ledger, one record per line, genesis first.
void persist(const Ledger& ledger, const std::filesystem::path& path);

/// Reads a chain file. An empty file yields an empty ledger. Errors name the
/// zero-based record index.
Ledger load(const std::filesystem::path& path);

/// Same as load, over the text of a chain file.
Ledger parse_ledger(std::string_view content);

/// Appends blocks not yet written. Used by the long-running service so the
/// file grows one record per committed block.
class ChainFileAppender
{
public:
    explicit ChainFileAppender(std::filesystem::path path) : path_{std::move(path)} {}

    /// Truncates the file and writes the full ledger.
    void reset(const Ledger& ledger);
    /// Appends blocks beyond those already written.
    void sync(const Chain& chain);

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
    std::uint64_t written_ = 0;
};
}  // namespace edublock
