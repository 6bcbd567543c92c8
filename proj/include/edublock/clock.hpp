// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <mutex>

namespace edublock
{
/// Time source injected into block production and finality measurement.
class Clock
{
public:
    virtual ~Clock() = default;

    /// Milliseconds since the Unix epoch (or since the virtual origin).
    virtual std::int64_t now_ms() = 0;

    /// Informs the clock of proof-of-work hashing just performed. Wall clocks
    /// ignore it; the virtual clock converts it into elapsed time.
    virtual void charge_hashes(std::uint64_t /*hashes*/) {}
};

class SystemClock final : public Clock
{
public:
    std::int64_t now_ms() override;
};

/// Deterministic clock for reproducible runs. Each reading advances time by
/// step_ms, and mining work advances it at a simulated hash rate.
class VirtualClock final : public Clock
{
public:
    explicit VirtualClock(std::int64_t start_ms = 0, std::int64_t step_ms = 1,
        std::uint64_t hashes_per_second = 32'768);

    std::int64_t now_ms() override;
    void charge_hashes(std::uint64_t hashes) override;
    void advance(std::int64_t ms);

    /// Current time without advancing.
    std::int64_t peek() const;

private:
    mutable std::mutex mutex_;
    std::int64_t now_;
    std::int64_t step_;
    std::uint64_t rate_;
    std::uint64_t hash_remainder_ = 0;  // hashes * 1000 not yet converted into whole ms
};
}  // namespace edublock
