// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/clock.hpp>

#include <chrono>
#include <stdexcept>

namespace edublock
{
std::int64_t SystemClock::now_ms()
{
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

VirtualClock::VirtualClock(std::int64_t start_ms, std::int64_t step_ms, std::uint64_t hashes_per_second)
  : now_{start_ms}, step_{step_ms}, rate_{hashes_per_second}
{
    if (step_ms < 0 || hashes_per_second == 0)
        throw std::invalid_argument{"virtual clock needs step >= 0 and a positive hash rate"};
}

std::int64_t VirtualClock::now_ms()
{
    std::lock_guard lock{mutex_};
    const auto t = now_;
    now_ += step_;
    return t;
}

void VirtualClock::charge_hashes(std::uint64_t hashes)
{
    std::lock_guard lock{mutex_};
    const unsigned __int128 total = static_cast<unsigned __int128>(hashes) * 1000 + hash_remainder_;
    now_ += static_cast<std::int64_t>(total / rate_);
    hash_remainder_ = static_cast<std::uint64_t>(total % rate_);
}

void VirtualClock::advance(std::int64_t ms)
{
    std::lock_guard lock{mutex_};
    now_ += ms;
}

std::int64_t VirtualClock::peek() const
{
    std::lock_guard lock{mutex_};
    return now_;
}
}  // namespace edublock
