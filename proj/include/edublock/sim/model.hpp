// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/fixed.hpp>
#include <edublock/hash.hpp>
#include <edublock/vm/report_contract.hpp>

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edublock::sim
{
enum class Platform : std::uint8_t
{
    search,
    social,
    display,
    video,
};

inline constexpr std::array kPlatforms{Platform::search, Platform::social, Platform::display, Platform::video};

std::string_view to_string(Platform p) noexcept;
Platform parse_platform(std::string_view text);

enum class Metric : std::uint8_t
{
    likes,
    post_engagement,
    page_views,
};

inline constexpr std::array kMetrics{Metric::likes, Metric::post_engagement, Metric::page_views};

std::string_view to_string(Metric m) noexcept;

struct MetricValues
{
    Fixed likes;
    Fixed post_engagement;
    Fixed page_views;

    Fixed& operator[](Metric m) noexcept;
    Fixed operator[](Metric m) const noexcept;

    bool operator==(const MetricValues&) const = default;
};

/// Contract-side representation, in kMetrics order.
report_v1::Metrics to_contract_metrics(const MetricValues& values);
/// Inverse of to_contract_metrics; throws MalformedInput on any other shape.
MetricValues from_contract_metrics(const report_v1::Metrics& metrics);

enum class SpecTier : std::uint8_t
{
    low,
    mid,
    high,
};

std::string_view to_string(SpecTier t) noexcept;
SpecTier parse_spec_tier(std::string_view text);

struct DeviceSpec
{
    std::string device_id;
    SpecTier tier = SpecTier::mid;
    std::string target_market;
    std::set<std::string> target_keywords;

    bool operator==(const DeviceSpec&) const = default;
};

/// The three-device smartphone line used unless the config says otherwise.
std::vector<DeviceSpec> default_catalog();

struct SimulationConfig
{
    std::uint32_t team_count = 3;
    /// Iteration 0 is setup; rounds 1 .. total_rounds-1 are played.
    std::uint32_t total_rounds = 16;
    Fixed round_budget = Fixed::from_int(10'000);
    std::uint64_t seed = 0;
    MetricValues benchmarks{Fixed::from_int(1'000), Fixed::from_int(250), Fixed::from_int(5'000)};
    std::vector<DeviceSpec> device_catalog = default_catalog();
    std::string network_profile = "ethereum";

    /// Throws InvalidConfig.
    void validate() const;
    std::uint64_t last_round() const noexcept { return total_rounds - 1; }
    /// "team-1" ... "team-N".
    std::vector<std::string> team_names() const;
    const DeviceSpec* find_device(std::string_view id) const;

    bool operator==(const SimulationConfig&) const = default;
};

using Budgets = std::array<Fixed, kPlatforms.size()>;

struct RoundDecision
{
    std::string team;
    std::uint64_t round = 0;
    std::string chosen_device;
    Budgets budgets{};
    std::set<std::string> keywords;

    Fixed budget(Platform p) const noexcept { return budgets[static_cast<std::size_t>(p)]; }
    bool operator==(const RoundDecision&) const = default;
};

/// Throws BudgetMismatch (sum differs from round_budget or an amount is
/// negative) or UnknownDevice.
void validate_decision(const RoundDecision& decision, const SimulationConfig& config);

struct ActivityReport
{
    std::string team;
    std::uint64_t round = 0;
    MetricValues metrics;

    bool operator==(const ActivityReport&) const = default;
};

/// Round-0 report: every team starts at the benchmarks.
ActivityReport baseline_report(std::string team, const MetricValues& benchmarks);

/// str(team) u64(round) followed by the contract metrics encoding. This is
/// exactly what is recoverable from on-chain storage for the report.
Bytes encode_report(const ActivityReport& report);

/// sha256(u32 count || encode_report(r) ...).
Hash256 digest_reports(std::span<const ActivityReport> reports);

Bytes encode_decision(const RoundDecision& decision);
RoundDecision decode_decision(ByteView data);

/// Market tag in demand for a round: target_market of catalog entry
/// sha256(u64 seed || u64 round)[0] mod catalog size.
const std::string& demand_tag(const SimulationConfig& config, std::uint64_t round);

/// Effectiveness of a platform's spend on a metric (fixed-point).
Fixed effectiveness(Metric m, Platform p) noexcept;

/// Deterministic response model. For each metric m:
///
///   gain_m = benchmark_m * (sum_p eff(m,p) * budget_p) / round_budget
///            * fit * (1 + keyword_bonus)
///
/// fit is 1.2 when the chosen device targets the round's demand tag, else
/// 1.0; keyword_bonus is 0.1 when the decision's keywords intersect the
/// device's target keywords, else 0. The product is evaluated exactly in
/// 128-bit integers and rounded half-up once to four decimals.
ActivityReport compute_report(const ActivityReport& previous, const RoundDecision& decision,
    const SimulationConfig& config);

/// Reproducible stand-in for a student team. Budgets are split by
/// largest-remainder allocation so they sum exactly to round_budget.
RoundDecision scripted_agent_decide(
    const SimulationConfig& config, std::string_view team, std::uint64_t round, std::uint64_t seed);
}  // namespace edublock::sim
