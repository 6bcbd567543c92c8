// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/error.hpp>
#include <edublock/sim/model.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace edublock::sim
{
namespace
{
constexpr std::int64_t kScale = Fixed::kScale;

// Rows follow kMetrics, columns follow kPlatforms (search, social, display, video).
constexpr std::int64_t kEffectiveness[3][4] = {
    {1'000, 10'000, 2'000, 5'000},  // likes
    {2'000, 8'000, 2'000, 8'000},   // post_engagement
    {10'000, 3'000, 6'000, 3'000},  // page_views
};

constexpr std::int64_t kFitMatch = 12'000;
constexpr std::int64_t kFitNeutral = 10'000;
constexpr std::int64_t kKeywordBonus = 11'000;
constexpr std::int64_t kNoBonus = 10'000;

std::uint64_t first_u64(const Hash256& h)
{
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i)
        v = (v << 8) | h.bytes[i];
    return v;
}
}  // namespace

std::string_view to_string(Platform p) noexcept
{
    switch (p)
    {
    case Platform::search: return "search";
    case Platform::social: return "social";
    case Platform::display: return "display";
    case Platform::video: return "video";
    }
    return "?";
}

Platform parse_platform(std::string_view text)
{
    for (const auto p : kPlatforms)
        if (to_string(p) == text)
            return p;
    throw Error{Errc::MalformedInput, "unknown platform '" + std::string{text} + "'"};
}

std::string_view to_string(Metric m) noexcept
{
    switch (m)
    {
    case Metric::likes: return "likes";
    case Metric::post_engagement: return "post_engagement";
    case Metric::page_views: return "page_views";
    }
    return "?";
}

Fixed& MetricValues::operator[](Metric m) noexcept
{
    switch (m)
    {
    case Metric::likes: return likes;
    case Metric::post_engagement: return post_engagement;
    case Metric::page_views: break;
    }
    return page_views;
}

Fixed MetricValues::operator[](Metric m) const noexcept
{
    return const_cast<MetricValues&>(*this)[m];
}

report_v1::Metrics to_contract_metrics(const MetricValues& values)
{
    report_v1::Metrics out;
    for (const auto m : kMetrics)
        out.push_back({std::string{to_string(m)}, values[m]});
    return out;
}

MetricValues from_contract_metrics(const report_v1::Metrics& metrics)
{
    if (metrics.size() != kMetrics.size())
        throw Error{Errc::MalformedInput, "expected exactly three metrics"};
    MetricValues out;
    for (std::size_t i = 0; i < kMetrics.size(); ++i)
    {
        if (metrics[i].name != to_string(kMetrics[i]))
            throw Error{Errc::MalformedInput, "unexpected metric '" + metrics[i].name + "'"};
        out[kMetrics[i]] = metrics[i].value;
    }
    return out;
}

std::string_view to_string(SpecTier t) noexcept
{
    switch (t)
    {
    case SpecTier::low: return "low";
    case SpecTier::mid: return "mid";
    case SpecTier::high: return "high";
    }
    return "?";
}

SpecTier parse_spec_tier(std::string_view text)
{
    for (const auto t : {SpecTier::low, SpecTier::mid, SpecTier::high})
        if (to_string(t) == text)
            return t;
    throw Error{Errc::InvalidConfig, "unknown spec tier '" + std::string{text} + "'"};
}

std::vector<DeviceSpec> default_catalog()
{
    return {
        {"nova-lite", SpecTier::low, "budget", {"affordable", "battery life", "value"}},
        {"nova", SpecTier::mid, "mainstream", {"camera", "fast charging", "5g"}},
        {"nova-pro", SpecTier::high, "premium", {"flagship", "pro camera", "titanium"}},
    };
}

void SimulationConfig::validate() const
{
    const auto fail = [](const std::string& why) { return Error{Errc::InvalidConfig, why}; };
    if (team_count == 0)
        throw fail("team_count must be at least 1");
    if (total_rounds < 2)
        throw fail("total_rounds must be at least 2 (setup plus one round)");
    if (round_budget <= Fixed{})
        throw fail("round_budget must be positive");
    if (device_catalog.size() != 3)
        throw fail("device_catalog must have exactly 3 devices");
    std::set<std::string_view> ids;
    for (const auto& d : device_catalog)
        if (d.device_id.empty() || !ids.insert(d.device_id).second)
            throw fail("device ids must be non-empty and unique");
    for (const auto m : kMetrics)
        if (benchmarks[m] < Fixed{})
            throw fail("benchmarks must be non-negative");
    if (network_profile.empty())
        throw fail("network_profile must be set");
}

std::vector<std::string> SimulationConfig::team_names() const
{
    std::vector<std::string> out;
    for (std::uint32_t i = 1; i <= team_count; ++i)
        out.push_back("team-" + std::to_string(i));
    return out;
}

const DeviceSpec* SimulationConfig::find_device(std::string_view id) const
{
    const auto it = std::find_if(
        device_catalog.begin(), device_catalog.end(), [&](const DeviceSpec& d) { return d.device_id == id; });
    return it == device_catalog.end() ? nullptr : &*it;
}

void validate_decision(const RoundDecision& decision, const SimulationConfig& config)
{
    if (config.find_device(decision.chosen_device) == nullptr)
        throw Error{Errc::UnknownDevice, decision.chosen_device};
    Fixed total;
    for (const auto amount : decision.budgets)
    {
        if (amount < Fixed{})
            throw Error{Errc::BudgetMismatch, "negative platform budget"};
        total += amount;
    }
    if (total != config.round_budget)
        throw Error{Errc::BudgetMismatch, "budgets sum to " + total.str() + ", round budget is " +
                                              config.round_budget.str()};
}

ActivityReport baseline_report(std::string team, const MetricValues& benchmarks)
{
    return {std::move(team), 0, benchmarks};
}

Bytes encode_report(const ActivityReport& report)
{
    Encoder enc;
    enc.str(report.team).u64(report.round).raw(report_v1::encode_metrics(to_contract_metrics(report.metrics)));
    return enc.take();
}

Hash256 digest_reports(std::span<const ActivityReport> reports)
{
    Encoder enc;
    enc.u32(static_cast<std::uint32_t>(reports.size()));
    for (const auto& r : reports)
        enc.raw(encode_report(r));
    return sha256(enc.data());
}

Bytes encode_decision(const RoundDecision& d)
{
    Encoder enc;
    enc.str(d.team).u64(d.round).str(d.chosen_device);
    for (const auto amount : d.budgets)
        enc.i64(amount.raw());
    enc.u32(static_cast<std::uint32_t>(d.keywords.size()));
    for (const auto& k : d.keywords)
        enc.str(k);
    return enc.take();
}

RoundDecision decode_decision(ByteView data)
{
    Decoder dec{data};
    RoundDecision d;
    d.team = dec.str();
    d.round = dec.u64();
    d.chosen_device = dec.str();
    for (auto& amount : d.budgets)
        amount = Fixed::from_raw(dec.i64());
    const auto n = dec.u32();
    for (std::uint32_t i = 0; i < n; ++i)
        d.keywords.insert(dec.str());
    dec.expect_end();
    return d;
}

const std::string& demand_tag(const SimulationConfig& config, std::uint64_t round)
{
    Encoder enc;
    enc.u64(config.seed).u64(round);
    const auto h = sha256(enc.data());
    return config.device_catalog[h.bytes[0] % config.device_catalog.size()].target_market;
}

Fixed effectiveness(Metric m, Platform p) noexcept
{
    return Fixed::from_raw(kEffectiveness[static_cast<std::size_t>(m)][static_cast<std::size_t>(p)]);
}

ActivityReport compute_report(const ActivityReport& previous, const RoundDecision& decision,
    const SimulationConfig& config)
{
    const auto* device = config.find_device(decision.chosen_device);
    if (device == nullptr)
        throw Error{Errc::UnknownDevice, decision.chosen_device};

    const std::int64_t fit = device->target_market == demand_tag(config, decision.round) ? kFitMatch : kFitNeutral;
    const bool keyword_hit = std::any_of(decision.keywords.begin(), decision.keywords.end(),
        [&](const std::string& k) { return device->target_keywords.contains(k); });
    const std::int64_t bonus = keyword_hit ? kKeywordBonus : kNoBonus;

    ActivityReport out{decision.team, decision.round, previous.metrics};
    const int128 denominator = checked_mul(config.round_budget.raw(), checked_mul(kScale * kScale, kScale));
    for (const auto m : kMetrics)
    {
        int128 weighted = 0;
        for (const auto p : kPlatforms)
            weighted += checked_mul(effectiveness(m, p).raw(), decision.budget(p).raw());
        int128 numerator = checked_mul(config.benchmarks[m].raw(), weighted);
        numerator = checked_mul(checked_mul(numerator, fit), bonus);
        const auto gain = div_round_half_up(numerator, denominator);
        out.metrics[m] = out.metrics[m] + Fixed::from_raw(static_cast<std::int64_t>(gain));
    }
    return out;
}

RoundDecision scripted_agent_decide(
    const SimulationConfig& config, std::string_view team, std::uint64_t round, std::uint64_t seed)
{
    Encoder enc;
    enc.u64(seed).str(team).u64(round);
    std::mt19937_64 rng{first_u64(sha256(enc.data()))};

    RoundDecision d;
    d.team = std::string{team};
    d.round = round;

    std::array<std::int64_t, kPlatforms.size()> weights{};
    for (auto& w : weights)
        w = 1 + static_cast<std::int64_t>(rng() % 1000);
    const int128 total_weight = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    const int128 units = config.round_budget.raw();

    std::array<int128, kPlatforms.size()> remainders{};
    std::int64_t allocated = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
    {
        const int128 share = units * weights[i];
        d.budgets[i] = Fixed::from_raw(static_cast<std::int64_t>(share / total_weight));
        remainders[i] = share % total_weight;
        allocated += d.budgets[i].raw();
    }
    std::array<std::size_t, kPlatforms.size()> order{};
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
    for (std::int64_t left = config.round_budget.raw() - allocated, k = 0; left > 0; --left, ++k)
        d.budgets[order[static_cast<std::size_t>(k)]] += Fixed::from_raw(1);

    d.chosen_device = config.device_catalog[rng() % config.device_catalog.size()].device_id;

    std::set<std::string> pool;
    for (const auto& device : config.device_catalog)
        pool.insert(device.target_keywords.begin(), device.target_keywords.end());
    const std::vector<std::string> keywords{pool.begin(), pool.end()};
    if (!keywords.empty())
    {
        const auto count = 1 + rng() % 2;
        for (std::uint64_t i = 0; i < count; ++i)
            d.keywords.insert(keywords[rng() % keywords.size()]);
    }
    return d;
}
}  // namespace edublock::sim
