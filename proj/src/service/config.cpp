// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/error.hpp>
#include <edublock/service/config.hpp>

#include <fstream>

namespace edublock::service
{
using json = nlohmann::json;

namespace
{
Fixed fixed_from(const json& j)
{
    if (!j.is_string())
        throw Error{Errc::MalformedInput, "fixed-point values are decimal strings"};
    return Fixed::parse(j.get<std::string>());
}

void fill_team_tokens(AppConfig& c)
{
    c.team_tokens.clear();
    for (const auto& team : c.simulation.team_names())
        c.team_tokens[team + "-token"] = team;
}
}  // namespace

std::optional<Principal> AppConfig::authenticate(std::string_view token) const
{
    if (token.empty())
        return std::nullopt;
    if (token == instructor_token)
        return Principal{Role::instructor, {}};
    const auto it = team_tokens.find(std::string{token});
    if (it == team_tokens.end())
        return std::nullopt;
    return Principal{Role::team, it->second};
}

const metrics::NetworkProfile& AppConfig::profile() const
{
    return metrics::find_profile(profiles, simulation.network_profile);
}

void AppConfig::validate() const
{
    simulation.validate();
    if (difficulty_bits > kMaxDeskDifficulty)
        throw Error{Errc::InvalidConfig, "difficulty above " + std::to_string(kMaxDeskDifficulty) + " bits"};
    if (profiles.empty())
        throw Error{Errc::InvalidConfig, "no network profiles"};
    try
    {
        (void)profile();
    }
    catch (const Error&)
    {
        throw Error{Errc::InvalidConfig, "unknown network profile " + simulation.network_profile};
    }
    if (instructor_token.empty())
        throw Error{Errc::InvalidConfig, "instructor token is empty"};
    const auto teams = simulation.team_names();
    for (const auto& [token, team] : team_tokens)
    {
        if (token.empty() || token == instructor_token)
            throw Error{Errc::InvalidConfig, "team token for " + team + " is empty or shared"};
        if (std::find(teams.begin(), teams.end(), team) == teams.end())
            throw Error{Errc::InvalidConfig, "token for unknown team " + team};
    }
}

AppConfig default_app_config()
{
    AppConfig c;
    fill_team_tokens(c);
    return c;
}

json metrics_to_json(const sim::MetricValues& values)
{
    json j = json::object();
    for (const auto m : sim::kMetrics)
        j[std::string{sim::to_string(m)}] = values[m].str();
    return j;
}

sim::MetricValues metrics_from_json(const json& j)
{
    if (!j.is_object())
        throw Error{Errc::MalformedInput, "metrics must be an object"};
    sim::MetricValues out;
    for (const auto m : sim::kMetrics)
    {
        const auto key = std::string{sim::to_string(m)};
        if (!j.contains(key))
            throw Error{Errc::MalformedInput, "missing metric " + key};
        out[m] = fixed_from(j.at(key));
    }
    if (j.size() != sim::kMetrics.size())
        throw Error{Errc::MalformedInput, "unexpected metric name"};
    return out;
}

AppConfig parse_app_config(const json& j)
{
    try
    {
        auto c = default_app_config();
        if (const auto s = j.find("simulation"); s != j.end())
        {
            auto& sc = c.simulation;
            sc.team_count = s->value("team_count", sc.team_count);
            sc.total_rounds = s->value("total_rounds", sc.total_rounds);
            sc.seed = s->value("seed", sc.seed);
            sc.network_profile = s->value("network_profile", sc.network_profile);
            if (s->contains("round_budget"))
                sc.round_budget = fixed_from(s->at("round_budget"));
            if (s->contains("benchmarks"))
                sc.benchmarks = metrics_from_json(s->at("benchmarks"));
            if (s->contains("device_catalog"))
            {
                sc.device_catalog.clear();
                for (const auto& d : s->at("device_catalog"))
                    sc.device_catalog.push_back({d.at("device_id").get<std::string>(),
                        sim::parse_spec_tier(d.at("spec_tier").get<std::string>()),
                        d.at("target_market").get<std::string>(),
                        d.at("target_keywords").get<std::set<std::string>>()});
            }
            fill_team_tokens(c);
        }
        if (const auto ch = j.find("chain"); ch != j.end())
        {
            if (ch->contains("consensus"))
                c.consensus = parse_consensus_mode(ch->at("consensus").get<std::string>());
            c.difficulty_bits = ch->value("difficulty_bits", c.difficulty_bits);
        }
        if (const auto g = j.find("gas_schedule"); g != j.end())
        {
            c.gas.tx_base = g->value("tx_base", c.gas.tx_base);
            c.gas.storage_write_per_key = g->value("storage_write_per_key", c.gas.storage_write_per_key);
            c.gas.storage_read_per_key = g->value("storage_read_per_key", c.gas.storage_read_per_key);
            c.gas.create_base = g->value("create_base", c.gas.create_base);
        }
        if (const auto p = j.find("network_profiles"); p != j.end())
        {
            c.profiles.clear();
            for (const auto& e : *p)
                c.profiles.push_back({e.at("name").get<std::string>(), fixed_from(e.at("gas_price_gwei")),
                    Ratio::parse(e.value("fee_factor", std::string{"1"})), e.value("predicted", false)});
        }
        if (const auto t = j.find("tokens"); t != j.end())
        {
            c.instructor_token = t->value("instructor", c.instructor_token);
            if (t->contains("teams"))
            {
                c.team_tokens.clear();
                for (const auto& [team, token] : t->at("teams").items())
                    c.team_tokens[token.get<std::string>()] = team;
            }
        }
        c.validate();
        return c;
    }
    catch (const json::exception& e)
    {
        throw Error{Errc::InvalidConfig, e.what()};
    }
    catch (const Error& e)
    {
        if (e.code() == Errc::InvalidConfig)
            throw;
        throw Error{Errc::InvalidConfig, e.what()};
    }
}

AppConfig load_app_config(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in)
        throw Error{Errc::IoFailure, "cannot open " + path.string()};
    json j;
    try
    {
        j = json::parse(in);
    }
    catch (const json::exception& e)
    {
        throw Error{Errc::InvalidConfig, path.string() + ": " + e.what()};
    }
    return parse_app_config(j);
}

json to_json(const AppConfig& config)
{
    const auto& sc = config.simulation;
    json devices = json::array();
    for (const auto& d : sc.device_catalog)
        devices.push_back({{"device_id", d.device_id}, {"spec_tier", sim::to_string(d.tier)},
            {"target_market", d.target_market}, {"target_keywords", d.target_keywords}});
    json profiles = json::array();
    for (const auto& p : config.profiles)
        profiles.push_back({{"name", p.name}, {"gas_price_gwei", p.gas_price_gwei.str()},
            {"fee_factor", p.fee_factor.exact()}, {"predicted", p.predicted}});
    json teams = json::object();
    for (const auto& [token, team] : config.team_tokens)
        teams[team] = token;
    return {
        {"simulation",
            {{"team_count", sc.team_count}, {"total_rounds", sc.total_rounds}, {"round_budget", sc.round_budget.str()},
                {"seed", sc.seed}, {"benchmarks", metrics_to_json(sc.benchmarks)}, {"device_catalog", devices},
                {"network_profile", sc.network_profile}}},
        {"chain", {{"consensus", to_string(config.consensus)}, {"difficulty_bits", config.difficulty_bits}}},
        {"gas_schedule",
            {{"tx_base", config.gas.tx_base}, {"storage_write_per_key", config.gas.storage_write_per_key},
                {"storage_read_per_key", config.gas.storage_read_per_key}, {"create_base", config.gas.create_base}}},
        {"network_profiles", profiles},
        {"tokens", {{"instructor", config.instructor_token}, {"teams", teams}}},
    };
}
}  // namespace edublock::service
