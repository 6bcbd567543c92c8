// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/types.hpp>
#include <edublock/metrics/metrics.hpp>
#include <edublock/sim/model.hpp>

#include "json.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace edublock::service
{
enum class Role
{
    instructor,
    team,
};

struct Principal
{
    Role role = Role::team;
    /// Empty for the instructor.
    std::string team;

    bool operator==(const Principal&) const = default;
};

struct AppConfig
{
    sim::SimulationConfig simulation;
    ConsensusMode consensus = ConsensusMode::pow;
    unsigned difficulty_bits = 16;
    GasSchedule gas;
    std::vector<metrics::NetworkProfile> profiles = metrics::default_profiles();
    std::string instructor_token = "instructor-token";
    /// token -> team
    std::map<std::string, std::string> team_tokens;

    std::optional<Principal> authenticate(std::string_view token) const;
    const metrics::NetworkProfile& profile() const;

    /// Throws InvalidConfig.
    void validate() const;
};

/// Built-in defaults with one "<team>-token" per team.
AppConfig default_app_config();

/// Missing keys keep their defaults. Throws InvalidConfig.
AppConfig parse_app_config(const nlohmann::json& j);
AppConfig load_app_config(const std::filesystem::path& path);

nlohmann::json to_json(const AppConfig& config);
nlohmann::json metrics_to_json(const sim::MetricValues& values);
sim::MetricValues metrics_from_json(const nlohmann::json& j);
}  // namespace edublock::service
