// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <edublock/chain/persist.hpp>
#include <edublock/service/config.hpp>
#include <edublock/sim/simulation.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace httplib
{
class Server;
}

namespace edublock::service
{
struct HttpRequest
{
    std::string method;
    std::string path;
    std::map<std::string, std::string> query;
    /// Bearer token, without the scheme.
    std::string token;
    std::string body;
};

struct HttpResponse
{
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

/// Fresh chain for a service or simulate run, from the config's genesis.
std::shared_ptr<Chain> make_chain(const AppConfig& config, std::shared_ptr<Clock> clock);

int http_status(Errc code) noexcept;

class Service
{
public:
    Service(AppConfig config, std::shared_ptr<Chain> chain, std::optional<std::filesystem::path> chain_file = {});
    ~Service();

    HttpResponse handle(const HttpRequest& request);

    /// Blocks until stop().
    bool listen(const std::string& host, int port);
    /// Binds to a free port and returns it; serve with listen_after_bind().
    int bind_any_port(const std::string& host);
    bool listen_after_bind();
    void stop();
    void wait_until_ready() const;

    sim::Simulation& simulation() noexcept { return simulation_; }
    const AppConfig& config() const noexcept { return config_; }
    Chain& chain() const noexcept { return *chain_; }

    /// Writes any blocks not yet in the chain file.
    void sync_chain_file();

private:
    HttpResponse route(const HttpRequest& request, const Principal& who);

    AppConfig config_;
    std::shared_ptr<Chain> chain_;
    sim::Simulation simulation_;
    std::mutex file_mutex_;
    std::optional<ChainFileAppender> appender_;
    std::unique_ptr<httplib::Server> server_;
};
}  // namespace edublock::service
