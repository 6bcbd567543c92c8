// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/error.hpp>
#include <edublock/service/service.hpp>

#include "httplib.h"
#include "json.hpp"

#include <spdlog/spdlog.h>

#include <charconv>

namespace edublock::service
{
using json = nlohmann::ordered_json;

namespace
{
HttpResponse json_response(int status, const json& body)
{
    return {status, body.dump(), "application/json"};
}

HttpResponse error_response(int status, std::string_view code, const std::string& message)
{
    return json_response(status, {{"error", code}, {"message", message}});
}

HttpResponse error_response(const Error& e)
{
    auto body = json{{"error", to_string(e.code())}, {"message", e.detail()}};
    if (e.code() == Errc::MissingDecisions)
    {
        json missing = json::array();
        std::string_view rest = e.detail();
        while (!rest.empty())
        {
            const auto comma = rest.find(',');
            missing.push_back(std::string{rest.substr(0, comma)});
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        body["missing"] = missing;
    }
    return json_response(http_status(e.code()), body);
}

std::uint64_t parse_u64(const std::string& text)
{
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [p, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || p != end)
        throw Error{Errc::MalformedInput, "not an unsigned integer: " + text};
    return v;
}

json parse_body(const std::string& body)
{
    try
    {
        return body.empty() ? json::object() : json::parse(body);
    }
    catch (const json::exception& e)
    {
        throw Error{Errc::MalformedInput, e.what()};
    }
}

json report_json(const sim::ActivityReport& r)
{
    json j{{"team", r.team}, {"round", r.round}};
    for (const auto m : sim::kMetrics)
        j[std::string{sim::to_string(m)}] = r.metrics[m].str();
    return j;
}

json receipt_json(const Receipt& r)
{
    json j{{"tx_id", r.tx_id.hex()}, {"success", r.success}, {"failure_reason", r.failure_reason},
        {"gas_used", r.gas_used}};
    j["created_address"] = r.created_address ? json(r.created_address->hex()) : json(nullptr);
    j["output"] = to_hex(r.output);
    return j;
}

json finality_json(const metrics::FinalitySample& s)
{
    return {{"round", s.round}, {"submitted_at", s.submitted_at}, {"finalized_at", s.finalized_at},
        {"finality_ms", s.finality_ms}};
}

sim::RoundDecision decision_from_json(const json& j, const std::string& team)
{
    try
    {
        sim::RoundDecision d;
        d.team = team;
        d.round = j.at("round").get<std::uint64_t>();
        d.chosen_device = j.at("chosen_device").get<std::string>();
        const auto& budgets = j.at("budgets");
        if (!budgets.is_object() || budgets.size() != sim::kPlatforms.size())
            throw Error{Errc::MalformedInput, "budgets must name every platform once"};
        for (const auto p : sim::kPlatforms)
        {
            const auto& v = budgets.at(std::string{sim::to_string(p)});
            if (!v.is_string())
                throw Error{Errc::MalformedInput, "budget amounts are decimal strings"};
            d.budgets[static_cast<std::size_t>(p)] = Fixed::parse(v.get<std::string>());
        }
        if (j.contains("keywords"))
            d.keywords = j.at("keywords").get<std::set<std::string>>();
        return d;
    }
    catch (const json::exception& e)
    {
        throw Error{Errc::MalformedInput, e.what()};
    }
}

std::vector<std::string> split_path(std::string_view path)
{
    std::vector<std::string> out;
    while (!path.empty())
    {
        if (path.front() == '/')
        {
            path.remove_prefix(1);
            continue;
        }
        const auto slash = path.find('/');
        out.emplace_back(path.substr(0, slash));
        path = slash == std::string_view::npos ? std::string_view{} : path.substr(slash);
    }
    return out;
}
}  // namespace

int http_status(Errc code) noexcept
{
    switch (code)
    {
    case Errc::AlreadyInitialized:
    case Errc::NotInitialized:
    case Errc::MissingDecisions:
    case Errc::SimulationComplete:
    case Errc::DuplicateDecision:
    case Errc::WrongRound:
    case Errc::ImmutableOverwrite:
        return 409;
    case Errc::BudgetMismatch:
    case Errc::UnknownDevice:
        return 422;
    case Errc::NotFound:
    case Errc::UnknownTeam:
    case Errc::UnknownContract:
        return 404;
    case Errc::MalformedInput:
    case Errc::BadArguments:
    case Errc::InvalidConfig:
    case Errc::Overflow:
        return 400;
    default:
        return 500;
    }
}

std::shared_ptr<Chain> make_chain(const AppConfig& config, std::shared_ptr<Clock> clock)
{
    auto genesis = sim::simulation_genesis(config.simulation, config.consensus, config.difficulty_bits);
    genesis.params.gas = config.gas;
    return std::make_shared<Chain>(std::move(genesis), vm::HandlerRegistry::with_builtins(), std::move(clock));
}

Service::Service(AppConfig config, std::shared_ptr<Chain> chain, std::optional<std::filesystem::path> chain_file)
  : config_{std::move(config)},
    chain_{std::move(chain)},
    simulation_{config_.simulation, chain_, scaling::TxPolicy{100'000, config_.profile().gas_price_wei()}},
    server_{std::make_unique<httplib::Server>()}
{
    if (chain_file)
    {
        appender_.emplace(*chain_file);
        appender_->reset(chain_->ledger());
    }

    const auto forward = [this](const httplib::Request& req, httplib::Response& res) {
        HttpRequest r{req.method, req.path, {}, {}, req.body};
        for (const auto& [k, v] : req.params)
            r.query[k] = v;
        const auto auth = req.get_header_value("Authorization");
        constexpr std::string_view scheme = "Bearer ";
        if (auth.starts_with(scheme))
            r.token = auth.substr(scheme.size());
        const auto out = handle(r);
        res.status = out.status;
        res.set_content(out.body, out.content_type);
    };
    server_->Get(".*", forward);
    server_->Post(".*", forward);
    server_->Put(".*", forward);
    server_->Delete(".*", forward);
}

Service::~Service()
{
    stop();
}

HttpResponse Service::handle(const HttpRequest& request)
{
    const auto who = config_.authenticate(request.token);
    if (!who)
        return error_response(401, "Unauthorized", "missing or unknown bearer token");
    try
    {
        auto res = route(request, *who);
        if (request.method != "GET")
            sync_chain_file();
        return res;
    }
    catch (const Error& e)
    {
        if (http_status(e.code()) >= 500)
            spdlog::error("{} {}: {}", request.method, request.path, e.what());
        return error_response(e);
    }
    catch (const std::exception& e)
    {
        spdlog::error("{} {}: {}", request.method, request.path, e.what());
        return error_response(500, "Internal", e.what());
    }
}

HttpResponse Service::route(const HttpRequest& request, const Principal& who)
{
    const auto parts = split_path(request.path);
    const auto& method = request.method;
    const auto is = [&](std::initializer_list<std::string_view> pattern) {
        if (parts.size() != pattern.size())
            return false;
        std::size_t i = 0;
        for (const auto p : pattern)
        {
            if (p != "*" && parts[i] != p)
                return false;
            ++i;
        }
        return true;
    };
    const auto forbidden = [](const std::string& why) { return error_response(403, "Forbidden", why); };
    const bool instructor = who.role == Role::instructor;
    const bool csv = request.query.contains("format") && request.query.at("format") == "csv";

    if (parts.empty() || parts[0] != "api")
        return error_response(404, "NotFound", "no such route");

    // admin
    if (is({"api", "admin", "simulation"}) && method == "POST")
    {
        if (!instructor)
            return forbidden("instructor only");
        const auto body = parse_body(request.body);
        std::optional<sim::MetricValues> benchmarks;
        std::optional<std::uint64_t> seed;
        try
        {
            if (body.contains("benchmarks"))
                benchmarks = metrics_from_json(body.at("benchmarks"));
            if (body.contains("seed"))
                seed = body.at("seed").get<std::uint64_t>();
        }
        catch (const nlohmann::json::exception& e)
        {
            throw Error{Errc::MalformedInput, e.what()};
        }
        const auto init = simulation_.init(benchmarks, seed);
        const auto genesis = chain_->block(0);
        return json_response(201,
            {{"report_contract", init.report_contract.hex()}, {"block_height", init.block_height},
                {"block_hash", init.block_hash.hex()}, {"genesis_hash", genesis->block_hash.hex()},
                {"benchmarks", metrics_to_json(simulation_.onchain_benchmarks())}, {"current_round", 1},
                {"receipt", receipt_json(init.receipt)}});
    }
    if (is({"api", "admin", "rounds", "close"}) && method == "POST")
    {
        if (!instructor)
            return forbidden("instructor only");
        const auto s = simulation_.close_round();
        json reports = json::array();
        for (const auto& r : s.reports)
            reports.push_back(report_json(r));
        json receipts = json::array();
        for (const auto& r : s.receipts)
            receipts.push_back(receipt_json(r));
        return json_response(200,
            {{"round", s.round}, {"block_height", s.block_height}, {"block_hash", s.block_hash.hex()},
                {"batch_digest", s.batch_digest.hex()}, {"reports", reports}, {"receipts", receipts},
                {"finality", finality_json(s.finality)}, {"complete", simulation_.status().complete}});
    }
    if (is({"api", "admin", "reports"}) && method == "GET")
    {
        if (!instructor)
            return forbidden("instructor only");
        json reports = json::array();
        for (const auto& s : simulation_.summaries())
            for (const auto& r : s.reports)
            {
                auto j = report_json(simulation_.report(r.team, r.round));
                j["raw"] = to_hex(simulation_.report_bytes(r.team, r.round));
                reports.push_back(j);
            }
        return json_response(200, {{"reports", reports}});
    }

    // team
    if (parts.size() >= 4 && parts[1] == "teams")
    {
        const auto& team = parts[2];
        if (is({"api", "teams", "*", "decisions"}) && method == "POST")
        {
            if (instructor || who.team != team)
                return forbidden("decisions are submitted by the team itself");
            simulation_.submit_decision(decision_from_json(parse_body(request.body), team));
            return json_response(202, {{"team", team}, {"round", simulation_.status().current_round},
                                          {"status", "accepted"}});
        }
        if (!instructor && who.team != team)
            return forbidden("teams may only read their own reports");
        if (is({"api", "teams", "*", "reports", "*"}) && method == "GET")
        {
            const auto round = parse_u64(parts[4]);
            const auto raw = simulation_.report_bytes(team, round);
            auto j = report_json(simulation_.report(team, round));
            j["raw"] = to_hex(raw);
            return json_response(200, j);
        }
        if (is({"api", "teams", "*", "reports"}) && method == "GET")
        {
            json reports = json::array();
            for (const auto& s : simulation_.summaries())
                for (const auto& r : s.reports)
                    if (r.team == team)
                    {
                        auto j = report_json(simulation_.report(team, r.round));
                        j["raw"] = to_hex(simulation_.report_bytes(team, r.round));
                        reports.push_back(j);
                    }
            return json_response(200, {{"team", team}, {"reports", reports}});
        }
    }

    if (method != "GET")
        return error_response(404, "NotFound", "no such route");

    // chain explorer
    if (is({"api", "chain", "blocks", "*"}))
    {
        const auto height = parse_u64(parts[3]);
        const auto block = chain_->block(height);
        if (!block)
            throw Error{Errc::NotFound, "no block at height " + parts[3]};
        auto j = json::parse(encode_block_record(*block));
        json receipts = json::array();
        for (const auto& r : chain_->receipts_at(height))
            receipts.push_back(receipt_json(r));
        j["receipts"] = receipts;
        return json_response(200, j);
    }
    if (is({"api", "chain", "head"}))
        return json_response(200, {{"height", chain_->height()}, {"block_hash", chain_->head_hash().hex()}});
    if (is({"api", "chain", "receipts", "*"}))
    {
        const auto id = Hash256::from_hex(parts[3]);
        const auto rec = chain_->receipt(id);
        if (!rec)
            throw Error{Errc::NotFound, "unknown transaction " + parts[3]};
        auto j = receipt_json(rec->receipt);
        j["block_height"] = rec->block_height;
        return json_response(200, j);
    }
    if (is({"api", "chain", "contracts", "*", "storage"}))
    {
        if (!instructor)
            return forbidden("instructor only");
        const auto addr = Address::from_hex(parts[3]);
        const auto state = chain_->state();
        const auto* contract = state.find_contract(addr);
        if (contract == nullptr)
            throw Error{Errc::NotFound, "no contract at " + parts[3]};
        json entries = json::array();
        for (const auto& [k, v] : contract->storage)
            entries.push_back({{"key", to_hex(k)}, {"value", to_hex(v)}});
        return json_response(
            200, {{"address", addr.hex()}, {"handler_id", contract->handler_id}, {"storage", entries}});
    }

    // metrics
    if (is({"api", "metrics", "finality"}))
    {
        const auto samples = simulation_.finality();
        if (csv)
            return {200, metrics::finality_csv(samples), "text/csv"};
        json out = json::array();
        for (const auto& s : samples)
            out.push_back(finality_json(s));
        return json_response(200, {{"samples", out}});
    }
    if (is({"api", "metrics", "costs"}))
    {
        const auto rows = metrics::cost_report(*chain_, config_.profiles);
        if (csv)
            return {200, metrics::costs_csv(rows), "text/csv"};
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"round", r.round}, {"profile", r.profile}, {"basis", r.predicted ? "predicted" : "measured"},
                {"tx_count", r.tx_count}, {"avg_normalized_gas", r.avg_normalized_gas.decimal()},
                {"avg_fee_wei", r.avg_fee_wei.decimal()}, {"avg_normalized_gas_exact", r.avg_normalized_gas.exact()},
                {"avg_fee_wei_exact", r.avg_fee_wei.exact()}});
        return json_response(200, {{"rows", out}});
    }

    if (is({"api", "simulation", "state"}))
    {
        const auto st = simulation_.status();
        const auto cfg = simulation_.config();
        json devices = json::array();
        for (const auto& d : cfg.device_catalog)
            devices.push_back({{"device_id", d.device_id}, {"spec_tier", sim::to_string(d.tier)},
                {"target_market", d.target_market}, {"target_keywords", d.target_keywords}});
        json platforms = json::array();
        for (const auto p : sim::kPlatforms)
            platforms.push_back(sim::to_string(p));
        json j{{"initialized", st.initialized}, {"complete", st.complete}, {"current_round", st.current_round},
            {"last_round", cfg.last_round()}, {"committed_rounds", st.committed_rounds},
            {"round_budget", cfg.round_budget.str()}, {"teams", cfg.team_names()}, {"platforms", platforms},
            {"devices", devices}, {"chain_height", chain_->height()}};
        j["report_contract"] = st.report_contract ? json(st.report_contract->hex()) : json(nullptr);
        if (instructor)
        {
            j["submitted"] = st.submitted;
            j["missing"] = st.missing;
        }
        else
        {
            j["principal"] = who.team;
            j["submitted"] = std::find(st.submitted.begin(), st.submitted.end(), who.team) != st.submitted.end();
        }
        return json_response(200, j);
    }
    if (is({"api", "config"}))
    {
        json gas{{"tx_base", config_.gas.tx_base}, {"storage_write_per_key", config_.gas.storage_write_per_key},
            {"storage_read_per_key", config_.gas.storage_read_per_key}, {"create_base", config_.gas.create_base}};
        json profiles = json::array();
        for (const auto& p : config_.profiles)
            profiles.push_back({{"name", p.name}, {"gas_price_gwei", p.gas_price_gwei.str()},
                {"fee_factor", p.fee_factor.exact()}, {"predicted", p.predicted}});
        return json_response(200,
            {{"hash", kHashName}, {"consensus", to_string(chain_->params().mode)},
                {"difficulty_bits", chain_->params().difficulty_bits}, {"handlers", chain_->registry().ids()},
                {"gas_schedule", gas}, {"network_profiles", profiles},
                {"active_profile", config_.simulation.network_profile}});
    }
    return error_response(404, "NotFound", "no such route");
}

void Service::sync_chain_file()
{
    std::lock_guard lock{file_mutex_};
    if (appender_)
        appender_->sync(*chain_);
}

bool Service::listen(const std::string& host, int port)
{
    spdlog::info("listening on {}:{}", host, port);
    return server_->listen(host, port);
}

int Service::bind_any_port(const std::string& host)
{
    return server_->bind_to_any_port(host);
}

bool Service::listen_after_bind()
{
    return server_->listen_after_bind();
}

void Service::stop()
{
    if (server_)
        server_->stop();
}

void Service::wait_until_ready() const
{
    server_->wait_until_ready();
}
}  // namespace edublock::service
