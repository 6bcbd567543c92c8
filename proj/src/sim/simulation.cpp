// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/error.hpp>
#include <edublock/sim/simulation.hpp>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <algorithm>

namespace edublock::sim
{
Address operator_address()
{
    return named_address("operator");
}

Address team_address(std::string_view team)
{
    return named_address("team:" + std::string{team});
}

Address miner_address()
{
    return named_address("miner");
}

std::vector<Account> default_validators()
{
    std::vector<Account> out;
    const std::uint64_t stakes[] = {1, 3, 6};
    for (std::size_t i = 0; i < 3; ++i)
        out.push_back({named_address(fmt::format("validator-{}", i + 1)), kGenesisBalance, 0,
            stakes[i] * kGenesisBalance});
    return out;
}

GenesisSpec simulation_genesis(const SimulationConfig& config, ConsensusMode mode, unsigned difficulty_bits)
{
    config.validate();
    GenesisSpec g;
    g.params.mode = mode;
    g.params.difficulty_bits = difficulty_bits;
    g.params.coinbase = miner_address();
    g.alloc.push_back({operator_address(), kGenesisBalance, 0, 0});
    for (const auto& team : config.team_names())
        g.alloc.push_back({team_address(team), kGenesisBalance, 0, 0});
    g.alloc.push_back({miner_address(), 0, 0, 0});
    if (mode == ConsensusMode::pos)
        for (auto& v : default_validators())
            g.alloc.push_back(v);
    return g;
}

Simulation::Simulation(SimulationConfig config, std::shared_ptr<Chain> chain, scaling::TxPolicy policy)
  : config_{std::move(config)}, chain_{std::move(chain)}, policy_{policy}
{
    config_.validate();
}

InitResult Simulation::init(std::optional<MetricValues> benchmarks, std::optional<std::uint64_t> seed)
{
    std::lock_guard lock{mutex_};
    if (contract_)
        throw Error{Errc::AlreadyInitialized};
    if (benchmarks)
    {
        for (const auto m : kMetrics)
            if ((*benchmarks)[m] < Fixed{})
                throw Error{Errc::InvalidConfig, "benchmarks must be non-negative"};
        config_.benchmarks = *benchmarks;
    }
    if (seed)
        config_.seed = *seed;

    const auto op = operator_address();
    const auto nonce = chain_->next_nonce(op);
    const auto tx = Transaction::make(op, nonce,
        ContractCreate{
            std::string{report_v1::kHandlerId}, report_v1::encode_metrics(to_contract_metrics(config_.benchmarks))},
        policy_.gas_limit, policy_.gas_price);
    const auto id = chain_->submit(tx);
    const auto produced = chain_->produce_block();

    for (const auto& d : produced.dropped)
        if (d.tx_id == id)
            throw Error{d.reason, "report contract deployment was not included"};
    const auto it = std::find_if(
        produced.receipts.begin(), produced.receipts.end(), [&](const Receipt& r) { return r.tx_id == id; });
    if (it == produced.receipts.end())
        throw Error{Errc::NotFound, "deployment receipt missing"};
    if (!it->success || !it->created_address)
        throw Error{parse_errc(it->failure_reason).value_or(Errc::InvalidTransaction),
            "report contract deployment failed"};

    contract_ = *it->created_address;
    const auto baseline = from_contract_metrics(report_v1::decode_metrics(
        chain_->view_call(*contract_, "get_benchmarks", {})));
    for (const auto& team : config_.team_names())
        book_[team] = baseline_report(team, baseline);
    current_round_ = 1;
    spdlog::info("simulation initialised: report contract {} at height {}", contract_->hex(), produced.block.height);
    return {*contract_, produced.block.height, produced.block.block_hash, *it};
}

void Simulation::submit_decision(RoundDecision decision)
{
    std::lock_guard lock{mutex_};
    if (!contract_)
        throw Error{Errc::NotInitialized};
    if (current_round_ > config_.last_round())
        throw Error{Errc::SimulationComplete};
    if (!book_.contains(decision.team))
        throw Error{Errc::UnknownTeam, decision.team};
    if (decision.round != current_round_)
        throw Error{Errc::WrongRound,
            fmt::format("decision for round {}, current round is {}", decision.round, current_round_)};
    if (pending_.contains(decision.team))
        throw Error{Errc::DuplicateDecision, decision.team};
    validate_decision(decision, config_);
    auto team = decision.team;
    pending_.emplace(std::move(team), std::move(decision));
}

RoundSummary Simulation::close_round()
{
    std::lock_guard lock{mutex_};
    if (!contract_)
        throw Error{Errc::NotInitialized};
    if (current_round_ > config_.last_round())
        throw Error{Errc::SimulationComplete};

    std::vector<std::string> missing;
    for (const auto& [team, report] : book_)
        if (!pending_.contains(team))
            missing.push_back(team);
    if (!missing.empty())
    {
        std::string list;
        for (const auto& t : missing)
            list += (list.empty() ? "" : ",") + t;
        throw Error{Errc::MissingDecisions, list};
    }

    std::vector<RoundDecision> decisions;
    for (const auto& [team, d] : pending_)
        decisions.push_back(d);
    auto batch = scaling::execute_batch_offchain(book_, config_, std::move(decisions));

    auto& clock = chain_->clock();
    const auto submitted_at = clock.now_ms();
    const auto commit = scaling::commit_rollup(*chain_, batch, operator_address(), *contract_, policy_);
    const auto finalized_at = clock.now_ms();
    const auto sample = finality_.record(batch.round, submitted_at, finalized_at);

    for (const auto& r : batch.reports)
        book_[r.team] = r;
    pending_.clear();
    ++current_round_;

    RoundSummary summary{batch.round, commit.block_height, commit.block_hash, batch.batch_digest, batch.reports,
        commit.receipts, sample};
    summaries_.push_back(summary);
    spdlog::info("round {} committed in block {} ({} ms)", summary.round, summary.block_height, sample.finality_ms);
    return summary;
}

SimulationStatus Simulation::status() const
{
    std::lock_guard lock{mutex_};
    SimulationStatus s;
    s.initialized = contract_.has_value();
    s.complete = s.initialized && current_round_ > config_.last_round();
    s.current_round = current_round_;
    s.committed_rounds = summaries_.size();
    s.report_contract = contract_;
    for (const auto& [team, report] : book_)
        (pending_.contains(team) ? s.submitted : s.missing).push_back(team);
    return s;
}

SimulationConfig Simulation::config() const
{
    std::lock_guard lock{mutex_};
    return config_;
}

std::vector<RoundSummary> Simulation::summaries() const
{
    std::lock_guard lock{mutex_};
    return summaries_;
}

std::vector<metrics::FinalitySample> Simulation::finality() const
{
    return finality_.samples();
}

std::optional<Address> Simulation::report_contract() const
{
    std::lock_guard lock{mutex_};
    return contract_;
}

Address Simulation::require_contract() const
{
    std::lock_guard lock{mutex_};
    if (!contract_)
        throw Error{Errc::NotInitialized};
    return *contract_;
}

Bytes Simulation::report_bytes(std::string_view team, std::uint64_t round) const
{
    return chain_->view_call(require_contract(), "get_report", report_v1::get_report_args(team, round));
}

ActivityReport Simulation::report(std::string_view team, std::uint64_t round) const
{
    return {std::string{team}, round, from_contract_metrics(report_v1::decode_metrics(report_bytes(team, round)))};
}

MetricValues Simulation::onchain_benchmarks() const
{
    return from_contract_metrics(
        report_v1::decode_metrics(chain_->view_call(require_contract(), "get_benchmarks", {})));
}

std::string Simulation::reports_csv() const
{
    std::lock_guard lock{mutex_};
    std::string out = "team,round,likes,post_engagement,page_views,gas_used,fee_wei\n";
    for (const auto& s : summaries_)
        for (std::size_t i = 0; i < s.reports.size(); ++i)
        {
            const auto& r = s.reports[i];
            const auto gas = s.receipts.at(i).gas_used;
            out += fmt::format("{},{},{},{},{},{},{}\n", r.team, r.round, r.metrics.likes.str(),
                r.metrics.post_engagement.str(), r.metrics.page_views.str(), gas,
                edublock::to_string(static_cast<int128>(gas) * policy_.gas_price));
        }
    return out;
}
}  // namespace edublock::sim
