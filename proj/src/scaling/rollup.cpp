// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/error.hpp>
#include <edublock/scaling/rollup.hpp>

#include <algorithm>

namespace edublock::scaling
{
RollupBatch execute_batch_offchain(
    const ReportBook& previous, const sim::SimulationConfig& config, std::vector<sim::RoundDecision> decisions)
{
    RollupBatch batch;
    std::sort(decisions.begin(), decisions.end(),
        [](const sim::RoundDecision& a, const sim::RoundDecision& b) { return a.team < b.team; });
    if (!decisions.empty())
        batch.round = decisions.front().round;
    for (std::size_t i = 0; i < decisions.size(); ++i)
    {
        if (decisions[i].round != batch.round)
            throw Error{Errc::MixedRounds};
        if (i > 0 && decisions[i].team == decisions[i - 1].team)
            throw Error{Errc::DuplicateTeam, decisions[i].team};
    }

    for (const auto& d : decisions)
    {
        const auto prev = previous.find(d.team);
        if (prev == previous.end())
            throw Error{Errc::UnknownTeam, d.team};
        batch.reports.push_back(sim::compute_report(prev->second, d, config));
    }
    batch.decisions = std::move(decisions);
    batch.batch_digest = sim::digest_reports(batch.reports);
    return batch;
}

RollupCommit commit_rollup(Chain& chain, const RollupBatch& batch, const Address& committer,
    const Address& report_contract, const TxPolicy& policy)
{
    auto nonce = chain.next_nonce(committer);
    const auto call = [&](std::string method, Bytes args) {
        return chain.submit(Transaction::make(committer, nonce++,
            ContractCall{report_contract, std::move(method), std::move(args)}, policy.gas_limit, policy.gas_price));
    };

    std::vector<Hash256> ids;
    for (const auto& report : batch.reports)
        ids.push_back(call("commit_report",
            report_v1::commit_report_args(report.team, report.round, sim::to_contract_metrics(report.metrics))));
    ids.push_back(call("commit_digest", report_v1::commit_digest_args(batch.round, batch.batch_digest)));

    const auto produced = chain.produce_block();

    RollupCommit out{produced.block.height, produced.block.block_hash, {}};
    for (const auto& id : ids)
    {
        const auto dropped = std::find_if(
            produced.dropped.begin(), produced.dropped.end(), [&](const DroppedTx& d) { return d.tx_id == id; });
        if (dropped != produced.dropped.end())
            throw Error{dropped->reason, "rollup transaction " + id.hex() + " was not included"};
        const auto receipt = std::find_if(
            produced.receipts.begin(), produced.receipts.end(), [&](const Receipt& r) { return r.tx_id == id; });
        if (receipt == produced.receipts.end())
            throw Error{Errc::NotFound, "rollup transaction " + id.hex() + " missing from block"};
        out.receipts.push_back(*receipt);
    }
    for (const auto& r : out.receipts)
        if (!r.success)
            throw Error{parse_errc(r.failure_reason).value_or(Errc::InvalidTransaction),
                "round " + std::to_string(batch.round) + " rollup call failed on-chain"};
    return out;
}

Hash256 onchain_batch_digest(
    const Chain& chain, const Address& report_contract, std::uint64_t round, std::vector<std::string> teams)
{
    std::sort(teams.begin(), teams.end());
    std::vector<sim::ActivityReport> reports;
    for (const auto& team : teams)
    {
        const auto raw = chain.view_call(report_contract, "get_report", report_v1::get_report_args(team, round));
        reports.push_back({team, round, sim::from_contract_metrics(report_v1::decode_metrics(raw))});
    }
    return sim::digest_reports(reports);
}

std::optional<Hash256> stored_batch_digest(const Chain& chain, const Address& report_contract, std::uint64_t round)
{
    try
    {
        const auto raw = chain.view_call(report_contract, "get_digest", report_v1::get_digest_args(round));
        Decoder dec{raw};
        Hash256 h;
        h.bytes = dec.fixed<32>();
        dec.expect_end();
        return h;
    }
    catch (const Error& e)
    {
        if (e.code() == Errc::NotFound)
            return std::nullopt;
        throw;
    }
}
}  // namespace edublock::scaling
