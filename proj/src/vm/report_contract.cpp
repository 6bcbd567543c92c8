// edublock: blockchain-backed classroom marketing simulation
// Copyright 2026 The edublock Authors.
// SPDX-License-Identifier: Apache-2.0
#include <edublock/vm/report_contract.hpp>

#include <set>

namespace edublock::report_v1
{
namespace
{
Bytes encode_entry(const MetricEntry& e)
{
    Encoder enc;
    enc.str(e.name).i64(e.value.raw());
    return enc.take();
}

MetricEntry decode_entry(ByteView data)
{
    Decoder dec{data};
    MetricEntry e;
    e.name = dec.str();
    e.value = Fixed::from_raw(dec.i64());
    dec.expect_end();
    return e;
}

Metrics decode_metrics(Decoder& dec)
{
    const auto n = dec.u32();
    Metrics out;
    for (std::uint32_t i = 0; i < n; ++i)
    {
        MetricEntry e;
        e.name = dec.str();
        e.value = Fixed::from_raw(dec.i64());
        out.push_back(std::move(e));
    }
    return out;
}

void validate(const Metrics& metrics)
{
    if (metrics.empty())
        throw Error{Errc::BadArguments, "at least one metric required"};
    std::set<std::string_view> names;
    for (const auto& m : metrics)
    {
        if (m.name.empty() || !names.insert(m.name).second)
            throw Error{Errc::BadArguments, "metric names must be non-empty and unique"};
        if (m.value < Fixed{})
            throw Error{Errc::BadArguments, "metric values must be non-negative"};
    }
}

/// Runs a decoder over call arguments, turning truncation into BadArguments.
template <typename Fn>
auto parse_args(ByteView args, Fn&& fn)
{
    try
    {
        Decoder dec{args};
        auto out = fn(dec);
        dec.expect_end();
        return out;
    }
    catch (const Error& e)
    {
        if (e.code() == Errc::MalformedInput)
            throw Error{Errc::BadArguments, e.what()};
        throw;
    }
}

Metrics read_entries(vm::StorageContext& storage, ByteView prefix)
{
    Metrics out;
    for (const auto& [key, value] : storage.read_prefix(prefix))
        out.push_back(decode_entry(value));
    return out;
}
}  // namespace

Bytes encode_metrics(const Metrics& metrics)
{
    Encoder enc;
    enc.u32(static_cast<std::uint32_t>(metrics.size()));
    for (const auto& m : metrics)
        enc.str(m.name).i64(m.value.raw());
    return enc.take();
}

Metrics decode_metrics(ByteView data)
{
    Decoder dec{data};
    auto out = decode_metrics(dec);
    dec.expect_end();
    return out;
}

Bytes commit_report_args(std::string_view team, std::uint64_t round, const Metrics& metrics)
{
    Encoder enc;
    enc.str(team).u64(round).raw(encode_metrics(metrics));
    return enc.take();
}

Bytes get_report_args(std::string_view team, std::uint64_t round)
{
    Encoder enc;
    enc.str(team).u64(round);
    return enc.take();
}

Bytes commit_digest_args(std::uint64_t round, const Hash256& digest)
{
    Encoder enc;
    enc.u64(round).fixed(digest.bytes);
    return enc.take();
}

Bytes get_digest_args(std::uint64_t round)
{
    Encoder enc;
    enc.u64(round);
    return enc.take();
}

Bytes benchmark_key(std::uint32_t index)
{
    Encoder enc;
    enc.str("bench").u32(index);
    return enc.take();
}

Bytes report_prefix(std::string_view team, std::uint64_t round)
{
    Encoder enc;
    enc.str("report").str(team).u64(round);
    return enc.take();
}

Bytes report_key(std::string_view team, std::uint64_t round, std::uint32_t index)
{
    Encoder enc;
    enc.raw(report_prefix(team, round)).u32(index);
    return enc.take();
}

Bytes digest_key(std::uint64_t round)
{
    Encoder enc;
    enc.str("digest").u64(round);
    return enc.take();
}

std::uint64_t round_of_call(std::string_view method, ByteView args)
{
    Decoder dec{args};
    if (method == "commit_report")
    {
        dec.str();
        return dec.u64();
    }
    if (method == "commit_digest")
        return dec.u64();
    throw Error{Errc::UnknownMethod, std::string{method}};
}

void ReportHandler::init(vm::StorageContext& storage, ByteView payload) const
{
    const auto benchmarks = parse_args(payload, [](Decoder& dec) { return decode_metrics(dec); });
    validate(benchmarks);
    for (std::uint32_t i = 0; i < benchmarks.size(); ++i)
        storage.write(benchmark_key(i), encode_entry(benchmarks[i]));
}

Bytes ReportHandler::call(vm::StorageContext& storage, std::string_view method, ByteView args) const
{
    if (method == "commit_report")
    {
        struct Args
        {
            std::string team;
            std::uint64_t round;
            Metrics metrics;
        };
        auto a = parse_args(args, [](Decoder& dec) {
            Args out;
            out.team = dec.str();
            out.round = dec.u64();
            out.metrics = decode_metrics(dec);
            return out;
        });
        validate(a.metrics);
        if (a.team.empty())
            throw Error{Errc::BadArguments, "empty team"};
        if (storage.has_prefix(report_prefix(a.team, a.round)))
            throw Error{Errc::ImmutableOverwrite, a.team + " round " + std::to_string(a.round)};
        for (std::uint32_t i = 0; i < a.metrics.size(); ++i)
            storage.write(report_key(a.team, a.round, i), encode_entry(a.metrics[i]));
        return {};
    }
    if (method == "get_report")
    {
        const auto [team, round] = parse_args(args, [](Decoder& dec) {
            auto team = dec.str();
            return std::pair{std::move(team), dec.u64()};
        });
        auto metrics = read_entries(storage, report_prefix(team, round));
        if (metrics.empty())
            throw Error{Errc::NotFound, team + " round " + std::to_string(round)};
        return encode_metrics(metrics);
    }
    if (method == "get_benchmarks")
    {
        parse_args(args, [](Decoder&) { return 0; });
        Encoder prefix;
        prefix.str("bench");
        return encode_metrics(read_entries(storage, prefix.data()));
    }
    if (method == "commit_digest")
    {
        const auto [round, digest] = parse_args(args, [](Decoder& dec) {
            const auto round = dec.u64();
            return std::pair{round, dec.fixed<32>()};
        });
        if (storage.has_prefix(digest_key(round)))
            throw Error{Errc::ImmutableOverwrite, "digest round " + std::to_string(round)};
        storage.write(digest_key(round), Bytes{digest.begin(), digest.end()});
        return {};
    }
    if (method == "get_digest")
    {
        const auto round = parse_args(args, [](Decoder& dec) { return dec.u64(); });
        auto value = storage.read(digest_key(round));
        if (!value)
            throw Error{Errc::NotFound, "digest round " + std::to_string(round)};
        return *value;
    }
    throw Error{Errc::UnknownMethod, std::string{method}};
}
}  // namespace edublock::report_v1
