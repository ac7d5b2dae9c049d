#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qsteen/cache.hpp"
#include "qsteen/checks.hpp"
#include "qsteen/errors.hpp"
#include "qsteen/quotient.hpp"
#include "qsteen/report.hpp"
#include "qsteen/serialize.hpp"

namespace {

struct TableArgs {
    int m = 0;
    int k = 1;
    int hmax = 32;
    std::string space = "oline";
    std::string format = "markdown";
    std::string cache;
};

struct LoopArgs {
    int n = 0;
    int imax = 5;
    std::string format = "markdown";
    std::string cache;
};

qsteen::OutputFormat parse_format(const std::string& s) {
    if (s == "json") return qsteen::OutputFormat::Json;
    if (s == "markdown") return qsteen::OutputFormat::Markdown;
    throw qsteen::ConfigError(fmt::format("field format: expected json or markdown, got '{}'", s));
}

qsteen::JobConfig table_config(const TableArgs& args) {
    qsteen::JobConfig cfg;
    if (args.space == "oline")
        cfg.space = qsteen::Space::OLine;
    else if (args.space == "tstar-sphere")
        cfg.space = qsteen::Space::TStarSphere;
    else
        throw qsteen::ConfigError(
            fmt::format("field space: expected oline or tstar-sphere, got '{}'", args.space));
    cfg.m = args.m;
    cfg.k = args.k;
    cfg.truncation_order = args.hmax;
    cfg.format = parse_format(args.format);
    if (!args.cache.empty()) cfg.cache_path = args.cache;
    return cfg;
}

void add_table_options(CLI::App* sub, TableArgs& args) {
    sub->add_option("-m,--power", args.m, "projective dimension m")->required();
    sub->add_option("-k,--twist", args.k, "bundle twist (tables require 1)");
    sub->add_option("--hmax", args.hmax, "truncation order for quotient reductions");
    sub->add_option("--space", args.space, "oline | tstar-sphere");
    sub->add_option("--format", args.format, "json | markdown");
    sub->add_option("--cache", args.cache, "cache directory (QSTEEN_CACHE overrides)");
}

qsteen::Report run_cached(const qsteen::JobConfig& cfg) {
    return qsteen::cache_get_or_compute(cfg, [&] { return qsteen::run_job(cfg); }, &std::cerr);
}

int emit(const qsteen::Report& report, const qsteen::JobConfig& cfg,
         const std::string& section) {
    if (cfg.format == qsteen::OutputFormat::Json) {
        std::cout << qsteen::export_bytes(report, qsteen::OutputFormat::Json);
        return 0;
    }
    if (section == "qs")
        std::cout << qsteen::render_qs_markdown(report);
    else if (section == "ps")
        std::cout << qsteen::render_ps_markdown(report);
    else if (section == "solver")
        std::cout << qsteen::render_solver_markdown(report);
    else
        std::cout << qsteen::render_loop_markdown(report);
    return 0;
}

int run_membership(const std::string& input, int hmax) {
    std::string bytes;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        bytes = buf.str();
    } else {
        std::ifstream in(input, std::ios::binary);
        if (!in) throw qsteen::CacheIOError(fmt::format("cannot open input file '{}'", input));
        std::ostringstream buf;
        buf << in.rdbuf();
        bytes = buf.str();
    }
    qsteen::Json parsed;
    try {
        parsed = qsteen::Json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw qsteen::FormatError(fmt::format("input is not valid JSON: {}", e.what()));
    }
    qsteen::EqElement element = qsteen::eq_from_json(parsed);
    qsteen::EqQuotient quotient(element.ring(), hmax);
    qsteen::MembershipVerdict verdict = quotient.member(element);
    qsteen::ReduceResult reduced = quotient.reduce(element);

    fmt::print("verdict: {}\n", verdict.str());
    std::string mus;
    for (const auto& [j, mu] : verdict.multipliers) {
        if (!mus.empty()) mus += ", ";
        mus += fmt::format("h^{}: {}", j, mu.str());
    }
    fmt::print("multipliers: {}\n", mus.empty() ? "(none)" : mus);
    fmt::print("normal form: {}\n", reduced.normal_form.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact quantum-square, quotient and loop-ring tables over GF(2) Laurent scalars"};
    app.set_version_flag("--version", qsteen::kEngineVersion);
    app.require_subcommand(1);

    TableArgs qs_args, ps_args, solve_args;
    LoopArgs loop_args;
    std::string membership_input = "-";
    int membership_hmax = 32;

    CLI::App* qs = app.add_subcommand("qs", "quantum square table for 1..x^{m+1}");
    add_table_options(qs, qs_args);
    CLI::App* ps = app.add_subcommand(
        "ps", "induced square on the quotient basis, with membership diagnostics");
    add_table_options(ps, ps_args);
    CLI::App* solve = app.add_subcommand(
        "solve-req", "constraint solver for the equivariant continuation map");
    add_table_options(solve, solve_args);

    CLI::App* loop = app.add_subcommand("loop", "square prefixes over the sphere loop ring");
    loop->add_option("-n,--sphere", loop_args.n, "sphere dimension (>= 2)")->required();
    loop->add_option("--imax", loop_args.imax, "largest y-exponent in the tables");
    loop->add_option("--format", loop_args.format, "json | markdown");
    loop->add_option("--cache", loop_args.cache, "cache directory (QSTEEN_CACHE overrides)");

    CLI::App* membership = app.add_subcommand(
        "check-membership", "test a serialized series for membership in the generator ideal");
    membership->add_option("--input", membership_input, "JSON file, or - for stdin");
    membership->add_option("--hmax", membership_hmax, "truncation order");

    CLI::App* check = app.add_subcommand("check", "run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand(qs)) {
            qsteen::JobConfig cfg = table_config(qs_args);
            return emit(run_cached(cfg), cfg, "qs");
        }
        if (app.got_subcommand(ps)) {
            qsteen::JobConfig cfg = table_config(ps_args);
            return emit(run_cached(cfg), cfg, "ps");
        }
        if (app.got_subcommand(solve)) {
            qsteen::JobConfig cfg = table_config(solve_args);
            return emit(run_cached(cfg), cfg, "solver");
        }
        if (app.got_subcommand(loop)) {
            qsteen::JobConfig cfg;
            cfg.space = qsteen::Space::TStarSphere;
            cfg.n = loop_args.n;
            cfg.loop_max_exponent = loop_args.imax;
            cfg.format = parse_format(loop_args.format);
            if (!loop_args.cache.empty()) cfg.cache_path = loop_args.cache;
            return emit(run_cached(cfg), cfg, "loop");
        }
        if (app.got_subcommand(membership))
            return run_membership(membership_input, membership_hmax);
        if (app.got_subcommand(check)) return qsteen::run_self_checks(std::cout);
    } catch (const qsteen::Error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    }
    return 0;
}
