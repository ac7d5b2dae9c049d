#include "qsteen/report.hpp"

#include <fmt/format.h>

#include "qsteen/errors.hpp"

namespace qsteen {

namespace {

std::string power_label(int i) {
    if (i == 0) return "1";
    if (i == 1) return "x";
    return fmt::format("x^{}", i);
}

std::string space_str(Space s) { return s == Space::OLine ? "oline" : "tstar-sphere"; }

Space space_from_str(const std::string& s) {
    if (s == "oline") return Space::OLine;
    if (s == "tstar-sphere") return Space::TStarSphere;
    throw FormatError(fmt::format("unknown space '{}'", s));
}

}  // namespace

void JobConfig::validate() const {
    std::vector<std::string> problems;
    if (space == Space::OLine) {
        if (!m) problems.push_back("field m: required for space oline");
        if (n) problems.push_back("field n: only applicable to space tstar-sphere");
        if (m && *m < 1) problems.push_back(fmt::format("field m: must be >= 1, got {}", *m));
        int kk = k.value_or(1);
        if (kk != 1)
            problems.push_back(fmt::format(
                "field k: report generation requires twist k = 1, got {} "
                "(general k is available at ring level only)", kk));
    } else {
        if (!n) problems.push_back("field n: required for space tstar-sphere");
        if (m) problems.push_back("field m: only applicable to space oline");
        if (k) problems.push_back("field k: only applicable to space oline");
        if (n && *n < 2) problems.push_back(fmt::format("field n: must be >= 2, got {}", *n));
    }
    if (truncation_order < 0)
        problems.push_back(fmt::format("field truncation_order: must be >= 0, got {}", truncation_order));
    if (loop_max_exponent < 0)
        problems.push_back(fmt::format("field imax: must be >= 0, got {}", loop_max_exponent));
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
        throw ConfigError(msg);
    }
}

Report run_job(const JobConfig& cfg) {
    cfg.validate();
    Report out;
    out.config = cfg;

    if (cfg.space == Space::OLine) {
        RingDescriptor ring(*cfg.m, cfg.k.value_or(1));

        for (int i = 0; i <= ring.m + 1; ++i)
            out.qs_table.push_back({power_label(i), qs_power(ring, i)});

        EqQuotient quotient(ring, cfg.truncation_order);
        for (int i = 0; i <= ring.m - 1; ++i)
            out.ps_table.push_back(
                {power_label(i), quotient.ps(QHElement::monomial(ring, i))});
        // The class T completes the table: its square is T^2 on the nose.
        out.ps_table.push_back(
            {"T", quotient.ps(QHElement::monomial(ring, 0, NovikovScalar::monomial(1)))});

        const EqElement& g = quotient.generator();
        {
            MembershipVerdict v = quotient.member(g);
            out.membership.push_back({"g", v.str(), quotient.reduce(g).normal_form});
        }
        {
            QHElement cls = (QHElement::monomial(ring, ring.m) +
                             QHElement::monomial(ring, 0, NovikovScalar::monomial(1)))
                                .scaled(NovikovScalar::from_exponents({0, 1}));
            EqElement sq = qs_element(cls);
            MembershipVerdict v = quotient.member(sq);
            out.membership.push_back(
                {"QS((1 + T) (x^m + T))", v.str(), quotient.reduce(sq).normal_form});
        }
        {
            // Diagnostic for the missing quotient product: x * g does not
            // reduce to zero, so the ideal is not visibly closed under x.
            EqElement xg = g.scaled(QHElement::monomial(ring, 1));
            MembershipVerdict v = quotient.member(xg);
            out.membership.push_back({"x g", v.str(), quotient.reduce(xg).normal_form});
        }

        out.solver = solve_req(ring);
    } else {
        const int n = *cfg.n;
        auto add = [&](const GeneratorClass& cls) {
            out.loop_table.push_back({cls.str(), ps_prefix(cls, n),
                                      verdict_str(nonvanishing(cls, n))});
        };
        for (int i = 0; i <= cfg.loop_max_exponent; ++i) add(GeneratorClass::y_power(i));
        add(GeneratorClass::x());
        for (int i = 1; i <= cfg.loop_max_exponent; ++i) add(GeneratorClass::xy_power(i));
    }
    return out;
}

namespace {

Json config_to_json(const JobConfig& cfg) {
    Json out = Json::object();
    out["space"] = space_str(cfg.space);
    if (cfg.m) out["m"] = *cfg.m;
    if (cfg.k) out["k"] = *cfg.k;
    if (cfg.n) out["n"] = *cfg.n;
    out["truncation_order"] = cfg.truncation_order;
    out["imax"] = cfg.loop_max_exponent;
    out["format"] = cfg.format == OutputFormat::Json ? "json" : "markdown";
    if (cfg.cache_path) out["cache_path"] = *cfg.cache_path;
    return out;
}

JobConfig config_from_json(const Json& j) {
    JobConfig cfg;
    cfg.space = space_from_str(j.at("space").get<std::string>());
    if (j.contains("m")) cfg.m = j.at("m").get<int>();
    if (j.contains("k")) cfg.k = j.at("k").get<int>();
    if (j.contains("n")) cfg.n = j.at("n").get<int>();
    cfg.truncation_order = j.at("truncation_order").get<int>();
    cfg.loop_max_exponent = j.at("imax").get<int>();
    std::string format = j.at("format").get<std::string>();
    if (format == "json")
        cfg.format = OutputFormat::Json;
    else if (format == "markdown")
        cfg.format = OutputFormat::Markdown;
    else
        throw FormatError(fmt::format("unknown format '{}'", format));
    if (j.contains("cache_path")) cfg.cache_path = j.at("cache_path").get<std::string>();
    return cfg;
}

Json report_to_json(const Report& r) {
    Json out = Json::object();
    if (r == Report{}) return out;  // empty report stays "{}"
    out["config"] = config_to_json(r.config);
    if (!r.qs_table.empty()) {
        Json rows = Json::array();
        for (const auto& row : r.qs_table) {
            Json jr = Json::object();
            jr["class"] = row.label;
            jr["series"] = eq_to_json(row.value);
            rows.push_back(std::move(jr));
        }
        out["qs_table"] = std::move(rows);
    }
    if (!r.ps_table.empty()) {
        Json rows = Json::array();
        for (const auto& row : r.ps_table) {
            Json jr = Json::object();
            jr["class"] = row.label;
            jr["series"] = eq_to_json(row.value);
            rows.push_back(std::move(jr));
        }
        out["ps_table"] = std::move(rows);
    }
    if (!r.membership.empty()) {
        Json rows = Json::array();
        for (const auto& row : r.membership) {
            Json jr = Json::object();
            jr["label"] = row.label;
            jr["verdict"] = row.verdict;
            jr["normal_form"] = eq_to_json(row.normal_form);
            rows.push_back(std::move(jr));
        }
        out["membership"] = std::move(rows);
    }
    if (r.solver) out["solver"] = solver_to_json(*r.solver);
    if (!r.loop_table.empty()) {
        Json rows = Json::array();
        for (const auto& row : r.loop_table) {
            Json jr = Json::object();
            jr["class"] = row.label;
            jr["prefix"] = prefix_to_json(row.prefix);
            jr["verdict"] = row.verdict;
            rows.push_back(std::move(jr));
        }
        out["loop_table"] = std::move(rows);
    }
    return out;
}

Report report_from_json(const Json& j) {
    Report r;
    if (!j.is_object()) throw FormatError("report must be a JSON object");
    if (j.empty()) return r;
    r.config = config_from_json(j.at("config"));
    if (j.contains("qs_table"))
        for (const Json& jr : j.at("qs_table"))
            r.qs_table.push_back(
                {jr.at("class").get<std::string>(), eq_from_json(jr.at("series"))});
    if (j.contains("ps_table"))
        for (const Json& jr : j.at("ps_table"))
            r.ps_table.push_back(
                {jr.at("class").get<std::string>(), eq_from_json(jr.at("series"))});
    if (j.contains("membership"))
        for (const Json& jr : j.at("membership"))
            r.membership.push_back({jr.at("label").get<std::string>(),
                                    jr.at("verdict").get<std::string>(),
                                    eq_from_json(jr.at("normal_form"))});
    if (j.contains("solver")) r.solver = solver_from_json(j.at("solver"));
    if (j.contains("loop_table"))
        for (const Json& jr : j.at("loop_table"))
            r.loop_table.push_back({jr.at("class").get<std::string>(),
                                    prefix_from_json(jr.at("prefix"), r.config.n.value_or(2)),
                                    jr.at("verdict").get<std::string>()});
    return r;
}

std::string series_table(const std::string& title, const std::string& col,
                         const std::vector<LabeledSeries>& rows) {
    std::string out = fmt::format("## {}\n\n| class | {} |\n| --- | --- |\n", title, col);
    for (const auto& row : rows) out += fmt::format("| {} | {} |\n", row.label, row.value.str());
    return out + "\n";
}

}  // namespace

std::string render_qs_markdown(const Report& report) {
    if (report.qs_table.empty()) return "";
    return series_table(fmt::format("Quantum square table (m = {}, k = {})",
                                    report.config.m.value_or(0), report.config.k.value_or(1)),
                        "QS(class)", report.qs_table);
}

std::string render_ps_markdown(const Report& report) {
    if (report.ps_table.empty() && report.membership.empty()) return "";
    std::string out =
        series_table(fmt::format("Induced square on the quotient basis (m = {}, order {})",
                                 report.config.m.value_or(0), report.config.truncation_order),
                     "PS(class)", report.ps_table);
    if (!report.membership.empty()) {
        out += "## Membership diagnostics\n\n| element | verdict | normal form |\n| --- | --- | --- |\n";
        for (const auto& row : report.membership)
            out += fmt::format("| {} | {} | {} |\n", row.label, row.verdict,
                               row.normal_form.str());
        out += "\n";
    }
    return out;
}

std::string render_solver_markdown(const Report& report) {
    if (!report.solver) return "";
    const SolverReport& s = *report.solver;
    std::string out = fmt::format(
        "## Constraint solver (m = {}, levels 0..{})\n\n"
        "determined {} of {} graded unknowns (level 0 is fixed)\n\n"
        "| map | value |\n| --- | --- |\n",
        s.ring.m, s.max_level, s.determined, s.determined + s.undetermined);
    for (int level = 0; level <= s.max_level; ++level)
        for (int from = 0; from <= s.ring.m; ++from) {
            auto img = s.image(level, from);
            std::string cell;
            if (img) {
                cell = img->is_zero() ? "0" : img->str();
            } else {
                for (const auto& e : s.entries) {
                    if (e.level != level || e.from != from) continue;
                    if (e.status == SolverEntry::Status::ForcedZero) continue;
                    if (e.status == SolverEntry::Status::Determined && e.value.is_zero())
                        continue;
                    if (!cell.empty()) cell += ", ";
                    cell += fmt::format("{}: {}", power_label(e.to), e.str());
                }
                cell = fmt::format("undetermined ({})", cell);
            }
            out += fmt::format("| r_{}({}) | {} |\n", level, power_label(from), cell);
        }
    return out + "\n";
}

std::string render_loop_markdown(const Report& report) {
    if (report.loop_table.empty()) return "";
    std::string out = fmt::format(
        "## Square prefixes for the {}-sphere (chain level, y-exponents up to {})\n\n"
        "| class | prefix | verdict |\n| --- | --- | --- |\n",
        report.config.n.value_or(0), report.config.loop_max_exponent);
    for (const auto& row : report.loop_table)
        out += fmt::format("| {} | {} | {} |\n", row.label, row.prefix.str(), row.verdict);
    return out + "\n";
}

std::string export_bytes(const Report& report, OutputFormat format) {
    if (format == OutputFormat::Json) return report_to_json(report).dump(2) + "\n";
    std::string out = render_qs_markdown(report) + render_ps_markdown(report) +
                      render_solver_markdown(report) + render_loop_markdown(report);
    return out;
}

Report parse_report(const std::string& bytes) {
    Json j;
    try {
        j = Json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(fmt::format("report is not valid JSON: {}", e.what()));
    }
    return report_from_json(j);
}

std::string config_canonical(const JobConfig& cfg) { return config_to_json(cfg).dump(); }

}  // namespace qsteen
