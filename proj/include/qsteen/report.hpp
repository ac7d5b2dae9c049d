#ifndef QSTEEN_REPORT_HPP
#define QSTEEN_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsteen/loop.hpp"
#include "qsteen/qsquare.hpp"
#include "qsteen/quotient.hpp"
#include "qsteen/serialize.hpp"

namespace qsteen {

enum class Space { OLine, TStarSphere };
enum class OutputFormat { Json, Markdown };

/* Everything a table-generation job depends on. Which parameters apply is
 * decided by the space: (m, k) for the line-bundle rings, n for the sphere
 * side; validate() reports violations field by field. Reports are pure
 * functions of this struct (plus the engine version), which is what makes
 * the byte-level cache sound. */
struct JobConfig {
    Space space = Space::OLine;
    std::optional<int> m;
    std::optional<int> k;
    std::optional<int> n;
    int truncation_order = 32;
    int loop_max_exponent = 5;  // y-exponent range of the prefix tables
    OutputFormat format = OutputFormat::Markdown;
    std::optional<std::string> cache_path;

    void validate() const;  // throws ConfigError
    bool operator==(const JobConfig&) const = default;
};

struct LabeledSeries {
    std::string label;  // the input class, e.g. "x^2"
    EqElement value;

    bool operator==(const LabeledSeries&) const = default;
};

struct MembershipLine {
    std::string label;
    std::string verdict;
    EqElement normal_form;

    bool operator==(const MembershipLine&) const = default;
};

struct LoopLine {
    std::string label;
    KnownPrefix prefix;
    std::string verdict;

    bool operator==(const LoopLine&) const = default;
};

struct Report {
    JobConfig config;
    std::vector<LabeledSeries> qs_table;
    std::vector<LabeledSeries> ps_table;
    std::vector<MembershipLine> membership;
    std::optional<SolverReport> solver;
    std::vector<LoopLine> loop_table;

    bool operator==(const Report&) const = default;
};

/* Build the full report for a config: for the line-bundle space the square
 * table for 1..x^{m+1}, the induced-square table over the quotient basis
 * (plus the class T), membership diagnostics (the generator itself, a
 * scalar multiple, and the x * g diagnostic), and the solver report; for the
 * sphere side, prefix rows and verdicts for 1..y^imax, x, x y..x y^imax. */
Report run_job(const JobConfig& cfg);

// Serialize a report; parse(export_bytes(r, Json)) == r.
std::string export_bytes(const Report& report, OutputFormat format);
Report parse_report(const std::string& bytes);

// Canonical one-line form of a config, the basis of cache keys.
std::string config_canonical(const JobConfig& cfg);

// Section renderers used by the CLI to print one slice of a report.
std::string render_qs_markdown(const Report& report);
std::string render_ps_markdown(const Report& report);
std::string render_solver_markdown(const Report& report);
std::string render_loop_markdown(const Report& report);

}  // namespace qsteen

#endif
