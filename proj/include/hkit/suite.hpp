#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hkit/check.hpp"
#include "hkit/symmetry/operators.hpp"
#include "hkit/topology/charge.hpp"

namespace hkit::suite {

inline constexpr const char* kVersion = "1.0.0";

/// Suites in report order.
const std::vector<std::string>& suite_names();

struct SuiteConfig {
    std::vector<std::string> suites{"all"};
    /// Recognized keys: radial.eigen, radial.residual, casimir.numeric.
    std::map<std::string, double> tolerances;
    topology::QuadratureSpec quadrature;
    bool charge_error_estimate = false;
    int radial_points = 4096;
    symmetry::Units units;
    std::uint64_t seed = 1;
    int jobs = 1;
    int euler_samples = 1000;
    int field_points = 50;
    std::size_t casimir_budget = 2'000'000;
    int casimir_test_fields = 1;
    /// Restricts the algebra suite to one relation when non-empty.
    std::string relation;

    double tolerance(const std::string& key, double fallback) const;
    /// Suites with "all" expanded, duplicates removed, in report order;
    /// throws ConfigError on unknown names.
    std::vector<std::string> resolved_suites() const;
    /// Throws ConfigError on any invalid value.
    void validate() const;
};

/// Applies `[section]` / `key = value` text on top of `cfg`.  Lines starting
/// with '#' or ';' are comments; unknown sections or keys are errors.
void apply_config_text(SuiteConfig& cfg, const std::string& text, const std::string& origin = "config");
void apply_config_file(SuiteConfig& cfg, const std::string& path);
/// HKIT_SEED, when set, replaces the seed.
void apply_environment(SuiteConfig& cfg);

struct Summary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int audit = 0;
    int audit_mismatches = 0;
};

struct RunReport {
    std::vector<CheckReport> rows;
    Summary summary;
    SuiteConfig config;
    std::string version = kVersion;
    std::string timestamp;

    bool all_pass() const { return summary.failed == 0; }
    /// 0 when every counted check passes, 1 otherwise.
    int exit_code() const { return all_pass() ? 0 : 1; }
};

Summary summarize(const std::vector<CheckReport>& rows);

/// Rows of one suite.
CheckList run_one(const std::string& suite, const SuiteConfig& cfg);

/// Runs the selected suites, up to cfg.jobs at a time; row order follows
/// suite order, not completion order.
RunReport run_suite(const SuiteConfig& cfg);

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& name);

/// Serialized report; JSON keys and CSV columns have a fixed order.
std::string emit_report(const RunReport& report, Format format);
/// Inverse of the JSON emitter.
RunReport report_from_json(const std::string& text);

/// CSV/JSON row keys in order.
const std::vector<std::string>& row_keys();

}  // namespace hkit::suite
