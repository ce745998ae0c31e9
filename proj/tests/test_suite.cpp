#include <sstream>

#include "doctest.h"

#include "hkit/errors.hpp"
#include "hkit/suite.hpp"

using namespace hkit::suite;

namespace {

std::string without_timestamp(const std::string& json) {
    std::istringstream in(json);
    std::string line, out;
    while (std::getline(in, line)) {
        if (line.find("\"timestamp\"") == std::string::npos) out += line + "\n";
    }
    return out;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("config parsing") {
    SuiteConfig cfg;
    apply_config_text(cfg, "# comment\n[run]\nsuites = euler, charge\nseed = 42\n[units]\ne2 = 3/2\n"
                           "[quadrature]\nn_theta = 12\n[tolerances]\nradial.eigen = 1e-7\n");
    CHECK(cfg.suites == std::vector<std::string>{"euler", "charge"});
    CHECK(cfg.seed == 42);
    CHECK(cfg.units.e2 == hkit::exact::Rational(3, 2));
    CHECK(cfg.quadrature.n_theta == 12);
    CHECK(cfg.tolerance("radial.eigen", 0) == 1e-7);
    CHECK_NOTHROW(cfg.validate());

    CHECK_THROWS_AS(apply_config_text(cfg, "[nope]\n"), hkit::ConfigError);
    CHECK_THROWS_AS(apply_config_text(cfg, "[run]\ncolour = red\n"), hkit::ConfigError);
    CHECK_THROWS_AS(apply_config_text(cfg, "[run]\nseed = x\n"), hkit::ConfigError);
    CHECK_THROWS_AS(apply_config_text(cfg, "[units]\nhbar = 1/0\n"), hkit::ConfigError);
}

TEST_CASE("suite resolution") {
    SuiteConfig cfg;
    CHECK(cfg.resolved_suites() == suite_names());
    cfg.suites = {"radial", "euler", "euler"};
    CHECK(cfg.resolved_suites() == std::vector<std::string>{"euler", "radial"});
    cfg.suites = {"foo"};
    CHECK_THROWS_AS(cfg.resolved_suites(), hkit::ConfigError);
    CHECK_THROWS_AS(run_suite(cfg), hkit::ConfigError);
}

TEST_CASE("invalid values are rejected") {
    SuiteConfig cfg;
    cfg.jobs = 0;
    CHECK_THROWS_AS(cfg.validate(), hkit::ConfigError);
    cfg = SuiteConfig{};
    cfg.units.hbar = hkit::exact::Rational(-1);
    CHECK_THROWS_AS(cfg.validate(), hkit::ConfigError);
    cfg = SuiteConfig{};
    cfg.tolerances["nonsense"] = 1;
    CHECK_THROWS_AS(cfg.validate(), hkit::ConfigError);
    cfg = SuiteConfig{};
    cfg.suites = {"algebra"};
    cfg.relation = "X-Y";
    CHECK_THROWS_AS(run_suite(cfg), hkit::ConfigError);
}

TEST_CASE("euler and charge runs pass") {
    SuiteConfig cfg;
    cfg.suites = {"euler", "charge"};
    cfg.euler_samples = 100;
    const RunReport r = run_suite(cfg);
    CHECK(r.exit_code() == 0);
    bool found_q = false;
    for (const auto& row : r.rows) {
        if (row.suite == "charge" && row.relation.find("q = +1") != std::string::npos) {
            found_q = true;
            CHECK(row.residual < 1e-10);
        }
    }
    CHECK(found_q);
}

TEST_CASE("report formats") {
    SuiteConfig cfg;
    cfg.suites = {"euler", "spectrum"};
    cfg.euler_samples = 50;
    const RunReport r = run_suite(cfg);

    const std::string json = emit_report(r, Format::Json);
    const RunReport back = report_from_json(json);
    CHECK(emit_report(back, Format::Json) == json);
    CHECK(back.rows.size() == r.rows.size());

    const std::string csv = emit_report(r, Format::Csv);
    CHECK(count_lines(csv) == r.rows.size() + 1);
    CHECK(csv.substr(0, csv.find('\n')) == "suite,relation,anchor,mode,residual,pass,detail");

    const std::string text = emit_report(r, Format::Text);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("(audit)") != std::string::npos);

    CHECK(parse_format("csv") == Format::Csv);
    CHECK_THROWS_AS(parse_format("xml"), hkit::ConfigError);
    CHECK_THROWS_AS(report_from_json("{\"rows\": 3}"), hkit::ConfigError);
}

TEST_CASE("runs are deterministic apart from the timestamp") {
    SuiteConfig cfg;
    cfg.suites = {"euler", "field", "radial"};
    cfg.euler_samples = 50;
    cfg.field_points = 10;
    cfg.radial_points = 1024;
    const std::string a = emit_report(run_suite(cfg), Format::Json);
    cfg.jobs = 3;
    std::string b = emit_report(run_suite(cfg), Format::Json);
    const auto pos = b.find("\"jobs\": 3");
    REQUIRE(pos != std::string::npos);
    b.replace(pos, 9, "\"jobs\": 1");
    CHECK(without_timestamp(a) == without_timestamp(b));
}

TEST_CASE("a failing check sets exit code 1") {
    RunReport r;
    r.rows.push_back({"x", "always fails", "", hkit::CheckMode::Numeric, 1.0, false, ""});
    r.rows.push_back({"x", "printed data mismatch", "", hkit::CheckMode::Audit, 1.0, false, ""});
    r.summary = summarize(r.rows);
    CHECK(r.summary.failed == 1);
    CHECK(r.summary.audit_mismatches == 1);
    CHECK(r.exit_code() == 1);
    r.rows.erase(r.rows.begin());
    r.summary = summarize(r.rows);
    CHECK(r.exit_code() == 0);
}
