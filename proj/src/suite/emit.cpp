#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hkit/errors.hpp"
#include "hkit/suite.hpp"

namespace hkit::suite {

using exact::Rational;

namespace {

using Json = nlohmann::ordered_json;

Json residual_json(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string residual_text(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return "inf";
    return Json(v).dump();
}

CheckMode mode_from(const std::string& s) {
    if (s == "exact") return CheckMode::Exact;
    if (s == "numeric") return CheckMode::Numeric;
    if (s == "audit") return CheckMode::Audit;
    throw ConfigError("unknown check mode '" + s + "'");
}

Json config_json(const SuiteConfig& c) {
    Json j;
    j["suites"] = c.suites;
    j["seed"] = c.seed;
    j["jobs"] = c.jobs;
    j["relation"] = c.relation;
    j["units"] = {{"hbar", c.units.hbar.to_string()}, {"mu0", c.units.mu0.to_string()}, {"e2", c.units.e2.to_string()}};
    j["quadrature"] = {{"n_theta", c.quadrature.n_theta}, {"n_beta", c.quadrature.n_beta},
                       {"n_alpha", c.quadrature.n_alpha}, {"n_gamma", c.quadrature.n_gamma},
                       {"radius", c.quadrature.radius},   {"error_estimate", c.charge_error_estimate}};
    j["radial_points"] = c.radial_points;
    j["euler_samples"] = c.euler_samples;
    j["field_points"] = c.field_points;
    j["casimir"] = {{"term_budget", c.casimir_budget}, {"test_fields", c.casimir_test_fields}};
    Json tol = Json::object();
    for (const auto& [k, v] : c.tolerances) tol[k] = v;
    j["tolerances"] = tol;
    return j;
}

SuiteConfig config_from(const Json& j) {
    SuiteConfig c;
    c.suites = j.at("suites").get<std::vector<std::string>>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.jobs = j.at("jobs").get<int>();
    c.relation = j.at("relation").get<std::string>();
    const Json& u = j.at("units");
    c.units.hbar = Rational::parse(u.at("hbar").get<std::string>());
    c.units.mu0 = Rational::parse(u.at("mu0").get<std::string>());
    c.units.e2 = Rational::parse(u.at("e2").get<std::string>());
    const Json& q = j.at("quadrature");
    c.quadrature.n_theta = q.at("n_theta").get<int>();
    c.quadrature.n_beta = q.at("n_beta").get<int>();
    c.quadrature.n_alpha = q.at("n_alpha").get<int>();
    c.quadrature.n_gamma = q.at("n_gamma").get<int>();
    c.quadrature.radius = q.at("radius").get<double>();
    c.charge_error_estimate = q.at("error_estimate").get<bool>();
    c.radial_points = j.at("radial_points").get<int>();
    c.euler_samples = j.at("euler_samples").get<int>();
    c.field_points = j.at("field_points").get<int>();
    c.casimir_budget = j.at("casimir").at("term_budget").get<std::size_t>();
    c.casimir_test_fields = j.at("casimir").at("test_fields").get<int>();
    for (const auto& [k, v] : j.at("tolerances").items()) c.tolerances[k] = v.get<double>();
    return c;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string text_report(const RunReport& r) {
    std::ostringstream o;
    std::string suite;
    for (const auto& row : r.rows) {
        if (row.suite != suite) {
            suite = row.suite;
            o << "== " << suite << "\n";
        }
        o << (row.pass ? "PASS" : "FAIL") << (row.counts() ? "       " : " (audit)") << "  " << row.relation
          << "  residual=" << residual_text(row.residual) << "  [" << mode_name(row.mode);
        if (!row.anchor.empty()) o << ", " << row.anchor;
        o << "]";
        if (!row.detail.empty()) o << "\n      " << row.detail;
        o << "\n";
    }
    const Summary& s = r.summary;
    o << "\n" << s.passed << "/" << s.total << " checks passed, " << s.failed << " failed; " << s.audit
      << " audit rows, " << s.audit_mismatches << " itemized mismatches against printed data\n";
    return o.str();
}

}  // namespace

const std::vector<std::string>& row_keys() {
    static const std::vector<std::string> keys = {"suite", "relation", "anchor", "mode", "residual", "pass", "detail"};
    return keys;
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    throw ConfigError("unknown format '" + name + "' (json, csv, text)");
}

std::string emit_report(const RunReport& r, Format format) {
    if (format == Format::Text) return text_report(r);
    if (format == Format::Csv) {
        std::ostringstream o;
        for (std::size_t k = 0; k < row_keys().size(); ++k) o << (k ? "," : "") << row_keys()[k];
        o << "\n";
        for (const auto& row : r.rows) {
            o << csv_field(row.suite) << "," << csv_field(row.relation) << "," << csv_field(row.anchor) << ","
              << mode_name(row.mode) << "," << residual_text(row.residual) << "," << (row.pass ? "true" : "false")
              << "," << csv_field(row.detail) << "\n";
        }
        return o.str();
    }
    Json j;
    j["tool"] = "hkit";
    j["version"] = r.version;
    j["timestamp"] = r.timestamp;
    j["config"] = config_json(r.config);
    j["summary"] = {{"total", r.summary.total},
                    {"passed", r.summary.passed},
                    {"failed", r.summary.failed},
                    {"audit", r.summary.audit},
                    {"audit_mismatches", r.summary.audit_mismatches},
                    {"all_pass", r.all_pass()}};
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json o;
        o["suite"] = row.suite;
        o["relation"] = row.relation;
        o["anchor"] = row.anchor;
        o["mode"] = mode_name(row.mode);
        o["residual"] = residual_json(row.residual);
        o["pass"] = row.pass;
        o["detail"] = row.detail;
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
        RunReport r;
        r.version = j.at("version").get<std::string>();
        r.timestamp = j.at("timestamp").get<std::string>();
        r.config = config_from(j.at("config"));
        for (const auto& o : j.at("rows")) {
            CheckReport c;
            c.suite = o.at("suite").get<std::string>();
            c.relation = o.at("relation").get<std::string>();
            c.anchor = o.at("anchor").get<std::string>();
            c.mode = mode_from(o.at("mode").get<std::string>());
            c.residual = o.at("residual").is_null() ? std::numeric_limits<double>::infinity()
                                                    : o.at("residual").get<double>();
            c.pass = o.at("pass").get<bool>();
            c.detail = o.at("detail").get<std::string>();
            r.rows.push_back(std::move(c));
        }
        r.summary = summarize(r.rows);
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed report: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("malformed report: ") + e.what());
    }
}

}  // namespace hkit::suite
