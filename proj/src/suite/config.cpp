#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "hkit/errors.hpp"
#include "hkit/suite.hpp"

namespace hkit::suite {

using exact::Rational;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& v, const std::string& where) {
    std::size_t used = 0;
    long long out = 0;
    try {
        out = std::stoll(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw ConfigError(where + ": expected an integer, got '" + v + "'");
    return out;
}

double parse_double(const std::string& v, const std::string& where) {
    std::size_t used = 0;
    double out = 0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw ConfigError(where + ": expected a number, got '" + v + "'");
    return out;
}

Rational parse_rational(const std::string& v, const std::string& where) {
    try {
        return Rational::parse(v);
    } catch (const std::exception&) {
        throw ConfigError(where + ": expected a rational such as 3/2, got '" + v + "'");
    }
}

bool parse_bool(const std::string& v, const std::string& where) {
    if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
    if (v == "false" || v == "no" || v == "0" || v == "off") return false;
    throw ConfigError(where + ": expected true or false, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

const std::set<std::string>& tolerance_keys() {
    static const std::set<std::string> keys = {"radial.eigen", "radial.residual", "casimir.numeric"};
    return keys;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"euler",   "gauge",    "field",    "charge",
                                                   "algebra", "casimir", "spectrum", "radial"};
    return names;
}

double SuiteConfig::tolerance(const std::string& key, double fallback) const {
    const auto it = tolerances.find(key);
    return it == tolerances.end() ? fallback : it->second;
}

std::vector<std::string> SuiteConfig::resolved_suites() const {
    if (suites.empty()) throw ConfigError("no suites selected");
    std::set<std::string> wanted;
    for (const auto& s : suites) {
        if (s == "all") {
            wanted.insert(suite_names().begin(), suite_names().end());
        } else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end()) {
            wanted.insert(s);
        } else {
            throw ConfigError("unknown suite '" + s + "'");
        }
    }
    std::vector<std::string> out;
    for (const auto& s : suite_names()) {
        if (wanted.count(s)) out.push_back(s);
    }
    return out;
}

void SuiteConfig::validate() const {
    resolved_suites();
    for (const auto& [k, v] : tolerances) {
        if (!tolerance_keys().count(k)) throw ConfigError("unknown tolerance '" + k + "'");
        if (!(v > 0)) throw ConfigError("tolerance '" + k + "' must be positive");
    }
    const auto& q = quadrature;
    if (q.n_theta < 1 || q.n_beta < 1 || q.n_alpha < 1 || q.n_gamma < 1) {
        throw ConfigError("quadrature node counts must be positive");
    }
    if (!(q.radius > 0)) throw ConfigError("quadrature radius must be positive");
    if (radial_points < 64) throw ConfigError("radial grid needs at least 64 points");
    if (units.hbar.sign() <= 0 || units.mu0.sign() <= 0 || units.e2.sign() <= 0) {
        throw ConfigError("units hbar, mu0 and e2 must be positive");
    }
    if (jobs < 1) throw ConfigError("jobs must be at least 1");
    if (euler_samples < 1 || field_points < 1) throw ConfigError("sample counts must be positive");
    if (casimir_test_fields < 1 || casimir_test_fields > 3) throw ConfigError("casimir test_fields must be 1..3");
}

void apply_config_text(SuiteConfig& cfg, const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line, section = "run";
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = origin + ":" + std::to_string(lineno);
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            static const std::set<std::string> known = {"run",    "units", "quadrature", "radial",
                                                        "euler",  "field", "casimir",    "tolerances"};
            if (!known.count(section)) throw ConfigError(where + ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        const std::string full = section + "." + key;
        if (section == "tolerances") {
            if (!tolerance_keys().count(key)) throw ConfigError(where + ": unknown tolerance '" + key + "'");
            cfg.tolerances[key] = parse_double(val, where);
        } else if (full == "run.suites") {
            cfg.suites = split_list(val);
        } else if (full == "run.seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_int(val, where));
        } else if (full == "run.jobs") {
            cfg.jobs = static_cast<int>(parse_int(val, where));
        } else if (full == "run.relation") {
            cfg.relation = val;
        } else if (full == "units.hbar") {
            cfg.units.hbar = parse_rational(val, where);
        } else if (full == "units.mu0") {
            cfg.units.mu0 = parse_rational(val, where);
        } else if (full == "units.e2") {
            cfg.units.e2 = parse_rational(val, where);
        } else if (full == "quadrature.n_theta") {
            cfg.quadrature.n_theta = static_cast<int>(parse_int(val, where));
        } else if (full == "quadrature.n_beta") {
            cfg.quadrature.n_beta = static_cast<int>(parse_int(val, where));
        } else if (full == "quadrature.n_alpha") {
            cfg.quadrature.n_alpha = static_cast<int>(parse_int(val, where));
        } else if (full == "quadrature.n_gamma") {
            cfg.quadrature.n_gamma = static_cast<int>(parse_int(val, where));
        } else if (full == "quadrature.radius") {
            cfg.quadrature.radius = parse_double(val, where);
        } else if (full == "quadrature.error_estimate") {
            cfg.charge_error_estimate = parse_bool(val, where);
        } else if (full == "radial.points") {
            cfg.radial_points = static_cast<int>(parse_int(val, where));
        } else if (full == "euler.samples") {
            cfg.euler_samples = static_cast<int>(parse_int(val, where));
        } else if (full == "field.points") {
            cfg.field_points = static_cast<int>(parse_int(val, where));
        } else if (full == "casimir.term_budget") {
            cfg.casimir_budget = static_cast<std::size_t>(parse_int(val, where));
        } else if (full == "casimir.test_fields") {
            cfg.casimir_test_fields = static_cast<int>(parse_int(val, where));
        } else {
            throw ConfigError(where + ": unknown key '" + key + "' in [" + section + "]");
        }
    }
}

void apply_config_file(SuiteConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    apply_config_text(cfg, buf.str(), path);
}

void apply_environment(SuiteConfig& cfg) {
    if (const char* s = std::getenv("HKIT_SEED"); s != nullptr && *s != '\0') {
        cfg.seed = static_cast<std::uint64_t>(parse_int(s, "HKIT_SEED"));
    }
}

}  // namespace hkit::suite
