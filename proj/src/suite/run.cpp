#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <thread>

#include "hkit/errors.hpp"
#include "hkit/gauge/checks.hpp"
#include "hkit/gauge/hyperspherical.hpp"
#include "hkit/radial/radial.hpp"
#include "hkit/suite.hpp"
#include "hkit/symmetry/relations.hpp"
#include "hkit/symmetry/spectrum.hpp"
#include "hkit/transforms/checks.hpp"

namespace hkit::suite {

namespace {

void append(CheckList& out, CheckList more) {
    for (auto& r : more) out.push_back(std::move(r));
}

CheckList algebra_rows(const SuiteConfig& cfg) {
    const auto ops = symmetry::build_operators(cfg.units);
    CheckList out;
    if (!cfg.relation.empty()) {
        out.push_back(symmetry::verify_relation(ops, cfg.relation));
        return out;
    }
    for (const auto& name : symmetry::relation_names()) out.push_back(symmetry::verify_relation(ops, name));
    return out;
}

CheckList casimir_rows(const SuiteConfig& cfg) {
    const auto ops = symmetry::build_operators(cfg.units);
    symmetry::CasimirOptions opt;
    opt.term_budget = cfg.casimir_budget;
    opt.test_fields = cfg.casimir_test_fields;
    opt.seed = cfg.seed;
    opt.tolerance = cfg.tolerance("casimir.numeric", opt.tolerance);
    return {symmetry::casimir_cleared_check(ops, symmetry::Casimir::C2, opt),
            symmetry::casimir_cleared_check(ops, symmetry::Casimir::C3, opt), symmetry::casimir3_convention_audit(ops),
            symmetry::casimir_cleared_check(ops, symmetry::Casimir::C4, opt)};
}

}  // namespace

Summary summarize(const std::vector<CheckReport>& rows) {
    Summary s;
    for (const auto& r : rows) {
        if (r.counts()) {
            ++s.total;
            (r.pass ? s.passed : s.failed) += 1;
        } else {
            ++s.audit;
            if (!r.pass) ++s.audit_mismatches;
        }
    }
    return s;
}

CheckList run_one(const std::string& suite, const SuiteConfig& cfg) {
    CheckList out;
    if (suite == "euler") {
        append(out, transforms::euler_checks(cfg.euler_samples, cfg.seed));
    } else if (suite == "gauge") {
        append(out, gauge::potential_identities_check());
        append(out, gauge::tau_relations_check());
        append(out, gauge::su2_trig_generators_check(20, cfg.seed));
        out.push_back(gauge::gauge_transform_check(cfg.field_points, cfg.seed));
    } else if (suite == "field") {
        append(out, gauge::field_identities_check());
        append(out, gauge::self_duality_check(cfg.field_points, cfg.seed));
        append(out, gauge::hyperspherical_table_check(cfg.field_points, cfg.seed));
    } else if (suite == "charge") {
        append(out, topology::charge_checks(cfg.quadrature, cfg.charge_error_estimate, cfg.seed));
    } else if (suite == "algebra") {
        append(out, algebra_rows(cfg));
    } else if (suite == "casimir") {
        append(out, casimir_rows(cfg));
    } else if (suite == "spectrum") {
        append(out, symmetry::spectrum_checks(cfg.units));
    } else if (suite == "radial") {
        radial::RadialCheckOptions opt;
        opt.n_points = cfg.radial_points;
        opt.eigen_tolerance = cfg.tolerance("radial.eigen", opt.eigen_tolerance);
        opt.residual_tolerance = cfg.tolerance("radial.residual", opt.residual_tolerance);
        append(out, radial::radial_checks(opt));
    } else {
        throw ConfigError("unknown suite '" + suite + "'");
    }
    return out;
}

RunReport run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    if (!cfg.relation.empty()) {
        const auto& names = symmetry::relation_names();
        if (std::find(names.begin(), names.end(), cfg.relation) == names.end()) {
            throw ConfigError("unknown relation '" + cfg.relation + "'");
        }
    }
    const auto suites = cfg.resolved_suites();
    std::vector<CheckList> results(suites.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < suites.size(); i = next++) {
            try {
                results[i] = run_one(suites[i], cfg);
            } catch (const std::exception& e) {
                results[i] = {{suites[i], "suite aborted", "", CheckMode::Exact, 0.0, false, e.what()}};
            }
        }
    };
    const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), suites.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    RunReport report;
    report.config = cfg;
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
    report.timestamp = stamp;
    for (auto& list : results) append(report.rows, std::move(list));
    report.summary = summarize(report.rows);
    return report;
}

}  // namespace hkit::suite
