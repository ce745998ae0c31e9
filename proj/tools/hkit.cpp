#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hkit/errors.hpp"
#include "hkit/radial/radial.hpp"
#include "hkit/suite.hpp"
#include "hkit/symmetry/spectrum.hpp"
#include "hkit/transforms/angles.hpp"
#include "hkit/transforms/maps.hpp"

using hkit::exact::Rational;
using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : split(text, ',')) {
        try {
            out.push_back(Rational::parse(s));
        } catch (const std::exception&) {
            throw hkit::ConfigError("not a rational: '" + s + "'");
        }
    }
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
    return "(" + out + ")";
}

template <class Array>
std::vector<std::string> as_strings(const Array& a) {
    std::vector<std::string> out;
    for (const auto& v : a) out.push_back(v.to_string());
    return out;
}

Rational sq_norm(const std::vector<Rational>& v) {
    Rational s(0);
    for (const auto& c : v) s += c * c;
    return s;
}

std::string num(double v) {
    std::ostringstream o;
    o << std::setprecision(15) << v;
    return o.str();
}

int run_transform(const std::string& point, const std::string& format) {
    const auto u = parse_point(point);
    Json j;
    j["input"] = as_strings(u);
    std::vector<Rational> x;
    const Rational u2 = sq_norm(u);
    switch (u.size()) {
        case 2: {
            const auto img = hkit::transforms::levi_civita_map(std::array<Rational, 2>{u[0], u[1]});
            x.assign(img.begin(), img.end());
            j["map"] = "levi-civita";
            break;
        }
        case 4: {
            const auto img = hkit::transforms::kustaanheimo_stiefel_map(std::array<Rational, 4>{u[0], u[1], u[2], u[3]});
            x.assign(img.begin(), img.end());
            j["map"] = "kustaanheimo-stiefel";
            const auto full = hkit::transforms::h_apply(hkit::transforms::h_matrix(4), u);
            j["fourth_row"] = full[3].to_string();
            break;
        }
        case 8: {
            std::array<Rational, 8> a;
            std::copy(u.begin(), u.end(), a.begin());
            const auto img = hkit::transforms::hurwitz_map(a);
            x.assign(img.begin(), img.end());
            j["map"] = "hurwitz";
            hkit::transforms::Point8 ud;
            for (int i = 0; i < 8; ++i) ud[i] = u[i].to_double();
            try {
                const auto b = hkit::transforms::body_angles(ud);
                j["body_angles"] = {{"alpha", b.alpha}, {"beta", b.beta}, {"gamma", b.gamma}};
            } catch (const hkit::UndefinedAngle& e) {
                j["body_angles"] = e.what();
            }
            break;
        }
        case 5: {
            hkit::exact::Point5 p;
            for (int i = 0; i < 5; ++i) p[i] = u[i].to_double();
            const auto h = hkit::transforms::hyperspherical(p);
            const auto back = hkit::transforms::hyperspherical_inverse(h);
            double err = 0;
            for (int i = 0; i < 5; ++i) err = std::max(err, std::abs(back[i] - p[i]));
            j["map"] = "hyperspherical";
            j["coordinates"] = {{"r", h.r}, {"theta", h.theta}, {"beta", h.beta}, {"alpha", h.alpha}, {"gamma", h.gamma}};
            j["round_trip_error"] = err;
            break;
        }
        default:
            throw hkit::BadDimension("transform takes 2, 4 or 8 body coordinates, or 5 space coordinates; got " +
                                     std::to_string(u.size()));
    }
    if (!x.empty()) {
        const Rational residual = sq_norm(x) - u2 * u2;
        j["image"] = as_strings(x);
        j["norm_image_sq"] = sq_norm(x).to_string();
        j["norm_input_4th"] = (u2 * u2).to_string();
        j["euler_residual"] = residual.to_string();
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "map: " << j["map"].get<std::string>() << "\n";
    std::cout << "input: " << join(j["input"].get<std::vector<std::string>>()) << "\n";
    if (!x.empty()) {
        std::cout << "image: " << join(j["image"].get<std::vector<std::string>>()) << "\n";
        std::cout << "|x|^2 = " << j["norm_image_sq"].get<std::string>()
                  << ", |u|^4 = " << j["norm_input_4th"].get<std::string>()
                  << ", residual = " << j["euler_residual"].get<std::string>() << "\n";
    }
    if (j.contains("fourth_row")) std::cout << "fourth row of H(u;4)u: " << j["fourth_row"].get<std::string>() << "\n";
    if (j.contains("body_angles")) {
        const auto& b = j["body_angles"];
        if (b.is_string()) {
            std::cout << "body angles: " << b.get<std::string>() << "\n";
        } else {
            std::cout << "body angles: alpha = " << num(b["alpha"]) << ", beta = " << num(b["beta"])
                      << ", gamma = " << num(b["gamma"]) << "\n";
        }
    }
    if (j.contains("coordinates")) {
        const auto& c = j["coordinates"];
        std::cout << "r = " << num(c["r"]) << ", theta = " << num(c["theta"]) << ", beta = " << num(c["beta"])
                  << ", alpha = " << num(c["alpha"]) << ", gamma = " << num(c["gamma"]) << "\n";
        std::cout << "round-trip error: " << num(j["round_trip_error"]) << "\n";
    }
    return 0;
}

struct RadialArgs {
    std::string kind = "oscillator";
    double D = 8, L = 0, omega = 1, d = 5, l = 0, e2 = 1;
    std::string coeffs;
    int points = 4096, levels = 3;
    double extent = 0;
    std::string format = "text";
};

int run_radial(const RadialArgs& a) {
    using namespace hkit::radial;
    RadialProblem p;
    if (a.kind == "oscillator") {
        p = RadialProblem::oscillator(a.D, a.L, a.omega);
    } else if (a.kind == "coulomb") {
        p = RadialProblem::coulomb(a.d, a.l, a.e2);
    } else if (a.kind == "modified") {
        std::vector<double> c;
        for (const auto& s : split(a.coeffs, ',')) c.push_back(std::stod(s));
        if (c.size() < 2) throw hkit::ConfigError("--coeffs needs at least c0,c1");
        p = RadialProblem::modified(a.D, a.L, c);
    } else {
        throw hkit::ConfigError("unknown kind '" + a.kind + "' (oscillator, coulomb, modified)");
    }
    p.n_points = a.points;
    p.levels = a.levels;
    p.extent = a.extent;
    const EigenResult r = solve(p);
    const bool has_exact = p.kind != RadialKind::Modified;
    std::vector<CoulombData> dual;
    if (p.kind == RadialKind::Oscillator) dual = duality_map(r, p);

    Json rows = Json::array();
    for (std::size_t n = 0; n < r.eigenvalues.size(); ++n) {
        Json row;
        row["n"] = n;
        row["eigenvalue"] = r.eigenvalues[n];
        row["error_estimate"] = r.error_estimates[n];
        if (has_exact) {
            const double ex = p.kind == RadialKind::Oscillator ? oscillator_level(p, static_cast<int>(n))
                                                               : coulomb_level(p, static_cast<int>(n));
            row["exact"] = ex;
            row["relative_error"] = std::abs(r.eigenvalues[n] - ex) / std::abs(ex);
        }
        if (!dual.empty()) {
            row["dual_epsilon"] = dual[n].epsilon;
            row["dual_e2"] = dual[n].e2;
        }
        rows.push_back(std::move(row));
    }
    if (a.format == "json") {
        Json j;
        j["kind"] = kind_name(p.kind);
        j["dim"] = p.dim;
        j["ang"] = p.ang;
        j["n_points"] = r.n_points;
        j["extent"] = r.extent;
        j["formal_dual"] = r.formal;
        j["levels"] = rows;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::vector<std::string> cols;
    for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
    const bool csv = a.format == "csv";
    if (!csv && a.format != "text") throw hkit::ConfigError("unknown format '" + a.format + "'");
    if (!csv) {
        std::cout << "# " << kind_name(p.kind) << " dim=" << p.dim << " ang=" << p.ang << " points=" << r.n_points
                  << " extent=" << num(r.extent) << (r.formal ? " (formal dual dimension)" : "") << "\n";
    }
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (csv) std::cout << (i ? "," : "") << cols[i];
        else std::cout << std::setw(i ? 22 : 3) << cols[i];
    }
    std::cout << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const std::string v = i == 0 ? std::to_string(row[cols[i]].get<int>()) : num(row[cols[i]].get<double>());
            if (csv) std::cout << (i ? "," : "") << v;
            else std::cout << std::setw(i ? 22 : 3) << v;
        }
        std::cout << "\n";
    }
    return 0;
}

struct SpectrumArgs {
    std::string T = "1/2", e2 = "1", hbar = "1", mu0 = "1";
    int levels = 5;
    std::string format = "text";
};

int run_spectrum(const SpectrumArgs& a) {
    using namespace hkit::symmetry;
    Units u;
    try {
        u.e2 = Rational::parse(a.e2);
        u.hbar = Rational::parse(a.hbar);
        u.mu0 = Rational::parse(a.mu0);
    } catch (const std::exception& e) {
        throw hkit::ConfigError(std::string("bad unit value: ") + e.what());
    }
    Rational T;
    try {
        T = Rational::parse(a.T);
    } catch (const std::exception& e) {
        throw hkit::ConfigError("bad T: " + a.T);
    }
    const auto levels = energy_levels(T, a.levels, u);
    Json rows = Json::array();
    for (const auto& lv : levels) {
        const Rational mu1 = Rational(lv.N, 2);
        const auto ev = casimir_eigenvalues(mu1, lv.T, lv.T);
        rows.push_back({{"T", lv.T.to_string()},
                        {"N", lv.N},
                        {"mu", {mu1.to_string(), lv.T.to_string(), lv.T.to_string()}},
                        {"C2", ev.C2.to_string()},
                        {"C3", ev.C3.to_string()},
                        {"C4", ev.C4.to_string()},
                        {"epsilon", lv.epsilon.to_string()},
                        {"epsilon_value", lv.epsilon.to_double()}});
    }
    if (a.format == "json") {
        std::cout << Json{{"units", {{"hbar", u.hbar.to_string()}, {"mu0", u.mu0.to_string()}, {"e2", u.e2.to_string()}}},
                          {"levels", rows}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    if (a.format == "csv") {
        std::cout << "T,N,mu1,mu2,mu3,C2,C3,C4,epsilon,epsilon_value\n";
        for (const auto& r : rows) {
            std::cout << r["T"].get<std::string>() << "," << r["N"].get<int>() << "," << r["mu"][0].get<std::string>()
                      << "," << r["mu"][1].get<std::string>() << "," << r["mu"][2].get<std::string>() << ","
                      << r["C2"].get<std::string>() << "," << r["C3"].get<std::string>() << ","
                      << r["C4"].get<std::string>() << "," << r["epsilon"].get<std::string>() << ","
                      << num(r["epsilon_value"].get<double>()) << "\n";
        }
        return 0;
    }
    if (a.format != "text") throw hkit::ConfigError("unknown format '" + a.format + "'");
    std::cout << std::left << std::setw(6) << "T" << std::setw(5) << "N" << std::setw(16) << "(mu1,mu2,mu3)"
              << std::setw(10) << "C2" << std::setw(10) << "C3" << std::setw(12) << "C4" << std::setw(14) << "epsilon"
              << "value\n";
    for (const auto& r : rows) {
        const std::string mu = "(" + r["mu"][0].get<std::string>() + "," + r["mu"][1].get<std::string>() + "," +
                               r["mu"][2].get<std::string>() + ")";
        std::cout << std::setw(6) << r["T"].get<std::string>() << std::setw(5) << r["N"].get<int>() << std::setw(16)
                  << mu << std::setw(10) << r["C2"].get<std::string>() << std::setw(10) << r["C3"].get<std::string>()
                  << std::setw(12) << r["C4"].get<std::string>() << std::setw(14) << r["epsilon"].get<std::string>()
                  << num(r["epsilon_value"].get<double>()) << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> suites;
    std::string relation, config, format = "text", output, nodes;
    std::vector<std::string> tolerances;
    std::optional<std::uint64_t> seed;
    std::optional<int> jobs, points;
    std::optional<double> radius;
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw hkit::ConfigError("cannot write '" + path + "'");
    out << text;
}

int run_verify(const VerifyArgs& a) {
    using namespace hkit::suite;
    SuiteConfig cfg;
    if (!a.config.empty()) apply_config_file(cfg, a.config);
    apply_environment(cfg);
    if (!a.suites.empty()) cfg.suites = a.suites;
    if (a.seed) cfg.seed = *a.seed;
    if (a.jobs) cfg.jobs = *a.jobs;
    if (a.points) cfg.radial_points = *a.points;
    if (!a.relation.empty()) cfg.relation = a.relation;
    if (!a.nodes.empty()) {
        const auto parts = split(a.nodes, ',');
        if (parts.size() != 4) throw hkit::ConfigError("--nodes takes four counts: theta,beta,alpha,gamma");
        int n[4];
        for (int i = 0; i < 4; ++i) {
            try {
                n[i] = std::stoi(parts[i]);
            } catch (const std::exception&) {
                throw hkit::ConfigError("bad node count '" + parts[i] + "'");
            }
        }
        cfg.quadrature.n_theta = n[0];
        cfg.quadrature.n_beta = n[1];
        cfg.quadrature.n_alpha = n[2];
        cfg.quadrature.n_gamma = n[3];
    }
    if (a.radius) cfg.quadrature.radius = *a.radius;
    for (const auto& t : a.tolerances) {
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw hkit::ConfigError("--tolerance takes name=value");
        std::string text = "[tolerances]\n" + t.substr(0, eq) + " = " + t.substr(eq + 1) + "\n";
        apply_config_text(cfg, text, "--tolerance");
    }
    const Format fmt = parse_format(a.format);
    const RunReport report = run_suite(cfg);
    write_output(emit_report(report, fmt), a.output);
    return report.exit_code();
}

int run_report(const std::string& input, const std::string& format, const std::string& output) {
    using namespace hkit::suite;
    std::ifstream in(input);
    if (!in) throw hkit::ConfigError("cannot read '" + input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const RunReport report = report_from_json(buf.str());
    write_output(emit_report(report, parse_format(format)), output);
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for the dyon-oscillator duality"};
    app.set_version_flag("--version", std::string(hkit::suite::kVersion));
    app.require_subcommand(1);

    std::string point, tformat = "text";
    auto* transform = app.add_subcommand("transform", "Map a point and print its image with identity residuals");
    transform->add_option("point", point, "Comma-separated rationals: 2, 4 or 8 body coordinates, or 5 space coordinates")
        ->required();
    transform->add_option("--format", tformat, "text or json")->check(CLI::IsMember({"text", "json"}));

    RadialArgs ra;
    auto* radial = app.add_subcommand("radial", "Solve a radial eigenproblem on a finite-difference grid");
    radial->add_option("--kind", ra.kind, "oscillator, coulomb or modified")
        ->check(CLI::IsMember({"oscillator", "coulomb", "modified"}));
    radial->add_option("--D", ra.D, "Oscillator dimension");
    radial->add_option("--L", ra.L, "Oscillator angular momentum");
    radial->add_option("--omega", ra.omega, "Oscillator frequency");
    radial->add_option("--d", ra.d, "Coulomb dimension");
    radial->add_option("--l", ra.l, "Coulomb angular momentum");
    radial->add_option("--e2", ra.e2, "Coulomb coupling");
    radial->add_option("--coeffs", ra.coeffs, "Modified potential c0,c1,c2,...");
    radial->add_option("--points", ra.points, "Interior grid points of the finest grid")->check(CLI::Range(64, 1 << 22));
    radial->add_option("--extent", ra.extent, "Grid end (0 = automatic)");
    radial->add_option("--levels", ra.levels, "Number of levels")->check(CLI::Range(1, 1000));
    radial->add_option("--format", ra.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

    SpectrumArgs sa;
    auto* spectrum = app.add_subcommand("spectrum", "Energy levels from the Casimir eigenvalues");
    spectrum->add_option("--T", sa.T, "Isospin, integer or half-integer");
    spectrum->add_option("--levels", sa.levels, "Number of levels")->check(CLI::Range(1, 100000));
    spectrum->add_option("--e2", sa.e2, "Coupling e^2 (rational)");
    spectrum->add_option("--hbar", sa.hbar, "hbar (rational)");
    spectrum->add_option("--mu0", sa.mu0, "Mass (rational)");
    spectrum->add_option("--format", sa.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suites", va.suites,
                        "euler, gauge, field, charge, algebra, casimir, spectrum, radial or all (default: config, else all)");
    verify->add_option("--relation", va.relation, "Restrict the algebra suite to one relation");
    verify->add_option("--config", va.config, "Sectioned key = value config file");
    verify->add_option("--seed", va.seed, "Seed for random sample points");
    verify->add_option("--jobs", va.jobs, "Suites run concurrently");
    verify->add_option("--nodes", va.nodes, "Charge quadrature nodes theta,beta,alpha,gamma");
    verify->add_option("--radius", va.radius, "Charge quadrature radius");
    verify->add_option("--points", va.points, "Radial grid points");
    verify->add_option("--tolerance", va.tolerances, "name=value, repeatable");
    verify->add_option("--format", va.format, "json, csv or text");
    verify->add_option("--output,-o", va.output, "Write the report here instead of stdout");

    std::string input, rformat = "text", routput;
    auto* report = app.add_subcommand("report", "Re-render a saved JSON report");
    report->add_option("--input,-i", input, "JSON report")->required();
    report->add_option("--format", rformat, "json, csv or text");
    report->add_option("--output,-o", routput, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*transform) return run_transform(point, tformat);
        if (*radial) return run_radial(ra);
        if (*spectrum) return run_spectrum(sa);
        if (*verify) return run_verify(va);
        if (*report) return run_report(input, rformat, routput);
    } catch (const hkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
