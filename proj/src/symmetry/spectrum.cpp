#include "hkit/symmetry/spectrum.hpp"

#include <string>

#include "hkit/errors.hpp"

namespace hkit::symmetry {

namespace {

bool is_half_integer(const Rational& q) { return q.sign() >= 0 && (q * Rational(2)).is_integer(); }

void require_half_integer(const Rational& q, const char* what) {
    if (!is_half_integer(q)) {
        throw InvalidQuantumNumbers(std::string(what) + " = " + q.to_string() +
                                    " is not a non-negative integer or half-integer");
    }
}

int twice(const Rational& q) { return static_cast<int>((q * Rational(2)).to_double()); }

Rational level_energy(int N, const Units& u) {
    const Rational n = Rational(N, 2) + Rational(2);
    return -(u.mu0 * u.e2 * u.e2) / (Rational(2) * u.hbar * u.hbar * n * n);
}

}  // namespace

CasimirEigenvalues casimir_eigenvalues(const Rational& mu1, const Rational& mu2, const Rational& mu3) {
    for (const Rational* m : {&mu1, &mu2, &mu3}) {
        if (!is_half_integer(*m)) {
            throw OrderingViolation("label " + m->to_string() + " is not a non-negative integer or half-integer");
        }
    }
    if (mu1 < mu2 || mu2 < mu3) {
        throw OrderingViolation("labels must satisfy mu1 >= mu2 >= mu3, got (" + mu1.to_string() + ", " +
                                mu2.to_string() + ", " + mu3.to_string() + ")");
    }
    CasimirEigenvalues c{mu1, mu2, mu3, {}, {}, {}};
    const Rational a = mu1 * (mu1 + Rational(4));
    const Rational b = mu2 * (mu2 + Rational(2));
    const Rational m3sq = mu3 * mu3;
    c.C2 = a + b + m3sq;
    c.C3 = Rational(48) * (mu1 + Rational(2)) * (mu2 + Rational(1)) * mu3;
    c.C4 = a * a + Rational(6) * a + b * b + m3sq * m3sq - Rational(2) * m3sq;
    return c;
}

std::vector<int> ConstraintSolution::admissible_N(int count) const {
    std::vector<int> out;
    for (int k = 0; k < count; ++k) out.push_back(min_N + N_step * k);
    return out;
}

bool ConstraintSolution::admits(int N) const { return N >= min_N && (N - min_N) % N_step == 0; }

ConstraintSolution solve_constraints(const Rational& T) {
    require_half_integer(T, "T");
    // T(T+1) = (μ₂+1)μ₃ together with (μ₂² − μ₃²)((μ₂+2)² − μ₃²) = 0 and μ₃ ≤ μ₂.
    ConstraintSolution s;
    s.mu2 = T;
    s.mu3 = T;
    s.min_N = twice(T);
    s.N_step = 2;
    return s;
}

SpectrumLevel energy_level(const Rational& T, int N, const Units& units) {
    require_half_integer(T, "T");
    const ConstraintSolution s = solve_constraints(T);
    if (N < 0 || !s.admits(N)) {
        throw InvalidQuantumNumbers("N = " + std::to_string(N) + " is not admissible for T = " + T.to_string() +
                                    " (need N/2 - T a non-negative integer)");
    }
    return {T, N, level_energy(N, units)};
}

std::vector<SpectrumLevel> energy_levels(const Rational& T, int count, const Units& units) {
    if (count < 1) throw InvalidQuantumNumbers("level count must be at least 1");
    std::vector<SpectrumLevel> out;
    for (int N : solve_constraints(T).admissible_N(count)) out.push_back(energy_level(T, N, units));
    return out;
}

CheckReport duality_closure_check(int N, const Rational& omega, const Units& units) {
    if (N < 0) throw InvalidQuantumNumbers("N must be non-negative");
    Units dual = units;
    const Rational E = units.hbar * omega * Rational(N + 4);
    dual.e2 = E / Rational(4);
    const Rational from_spectrum = level_energy(N, dual);
    const Rational expected = -(units.mu0 * omega * omega) / Rational(8);
    CheckReport c;
    c.suite = "spectrum";
    c.relation = "duality closure N=" + std::to_string(N) + ", omega=" + omega.to_string();
    c.anchor = "eq.3";
    c.mode = CheckMode::Exact;
    c.pass = from_spectrum == expected;
    c.residual = (from_spectrum - expected).to_double();
    c.detail = "e^2 = " + dual.e2.to_string() + ", level energy " + from_spectrum.to_string() + ", -mu0 omega^2/8 = " +
               expected.to_string();
    return c;
}

CheckReport duality_closure_range(int max_N, const std::vector<Rational>& omegas, const Units& units) {
    CheckReport c;
    c.suite = "spectrum";
    c.relation = "duality closure for N = 0.." + std::to_string(max_N);
    c.anchor = "eq.3";
    c.mode = CheckMode::Exact;
    c.pass = true;
    int failures = 0, total = 0;
    for (const Rational& w : omegas) {
        for (int N = 0; N <= max_N; ++N) {
            ++total;
            if (!duality_closure_check(N, w, units).pass) ++failures;
        }
    }
    c.pass = failures == 0;
    c.residual = failures;
    c.detail = std::to_string(total - failures) + "/" + std::to_string(total) + " (N, omega) pairs close exactly";
    return c;
}

CheckList spectrum_property_checks(const Units& units) {
    CheckList out;
    auto row = [&](const std::string& relation, const std::string& anchor, int bad, int total) {
        CheckReport c;
        c.suite = "spectrum";
        c.relation = relation;
        c.anchor = anchor;
        c.mode = CheckMode::Exact;
        c.pass = bad == 0;
        c.residual = bad;
        c.detail = std::to_string(total - bad) + "/" + std::to_string(total) + " cases exact";
        out.push_back(c);
    };

    int bad14 = 0, bad15 = 0, badC4 = 0, total = 0;
    for (int t2 = 0; t2 <= 10; ++t2) {
        const Rational T(t2, 2);
        const Rational TT1 = T * (T + Rational(1));
        const Rational quartic = Rational(2) * TT1 * TT1;
        const Rational lhs15 = T * T * (T + Rational(2)) * (T + Rational(2)) + T * T * T * T - Rational(2) * T * T;
        if (lhs15 != quartic) ++bad15;
        for (int n2 = t2; n2 <= t2 + 20; n2 += 2) {
            ++total;
            const Rational mu1(n2, 2);
            const CasimirEigenvalues e = casimir_eigenvalues(mu1, T, T);
            const Rational shifted = e.C2 - Rational(2) * TT1;
            if (shifted != mu1 * (mu1 + Rational(4))) ++bad14;
            if (e.C4 != shifted * shifted + Rational(6) * shifted + quartic) ++badC4;
        }
    }
    row("C2 - 2T(T+1) = mu1(mu1+4) at mu2 = mu3 = T", "eq.14", bad14, total);
    row("mu2^2(mu2+2)^2 + mu3^4 - 2mu3^2 = 2T^2(T+1)^2 at mu2 = mu3 = T, T = 0..5", "eq.15", bad15, 11);
    row("C4 = [C2-2T(T+1)]^2 + 6[C2-2T(T+1)] + 2T^2(T+1)^2", "sec.8", badC4, total);

    int bad_order = 0, bad_signs = 0, levels = 0;
    for (int t2 = 0; t2 <= 6; ++t2) {
        const auto lv = energy_levels(Rational(t2, 2), 30, units);
        for (std::size_t k = 0; k < lv.size(); ++k) {
            ++levels;
            if (lv[k].epsilon.sign() >= 0) ++bad_signs;
            if (k > 0 && !(lv[k - 1].epsilon < lv[k].epsilon)) ++bad_order;
        }
    }
    row("levels strictly increase in N at fixed T", "eq.16", bad_order, levels);
    row("all bound levels lie below 0", "eq.16", bad_signs, levels);
    return out;
}

CheckList spectrum_checks(const Units& units) {
    CheckList out;
    auto exact_row = [&](const std::string& relation, const std::string& anchor, bool pass, const std::string& detail) {
        out.push_back({"spectrum", relation, anchor, CheckMode::Exact, pass ? 0.0 : 1.0, pass, detail});
    };

    {
        const auto e = casimir_eigenvalues(Rational(1), Rational(1), Rational(1));
        exact_row("Casimir eigenvalues at (1,1,1) = (9, 288, 63)", "sec.8",
                  e.C2 == Rational(9) && e.C3 == Rational(288) && e.C4 == Rational(63),
                  "C2=" + e.C2.to_string() + " C3=" + e.C3.to_string() + " C4=" + e.C4.to_string());
        const auto z = casimir_eigenvalues(Rational(0), Rational(0), Rational(0));
        exact_row("Casimir eigenvalues at (0,0,0) vanish", "sec.8", z.C2.is_zero() && z.C3.is_zero() && z.C4.is_zero(),
                  "C2=" + z.C2.to_string() + " C3=" + z.C3.to_string() + " C4=" + z.C4.to_string());
        bool raised = false;
        try {
            casimir_eigenvalues(Rational(1), Rational(0), Rational(1));
        } catch (const OrderingViolation&) {
            raised = true;
        }
        exact_row("labels (1,0,1) rejected", "sec.8", raised, raised ? "OrderingViolation raised" : "accepted");
    }

    {
        int bad = 0, total = 0;
        for (int t2 = 0; t2 <= 8; ++t2) {
            const Rational T(t2, 2);
            const ConstraintSolution s = solve_constraints(T);
            const Rational m2 = s.mu2, m3 = s.mu3;
            const Rational a = m2 * m2 - m3 * m3;
            const Rational b = (m2 + Rational(2)) * (m2 + Rational(2)) - m3 * m3;
            if (!(a * b).is_zero() || T * (T + Rational(1)) != (m2 + Rational(1)) * m3 || s.min_N != t2) ++bad;
            for (const SpectrumLevel& lv : energy_levels(T, 12, units)) {
                ++total;
                // ε = −2μ₀e⁴/(ħ²(N+4)²), written independently of the library form.
                const Rational n4(lv.N + 4);
                const Rational expect =
                    Rational(-2) * units.mu0 * units.e2 * units.e2 / (units.hbar * units.hbar * n4 * n4);
                if (lv.epsilon != expect || Rational(lv.N, 2) < T || !(Rational(lv.N, 2) - T).is_integer()) ++bad;
            }
        }
        exact_row("levels eps = -mu0 e^4/(2 hbar^2 (N/2+2)^2) with N/2 in {T, T+1, ...}", "eq.16", bad == 0,
                  std::to_string(total) + " levels for T = 0..4 and the constraint solutions checked");
    }
    {
        bool raised = false;
        try {
            energy_level(Rational(1), 0, units);
        } catch (const InvalidQuantumNumbers&) {
            raised = true;
        }
        exact_row("T=1, N=0 rejected", "eq.17", raised, raised ? "InvalidQuantumNumbers raised" : "accepted");
    }

    out.push_back(duality_closure_range(40, {Rational(1), Rational(3, 2), Rational(2, 7)}, units));
    for (auto& r : spectrum_property_checks(units)) out.push_back(std::move(r));
    return out;
}

}  // namespace hkit::symmetry
