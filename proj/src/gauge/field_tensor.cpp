#include "hkit/gauge/field_tensor.hpp"

#include <stdexcept>

#include "hkit/errors.hpp"

namespace hkit::gauge {

namespace {

int levi_civita3(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    // even permutations of (0,1,2)
    if ((a == 0 && b == 1) || (a == 1 && b == 2) || (a == 2 && b == 0)) return 1;
    return -1;
}

FieldTensor from_definition(Chart chart) {
    const GaugePotential A = potential(chart);
    FieldTensor F;
    F.chart = chart;
    F.source = FieldSource::Definition;
    for (int a = 0; a < 3; ++a) {
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                ScalarExpr v = A(a, j).derivative(i) - A(a, i).derivative(j);
                for (int b = 0; b < 3; ++b) {
                    for (int c = 0; c < 3; ++c) {
                        int e = levi_civita3(a, b, c);
                        if (e != 0) v += A(b, i) * A(c, j) * GaussRat(e);
                    }
                }
                F.components[a][i][j] = std::move(v);
            }
        }
    }
    return F;
}

FieldTensor from_closed_form() {
    const Chart chart = Chart::Plus;
    const GaugePotential A = potential(chart);
    const auto& tau = tau_matrices();
    const ScalarExpr r = ScalarExpr::radius_power(1, chart);
    const ScalarExpr inv_r2 = ScalarExpr::radius_power(-2, chart);
    auto shifted = [&](int k) { return k == 0 ? ScalarExpr::coordinate(0, chart) + r : ScalarExpr::coordinate(k, chart); };
    FieldTensor F;
    F.chart = chart;
    F.source = FieldSource::ClosedForm;
    for (int a = 0; a < 3; ++a) {
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                ScalarExpr v = shifted(j) * A(a, i) - shifted(i) * A(a, j) -
                               ScalarExpr::constant(GaussRat(2) * GaussRat::i() * tau[a][i][j], chart);
                F.components[a][i][j] = inv_r2 * v;
            }
        }
    }
    return F;
}

// Transcription helpers for the printed table (A-chart).
ScalarExpr x(int k) { return ScalarExpr::coordinate(k); }

ScalarExpr over_r3(int sign, int k) { return x(k) * ScalarExpr::radius_power(-3) * GaussRat(sign); }

struct Bilinear {
    int sign;
    int p;
    int q;
};

ScalarExpr over_r3w(std::initializer_list<Bilinear> parts) {
    ScalarExpr num;
    for (const auto& b : parts) num += x(b.p) * x(b.q) * GaussRat(b.sign);
    return num * ScalarExpr::radius_power(-3) * ScalarExpr::axis_power(-1);
}

// sign · r⁻² [(x_p² + x_q²)/(r(r+x0)) − 1]
ScalarExpr bracket(int sign, int p, int q) {
    ScalarExpr inner = (x(p) * x(p) + x(q) * x(q)) * ScalarExpr::radius_power(-1) * ScalarExpr::axis_power(-1) -
                       ScalarExpr::constant(1);
    return inner * ScalarExpr::radius_power(-2) * GaussRat(sign);
}

FieldTensor from_appendix() {
    FieldTensor F;
    F.chart = Chart::Plus;
    F.source = FieldSource::AppendixTable;
    auto set = [&](int a, int i, int j, const ScalarExpr& v) {
        F.components[a - 1][i][j] = v;
        F.components[a - 1][j][i] = -v;
    };
    set(1, 0, 1, over_r3(-1, 4));
    set(1, 0, 2, over_r3(-1, 3));
    set(1, 0, 3, over_r3(1, 2));
    set(1, 0, 4, over_r3(1, 1));
    set(1, 1, 2, over_r3w({{1, 2, 4}, {-1, 1, 3}}));
    set(1, 1, 3, over_r3w({{1, 1, 2}, {1, 3, 4}}));
    set(1, 1, 4, bracket(1, 1, 4));
    set(1, 2, 3, bracket(1, 2, 3));
    set(1, 2, 4, over_r3w({{1, 1, 2}, {1, 3, 4}}));
    set(1, 3, 4, over_r3w({{-1, 1, 2}, {-1, 3, 4}}));

    set(2, 0, 1, over_r3(-1, 3));
    set(2, 0, 2, over_r3(1, 4));
    set(2, 0, 3, over_r3(-1, 1));
    set(2, 0, 4, over_r3(1, 2));
    set(2, 1, 2, over_r3w({{-1, 1, 4}, {-1, 2, 3}}));
    set(2, 1, 3, bracket(-1, 1, 3));
    set(2, 1, 4, over_r3w({{1, 1, 2}, {-1, 3, 4}}));
    set(2, 2, 3, over_r3w({{1, 3, 4}, {-1, 1, 2}}));
    set(2, 2, 4, bracket(1, 2, 4));
    set(2, 3, 4, over_r3w({{1, 1, 4}, {1, 2, 3}}));

    set(3, 0, 1, over_r3(-1, 2));
    set(3, 0, 2, over_r3(1, 1));
    set(3, 0, 3, over_r3(-1, 4));
    set(3, 0, 4, over_r3(1, 3));
    set(3, 1, 2, bracket(1, 1, 2));
    set(3, 1, 3, over_r3w({{1, 2, 3}, {-1, 1, 4}}));
    set(3, 1, 4, over_r3w({{1, 1, 3}, {1, 2, 4}}));
    set(3, 2, 3, over_r3w({{-1, 1, 3}, {-1, 2, 4}}));
    set(3, 2, 4, over_r3w({{1, 2, 3}, {-1, 1, 4}}));
    set(3, 3, 4, bracket(1, 3, 4));
    return F;
}

}  // namespace

const char* source_name(FieldSource s) {
    switch (s) {
        case FieldSource::Definition: return "definition";
        case FieldSource::ClosedForm: return "closed_form";
        case FieldSource::AppendixTable: return "appendix_table";
    }
    return "?";
}

FieldTensor field_tensor(FieldSource source, Chart chart) {
    if (source == FieldSource::Definition) return from_definition(chart);
    if (chart != Chart::Plus) {
        throw std::invalid_argument(std::string(source_name(source)) + " field tensor exists only for the A-chart");
    }
    return source == FieldSource::ClosedForm ? from_closed_form() : from_appendix();
}

std::vector<EntryDiscrepancy> compare_tensors(const FieldTensor& reference, const FieldTensor& other) {
    std::vector<EntryDiscrepancy> out;
    for (int a = 0; a < 3; ++a) {
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) {
                if (!exact::equals(reference(a, i, j), other(a, i, j))) {
                    out.push_back({a + 1, i, j, reference(a, i, j).to_string(), other(a, i, j).to_string()});
                }
            }
        }
    }
    return out;
}

}  // namespace hkit::gauge
