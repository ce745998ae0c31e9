#pragma once

#include <array>
#include <string>
#include <vector>

#include "hkit/gauge/potential.hpp"

namespace hkit::gauge {

enum class FieldSource { Definition, ClosedForm, AppendixTable };
const char* source_name(FieldSource s);

/// F^a_ij as exact expressions, a in 0..2, i,j in 0..4.
struct FieldTensor {
    Chart chart = Chart::Plus;
    FieldSource source = FieldSource::Definition;
    std::array<std::array<std::array<ScalarExpr, 5>, 5>, 3> components;

    const ScalarExpr& operator()(int a, int i, int j) const { return components[a][i][j]; }
};

/// Builds the field tensor of a chart from
///  - Definition: ∂_i A_j − ∂_j A_i + ε_abc A^b_i A^c_j (exact differentiation),
///  - ClosedForm: r⁻²[(x_j + rδ_j0)A_i − (x_i + rδ_i0)A_j − 2iτ_ij] (A-chart only),
///  - AppendixTable: the published component table, transcribed as printed
///    (A-chart only, upper triangle given, lower filled by antisymmetry).
FieldTensor field_tensor(FieldSource source, Chart chart = Chart::Plus);

/// One entrywise comparison between two tensor sources.
struct EntryDiscrepancy {
    int a;  // 1-based gauge index, as printed
    int i;
    int j;
    std::string expected;  // first source
    std::string found;     // second source
};

/// Upper-triangle entries (i < j) where the two tensors differ exactly.
std::vector<EntryDiscrepancy> compare_tensors(const FieldTensor& reference, const FieldTensor& other);

}  // namespace hkit::gauge
