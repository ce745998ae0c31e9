#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hkit/check.hpp"
#include "hkit/symmetry/operators.hpp"

namespace hkit::symmetry {

/// Names accepted by verify_relation.
const std::vector<std::string>& relation_names();

/// Exact check of one commutation relation over every index combination.
/// The result carries the number of index tuples with a nonzero residual;
/// throws RelationFailed when `strict` and a residual is nonzero.
CheckReport verify_relation(const SymmetryOperators& ops, const std::string& name, bool strict = false);

enum class Casimir { C2, C3, C4 };

struct CasimirOptions {
    /// Monomial cap for the exact C4 attempt; 0 disables the exact attempt.
    std::size_t term_budget = 2'000'000;
    /// Numeric fallback: test functions × sample points.
    int samples = 6;
    /// How many of the built-in test functions to use (1..3).
    int test_fields = 1;
    std::uint64_t seed = 1;
    double tolerance = 1e-8;
};

/// The H-cleared Casimir identities (see README for the cleared forms).
CheckReport casimir_cleared_check(const SymmetryOperators& ops, Casimir which, const CasimirOptions& opt = {});

/// C3 under the orientation with the Runge-Lenz index last; reported as an audit row.
CheckReport casimir3_convention_audit(const SymmetryOperators& ops);

/// Exact composition of both sides with a per-composition monomial cap;
/// throws TermBudgetExceeded when the cap is hit.
CheckReport casimir4_exact(const SymmetryOperators& ops, std::size_t term_budget);

/// Numeric evaluation of the cleared C4 identity applied to test functions.
CheckReport casimir4_numeric(const SymmetryOperators& ops, const CasimirOptions& opt);

}  // namespace hkit::symmetry
