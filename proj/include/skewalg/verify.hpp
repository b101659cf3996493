#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewalg/classify.hpp"
#include "skewalg/codes.hpp"

namespace skewalg {

// (p, r, s, m): field F_{p^r}, twist x -> x^(p^s), algebra degree m.
using GridTuple = std::array<int, 4>;

enum class CellStatus { pass, fail, flagged, skipped };

const char* to_string(CellStatus status);

// One (suite, tuple) audit cell. A fail always carries a witness that
// re-verifies in isolation; flagged is reserved for the two documented
// soft spots (headline class-count degeneracy, isomorphisms outside the
// proved non-monomial degree bound); skipped means the budget was exceeded
// or the suite's statement does not apply to the tuple.
struct CellResult {
    std::string suite;
    GridTuple tuple{};
    CellStatus status = CellStatus::pass;
    std::string note;
    std::string witness;
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    double runtime_ms = 0.0;
};

struct SuiteSpec {
    std::vector<std::string> suites;  // empty = every suite
    std::vector<GridTuple> grid;      // empty = empty scorecard
    std::uint64_t budget = 1000000;   // max candidate count per cell
};

struct Scorecard {
    std::vector<CellResult> cells;  // ordered by (suite, grid position)

    bool all_ok() const;  // no fail cells
};

// Canonical suite order: power-assoc, hom-classification, weight-one,
// counting, nonmonomial, associative-sector, norms, division.
const std::vector<std::string>& suite_names();

// {(2,2,1,2..4), (3,2,1,2..4), (5,2,1,2..3), (2,4,2,4)}
std::vector<GridTuple> default_grid();

// Runs the requested suites over the grid, cells serial in deterministic
// order, kernels inside each cell parallel. Unknown suite names throw
// Error; per-cell BudgetError marks the cell skipped, any other Error
// marks it fail.
Scorecard run_suite(const SuiteSpec& spec);

}  // namespace skewalg
