#pragma once

#include <optional>
#include <vector>

#include "finv/rational.hpp"

namespace finv::linalg {

// Support layer for the congruence machinery: exact Gauss elimination over Q
// and Hermite normal form over Z.  Dense row-major matrices; sizes stay in
// the low hundreds, so clarity wins over asymptotics.

using QMatrix = std::vector<std::vector<Rational>>;
using ZMatrix = std::vector<std::vector<Int>>;

/** Reduced row echelon form with bookkeeping. */
struct Rref {
    QMatrix rows;                 ///< nonzero echelon rows, pivots normalized to 1
    std::vector<int> pivot_cols;  ///< pivot column of each echelon row, increasing
    QMatrix transform;            ///< echelon row i = sum_j transform[i][j] * input row j
};

Rref rref(QMatrix rows);

/**
 * Row-style Hermite normal form of the lattice spanned by the input rows:
 * upper-echelon basis rows with positive pivots and reduced entries above
 * each pivot.  Zero rows are dropped.
 */
ZMatrix hnf(ZMatrix rows);

/** HNF together with the unimodular bookkeeping h = transform * input. */
struct HnfTransform {
    ZMatrix h;
    ZMatrix transform;  ///< one row per HNF row, coordinates over the input rows
};

HnfTransform hnf_with_transform(ZMatrix rows);

/**
 * Solve x * H = target exactly for an echelon H (as produced by hnf()).
 * Returns nullopt when the target is outside the rational row span.
 */
std::optional<std::vector<Rational>> solve_row_echelon(const ZMatrix& h,
                                                       const std::vector<Rational>& target);

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveOutcome {
    SolveStatus status;
    std::vector<Rational> solution;  ///< populated only for status == unique
};

/**
 * Solve sum_i x_i * columns[i] = rhs exactly (columns as vectors).  Reports
 * whether the solution is unique, underdetermined, or nonexistent.
 */
SolveOutcome solve_exact(const QMatrix& columns, const std::vector<Rational>& rhs);

}  // namespace finv::linalg
