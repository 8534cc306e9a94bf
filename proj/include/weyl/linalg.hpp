#pragma once

#include <optional>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major

/// Reduced row echelon form in place. Columns are eliminated left to
/// right; zero rows are dropped. Returns the pivot column of each row.
std::vector<int> rref(QMat& m);

/// Remainder of v after elimination against rref rows.
QVec reduce_against(QVec v, const QMat& rows, const std::vector<int>& pivots);

bool is_zero_vec(const QVec& v);

/// Basis of { x : m x = 0 } (rows of m are equations), one vector per
/// free column, in ascending free-column order with that coordinate 1.
QMat kernel_basis(QMat m, int ncols);

/// One solution x of sum_j x_j rows[j] = target, if target lies in the row
/// span. Deterministic: coefficients read off the rref transformation.
std::optional<QVec> express_in_span(const QMat& rows, const QVec& target);

}  // namespace weyl
