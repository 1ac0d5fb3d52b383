#pragma once

#include <vector>

#include "brunnian/matrix.hpp"

namespace brunnian {

enum class EnlargeKind { Row, Column };

// Elementary S-equivalence enlargement: adds two rows/columns in the standard
// bordered pattern, leaving the Alexander polynomial unchanged up to a unit
// +-t^k. v must have length M.rows().
IntMatrix s_equiv_enlarge(const IntMatrix& m, EnlargeKind kind, const std::vector<Int>& v);

// Inverse of s_equiv_enlarge; throws DimensionMismatch if the matrix does not
// end in an elementary enlargement border.
IntMatrix s_equiv_reduce(const IntMatrix& m);

// Unimodular congruence U^T M U; throws NotUnimodular unless |det U| = 1.
IntMatrix s_equiv_congruence(const IntMatrix& m, const IntMatrix& u);

}  // namespace brunnian
