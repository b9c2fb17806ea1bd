#pragma once

#include "btlab/matrix.hpp"

namespace btlab {

/// Column-style Hermite normal form of the Z-lattice spanned by the columns
/// of `generators` (n rows, at least n columns).
///
/// The result is n x n, lower triangular, with a positive diagonal and every
/// entry left of the diagonal reduced into [0, diagonal). Two generator sets
/// span the same lattice iff their forms are identical.
///
/// Throws RankDeficient when the columns do not span a rank-n lattice.
IntMatrix column_hermite_form(const IntMatrix& generators);

}  // namespace btlab
