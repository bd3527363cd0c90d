#ifndef WDR_MATRIX_HPP
#define WDR_MATRIX_HPP

#include <vector>

#include "wdr/arith.hpp"

namespace wdr {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

IntMatrix identity_matrix(size_t n);
IntMatrix mat_mul(const IntMatrix &a, const IntMatrix &b);

/* Fraction-free Gaussian elimination; exact for any square matrix. */
Integer bareiss_det(IntMatrix a);

/* Row Hermite normal form of the lattice spanned by the rows: echelon,
   positive pivots, entries above a pivot reduced into [0, pivot).
   Zero rows are dropped. */
IntMatrix hermite_normal_form(IntMatrix rows);

/* Membership of v in the lattice whose HNF is h. */
bool hnf_contains(const IntMatrix &h, IntVector v);

/* Product of HNF pivots; the index in Z^n when h has full rank n. */
Integer hnf_index(const IntMatrix &h);

} // namespace wdr

#endif
