#pragma once

// Exact dense linear algebra over the rationals and over algebraic number
// fields, plus integer-lattice normal forms (Hermite, Smith) supporting
// index and intersection computations for free Z-modules.

#include <optional>
#include <vector>

#include "cokit/gauss.hpp"
#include "cokit/numberfield.hpp"

namespace cokit {

using ExactMat = Eigen::Matrix<FieldElement, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVec = Eigen::Matrix<FieldElement, Eigen::Dynamic, 1>;

// --- Field linear algebra (works for Rational and FieldElement scalars) ---

template <typename Scalar>
Scalar det(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  return detail::gauss_det(a);
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> invert(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  return detail::gauss_invert(a);
}

template <typename Scalar>
int rank_of(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  return detail::gauss_rank(a);
}

// Any solution of A x = b, or nullopt if the system is inconsistent.
template <typename Scalar>
std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> solve_linear(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
  return detail::gauss_solve(a, b);
}

// --- Integer normal forms ---

// Row-style Hermite normal form: H = U * A with |det U| = 1, H an upper
// staircase with positive pivots and entries above each pivot reduced into
// [0, pivot).  Zero rows sit at the bottom; the trailing rows of U form a
// Z-basis of the left kernel of A.
struct HnfResult {
  MatZ H;
  MatZ U;
  std::vector<Eigen::Index> pivot_cols;  // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

HnfResult hnf(const MatZ& a);

// Elementary divisors d1 | d2 | ... of A (nonnegative, min(rows,cols) many).
std::vector<Integer> snf_diagonal(const MatZ& a);

// --- Integer lattices ---

// A finite-rank free Z-module inside Q^n, stored as (1/denom) times the row
// space of an integer matrix with Q-linearly independent rows.
struct IntegerLattice {
  MatZ rows;      // rank x n, rows independent over Q
  Integer denom;  // positive scale: lattice = (1/denom) * rowspace_Z(rows)

  Eigen::Index rank() const { return rows.rows(); }
  Eigen::Index ambient_dim() const { return rows.cols(); }

  // Basis rows given exactly as rational vectors (rows / denom).
  MatQ basis_rows() const;

  // Clears denominators by their lcm; throws Singular if rows are dependent.
  static IntegerLattice from_basis_rows(const MatQ& basis);
  // Accepts any generating set; rank may drop and zero generators vanish.
  static IntegerLattice from_generators(const MatQ& generators);

  // Unique representative: HNF rows with gcd(content, denom) = 1.
  IntegerLattice canonical() const;

  // Rational coordinates of v in the basis rows, or nullopt if v is outside
  // the Q-span.  v lies in the lattice iff the coordinates are all integers.
  std::optional<VecQ> coordinates(const VecQ& v) const;
  bool contains(const VecQ& v) const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b);
  friend bool operator!=(const IntegerLattice& a, const IntegerLattice& b) { return !(a == b); }
};

// True iff every basis vector of `inner` lies in `outer` (same ambient).
bool is_sublattice(const IntegerLattice& outer, const IntegerLattice& inner);

// [M : N] = |det T| for the transition matrix T from M's basis to N's.
// Throws NotSubmodule if some basis vector of N has non-integer (or no)
// coordinates in M, InfiniteIndex if N has strictly smaller rank.
Integer lattice_index(const IntegerLattice& m, const IntegerLattice& n);

// Same quantity via the product of elementary divisors of T (independent
// route used for cross-checks).
Integer lattice_index_via_snf(const IntegerLattice& m, const IntegerLattice& n);

// Intersection M cap N in the shared ambient, via the left-kernel rows of
// the HNF transform of the stacked basis matrix.  Rank may drop.
IntegerLattice lattice_intersect(const IntegerLattice& m, const IntegerLattice& n);

// Entrywise conversions.
MatQ to_rational(const MatZ& a);
VecQ to_rational_vec(const VecZ& v);

}  // namespace cokit
