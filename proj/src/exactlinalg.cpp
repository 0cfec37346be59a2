#include "cokit/exactlinalg.hpp"

#include <algorithm>

namespace cokit {

namespace {

MatZ identity_z(Eigen::Index n) {
  MatZ u(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) u(i, j) = (i == j) ? 1 : 0;
  return u;
}

// Unimodular 2-row combination sending (a, b) in column `col` to (gcd, 0).
// Applied identically to every registered matrix so transforms stay in sync.
void gcd_rows(std::vector<MatZ*> mats, Eigen::Index top, Eigen::Index bot, const Integer& a,
              const Integer& b) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer ag = a / g, bg = b / g;  // det [[s, t], [-bg, ag]] = s*ag + t*bg = 1
  for (MatZ* m : mats)
    for (Eigen::Index c = 0; c < m->cols(); ++c) {
      Integer x = (*m)(top, c), y = (*m)(bot, c);
      (*m)(top, c) = s * x + t * y;
      (*m)(bot, c) = ag * y - bg * x;
    }
}

void gcd_cols(MatZ& m, Eigen::Index left, Eigen::Index right, const Integer& a, const Integer& b) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer ag = a / g, bg = b / g;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Integer x = m(r, left), y = m(r, right);
    m(r, left) = s * x + t * y;
    m(r, right) = ag * y - bg * x;
  }
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer content_of(const MatZ& m) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) g = gcd(g, m(i, j));
  return g;  // zero only for the zero matrix
}

Integer denominator_lcm(const MatQ& m) {
  Integer d = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).get_den());
  return d;
}

MatZ cleared(const MatQ& m, const Integer& d) {
  MatZ z(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * Rational(d);
      z(i, j) = v.get_num();  // exact: d is a multiple of every denominator
    }
  return z;
}

MatZ scaled(const MatZ& m, const Integer& f) {
  MatZ z = m;
  for (Eigen::Index i = 0; i < z.rows(); ++i)
    for (Eigen::Index j = 0; j < z.cols(); ++j) z(i, j) *= f;
  return z;
}

// Integer transition matrix T with T * (m basis) = (n basis); checks the
// lattice_index preconditions and throws NotSubmodule / InfiniteIndex.
MatZ transition_matrix(const IntegerLattice& m, const IntegerLattice& n) {
  if (m.ambient_dim() != n.ambient_dim())
    throw Error(Err::DimensionMismatch, "lattices live in different ambient dimensions");
  MatZ t(n.rank(), m.rank());
  for (Eigen::Index i = 0; i < n.rank(); ++i) {
    VecQ v(n.ambient_dim());
    for (Eigen::Index j = 0; j < n.ambient_dim(); ++j)
      v(j) = Rational(n.rows(i, j)) / Rational(n.denom);
    auto coords = m.coordinates(v);
    if (!coords) throw Error(Err::NotSubmodule, "basis vector outside the candidate supermodule");
    for (Eigen::Index j = 0; j < m.rank(); ++j) {
      if ((*coords)(j).get_den() != 1)
        throw Error(Err::NotSubmodule, "basis vector has non-integer coordinates");
      t(i, j) = (*coords)(j).get_num();
    }
  }
  if (n.rank() < m.rank())
    throw Error(Err::InfiniteIndex, "submodule has strictly smaller rank");
  return t;
}

}  // namespace

HnfResult hnf(const MatZ& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  HnfResult out;
  out.H = a;
  out.U = identity_z(m);
  MatZ& H = out.H;
  MatZ& U = out.U;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    for (Eigen::Index r = row + 1; r < m; ++r) {
      if (sgn(H(r, col)) == 0) continue;
      if (sgn(H(row, col)) == 0) {
        H.row(row).swap(H.row(r));
        U.row(row).swap(U.row(r));
        continue;
      }
      gcd_rows({&H, &U}, row, r, H(row, col), H(r, col));
    }
    if (sgn(H(row, col)) == 0) continue;
    if (sgn(H(row, col)) < 0) {
      for (Eigen::Index c = 0; c < n; ++c) H(row, c) = -H(row, c);
      for (Eigen::Index c = 0; c < m; ++c) U(row, c) = -U(row, c);
    }
    for (Eigen::Index r = 0; r < row; ++r) {
      if (sgn(H(r, col)) == 0) continue;
      Integer q = floor_div(H(r, col), H(row, col));
      if (sgn(q) == 0) continue;
      for (Eigen::Index c = 0; c < n; ++c) H(r, c) -= q * H(row, c);
      for (Eigen::Index c = 0; c < m; ++c) U(r, c) -= q * U(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

std::vector<Integer> snf_diagonal(const MatZ& a) {
  MatZ s = a;
  const Eigen::Index m = s.rows(), n = s.cols();
  const Eigen::Index k = std::min(m, n);
  std::vector<Integer> divisors;
  for (Eigen::Index t = 0; t < k; ++t) {
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m && pi < 0; ++i)
      for (Eigen::Index j = t; j < n; ++j)
        if (sgn(s(i, j)) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;  // remaining block is zero; trailing divisors are 0
    if (pi != t) s.row(pi).swap(s.row(t));
    if (pj != t) s.col(pj).swap(s.col(t));
    while (true) {
      // Exact division when the pivot divides (touches only the other row
      // or column); xgcd otherwise, which strictly shrinks the pivot.  The
      // combination terminates: xgcd steps are finitely many, and a pass of
      // pure divisions leaves both the row and the column clear.
      for (Eigen::Index r = t + 1; r < m; ++r) {
        if (sgn(s(r, t)) == 0) continue;
        if (sgn(s(r, t) % s(t, t)) == 0) {
          Integer q = Integer(s(r, t) / s(t, t));
          for (Eigen::Index c = 0; c < n; ++c) s(r, c) -= q * s(t, c);
        } else {
          gcd_rows({&s}, t, r, s(t, t), s(r, t));
        }
      }
      bool row_clear = true;
      for (Eigen::Index c = t + 1; c < n; ++c) {
        if (sgn(s(t, c)) == 0) continue;
        if (sgn(s(t, c) % s(t, t)) == 0) {
          Integer q = Integer(s(t, c) / s(t, t));
          for (Eigen::Index r = 0; r < m; ++r) s(r, c) -= q * s(r, t);
        } else {
          gcd_cols(s, t, c, s(t, t), s(t, c));
          row_clear = false;
        }
      }
      bool col_clear = true;
      for (Eigen::Index r = t + 1; r < m; ++r)
        if (sgn(s(r, t)) != 0) col_clear = false;
      if (row_clear && col_clear) {
        // Pivot must divide the whole trailing block; if not, pull an
        // offending row up and keep grinding (pivot strictly shrinks).
        Eigen::Index bad = -1;
        for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
          for (Eigen::Index j = t + 1; j < n; ++j)
            if (sgn(s(i, j) % s(t, t)) != 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        for (Eigen::Index c = t; c < n; ++c) s(t, c) += s(bad, c);
      }
    }
    if (sgn(s(t, t)) < 0) s(t, t) = -s(t, t);
    divisors.push_back(s(t, t));
  }
  while (static_cast<Eigen::Index>(divisors.size()) < k) divisors.push_back(0);
  return divisors;
}

MatQ IntegerLattice::basis_rows() const {
  MatQ b(rows.rows(), rows.cols());
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    for (Eigen::Index j = 0; j < rows.cols(); ++j) b(i, j) = Rational(rows(i, j)) / Rational(denom);
  return b;
}

IntegerLattice IntegerLattice::from_basis_rows(const MatQ& basis) {
  Integer d = denominator_lcm(basis);
  IntegerLattice lat{cleared(basis, d), d};
  if (rank_of(basis) != basis.rows())
    throw Error(Err::Singular, "basis rows are linearly dependent");
  return lat;
}

IntegerLattice IntegerLattice::from_generators(const MatQ& generators) {
  Integer d = denominator_lcm(generators);
  HnfResult h = hnf(cleared(generators, d));
  IntegerLattice lat{h.H.topRows(h.rank()), d};
  return lat.canonical();
}

IntegerLattice IntegerLattice::canonical() const {
  if (rank() == 0) {
    IntegerLattice empty{MatZ(0, ambient_dim()), 1};
    return empty;
  }
  HnfResult h = hnf(rows);
  MatZ reduced = h.H.topRows(rank());
  Integer g = gcd(content_of(reduced), denom);
  if (g > 1) {
    for (Eigen::Index i = 0; i < reduced.rows(); ++i)
      for (Eigen::Index j = 0; j < reduced.cols(); ++j) reduced(i, j) /= g;
  }
  return IntegerLattice{reduced, denom / g};
}

std::optional<VecQ> IntegerLattice::coordinates(const VecQ& v) const {
  if (v.size() != ambient_dim())
    throw Error(Err::DimensionMismatch, "vector length does not match the ambient dimension");
  MatQ a(ambient_dim(), rank());
  for (Eigen::Index i = 0; i < rank(); ++i)
    for (Eigen::Index j = 0; j < ambient_dim(); ++j) a(j, i) = Rational(rows(i, j));
  VecQ b(ambient_dim());
  for (Eigen::Index j = 0; j < ambient_dim(); ++j) b(j) = v(j) * Rational(denom);
  return solve_linear(a, b);
}

bool IntegerLattice::contains(const VecQ& v) const {
  auto coords = coordinates(v);
  if (!coords) return false;
  for (Eigen::Index i = 0; i < coords->size(); ++i)
    if ((*coords)(i).get_den() != 1) return false;
  return true;
}

bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  IntegerLattice ca = a.canonical(), cb = b.canonical();
  if (ca.rank() != cb.rank() || ca.denom != cb.denom) return false;
  for (Eigen::Index i = 0; i < ca.rows.rows(); ++i)
    for (Eigen::Index j = 0; j < ca.rows.cols(); ++j)
      if (ca.rows(i, j) != cb.rows(i, j)) return false;
  return true;
}

bool is_sublattice(const IntegerLattice& outer, const IntegerLattice& inner) {
  if (outer.ambient_dim() != inner.ambient_dim()) return false;
  MatQ basis = inner.basis_rows();
  for (Eigen::Index i = 0; i < basis.rows(); ++i) {
    VecQ v = basis.row(i).transpose();
    if (!outer.contains(v)) return false;
  }
  return true;
}

Integer lattice_index(const IntegerLattice& m, const IntegerLattice& n) {
  MatZ t = transition_matrix(m, n);
  Rational d = det(to_rational(t));
  Integer idx = d.get_num();
  if (sgn(idx) < 0) idx = -idx;
  return idx;
}

Integer lattice_index_via_snf(const IntegerLattice& m, const IntegerLattice& n) {
  MatZ t = transition_matrix(m, n);
  Integer idx = 1;
  for (const Integer& d : snf_diagonal(t)) idx *= d;
  if (sgn(idx) < 0) idx = -idx;
  return idx;
}

IntegerLattice lattice_intersect(const IntegerLattice& m, const IntegerLattice& n) {
  if (m.ambient_dim() != n.ambient_dim())
    throw Error(Err::DimensionMismatch, "lattices live in different ambient dimensions");
  const Eigen::Index dim = m.ambient_dim();
  Integer d = lcm(m.denom, n.denom);
  MatZ a = scaled(m.rows, d / m.denom);
  MatZ b = scaled(n.rows, d / n.denom);
  const Eigen::Index r1 = a.rows(), r2 = b.rows();
  if (r1 == 0 || r2 == 0) return IntegerLattice{MatZ(0, dim), 1};
  MatZ stacked(r1 + r2, dim);
  stacked.topRows(r1) = a;
  stacked.bottomRows(r2) = b;
  HnfResult h = hnf(stacked);
  const Eigen::Index kernel = r1 + r2 - h.rank();
  MatZ meet(kernel, dim);
  for (Eigen::Index i = 0; i < kernel; ++i) {
    // Left-kernel row (u | w) of the stacked matrix: u*a = -w*b lies in both
    // row spaces, and these images form a Z-basis of the intersection.
    for (Eigen::Index c = 0; c < dim; ++c) {
      Integer acc = 0;
      for (Eigen::Index j = 0; j < r1; ++j) acc += h.U(h.rank() + i, j) * a(j, c);
      meet(i, c) = acc;
    }
  }
  return IntegerLattice{meet, d}.canonical();
}

MatQ to_rational(const MatZ& a) {
  MatQ q(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) q(i, j) = Rational(a(i, j));
  return q;
}

VecQ to_rational_vec(const VecZ& v) {
  VecQ q(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) q(i) = Rational(v(i));
  return q;
}

}  // namespace cokit
