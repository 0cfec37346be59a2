#include "cokit/modules.hpp"

namespace cokit {

namespace {

// n × r rational matrix whose columns are the ambient power-basis
// coordinates of the ring's Z-basis elements.
MatQ zbasis_coords(const FieldPtr& ambient, const std::vector<FieldElement>& zbasis) {
  const int n = ambient->degree();
  MatQ m(n, static_cast<Eigen::Index>(zbasis.size()));
  for (size_t j = 0; j < zbasis.size(); ++j) {
    const std::vector<Rational>& c = zbasis[j].coeffs();
    for (int k = 0; k < n; ++k) m(k, static_cast<Eigen::Index>(j)) = c[k];
  }
  return m;
}

void require_shared_ambient(const FreeModule& a, const FreeModule& b) {
  if (!a.ambient()->same_presentation(*b.ambient()))
    throw Error(Err::MixedAmbient, "modules live over different ambient fields");
  if (a.dim != b.dim)
    throw Error(Err::DimensionMismatch, "modules have different dimensions");
}

void require_comparable(const FreeModule& a, const FreeModule& b) {
  require_shared_ambient(a, b);
  if (!same_ring(a.ring, b.ring))
    throw Error(Err::MixedAmbient, "modules have different coefficient rings");
}

}  // namespace

CoefficientRing CoefficientRing::make(SubfieldEmbedding k, std::vector<FieldElement> basis) {
  if (basis.empty()) throw Error(Err::InvalidRing, "ring needs a nonempty Z-basis");
  CoefficientRing ring{std::move(k), {}};
  ring.zbasis.reserve(basis.size());
  for (const FieldElement& e : basis) {
    FieldElement lifted = e.lifted_to(ring.field.ambient);
    if (!in_subfield(lifted, ring.field))
      throw Error(Err::InvalidRing, "ring basis element outside the coefficient field");
    ring.zbasis.push_back(std::move(lifted));
  }
  MatQ coords = zbasis_coords(ring.ambient(), ring.zbasis);
  if (rank_of(coords) != ring.rank())
    throw Error(Err::InvalidRing, "ring basis is linearly dependent over Q");
  if (!ring.contains(make_rational(ring.ambient(), Rational(1))))
    throw Error(Err::InvalidRing, "unity has non-integer coordinates in the ring basis");
  for (const FieldElement& a : ring.zbasis)
    for (const FieldElement& b : ring.zbasis)
      if (!ring.contains(a * b))
        throw Error(Err::InvalidRing, "ring basis is not multiplicatively closed");
  return ring;
}

CoefficientRing CoefficientRing::integers(const FieldPtr& ambient) {
  SubfieldEmbedding rationals = SubfieldEmbedding::make(ambient, make_rational(ambient, Rational(0)));
  return make(std::move(rationals), {make_rational(ambient, Rational(1))});
}

std::optional<VecQ> CoefficientRing::coordinates(const FieldElement& x) const {
  FieldElement lifted = x.lifted_to(ambient());
  MatQ m = zbasis_coords(ambient(), zbasis);
  VecQ b(m.rows());
  const std::vector<Rational>& c = lifted.coeffs();
  for (Eigen::Index i = 0; i < m.rows(); ++i) b(i) = c[static_cast<size_t>(i)];
  return solve_linear(m, b);
}

bool CoefficientRing::contains(const FieldElement& x) const {
  auto c = coordinates(x);
  if (!c) return false;
  for (Eigen::Index i = 0; i < c->size(); ++i)
    if ((*c)(i).get_den() != 1) return false;
  return true;
}

bool same_ring(const CoefficientRing& a, const CoefficientRing& b) {
  if (!same_embedding(a.field, b.field)) return false;
  if (a.zbasis.size() != b.zbasis.size()) return false;
  for (size_t i = 0; i < a.zbasis.size(); ++i)
    if (!(a.zbasis[i] == b.zbasis[i].lifted_to(a.ambient()))) return false;
  return true;
}

FreeModule FreeModule::make(CoefficientRing ring, ExactMat basis) {
  if (basis.rows() != basis.cols() || basis.rows() == 0)
    throw Error(Err::DimensionMismatch, "module basis must be square and nonempty");
  FreeModule m;
  m.ring = std::move(ring);
  m.dim = static_cast<int>(basis.rows());
  m.basis = ExactMat(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) m.basis(i, j) = basis(i, j).lifted_to(m.ambient());
  if (det(m.basis).is_zero()) throw Error(Err::Singular, "module basis is singular");
  return m;
}

FreeModule FreeModule::scaled(const FieldElement& s) const {
  FieldElement factor = s.lifted_to(ambient());
  if (factor.is_zero()) throw Error(Err::ZeroElement, "cannot scale a module by zero");
  ExactMat b = basis;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) b(i, j) = factor * b(i, j);
  return make(ring, std::move(b));
}

FreeModule FreeModule::transformed(const ExactMat& m) const {
  if (m.rows() != dim || m.cols() != dim)
    throw Error(Err::DimensionMismatch, "transform shape does not match the module dimension");
  ExactMat lifted(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) lifted(i, j) = m(i, j).lifted_to(ambient());
  return make(ring, ExactMat(lifted * basis));
}

VecQ flatten_vector(const ExactVec& v, const FieldPtr& ambient) {
  const int n = ambient->degree();
  VecQ w(static_cast<Eigen::Index>(n) * v.size());
  for (Eigen::Index t = 0; t < v.size(); ++t) {
    FieldElement e = v(t).lifted_to(ambient);
    const std::vector<Rational>& c = e.coeffs();
    for (int k = 0; k < n; ++k) w(t * n + k) = c[static_cast<size_t>(k)];
  }
  return w;
}

ExactVec unflatten_vector(const VecQ& w, const FieldPtr& ambient, int dim) {
  const int n = ambient->degree();
  if (w.size() != static_cast<Eigen::Index>(n) * dim)
    throw Error(Err::DimensionMismatch, "flattened vector has the wrong length");
  ExactVec v(dim);
  for (int t = 0; t < dim; ++t) {
    std::vector<Rational> c(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) c[static_cast<size_t>(k)] = w(static_cast<Eigen::Index>(t) * n + k);
    v(t) = make_element(ambient, std::move(c));
  }
  return v;
}

IntegerLattice as_integer_lattice(const FreeModule& gamma) {
  const int n = gamma.ambient()->degree();
  const int r = gamma.ring.rank();
  const int d = gamma.dim;
  MatQ rows(static_cast<Eigen::Index>(r) * d, static_cast<Eigen::Index>(n) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < r; ++j) {
      ExactVec v(d);
      for (int t = 0; t < d; ++t) v(t) = gamma.ring.zbasis[static_cast<size_t>(j)] * gamma.basis(t, i);
      rows.row(static_cast<Eigen::Index>(i) * r + j) = flatten_vector(v, gamma.ambient()).transpose();
    }
  return IntegerLattice::from_basis_rows(rows);
}

bool commensurate(const FreeModule& a, const FreeModule& b) {
  require_comparable(a, b);
  ExactMat ratio = ExactMat(invert(b.basis) * a.basis);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (!in_subfield(ratio(i, j).lifted_to(a.ambient()), a.ring.field)) return false;
  return true;
}

Integer module_index(const FreeModule& gamma, const FreeModule& sub) {
  require_shared_ambient(gamma, sub);
  return lattice_index(as_integer_lattice(gamma), as_integer_lattice(sub));
}

Integer module_index(const FreeModule& gamma, const IntegerLattice& sub) {
  IntegerLattice lat = as_integer_lattice(gamma);
  if (lat.ambient_dim() != sub.ambient_dim())
    throw Error(Err::DimensionMismatch, "lattice does not live in the module's coordinates");
  return lattice_index(lat, sub);
}

IntegerLattice intersect(const FreeModule& a, const FreeModule& b) {
  require_comparable(a, b);
  return lattice_intersect(as_integer_lattice(a), as_integer_lattice(b));
}

bool is_submodule(const FreeModule& sub, const FreeModule& gamma) {
  require_shared_ambient(sub, gamma);
  return is_sublattice(as_integer_lattice(gamma), as_integer_lattice(sub));
}

bool is_K_module(const FreeModule& gamma) {
  ExactMat gram = ExactMat(gamma.basis.transpose() * gamma.basis);
  for (int i = 0; i < gamma.dim; ++i)
    for (int j = 0; j < gamma.dim; ++j)
      if (!in_subfield(gram(i, j), gamma.ring.field)) return false;
  return true;
}

}  // namespace cokit
