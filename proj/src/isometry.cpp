#include "cokit/isometry.hpp"

#include <utility>

namespace cokit {

namespace {

FieldElement lift_entry(const FieldElement& e, const FieldPtr& ambient) {
  try {
    return e.lifted_to(ambient);
  } catch (const Error& err) {
    if (err.code == Err::FieldMismatch) {
      throw Error(Err::AmbientMismatch, "isometry entries do not lie in the module's ambient field");
    }
    throw;
  }
}

void require_integral(const Rational& u, const Rational& v) {
  if (u.get_den() != 1 || v.get_den() != 1) {
    throw Error(Err::NotSubmodule, "element lies outside the order");
  }
}

}  // namespace

Isometry Isometry::make(ExactMat m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(Err::DimensionMismatch, "an isometry needs a nonempty square matrix");
  }
  const ExactMat gram = ExactMat(m.transpose() * m);
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      if (gram(i, j) != FieldElement(i == j ? 1L : 0L)) {
        throw Error(Err::NotOrthogonal, "matrix is not orthogonal: R^T R != I");
      }
    }
  }
  const FieldElement d = det(m);
  int ds = 0;
  if (d == FieldElement(1L)) {
    ds = 1;
  } else if (d == FieldElement(-1L)) {
    ds = -1;
  } else {
    // Orthogonality forces det^2 = 1, and a field has no other square roots
    // of one, so this branch is unreachable for validated input.
    throw Error(Err::InternalMismatch, "orthogonal matrix with determinant other than +-1");
  }
  Isometry r;
  r.mat = std::move(m);
  r.det_sign = ds;
  return r;
}

Isometry Isometry::transposed() const {
  Isometry r;
  r.mat = ExactMat(mat.transpose());
  r.det_sign = det_sign;  // det(R^T) = det(R)
  return r;
}

Isometry operator*(const Isometry& a, const Isometry& b) {
  if (a.mat.rows() != b.mat.rows()) {
    throw Error(Err::DimensionMismatch, "isometry product needs matching dimensions");
  }
  Isometry r;
  r.mat = ExactMat(a.mat * b.mat);
  r.det_sign = a.det_sign * b.det_sign;
  return r;
}

bool coset_equal(const ScalarCoset& a, const ScalarCoset& b, const SubfieldEmbedding& k) {
  const FieldElement ratio = a.rep / b.rep;
  return in_subfield(ratio.lifted_to(k.ambient), k).has_value();
}

Classification classify(const FreeModule& gamma, const Isometry& r, ClassifyOptions opt) {
  if (r.dim() != gamma.dim) {
    throw Error(Err::DimensionMismatch, "isometry dimension does not match the module");
  }
  const FieldPtr& ambient = gamma.ambient();
  ExactMat rl(gamma.dim, gamma.dim);
  for (Eigen::Index i = 0; i < rl.rows(); ++i) {
    for (Eigen::Index j = 0; j < rl.cols(); ++j) {
      rl(i, j) = lift_entry(r.mat(i, j), ambient);
    }
  }
  Classification out;
  if (opt.rotations_only && r.det_sign < 0) {
    return out;  // excluded from the rotation subgroup: NotSimilarity
  }

  // H = B^{-1} R B expresses R in module coordinates; R is a coincidence
  // isometry exactly when H has all entries in K, and a similarity isometry
  // exactly when some real scale alpha makes alpha*H a K-matrix.
  const ExactMat binv = invert(gamma.basis);
  const ExactMat rb = ExactMat(rl * gamma.basis);
  const ExactMat h = ExactMat(binv * rb);

  bool all_in_k = true;
  for (Eigen::Index i = 0; i < h.rows() && all_in_k; ++i) {
    for (Eigen::Index j = 0; j < h.cols() && all_in_k; ++j) {
      if (!in_subfield(h(i, j), gamma.ring.field).has_value()) {
        all_in_k = false;
      }
    }
  }
  if (all_in_k) {
    out.verdict = Verdict::Coincidence;
    out.eta = 1;
    out.sigma = module_index(gamma, intersect(gamma, gamma.transformed(rl)));
    return out;
  }

  // Any admissible scale must clear every entry at once, so the entry ratios
  // h/h0 pin the candidate coset to (1/h0)K* independently of the pivot.
  FieldElement pivot;
  bool have_pivot = false;
  for (Eigen::Index i = 0; i < h.rows() && !have_pivot; ++i) {
    for (Eigen::Index j = 0; j < h.cols() && !have_pivot; ++j) {
      if (!h(i, j).is_zero()) {
        pivot = h(i, j);
        have_pivot = true;
      }
    }
  }
  if (!have_pivot) {
    throw Error(Err::InternalMismatch, "conjugated isometry has no nonzero entry");
  }
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      if (h(i, j).is_zero()) {
        continue;
      }
      const FieldElement ratio = h(i, j) / pivot;
      if (!in_subfield(ratio, gamma.ring.field).has_value()) {
        return out;  // NotSimilarity
      }
    }
  }

  FieldElement alpha = make_rational(ambient, Rational(1)) / pivot;
  if (sign(alpha) < 0) {
    alpha = -alpha;
  }
  int eta = 0;
  FieldElement power = alpha;
  for (int n = 1; n <= gamma.dim; ++n) {
    if (in_subfield(power, gamma.ring.field).has_value()) {
      eta = n;
      break;
    }
    power *= alpha;
  }
  if (eta == 0) {
    // det(alpha*H) in K and det(H) = +-1 force alpha^d in K, so the loop
    // above always terminates within d steps for validated input.
    throw Error(Err::InternalMismatch, "similarity scale has no power in K up to the dimension");
  }
  out.verdict = Verdict::Similarity;
  out.coset = ScalarCoset{alpha};
  out.eta = eta;
  return out;
}

int eta_order(const FreeModule& gamma, const Isometry& r) {
  const Classification c = classify(gamma, r);
  if (c.verdict == Verdict::NotSimilarity) {
    throw Error(Err::NotASimilarity, "isometry is not a similarity isometry of the module");
  }
  return c.eta;
}

bool eta_product_check(const FreeModule& gamma, const Isometry& r, const Isometry& s) {
  const Classification cr = classify(gamma, r);
  const Classification cs = classify(gamma, s);
  if (cr.verdict == Verdict::NotSimilarity || cs.verdict == Verdict::NotSimilarity) {
    throw Error(Err::NotASimilarity, "eta is defined on similarity isometries only");
  }
  const Classification crs = classify(gamma, r * s);
  if (crs.verdict == Verdict::NotSimilarity) {
    return false;  // the product left OS(Gamma): the homomorphism claim fails
  }
  const FieldPtr& ambient = gamma.ambient();
  const auto rep = [&ambient](const Classification& c) -> FieldElement {
    return c.coset ? c.coset->rep : make_rational(ambient, Rational(1));
  };
  const FieldElement prod = rep(cr) * rep(cs);
  return coset_equal(ScalarCoset{rep(crs)}, ScalarCoset{prod}, gamma.ring.field);
}

bool verify_os_squared(const FreeModule& gamma, const Isometry& r) {
  if (!is_K_module(gamma)) {
    throw Error(Err::NotAKModule, "the squared-similarity law needs a K-module");
  }
  const Classification cr = classify(gamma, r);
  if (cr.verdict == Verdict::NotSimilarity) {
    throw Error(Err::NotASimilarity, "isometry is not a similarity isometry of the module");
  }
  const Classification c2 = classify(gamma, r * r);
  bool ok = c2.verdict == Verdict::Coincidence;
  if (gamma.dim % 2 == 1) {
    ok = ok && cr.verdict == Verdict::Coincidence;
  }
  return ok;
}

PlanarOrder PlanarOrder::make(FieldPtr field, FieldPtr real_ambient, FieldElement im_theta) {
  if (!field || !field->is_imaginary() || field->degree() != 2) {
    throw Error(Err::InvalidRing, "a planar order needs an imaginary quadratic field");
  }
  if (!real_ambient || !real_ambient->is_real()) {
    throw Error(Err::NotRealField, "the ambient field of a planar order must be real");
  }
  // Minimal polynomial x^2 + c1 x + c0; integrality of both coefficients is
  // exactly multiplicative closure of Z + Z*theta.
  const Rational c0 = field->minpoly().c[0];
  const Rational c1 = field->minpoly().c[1];
  if (c0.get_den() != 1 || c1.get_den() != 1) {
    throw Error(Err::InvalidRing, "order generator is not an algebraic integer");
  }
  FieldElement im = im_theta.lifted_to(real_ambient);
  if (sign(im) <= 0) {
    throw Error(Err::InvalidRing, "the imaginary part of the generator must be positive");
  }
  const Rational expected = c0 - c1 * c1 / 4;  // N(theta) - (Re theta)^2
  const FieldElement square = im * im;
  if (square != make_rational(real_ambient, expected)) {
    throw Error(Err::InvalidField, "imaginary part does not match the minimal polynomial");
  }
  PlanarOrder o;
  o.field = std::move(field);
  o.real_ambient = std::move(real_ambient);
  o.re_theta = -c1 / 2;
  o.im_theta = std::move(im);
  return o;
}

Rational PlanarOrder::norm(const FieldElement& a) const {
  const FieldElement lifted = a.lifted_to(field);
  const FieldElement n = complex_abs_square(lifted);
  const std::optional<Rational> q = n.as_rational();
  if (!q) {
    throw Error(Err::InternalMismatch, "norm of a quadratic element fell outside the rationals");
  }
  return *q;
}

std::pair<Rational, Rational> PlanarOrder::coords(const FieldElement& a) const {
  const FieldElement lifted = a.lifted_to(field);
  return {lifted.coeffs()[0], lifted.coeffs()[1]};
}

bool PlanarOrder::contains(const FieldElement& a) const {
  const std::pair<Rational, Rational> uv = coords(a);
  return uv.first.get_den() == 1 && uv.second.get_den() == 1;
}

FieldElement PlanarOrder::element(const Rational& u, const Rational& v) const {
  return make_element(field, {u, v});
}

FreeModule PlanarOrder::as_module() const {
  ExactMat basis(2, 2);
  basis(0, 0) = make_rational(real_ambient, Rational(1));
  basis(1, 0) = make_rational(real_ambient, Rational(0));
  basis(0, 1) = make_rational(real_ambient, re_theta);
  basis(1, 1) = im_theta;
  return FreeModule::make(CoefficientRing::integers(real_ambient), basis);
}

Isometry sos_direction(const PlanarOrder& o, const FieldElement& a) {
  const FieldElement x = a.lifted_to(o.field);
  if (x.is_zero()) {
    throw Error(Err::ZeroElement, "the direction of zero is undefined");
  }
  const std::pair<Rational, Rational> uv = o.coords(x);
  require_integral(uv.first, uv.second);
  const Rational n = o.norm(x);
  const std::optional<FieldElement> mag = sqrt_rational_in(o.real_ambient, n);
  if (!mag) {
    throw Error(Err::NotRepresentable, "the element's length lies outside the real ambient field");
  }
  const Rational re = uv.first + uv.second * o.re_theta;
  const FieldElement cx = make_rational(o.real_ambient, re) / *mag;
  const FieldElement cy = (make_rational(o.real_ambient, uv.second) * o.im_theta) / *mag;
  ExactMat m(2, 2);
  m(0, 0) = cx;
  m(0, 1) = -cy;
  m(1, 0) = cy;
  m(1, 1) = cx;
  return Isometry::make(std::move(m));
}

Integer principal_ideal_index(const PlanarOrder& o, const FieldElement& kappa) {
  const FieldElement k = kappa.lifted_to(o.field);
  if (k.is_zero()) {
    throw Error(Err::ZeroElement, "the zero ideal has infinite index");
  }
  const std::pair<Rational, Rational> uv = o.coords(k);
  require_integral(uv.first, uv.second);

  const Rational nrm = field_norm(k);
  const Rational absn = abs(nrm);
  if (absn.get_den() != 1) {
    throw Error(Err::InternalMismatch, "norm of an order element must be a rational integer");
  }
  const Integer via_norm = absn.get_num();

  // Independent route: the index of the multiplication-by-kappa image of the
  // Z-basis {1, theta} as a sublattice of Z^2.
  const FieldElement ktheta = k * generator(o.field);
  const std::pair<Rational, Rational> wt = o.coords(ktheta);
  MatQ rows(2, 2);
  rows(0, 0) = uv.first;
  rows(0, 1) = uv.second;
  rows(1, 0) = wt.first;
  rows(1, 1) = wt.second;
  const IntegerLattice image = IntegerLattice::from_generators(rows);
  const IntegerLattice whole = IntegerLattice::from_basis_rows(MatQ(MatQ::Identity(2, 2)));
  const Integer via_lattice = lattice_index(whole, image);

  if (via_norm != via_lattice) {
    throw Error(Err::InternalMismatch, "norm and lattice index disagree for a principal ideal");
  }
  return via_norm;
}

}  // namespace cokit
