#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <utility>
#include <vector>

#include "cokit/isometry.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cokit;
using testsup::Rng;

namespace {

ExactMat identity_mat(const FieldPtr& f, int d) {
  ExactMat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = make_rational(f, Rational(i == j ? 1 : 0));
  return m;
}

// Z^d with coefficient ring Z over the given ambient field.
FreeModule integer_module(const FieldPtr& f, int d) {
  return FreeModule::make(CoefficientRing::integers(f), identity_mat(f, d));
}

// Q(2^(1/3)), root in [1,2].
FieldPtr cbrt2_field() {
  static FieldPtr f = AlgebraicField::make_real(testsup::poly({-2, 0, 0, 1}), testsup::iv(1, 2));
  return f;
}

// Q(omega), omega = primitive cube root of unity in the upper half plane.
FieldPtr omega_field() {
  static FieldPtr f = AlgebraicField::make_imaginary(
      testsup::poly({1, 1, 1}),
      QBox{{Rational(-3, 4), Rational(-1, 4)}, {Rational(1, 2), Rational(1)}});
  return f;
}

// Q(2i) presented by x^2 + 4 (the generator of the non-maximal order Z[2i]).
FieldPtr twoi_field() {
  static FieldPtr f = AlgebraicField::make_imaginary(
      testsup::poly({4, 0, 1}),
      QBox{{Rational(-1, 4), Rational(1, 4)}, {Rational(3, 2), Rational(3)}});
  return f;
}

Rational rq(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Isometry plane_rot(const FieldElement& c, const FieldElement& s) {
  ExactMat m(2, 2);
  m(0, 0) = c;
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = c;
  return Isometry::make(std::move(m));
}

Isometry rational_rot(const FieldPtr& f, const Rational& c, const Rational& s) {
  return plane_rot(make_rational(f, c), make_rational(f, s));
}

// Rotation by a primitive Pythagorean triple (a, b, c): cos = a/c, sin = b/c.
Isometry pyth_rot(const FieldPtr& f, long a, long b, long c) {
  return rational_rot(f, rq(a, c), rq(b, c));
}

// Rotation by 45 degrees over Q(sqrt2): cos = sin = sqrt2/2.
Isometry rot45(const FieldPtr& sqrt2) {
  FieldElement h = make_element(sqrt2, {Rational(0), Rational(1, 2)});
  return plane_rot(h, h);
}

Isometry direct_sum(const Isometry& a, const Isometry& b) {
  const Eigen::Index n = a.mat.rows();
  const Eigen::Index m = b.mat.rows();
  ExactMat s(n + m, n + m);
  for (Eigen::Index i = 0; i < n + m; ++i)
    for (Eigen::Index j = 0; j < n + m; ++j) s(i, j) = FieldElement(0L);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) s(i, j) = a.mat(i, j);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) s(n + i, n + j) = b.mat(i, j);
  return Isometry::make(std::move(s));
}

// Number of cosets of `inner` met by the integer points of [0,bound)^2;
// equals [Z^2 : inner] whenever bound is at least every pivot of inner.
long coset_count_z2(const IntegerLattice& inner, long bound) {
  std::vector<VecQ> reps;
  for (long x = 0; x < bound; ++x) {
    for (long y = 0; y < bound; ++y) {
      VecQ v(2);
      v(0) = Rational(x);
      v(1) = Rational(y);
      bool fresh = true;
      for (const VecQ& r : reps) {
        const VecQ diff = VecQ(v - r);
        if (inner.contains(diff)) {
          fresh = false;
          break;
        }
      }
      if (fresh) reps.push_back(v);
    }
  }
  return static_cast<long>(reps.size());
}

// The module with basis diag(xi, xi^2, 2) over Q(xi), xi^3 = 2: the cyclic
// coordinate shift scales it by xi, a similarity of eta-order 3.
FreeModule cbrt2_module() {
  FieldPtr f = cbrt2_field();
  FieldElement xi = generator(f);
  ExactMat b(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = make_rational(f, Rational(0));
  b(0, 0) = xi;
  b(1, 1) = FieldElement(xi * xi);
  b(2, 2) = make_rational(f, Rational(2));
  return FreeModule::make(CoefficientRing::integers(f), b);
}

Isometry cyclic_shift3(const FieldPtr& f) {
  ExactMat m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = make_rational(f, Rational(0));
  m(1, 0) = make_rational(f, Rational(1));
  m(2, 1) = make_rational(f, Rational(1));
  m(0, 2) = make_rational(f, Rational(1));
  return Isometry::make(std::move(m));
}

PlanarOrder gauss_order() {
  return PlanarOrder::make(testsup::gauss_field(), testsup::sqrt2_field(),
                           FieldElement(Rational(1)));
}

PlanarOrder eisenstein_order() {
  return PlanarOrder::make(omega_field(), testsup::sqrt3_field(),
                           make_element(testsup::sqrt3_field(), {Rational(0), Rational(1, 2)}));
}

Err thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code;
  }
  return Err::InternalMismatch;
}

FieldElement coset_rep(const Classification& c, const FieldPtr& ambient) {
  return c.coset ? c.coset->rep : make_rational(ambient, Rational(1));
}

}  // namespace

TEST_CASE("isometry construction and validation") {
  FieldPtr q = AlgebraicField::rationals();

  ExactMat rect(2, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) rect(i, j) = FieldElement(0L);
  CHECK(thrown_code([&] { (void)Isometry::make(rect); }) == Err::DimensionMismatch);

  ExactMat shear(2, 2);
  shear(0, 0) = FieldElement(1L);
  shear(0, 1) = FieldElement(1L);
  shear(1, 0) = FieldElement(0L);
  shear(1, 1) = FieldElement(1L);
  CHECK(thrown_code([&] { (void)Isometry::make(shear); }) == Err::NotOrthogonal);

  // sqrt2 * rot45 has orthogonal columns but the wrong lengths.
  ExactMat scaled(2, 2);
  scaled(0, 0) = FieldElement(1L);
  scaled(0, 1) = FieldElement(-1L);
  scaled(1, 0) = FieldElement(1L);
  scaled(1, 1) = FieldElement(1L);
  CHECK(thrown_code([&] { (void)Isometry::make(scaled); }) == Err::NotOrthogonal);

  Isometry rot90 = rational_rot(q, Rational(0), Rational(1));
  CHECK(rot90.dim() == 2);
  CHECK(rot90.det_sign == 1);

  ExactMat refl = identity_mat(q, 2);
  refl(1, 1) = make_rational(q, Rational(-1));
  Isometry mirror = Isometry::make(refl);
  CHECK(mirror.det_sign == -1);

  // R * R^T is the identity, and det signs multiply.
  Isometry r = rot45(testsup::sqrt2_field());
  Isometry rt = r.transposed();
  Isometry prod = r * rt;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(prod.mat(i, j) == FieldElement(i == j ? 1L : 0L));
  CHECK((mirror * mirror).det_sign == 1);
  CHECK((r * rt).det_sign == 1);
}

TEST_CASE("coincidence classification on the integer lattice") {
  FieldPtr q = AlgebraicField::rationals();
  FreeModule z2 = integer_module(q, 2);

  // A quarter turn maps Z^2 onto itself: trivial coincidence.
  Classification quarter = classify(z2, rational_rot(q, Rational(0), Rational(1)));
  CHECK(quarter.verdict == Verdict::Coincidence);
  CHECK(quarter.eta == 1);
  CHECK(!quarter.coset.has_value());
  REQUIRE(quarter.sigma.has_value());
  CHECK(*quarter.sigma == 1);

  // The 3-4-5 rotation: coincidence of index 5, frozen against a brute-force
  // coset count of Z^2 / (Z^2 meet R Z^2).
  Isometry r345 = pyth_rot(q, 3, 4, 5);
  Classification c345 = classify(z2, r345);
  CHECK(c345.verdict == Verdict::Coincidence);
  REQUIRE(c345.sigma.has_value());
  CHECK(*c345.sigma == 5);
  IntegerLattice meet = intersect(z2, z2.transformed(r345.mat));
  CHECK(coset_count_z2(meet, 6) == 5);
  // Both quotients are finite, and here equal by symmetry.
  CHECK(module_index(z2.transformed(r345.mat), meet) == 5);

  Classification c51213 = classify(z2, pyth_rot(q, 5, 12, 13));
  REQUIRE(c51213.sigma.has_value());
  CHECK(*c51213.sigma == 13);
  Classification c81517 = classify(z2, pyth_rot(q, 8, 15, 17));
  REQUIRE(c81517.sigma.has_value());
  CHECK(*c81517.sigma == 17);
  IntegerLattice meet13 = intersect(z2, z2.transformed(pyth_rot(q, 5, 12, 13).mat));
  CHECK(coset_count_z2(meet13, 14) == 13);

  // A coordinate reflection is a coincidence, but the rotation filter
  // excludes it from the det = +1 subgroup.
  ExactMat refl = identity_mat(q, 2);
  refl(1, 1) = make_rational(q, Rational(-1));
  Isometry mirror = Isometry::make(refl);
  CHECK(classify(z2, mirror).verdict == Verdict::Coincidence);
  ClassifyOptions rot_only;
  rot_only.rotations_only = true;
  CHECK(classify(z2, mirror, rot_only).verdict == Verdict::NotSimilarity);
}

TEST_CASE("similarity classification and scaling cosets") {
  FieldPtr f = testsup::sqrt2_field();
  FreeModule z2 = integer_module(f, 2);
  const SubfieldEmbedding& k = z2.ring.field;

  // Rotation by 45 degrees: not a coincidence, but sqrt2 * R maps Z^2 into
  // itself, so the scaling coset is sqrt2 * Q and the eta-order is 2.
  Isometry r = rot45(f);
  Classification c = classify(z2, r);
  CHECK(c.verdict == Verdict::Similarity);
  CHECK(c.eta == 2);
  CHECK(!c.sigma.has_value());
  REQUIRE(c.coset.has_value());
  CHECK(coset_equal(*c.coset, ScalarCoset{generator(f)}, k));
  CHECK(!coset_equal(*c.coset, ScalarCoset{make_rational(f, Rational(1))}, k));
  CHECK(eta_order(z2, r) == 2);
  CHECK(z2.dim % c.eta == 0);

  // Its square is the quarter turn, hence a coincidence.
  CHECK(classify(z2, r * r).verdict == Verdict::Coincidence);

  // Cross-check the verdicts against the commensurability criterion.
  CHECK(!commensurate(z2, z2.transformed(r.mat)));
  CHECK(commensurate(z2, z2.transformed((r * r).mat)));

  // Rotation by 30 degrees mixes 1 and sqrt3 among the entries: no single
  // scale clears both, so it is not a similarity isometry of Z^2.
  FieldPtr f3 = testsup::sqrt3_field();
  FreeModule z2q3 = integer_module(f3, 2);
  FieldElement half = make_rational(f3, Rational(1, 2));
  FieldElement s3half = make_element(f3, {Rational(0), Rational(1, 2)});
  Isometry rot30 = plane_rot(s3half, half);
  CHECK(classify(z2q3, rot30).verdict == Verdict::NotSimilarity);
  CHECK(thrown_code([&] { (void)eta_order(z2q3, rot30); }) == Err::NotASimilarity);

  // Entry fields must match the module's ambient field.
  CHECK(thrown_code([&] { (void)classify(z2, rot30); }) == Err::AmbientMismatch);
  CHECK(thrown_code([&] { (void)classify(integer_module(f, 3), r); }) == Err::DimensionMismatch);
}

TEST_CASE("cube-root scaling module") {
  FieldPtr f = cbrt2_field();
  FieldElement xi = generator(f);
  FreeModule gamma = cbrt2_module();
  const SubfieldEmbedding& k = gamma.ring.field;
  Isometry shift = cyclic_shift3(f);

  Classification c = classify(gamma, shift);
  CHECK(c.verdict == Verdict::Similarity);
  CHECK(c.eta == 3);
  CHECK(gamma.dim % c.eta == 0);
  REQUIRE(c.coset.has_value());
  CHECK(coset_equal(*c.coset, ScalarCoset{xi}, k));

  // The coset does not depend on which entry of B^{-1} R B is used as pivot.
  ExactMat binv = invert(gamma.basis);
  ExactMat rb = ExactMat(shift.mat * gamma.basis);
  ExactMat h = ExactMat(binv * rb);
  int nonzero = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (h(i, j).is_zero()) continue;
      ++nonzero;
      FieldElement alpha = make_rational(f, Rational(1)) / h(i, j);
      if (sign(alpha) < 0) alpha = -alpha;
      CHECK(coset_equal(ScalarCoset{alpha}, *c.coset, k));
    }
  }
  CHECK(nonzero == 3);

  // The square scales by xi^2 (again eta-order 3), the cube by 2.
  Classification c2 = classify(gamma, shift * shift);
  CHECK(c2.verdict == Verdict::Similarity);
  CHECK(c2.eta == 3);
  REQUIRE(c2.coset.has_value());
  CHECK(coset_equal(*c2.coset, ScalarCoset{FieldElement(xi * xi)}, k));
  CHECK(classify(gamma, shift * shift * shift).verdict == Verdict::Coincidence);
  CHECK(eta_product_check(gamma, shift, shift));
  CHECK(eta_product_check(gamma, shift, shift * shift));

  // The Gram matrix leaves Q, so the squared-similarity law does not apply.
  CHECK(!is_K_module(gamma));
  CHECK(thrown_code([&] { (void)verify_os_squared(gamma, shift); }) == Err::NotAKModule);
}

TEST_CASE("coset equality") {
  FieldPtr f = testsup::sqrt2_field();
  SubfieldEmbedding q_in_f = SubfieldEmbedding::make(f, make_rational(f, Rational(0)));
  FieldElement s2 = generator(f);

  CHECK(coset_equal(ScalarCoset{s2}, ScalarCoset{FieldElement(s2 * 3L)}, q_in_f));
  CHECK(!coset_equal(ScalarCoset{s2}, ScalarCoset{make_rational(f, Rational(1))}, q_in_f));
  CHECK(coset_equal(ScalarCoset{s2}, ScalarCoset{FieldElement(s2 / 5L)}, q_in_f));

  // Over K = Q(sqrt2) inside Q(2^(1/4)): 2^(1/4) and 2^(3/4) differ by
  // sqrt2 in K, but over Q they represent distinct cosets.
  FieldPtr f4 = testsup::root4of2_field();
  FieldElement xi = generator(f4);
  FieldElement xi3 = FieldElement(xi * xi * xi);
  SubfieldEmbedding k2 = SubfieldEmbedding::make(f4, FieldElement(xi * xi));
  SubfieldEmbedding q_in_f4 = SubfieldEmbedding::make(f4, make_rational(f4, Rational(0)));
  CHECK(coset_equal(ScalarCoset{xi}, ScalarCoset{xi3}, k2));
  CHECK(!coset_equal(ScalarCoset{xi}, ScalarCoset{xi3}, q_in_f4));
}

TEST_CASE("eta is multiplicative with kernel the coincidence isometries") {
  FieldPtr f = testsup::sqrt2_field();
  FreeModule z2 = integer_module(f, 2);
  const SubfieldEmbedding& k = z2.ring.field;

  std::vector<Isometry> pool;
  pool.push_back(rot45(f));
  pool.push_back(pyth_rot(f, 3, 4, 5));
  pool.push_back(pyth_rot(f, 5, 12, 13));
  pool.push_back(rational_rot(f, Rational(0), Rational(1)));
  pool.push_back(rot45(f) * pyth_rot(f, 8, 15, 17));

  for (const Isometry& r : pool) {
    Classification c = classify(z2, r);
    REQUIRE(c.verdict != Verdict::NotSimilarity);
    if (c.verdict == Verdict::Coincidence) {
      // Kernel members: eta-order one, trivial coset, commensurate image.
      CHECK(eta_order(z2, r) == 1);
      CHECK(commensurate(z2, z2.transformed(r.mat)));
    } else {
      CHECK(c.eta >= 2);
      REQUIRE(c.coset.has_value());
      CHECK(!in_subfield(c.coset->rep, k).has_value());
      CHECK(!commensurate(z2, z2.transformed(r.mat)));
    }
    CHECK(z2.dim % classify(z2, r).eta == 0);
  }

  Rng rng(2026);
  for (int t = 0; t < 15; ++t) {
    const Isometry& a = pool[static_cast<size_t>(rng.pick(0, 4))];
    const Isometry& b = pool[static_cast<size_t>(rng.pick(0, 4))];
    CHECK(eta_product_check(z2, a, b));
    CHECK(eta_product_check(z2, a, b.transposed()));
  }

  // Inverses land in the inverse coset: the reps multiply into K.
  for (const Isometry& r : pool) {
    Classification c = classify(z2, r);
    Classification ct = classify(z2, r.transposed());
    CHECK(c.eta == ct.eta);
    FieldElement prod = FieldElement(coset_rep(c, f) * coset_rep(ct, f));
    CHECK(in_subfield(prod, k).has_value());
  }

  // A block mix of 45-degree and quarter turns is not a similarity of Z^4,
  // so eta is undefined on it.
  FreeModule z4 = integer_module(f, 4);
  Isometry mixed = direct_sum(rot45(f), rational_rot(f, Rational(0), Rational(1)));
  CHECK(classify(z4, mixed).verdict == Verdict::NotSimilarity);
  CHECK(thrown_code([&] {
          (void)eta_product_check(z4, mixed, direct_sum(rot45(f), rot45(f)));
        }) == Err::NotASimilarity);
}

TEST_CASE("squared similarities are coincidences") {
  FieldPtr f = testsup::sqrt2_field();
  FreeModule z2 = integer_module(f, 2);
  CHECK(verify_os_squared(z2, rot45(f)));
  CHECK(verify_os_squared(z2, pyth_rot(f, 3, 4, 5)));

  FreeModule z4 = integer_module(f, 4);
  Isometry both45 = direct_sum(rot45(f), rot45(f));
  Classification c4 = classify(z4, both45);
  CHECK(c4.verdict == Verdict::Similarity);
  CHECK(c4.eta == 2);
  CHECK(z4.dim % c4.eta == 0);
  CHECK(verify_os_squared(z4, both45));

  // Odd dimension: similarity isometries of Z^3 are already coincidences.
  FieldPtr q = AlgebraicField::rationals();
  FreeModule z3 = integer_module(q, 3);
  ExactMat one(1, 1);
  one(0, 0) = make_rational(q, Rational(1));
  Isometry r3 = direct_sum(pyth_rot(q, 3, 4, 5), Isometry::make(one));
  CHECK(classify(z3, r3).verdict == Verdict::Coincidence);
  CHECK(verify_os_squared(z3, r3));

  CHECK(thrown_code([&] {
          (void)verify_os_squared(z4, direct_sum(rot45(f), rational_rot(f, Rational(0), Rational(1))));
        }) == Err::NotASimilarity);
}

TEST_CASE("planar order construction") {
  PlanarOrder gi = gauss_order();
  CHECK(gi.re_theta == 0);
  CHECK(gi.norm(make_element(gi.field, {Rational(3), Rational(4)})) == 25);
  std::pair<Rational, Rational> uv = gi.coords(gi.element(Rational(2), Rational(-1)));
  CHECK(uv.first == 2);
  CHECK(uv.second == -1);
  CHECK(gi.contains(gi.element(Rational(7), Rational(0))));
  CHECK(!gi.contains(gi.element(Rational(1, 2), Rational(1))));
  FreeModule mod = gi.as_module();
  CHECK(mod.dim == 2);
  CHECK(mod.zrank() == 2);
  CHECK(is_K_module(mod));

  PlanarOrder ei = eisenstein_order();
  CHECK(ei.re_theta == Rational(-1, 2));
  CHECK(ei.norm(make_element(ei.field, {Rational(1), Rational(-1)})) == 3);
  CHECK(is_K_module(ei.as_module()));

  // A real field is not an admissible fraction field.
  CHECK(thrown_code([&] {
          (void)PlanarOrder::make(testsup::sqrt2_field(), testsup::sqrt2_field(),
                                  FieldElement(Rational(1)));
        }) == Err::InvalidRing);
  // The generator must be an algebraic integer for Z[theta] to be a ring.
  FieldPtr halfint = AlgebraicField::make_imaginary(
      RatPoly({Rational(1, 2), Rational(1), Rational(1)}),
      QBox{{Rational(-3, 4), Rational(-1, 4)}, {Rational(1, 4), Rational(3, 4)}});
  CHECK(thrown_code([&] {
          (void)PlanarOrder::make(halfint, testsup::sqrt2_field(), FieldElement(Rational(1, 2)));
        }) == Err::InvalidRing);
  // The imaginary part must square to N(theta) - (Re theta)^2.
  CHECK(thrown_code([&] {
          (void)PlanarOrder::make(testsup::gauss_field(), testsup::sqrt2_field(),
                                  FieldElement(Rational(2)));
        }) == Err::InvalidField);
  CHECK(thrown_code([&] {
          (void)PlanarOrder::make(testsup::gauss_field(), testsup::sqrt2_field(),
                                  FieldElement(Rational(-1)));
        }) == Err::InvalidRing);
  CHECK(thrown_code([&] {
          (void)PlanarOrder::make(testsup::gauss_field(), testsup::gauss_field(),
                                  FieldElement(Rational(1)));
        }) == Err::NotRealField);
}

TEST_CASE("rotations from order elements") {
  PlanarOrder gi = gauss_order();
  FreeModule mod = gi.as_module();
  const SubfieldEmbedding& k = mod.ring.field;
  FieldPtr amb = gi.real_ambient;

  // a = 1: the identity rotation.
  Isometry id = sos_direction(gi, gi.element(Rational(1), Rational(0)));
  CHECK(id.mat(0, 0) == FieldElement(1L));
  CHECK(id.mat(1, 0) == FieldElement(0L));
  CHECK(classify(mod, id).verdict == Verdict::Coincidence);

  // a = 1 + i: the 45-degree rotation, with coset sqrt2 * Q.
  Isometry r45 = sos_direction(gi, gi.element(Rational(1), Rational(1)));
  CHECK(r45.mat(0, 0) == make_element(amb, {Rational(0), Rational(1, 2)}));
  CHECK(r45.mat(1, 0) == make_element(amb, {Rational(0), Rational(1, 2)}));
  Classification c45 = classify(mod, r45);
  CHECK(c45.verdict == Verdict::Similarity);
  REQUIRE(c45.coset.has_value());
  CHECK(coset_equal(*c45.coset, ScalarCoset{generator(amb)}, k));

  // a = i: the quarter turn.
  Isometry r90 = sos_direction(gi, gi.element(Rational(0), Rational(1)));
  CHECK(r90.mat(0, 0) == FieldElement(0L));
  CHECK(r90.mat(1, 0) == FieldElement(1L));
  CHECK(classify(mod, r90).verdict == Verdict::Coincidence);

  CHECK(thrown_code([&] { (void)sos_direction(gi, gi.element(Rational(0), Rational(0))); }) ==
        Err::ZeroElement);
  // |1 + 2i| = sqrt5 does not lie in Q(sqrt2).
  CHECK(thrown_code([&] { (void)sos_direction(gi, gi.element(Rational(1), Rational(2))); }) ==
        Err::NotRepresentable);
  CHECK(thrown_code([&] { (void)sos_direction(gi, gi.element(Rational(0), Rational(1, 2))); }) ==
        Err::NotSubmodule);

  // Round trip: the classified coset of a/|a| is |a| * Q.
  const long norms_ok[][2] = {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {3, 3}, {-1, 1}, {0, 5}};
  for (const auto& uv : norms_ok) {
    FieldElement a = gi.element(Rational(uv[0]), Rational(uv[1]));
    Isometry r = sos_direction(gi, a);
    Classification c = classify(mod, r);
    REQUIRE(c.verdict != Verdict::NotSimilarity);
    std::optional<FieldElement> mag = sqrt_rational_in(amb, gi.norm(a));
    REQUIRE(mag.has_value());
    CHECK(coset_equal(ScalarCoset{coset_rep(c, amb)}, ScalarCoset{*mag}, k));
  }

  // Eisenstein integers: omega rotates the hexagonal module onto itself.
  PlanarOrder ei = eisenstein_order();
  FreeModule hex = ei.as_module();
  FieldPtr amb3 = ei.real_ambient;
  Isometry r120 = sos_direction(ei, generator(ei.field));
  CHECK(r120.mat(0, 0) == make_rational(amb3, Rational(-1, 2)));
  CHECK(r120.mat(1, 0) == make_element(amb3, {Rational(0), Rational(1, 2)}));
  Classification c120 = classify(hex, r120);
  CHECK(c120.verdict == Verdict::Coincidence);
  REQUIRE(c120.sigma.has_value());
  CHECK(*c120.sigma == 1);

  // a = 1 - omega has norm 3: a genuine similarity with coset sqrt3 * Q.
  Isometry r1mo = sos_direction(ei, ei.element(Rational(1), Rational(-1)));
  Classification c1mo = classify(hex, r1mo);
  CHECK(c1mo.verdict == Verdict::Similarity);
  CHECK(c1mo.eta == 2);
  REQUIRE(c1mo.coset.has_value());
  CHECK(coset_equal(*c1mo.coset, ScalarCoset{generator(amb3)}, hex.ring.field));
  CHECK(verify_os_squared(hex, r1mo));
}

TEST_CASE("principal ideal indices") {
  PlanarOrder gi = gauss_order();

  // [Z[i] : (1+i)] = 2, frozen against a brute-force coset count of the
  // multiplication image.
  FieldElement onepi = gi.element(Rational(1), Rational(1));
  CHECK(principal_ideal_index(gi, onepi) == 2);
  MatQ rows(2, 2);
  rows(0, 0) = Rational(1);
  rows(0, 1) = Rational(1);
  rows(1, 0) = Rational(-1);
  rows(1, 1) = Rational(1);
  CHECK(coset_count_z2(IntegerLattice::from_generators(rows), 4) == 2);

  CHECK(principal_ideal_index(gi, gi.element(Rational(1), Rational(2))) == 5);
  IntegerLattice img5 = IntegerLattice::from_generators([] {
    MatQ m(2, 2);
    m(0, 0) = Rational(1);
    m(0, 1) = Rational(2);
    m(1, 0) = Rational(-2);
    m(1, 1) = Rational(1);
    return m;
  }());
  CHECK(coset_count_z2(img5, 6) == 5);

  CHECK(principal_ideal_index(gi, gi.element(Rational(2), Rational(0))) == 4);
  CHECK(principal_ideal_index(gi, gi.element(Rational(0), Rational(1))) == 1);
  CHECK(principal_ideal_index(gi, gi.element(Rational(3), Rational(0))) == 9);

  CHECK(thrown_code([&] {
          (void)principal_ideal_index(gi, gi.element(Rational(0), Rational(0)));
        }) == Err::ZeroElement);
  CHECK(thrown_code([&] {
          (void)principal_ideal_index(gi, gi.element(Rational(1, 2), Rational(0)));
        }) == Err::NotSubmodule);

  // The non-maximal order Z[2i]: multiplication by its generator has index 4.
  PlanarOrder z2i = PlanarOrder::make(twoi_field(), testsup::sqrt2_field(),
                                      FieldElement(Rational(2)));
  CHECK(principal_ideal_index(z2i, generator(z2i.field)) == 4);
  IntegerLattice img2i = IntegerLattice::from_generators([] {
    MatQ m(2, 2);
    m(0, 0) = Rational(0);
    m(0, 1) = Rational(1);
    m(1, 0) = Rational(-4);
    m(1, 1) = Rational(0);
    return m;
  }());
  CHECK(coset_count_z2(img2i, 5) == 4);

  PlanarOrder ei = eisenstein_order();
  CHECK(principal_ideal_index(ei, ei.element(Rational(1), Rational(-1))) == 3);
  CHECK(principal_ideal_index(ei, ei.element(Rational(2), Rational(0))) == 4);

  // Indices multiply like norms.
  Rng rng(77);
  for (int t = 0; t < 10; ++t) {
    FieldElement a = gi.element(Rational(rng.pick(-4, 4)), Rational(rng.pick(-4, 4)));
    FieldElement b = gi.element(Rational(rng.pick(-4, 4)), Rational(rng.pick(-4, 4)));
    if (a.is_zero() || b.is_zero()) continue;
    const Integer ia = principal_ideal_index(gi, a);
    const Integer ib = principal_ideal_index(gi, b);
    const Integer iab = principal_ideal_index(gi, FieldElement(a * b));
    const Integer prod = ia * ib;
    CHECK(iab == prod);
  }
}

TEST_CASE("rational isometries of the integer lattice are coincidences") {
  FieldPtr f = testsup::sqrt2_field();
  Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    // Signed permutation times Pythagorean blocks: entries stay in Q.
    Isometry a = pyth_rot(f, 3, 4, 5);
    Isometry b = pyth_rot(f, 5, 12, 13);
    Isometry block = direct_sum(a, rng.pick(0, 1) ? b : b.transposed());
    FreeModule z4 = integer_module(f, 4);
    Classification c = classify(z4, block);
    CHECK(c.verdict == Verdict::Coincidence);
    REQUIRE(c.sigma.has_value());
    CHECK(*c.sigma >= 1);
  }
  // Entries outside K certify a non-coincidence exactly.
  FreeModule z2 = integer_module(f, 2);
  CHECK(classify(z2, rot45(f)).verdict != Verdict::Coincidence);
}
