#include "cokit/catalog.hpp"

#include <array>
#include <map>
#include <random>
#include <utility>

namespace cokit {

namespace {

// ---------------------------------------------------------------------------
// Ambient fields used by the catalog (cached per process).

FieldPtr sqrt2_field() {
  static FieldPtr f = AlgebraicField::make_real(
      RatPoly({Rational(-2), Rational(0), Rational(1)}), QInterval{Rational(1), Rational(2)},
      {{Rational(0), Rational(1)}});
  return f;
}

FieldPtr sqrt3_field() {
  static FieldPtr f = AlgebraicField::make_real(
      RatPoly({Rational(-3), Rational(0), Rational(1)}), QInterval{Rational(1), Rational(2)},
      {{Rational(0), Rational(1)}});
  return f;
}

// Q(tau), tau the golden ratio; sqrt5 = 2*tau - 1 backs exact lengths.
FieldPtr tau_field() {
  static FieldPtr f = AlgebraicField::make_real(
      RatPoly({Rational(-1), Rational(-1), Rational(1)}), QInterval{Rational(1), Rational(2)},
      {{Rational(-1), Rational(2)}});
  return f;
}

// Q(2 sin 72deg): theta ~ 1.9021 with theta^4 - 5 theta^2 + 5 = 0; contains
// tau = theta^2 - 2 and sqrt5 = 2 theta^2 - 5.
FieldPtr sin72_field() {
  static FieldPtr f = AlgebraicField::make_real(
      RatPoly({Rational(5), Rational(0), Rational(-5), Rational(0), Rational(1)}),
      QInterval{Rational(3, 2), Rational(2)},
      {{Rational(-5), Rational(0), Rational(2), Rational(0)}});
  return f;
}

// Q(2 sin 36deg): theta ~ 1.1756, the other positive root of the same
// quartic; contains tau = 3 - theta^2 and sqrt5 = 5 - 2 theta^2.
FieldPtr sin36_field() {
  static FieldPtr f = AlgebraicField::make_real(
      RatPoly({Rational(5), Rational(0), Rational(-5), Rational(0), Rational(1)}),
      QInterval{Rational(1), Rational(3, 2)},
      {{Rational(5), Rational(0), Rational(-2), Rational(0)}});
  return f;
}

// Q(sqrt(s)) for squarefree s >= 2 (s = 1 callers use sqrt2_field instead).
FieldPtr real_quadratic_field(long s) {
  static std::map<long, FieldPtr> cache;
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  FieldPtr f;
  if (s == 2) {
    f = sqrt2_field();
  } else if (s == 3) {
    f = sqrt3_field();
  } else {
    const Integer lo = sqrt(Integer(s));  // floor; s squarefree > 1 is not a square
    f = AlgebraicField::make_real(
        RatPoly({Rational(-s), Rational(0), Rational(1)}),
        QInterval{Rational(lo), Rational(Integer(lo + 1))}, {{Rational(0), Rational(1)}});
  }
  cache.emplace(s, f);
  return f;
}

void expect(bool ok, const char* what) {
  if (!ok) throw Error(Err::InternalMismatch, std::string("catalog self-check failed: ") + what);
}

FieldElement fe(const FieldPtr& f, std::vector<Rational> coeffs) {
  return make_element(f, std::move(coeffs));
}

ExactMat zero_mat(const FieldPtr& f, int rows, int cols) {
  ExactMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = make_rational(f, Rational(0));
  return m;
}

// ---------------------------------------------------------------------------
// Small-number factorization for example_315 and squarefree tests.

constexpr long kFactorBound = 1000000000000L;  // residuals past 10^6 stay analyzable

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1 || n > kFactorBound) {
    throw Error(Err::UnsupportedModule, "n outside the supported factorization range");
  }
  std::vector<std::pair<long, int>> out;
  long rest = n;
  for (long p = 2; p <= 1000000 && p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int v = 0;
    while (rest % p == 0) {
      rest /= p;
      ++v;
    }
    out.emplace_back(p, v);
  }
  if (rest > 1) {
    // All prime factors of the residual exceed 10^6, so below 10^12 it is a
    // prime, a prime square, or a product of two distinct primes; the last
    // case contributes the same valuations as a single prime would.
    const Integer r(rest);
    const Integer root = sqrt(r);
    if (root * root == r) {
      out.emplace_back(root.get_si(), 2);
    } else {
      out.emplace_back(rest, 1);
    }
  }
  return out;
}

bool is_squarefree(long n) {
  for (const std::pair<long, int>& pv : factorize(n)) {
    if (pv.second > 1) return false;
  }
  return true;
}

long gcd_long(long a, long b) {
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Quaternions over a field, Hamilton convention, coordinates (1, i, j, k).

struct Quat {
  FieldElement w, x, y, z;
};

Quat qmul(const Quat& a, const Quat& b) {
  FieldElement w = FieldElement(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z);
  FieldElement x = FieldElement(a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y);
  FieldElement y = FieldElement(a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x);
  FieldElement z = FieldElement(a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w);
  return {std::move(w), std::move(x), std::move(y), std::move(z)};
}

FieldElement qnorm(const Quat& a) {
  return FieldElement(a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z);
}

// Matrix of p -> q*p on coordinates (1, i, j, k).
ExactMat left_mult_matrix(const Quat& q) {
  ExactMat m(4, 4);
  m(0, 0) = q.w; m(0, 1) = -q.x; m(0, 2) = -q.y; m(0, 3) = -q.z;
  m(1, 0) = q.x; m(1, 1) = q.w;  m(1, 2) = -q.z; m(1, 3) = q.y;
  m(2, 0) = q.y; m(2, 1) = q.z;  m(2, 2) = q.w;  m(2, 3) = -q.x;
  m(3, 0) = q.z; m(3, 1) = -q.y; m(3, 2) = q.x;  m(3, 3) = q.w;
  return m;
}

// The rotation v -> q (0,v) conj(q) / N(q) of R^3.
ExactMat conjugation_rotation(const Quat& q) {
  const FieldElement n = qnorm(q);
  const FieldElement two = FieldElement(2L);
  ExactMat m(3, 3);
  m(0, 0) = FieldElement((q.w * q.w + q.x * q.x - q.y * q.y - q.z * q.z) / n);
  m(0, 1) = FieldElement(two * (q.x * q.y - q.w * q.z) / n);
  m(0, 2) = FieldElement(two * (q.x * q.z + q.w * q.y) / n);
  m(1, 0) = FieldElement(two * (q.x * q.y + q.w * q.z) / n);
  m(1, 1) = FieldElement((q.w * q.w - q.x * q.x + q.y * q.y - q.z * q.z) / n);
  m(1, 2) = FieldElement(two * (q.y * q.z - q.w * q.x) / n);
  m(2, 0) = FieldElement(two * (q.x * q.z - q.w * q.y) / n);
  m(2, 1) = FieldElement(two * (q.y * q.z + q.w * q.x) / n);
  m(2, 2) = FieldElement((q.w * q.w - q.x * q.x - q.y * q.y + q.z * q.z) / n);
  return m;
}

std::vector<Quat> icosian_generators() {
  FieldPtr f = tau_field();
  const Rational h(1, 2);
  std::vector<Quat> g;
  g.push_back({make_rational(f, Rational(1)), make_rational(f, Rational(0)),
               make_rational(f, Rational(0)), make_rational(f, Rational(0))});
  g.push_back({make_rational(f, Rational(0)), make_rational(f, Rational(1)),
               make_rational(f, Rational(0)), make_rational(f, Rational(0))});
  g.push_back({make_rational(f, h), make_rational(f, h), make_rational(f, h),
               make_rational(f, h)});
  // ((1 - tau) + tau*i + k) / 2
  g.push_back({fe(f, {h, -h}), fe(f, {Rational(0), h}), make_rational(f, Rational(0)),
               make_rational(f, h)});
  return g;
}

// ---------------------------------------------------------------------------
// Constructors.

FreeModule integer_lattice_module(const FieldPtr& f, int d) {
  ExactMat basis = zero_mat(f, d, d);
  for (int i = 0; i < d; ++i) basis(i, i) = make_rational(f, Rational(1));
  return FreeModule::make(CoefficientRing::integers(f), basis);
}

}  // namespace

FreeModule hypercubic(int d) {
  if (d < 1) throw Error(Err::DimensionMismatch, "hypercubic dimension must be at least 1");
  FreeModule gamma = integer_lattice_module(sqrt2_field(), d);
  expect(is_K_module(gamma), "hypercubic lattice must be a K-module");
  expect(gamma.zrank() == d, "hypercubic lattice has Z-rank d");
  return gamma;
}

Example315 example_315(int d, long n) {
  if (d < 1) throw Error(Err::DimensionMismatch, "the root-scaling lattice needs dimension >= 1");
  if (n < 1) throw Error(Err::UnsupportedModule, "n must be a positive integer");
  const std::vector<std::pair<long, int>> factors = factorize(n);

  // m = least i such that xi^i = n^(i/d) is rational: per prime, d must
  // divide i*v_p(n), so i_p = d / gcd(d, v_p) and m = lcm of the i_p.
  long m = 1;
  for (const std::pair<long, int>& pv : factors) {
    const long ip = d / gcd_long(d, pv.second);
    m = m / gcd_long(m, ip) * ip;
  }
  if (m == 1) throw Error(Err::PerfectPower, "n is a perfect d-th power, the root is rational");

  // xi = n^(1/d) satisfies x^m - N with N = n^(m/d), an integer by choice
  // of m; the polynomial is irreducible since N is not a p-th power for any
  // prime p dividing m (minimality of m) and N > 0.
  Integer big_n(1);
  for (const std::pair<long, int>& pv : factors) {
    const long e = static_cast<long>(m) * pv.second / d;
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), Integer(pv.first).get_mpz_t(), static_cast<unsigned long>(e));
    big_n *= pw;
  }
  std::vector<Rational> coeffs(static_cast<size_t>(m) + 1, Rational(0));
  coeffs[0] = Rational(-big_n);
  coeffs[static_cast<size_t>(m)] = Rational(1);
  FieldPtr field = AlgebraicField::make_real(RatPoly(std::move(coeffs)),
                                             QInterval{Rational(0), Rational(Integer(big_n + 1))});

  FieldElement xi = generator(field);
  ExactMat basis = zero_mat(field, d, d);
  FieldElement power = make_rational(field, Rational(1));
  for (int i = 0; i < d; ++i) {
    power = FieldElement(power * xi);
    basis(i, i) = power;
    // The recorded m must be the first power of xi that falls in Q.
    if (i + 1 < m) expect(!power.as_rational().has_value(), "xi^i irrational below m");
    if (i + 1 == m) expect(power.as_rational().has_value(), "xi^m rational");
  }
  FreeModule gamma = FreeModule::make(CoefficientRing::integers(field), basis);

  ExactMat shift = zero_mat(field, d, d);
  for (int i = 0; i < d; ++i) shift((i + 1) % d, i) = make_rational(field, Rational(1));

  Example315 out;
  out.module = std::move(gamma);
  out.shift = Isometry::make(std::move(shift));
  out.m = static_cast<int>(m);
  return out;
}

FreeModule icosian_ring() {
  FieldPtr f = tau_field();
  const std::vector<Quat> g = icosian_generators();
  ExactMat basis(4, 4);
  for (int j = 0; j < 4; ++j) {
    basis(0, j) = g[static_cast<size_t>(j)].w;
    basis(1, j) = g[static_cast<size_t>(j)].x;
    basis(2, j) = g[static_cast<size_t>(j)].y;
    basis(3, j) = g[static_cast<size_t>(j)].z;
  }
  SubfieldEmbedding k = SubfieldEmbedding::make(f, generator(f));
  CoefficientRing ring = CoefficientRing::make(k, {make_rational(f, Rational(1)), generator(f)});
  FreeModule gamma = FreeModule::make(std::move(ring), basis);
  expect(gamma.zrank() == 8, "icosian ring has Z-rank 8");
  expect(is_K_module(gamma), "icosian ring is a K-module");
  return gamma;
}

FreeModule cubian_ring() {
  FieldPtr f = sqrt2_field();
  const FieldElement s = fe(f, {Rational(0), Rational(1, 2)});  // 1/sqrt2
  const Rational h(1, 2);
  ExactMat basis = zero_mat(f, 4, 4);
  basis(0, 0) = make_rational(f, Rational(1));
  basis(0, 1) = s;
  basis(1, 1) = s;
  basis(0, 2) = s;
  basis(2, 2) = s;
  basis(0, 3) = make_rational(f, h);
  basis(1, 3) = make_rational(f, h);
  basis(2, 3) = make_rational(f, h);
  basis(3, 3) = make_rational(f, h);
  SubfieldEmbedding k = SubfieldEmbedding::make(f, generator(f));
  CoefficientRing ring = CoefficientRing::make(k, {make_rational(f, Rational(1)), generator(f)});
  FreeModule gamma = FreeModule::make(std::move(ring), basis);
  expect(gamma.zrank() == 8, "cubian ring has Z-rank 8");
  expect(is_K_module(gamma), "cubian ring is a K-module");
  return gamma;
}

FreeModule icosahedral_module(IcosahedralVariant variant) {
  FieldPtr f = tau_field();
  FieldElement tau = generator(f);
  ExactMat basis = zero_mat(f, 3, 3);
  if (variant == IcosahedralVariant::BodyCentred) {
    // Columns (0,1,tau), (1,tau,0), (tau,0,1): three icosahedron vertices.
    basis(1, 0) = make_rational(f, Rational(1));
    basis(2, 0) = tau;
    basis(0, 1) = make_rational(f, Rational(1));
    basis(1, 1) = tau;
    basis(0, 2) = tau;
    basis(2, 2) = make_rational(f, Rational(1));
  } else {
    // Columns (1,0,0), (1,1,1), ((2tau-1)/2, (tau-1)/2, tau/2): the pure
    // quaternion part of the icosian ring.
    basis(0, 0) = make_rational(f, Rational(1));
    basis(0, 1) = make_rational(f, Rational(1));
    basis(1, 1) = make_rational(f, Rational(1));
    basis(2, 1) = make_rational(f, Rational(1));
    basis(0, 2) = fe(f, {Rational(-1, 2), Rational(1)});
    basis(1, 2) = fe(f, {Rational(-1, 2), Rational(1, 2)});
    basis(2, 2) = fe(f, {Rational(0), Rational(1, 2)});
  }
  SubfieldEmbedding k = SubfieldEmbedding::make(f, tau);
  CoefficientRing ring = CoefficientRing::make(k, {make_rational(f, Rational(1)), tau});
  FreeModule gamma = FreeModule::make(std::move(ring), basis);
  expect(gamma.zrank() == 6, "icosahedral module has Z-rank 6");
  expect(is_K_module(gamma), "icosahedral module is a K-module");
  return gamma;
}

namespace {

struct CycloDesc {
  FieldPtr field;
  FieldElement c, s;  // cos(2pi/m), sin(2pi/m)
};

CycloDesc cyclo_desc(int m) {
  switch (m) {
    case 3: {
      FieldPtr f = sqrt3_field();
      return {f, make_rational(f, Rational(-1, 2)), fe(f, {Rational(0), Rational(1, 2)})};
    }
    case 4: {
      FieldPtr f = AlgebraicField::rationals();
      return {f, make_rational(f, Rational(0)), make_rational(f, Rational(1))};
    }
    case 5: {
      FieldPtr f = sin72_field();
      return {f, fe(f, {Rational(-3, 2), Rational(0), Rational(1, 2), Rational(0)}),
              fe(f, {Rational(0), Rational(1, 2), Rational(0), Rational(0)})};
    }
    case 6: {
      FieldPtr f = sqrt3_field();
      return {f, make_rational(f, Rational(1, 2)), fe(f, {Rational(0), Rational(1, 2)})};
    }
    case 8: {
      FieldPtr f = sqrt2_field();
      return {f, fe(f, {Rational(0), Rational(1, 2)}), fe(f, {Rational(0), Rational(1, 2)})};
    }
    case 10: {
      // cos 36 = tau/2 with tau = 3 - theta^2, sin 36 = theta/2.
      FieldPtr f = sin36_field();
      return {f, fe(f, {Rational(3, 2), Rational(0), Rational(-1, 2), Rational(0)}),
              fe(f, {Rational(0), Rational(1, 2), Rational(0), Rational(0)})};
    }
    case 12: {
      FieldPtr f = sqrt3_field();
      return {f, fe(f, {Rational(0), Rational(1, 2)}), make_rational(f, Rational(1, 2))};
    }
    default:
      throw Error(Err::UnsupportedM, "no precomputed ambient field for this m");
  }
}

}  // namespace

FreeModule cyclotomic_module(int m) {
  if (m < 3) throw Error(Err::UnsupportedM, "cyclotomic modules need m >= 3");
  const CycloDesc d = cyclo_desc(m);
  const FieldPtr& f = d.field;

  // S = Z[2 cos(2pi/m)], with Z-basis the powers of 2 cos(2pi/m).
  FieldElement twoc = FieldElement(d.c + d.c);
  SubfieldEmbedding k = SubfieldEmbedding::make(f, twoc);
  std::vector<FieldElement> zbasis;
  FieldElement p = make_rational(f, Rational(1));
  for (int i = 0; i < k.k_degree; ++i) {
    zbasis.push_back(p);
    p = FieldElement(p * twoc);
  }
  CoefficientRing ring = CoefficientRing::make(std::move(k), std::move(zbasis));

  ExactMat basis(2, 2);
  basis(0, 0) = make_rational(f, Rational(1));
  basis(1, 0) = make_rational(f, Rational(0));
  basis(0, 1) = d.c;
  basis(1, 1) = d.s;
  FreeModule gamma = FreeModule::make(std::move(ring), basis);
  expect(is_K_module(gamma), "cyclotomic module is a K-module");
  return gamma;
}

PlanarOrder quadratic_order(long squarefree_d, long conductor) {
  if (squarefree_d >= 0) {
    throw Error(Err::InvalidDiscriminant, "the discriminant part must be negative");
  }
  if (conductor < 1) {
    throw Error(Err::InvalidDiscriminant, "the conductor must be at least 1");
  }
  const long a = -squarefree_d;  // |D|
  if (!is_squarefree(a)) {
    throw Error(Err::InvalidDiscriminant, "the discriminant part must be squarefree");
  }
  const Rational f(conductor);

  FieldPtr ambient = a == 1 ? sqrt2_field() : real_quadratic_field(a);
  const bool one_mod_four = ((squarefree_d % 4) + 4) % 4 == 1;

  RatPoly minpoly;
  Rational re_lo, re_hi, im_lo, im_hi;
  FieldElement im_theta(0L);
  if (one_mod_four) {
    // theta = f(1 + sqrt(D))/2: x^2 - f x + f^2 (1 - D)/4.
    const Rational c0 = f * f * Rational(1 - squarefree_d) / 4;
    minpoly = RatPoly({c0, -f, Rational(1)});
    re_lo = f / 2 - Rational(1, 4);
    re_hi = f / 2 + Rational(1, 4);
    const Integer root = sqrt(Integer(conductor * conductor * a));  // irrational: |D| >= 3
    im_lo = Rational(root) / 2;
    im_hi = Rational(Integer(root + 1)) / 2;
    im_theta = fe(ambient, {Rational(0), f / 2});
  } else {
    // theta = f sqrt(D): x^2 + f^2 |D|.
    minpoly = RatPoly({f * f * Rational(a), Rational(0), Rational(1)});
    re_lo = Rational(-1, 4);
    re_hi = Rational(1, 4);
    if (a == 1) {
      im_lo = f - Rational(1, 2);
      im_hi = f + Rational(1, 2);
      im_theta = make_rational(ambient, f);
    } else {
      const Integer root = sqrt(Integer(conductor * conductor * a));
      im_lo = Rational(root);
      im_hi = Rational(Integer(root + 1));
      im_theta = fe(ambient, {Rational(0), f});
    }
  }
  FieldPtr field = AlgebraicField::make_imaginary(std::move(minpoly),
                                                  QBox{{re_lo, re_hi}, {im_lo, im_hi}});
  return PlanarOrder::make(std::move(field), std::move(ambient), std::move(im_theta));
}

// ---------------------------------------------------------------------------
// Samplers.

namespace {

using Engine = std::mt19937_64;

long pick(Engine& eng, long lo, long hi) {
  return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Does the module look like Z^d (identity basis, S = Z, K = Q)?
bool is_integer_lattice_shape(const FreeModule& g) {
  if (g.ring.rank() != 1 || g.ring.field.k_degree != 1) return false;
  if (g.ring.zbasis[0] != FieldElement(1L)) return false;
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      if (g.basis(i, j) != FieldElement(i == j ? 1L : 0L)) return false;
  return true;
}

// Does it look like the root-scaling lattice diag(xi, xi^2, ..., xi^d)?
bool is_root_scaling_shape(const FreeModule& g) {
  if (g.ring.rank() != 1 || g.ring.field.k_degree != 1) return false;
  if (g.ring.zbasis[0] != FieldElement(1L)) return false;
  const FieldElement xi = g.basis(0, 0);
  if (xi.as_rational().has_value()) return false;
  FieldElement power = make_rational(g.ambient(), Rational(1));
  for (int i = 0; i < g.dim; ++i) {
    power = FieldElement(power * xi);
    for (int j = 0; j < g.dim; ++j) {
      const FieldElement expected = i == j ? power : make_rational(g.ambient(), Rational(0));
      if (g.basis(i, j) != expected) return false;
    }
  }
  return true;
}

bool modules_identical(const FreeModule& a, const FreeModule& b) {
  if (a.dim != b.dim) return false;
  if (!a.ring.ambient()->same_presentation(*b.ring.ambient())) return false;
  if (!same_ring(a.ring, b.ring)) return false;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (a.basis(i, j) != b.basis(i, j)) return false;
  return true;
}

Isometry signed_permutation(const FieldPtr& f, Engine& eng, int d) {
  std::vector<int> perm(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) perm[static_cast<size_t>(i)] = i;
  for (int i = d - 1; i > 0; --i) {
    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(pick(eng, 0, i))]);
  }
  ExactMat m = zero_mat(f, d, d);
  for (int i = 0; i < d; ++i) {
    m(perm[static_cast<size_t>(i)], i) = make_rational(f, Rational(pick(eng, 0, 1) ? 1 : -1));
  }
  return Isometry::make(std::move(m));
}

constexpr long kTriples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {20, 21, 29}, {7, 24, 25}};

Isometry plane_rotation(const FieldPtr& f, int d, int i, int j, const FieldElement& c,
                        const FieldElement& s) {
  ExactMat m = zero_mat(f, d, d);
  for (int t = 0; t < d; ++t) m(t, t) = make_rational(f, Rational(1));
  m(i, i) = c;
  m(j, j) = c;
  m(i, j) = -s;
  m(j, i) = s;
  return Isometry::make(std::move(m));
}

// Signed permutations, Pythagorean plane rotations, and (for even d over a
// field containing sqrt2) the uniform 45-degree rotation of every plane.
std::vector<Isometry> sample_integer_lattice(const FreeModule& g, int count, Engine& eng) {
  const FieldPtr& f = g.ambient();
  const int d = g.dim;
  const bool has_sqrt2 = sqrt_rational_in(f, Rational(2)).has_value();
  std::vector<Isometry> out;
  while (static_cast<int>(out.size()) < count) {
    Isometry r = signed_permutation(f, eng, d);
    const long moves = pick(eng, 0, 2);
    for (long t = 0; t < moves && d >= 2; ++t) {
      const long* tri = kTriples[pick(eng, 0, 4)];
      int i = static_cast<int>(pick(eng, 0, d - 1));
      int j = static_cast<int>(pick(eng, 0, d - 1));
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      Rational c(tri[0], tri[2]);
      Rational s(tri[1], tri[2]);
      c.canonicalize();
      s.canonicalize();
      r = plane_rotation(f, d, i, j, make_rational(f, c), make_rational(f, s)) * r;
    }
    if (has_sqrt2 && d % 2 == 0 && pick(eng, 0, 1)) {
      // rot45 on every plane at once: the whole lattice scales by sqrt2.
      const FieldElement h = fe(f, {Rational(0), Rational(1, 2)});
      Isometry all = plane_rotation(f, d, 0, 1, h, h);
      for (int p = 1; 2 * p < d; ++p) {
        all = plane_rotation(f, d, 2 * p, 2 * p + 1, h, h) * all;
      }
      r = all * r;
    }
    if (classify(g, r).verdict == Verdict::NotSimilarity) {
      throw Error(Err::InternalMismatch, "integer-lattice sampler produced a non-similarity");
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Powers of the cyclic shift composed with coordinate sign flips.
std::vector<Isometry> sample_root_scaling(const FreeModule& g, int count, Engine& eng) {
  const FieldPtr& f = g.ambient();
  const int d = g.dim;
  ExactMat shift = zero_mat(f, d, d);
  for (int i = 0; i < d; ++i) shift((i + 1) % d, i) = make_rational(f, Rational(1));
  const Isometry base = Isometry::make(std::move(shift));
  std::vector<Isometry> out;
  while (static_cast<int>(out.size()) < count) {
    ExactMat m = zero_mat(f, d, d);
    for (int i = 0; i < d; ++i) m(i, i) = make_rational(f, Rational(pick(eng, 0, 1) ? 1 : -1));
    Isometry r = Isometry::make(std::move(m));
    const long k = pick(eng, 0, d - 1);
    for (long t = 0; t < k; ++t) r = base * r;
    if (classify(g, r).verdict == Verdict::NotSimilarity) {
      throw Error(Err::InternalMismatch, "root-scaling sampler produced a non-similarity");
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Left multiplications x -> (q/|q|) x by products from a pool of unit and
// rational-norm quaternions whose lengths lie in the coefficient field.
std::vector<Isometry> sample_left_multiplications(const FreeModule& g, const std::vector<Quat>& pool,
                                                  int count, Engine& eng) {
  const FieldPtr& f = g.ambient();
  std::vector<Isometry> out;
  while (static_cast<int>(out.size()) < count) {
    Quat q = pool[static_cast<size_t>(pick(eng, 0, static_cast<long>(pool.size()) - 1))];
    const long extra = pick(eng, 0, 2);
    for (long t = 0; t < extra; ++t) {
      q = qmul(q, pool[static_cast<size_t>(pick(eng, 0, static_cast<long>(pool.size()) - 1))]);
    }
    const FieldElement n = qnorm(q);
    const std::optional<Rational> nrat = n.as_rational();
    if (!nrat) throw Error(Err::InternalMismatch, "quaternion pool norm left the rationals");
    const std::optional<FieldElement> mag = sqrt_rational_in(f, *nrat);
    if (!mag) throw Error(Err::InternalMismatch, "quaternion pool norm has no length in the field");
    ExactMat m = left_mult_matrix(q);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = FieldElement(m(i, j) / *mag);
    Isometry r = Isometry::make(std::move(m));
    if (classify(g, r).verdict == Verdict::NotSimilarity) {
      throw Error(Err::InternalMismatch, "left-multiplication sampler produced a non-similarity");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Quat> icosian_pool() {
  std::vector<Quat> pool = icosian_generators();  // all unit except 1 itself
  FieldPtr f = tau_field();
  // (2, 1, 0, 0): norm 5, length sqrt5 = 2 tau - 1.
  pool.push_back({make_rational(f, Rational(2)), make_rational(f, Rational(1)),
                  make_rational(f, Rational(0)), make_rational(f, Rational(0))});
  return pool;
}

std::vector<Quat> cubian_pool() {
  FieldPtr f = sqrt2_field();
  const FieldElement s = fe(f, {Rational(0), Rational(1, 2)});
  const FieldElement zero = make_rational(f, Rational(0));
  const FieldElement one = make_rational(f, Rational(1));
  const FieldElement half = make_rational(f, Rational(1, 2));
  std::vector<Quat> pool;
  pool.push_back({one, zero, zero, zero});
  pool.push_back({zero, one, zero, zero});
  pool.push_back({s, s, zero, zero});
  pool.push_back({s, zero, s, zero});
  pool.push_back({half, half, half, half});
  // (1, 1, 0, 0): norm 2, length sqrt2.
  pool.push_back({one, one, zero, zero});
  return pool;
}

// Rotations v -> q v conj(q) / N(q) for pseudo-random nonzero icosians q.
std::vector<Isometry> sample_icosahedral(const FreeModule& g, int count, Engine& eng) {
  const std::vector<Quat> gens = icosian_generators();
  FieldPtr f = tau_field();
  std::vector<Isometry> out;
  while (static_cast<int>(out.size()) < count) {
    Quat q{make_rational(f, Rational(0)), make_rational(f, Rational(0)),
           make_rational(f, Rational(0)), make_rational(f, Rational(0))};
    for (const Quat& gen : gens) {
      const FieldElement coeff = fe(f, {Rational(pick(eng, -2, 2)), Rational(pick(eng, -2, 2))});
      q.w = FieldElement(q.w + coeff * gen.w);
      q.x = FieldElement(q.x + coeff * gen.x);
      q.y = FieldElement(q.y + coeff * gen.y);
      q.z = FieldElement(q.z + coeff * gen.z);
    }
    if (qnorm(q).is_zero()) continue;
    Isometry r = Isometry::make(conjugation_rotation(q));
    if (classify(g, r).verdict == Verdict::NotSimilarity) {
      throw Error(Err::InternalMismatch, "icosahedral sampler produced a non-similarity");
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Planar rotations from complex numbers with representable modulus: powers
// of zeta, conjugate quotients a / conj(a), and zeta - conj(zeta) (modulus
// 2 sin(2pi/m)), composed by complex multiplication.
std::vector<Isometry> sample_cyclotomic(const FreeModule& g, const CycloDesc& desc, int count,
                                        Engine& eng) {
  const FieldPtr& f = desc.field;
  struct Dir {
    FieldElement re, im, mod;
  };
  const FieldElement one = make_rational(f, Rational(1));
  std::vector<Dir> pool;
  pool.push_back({desc.c, desc.s, one});
  pool.push_back({make_rational(f, Rational(0)), FieldElement(desc.s + desc.s),
                  FieldElement(desc.s + desc.s)});
  const long grid[][2] = {{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, -1}};
  for (const long* uv : grid) {
    const FieldElement ra =
        FieldElement(make_rational(f, Rational(uv[0])) + make_rational(f, Rational(uv[1])) * desc.c);
    const FieldElement ia = FieldElement(make_rational(f, Rational(uv[1])) * desc.s);
    const FieldElement n = FieldElement(ra * ra + ia * ia);
    pool.push_back({FieldElement((ra * ra - ia * ia) / n), FieldElement((ra + ra) * ia / n), one});
  }
  std::vector<Isometry> out;
  while (static_cast<int>(out.size()) < count) {
    Dir z{one, make_rational(f, Rational(0)), one};
    const long picks = pick(eng, 1, 4);
    for (long t = 0; t < picks; ++t) {
      const Dir& w = pool[static_cast<size_t>(pick(eng, 0, static_cast<long>(pool.size()) - 1))];
      FieldElement re = FieldElement(z.re * w.re - z.im * w.im);
      FieldElement im = FieldElement(z.re * w.im + z.im * w.re);
      z = {std::move(re), std::move(im), FieldElement(z.mod * w.mod)};
    }
    if (pick(eng, 0, 1)) z.im = -z.im;  // conjugate direction
    ExactMat m(2, 2);
    m(0, 0) = FieldElement(z.re / z.mod);
    m(0, 1) = FieldElement(-z.im / z.mod);
    m(1, 0) = FieldElement(z.im / z.mod);
    m(1, 1) = FieldElement(z.re / z.mod);
    Isometry r = Isometry::make(std::move(m));
    if (classify(g, r).verdict == Verdict::NotSimilarity) {
      throw Error(Err::InternalMismatch, "cyclotomic sampler produced a non-similarity");
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<Isometry> sample_similarity_isometries(const FreeModule& gamma, int count,
                                                   std::uint64_t seed) {
  if (count < 0) count = 0;
  Engine eng(seed);
  if (is_integer_lattice_shape(gamma)) return sample_integer_lattice(gamma, count, eng);
  if (is_root_scaling_shape(gamma)) return sample_root_scaling(gamma, count, eng);
  if (modules_identical(gamma, icosian_ring())) {
    return sample_left_multiplications(gamma, icosian_pool(), count, eng);
  }
  if (modules_identical(gamma, cubian_ring())) {
    return sample_left_multiplications(gamma, cubian_pool(), count, eng);
  }
  if (modules_identical(gamma, icosahedral_module(IcosahedralVariant::BodyCentred)) ||
      modules_identical(gamma, icosahedral_module(IcosahedralVariant::FaceCentred))) {
    return sample_icosahedral(gamma, count, eng);
  }
  for (int m : {3, 4, 5, 6, 8, 10, 12}) {
    if (modules_identical(gamma, cyclotomic_module(m))) {
      return sample_cyclotomic(gamma, cyclo_desc(m), count, eng);
    }
  }
  throw Error(Err::UnsupportedModule, "no sampler recognizes this module");
}

std::vector<Isometry> sample_similarity_isometries(const PlanarOrder& o, int count,
                                                   std::uint64_t seed) {
  if (count < 0) count = 0;
  Engine eng(seed);
  FreeModule mod = o.as_module();
  std::vector<Isometry> out;
  while (static_cast<int>(out.size()) < count) {
    std::optional<Isometry> r;
    for (int attempt = 0; attempt < 40 && !r; ++attempt) {
      const Rational u(pick(eng, -4, 4));
      const Rational v(pick(eng, -4, 4));
      if (u == 0 && v == 0) continue;
      const FieldElement a = o.element(u, v);
      if (!sqrt_rational_in(o.real_ambient, o.norm(a))) continue;
      r = sos_direction(o, a);
    }
    if (!r) {
      // Guaranteed fallback: rational scalars rotate by the identity.
      r = sos_direction(o, o.element(Rational(1 + pick(eng, 0, 3)), Rational(0)));
    }
    if (classify(mod, *r).verdict == Verdict::NotSimilarity) {
      throw Error(Err::InternalMismatch, "planar order sampler produced a non-similarity");
    }
    out.push_back(std::move(*r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// CLI name resolution.

namespace {

std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::optional<long> parse_long(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') return std::nullopt;
  }
  try {
    return std::stol(s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<CatalogLookup> catalog_lookup(const std::string& name) {
  const std::vector<std::string> parts = split_colon(name);
  CatalogLookup out;
  out.name = name;
  if (parts[0] == "hypercubic" && parts.size() == 2) {
    const std::optional<long> d = parse_long(parts[1]);
    if (!d) return std::nullopt;
    out.module = hypercubic(static_cast<int>(*d));
    return out;
  }
  if (parts[0] == "example315" && parts.size() == 3) {
    const std::optional<long> d = parse_long(parts[1]);
    const std::optional<long> n = parse_long(parts[2]);
    if (!d || !n) return std::nullopt;
    Example315 ex = example_315(static_cast<int>(*d), *n);
    out.module = ex.module;
    out.example = std::move(ex);
    return out;
  }
  if (parts[0] == "icosian" && parts.size() == 1) {
    out.module = icosian_ring();
    return out;
  }
  if (parts[0] == "cubian" && parts.size() == 1) {
    out.module = cubian_ring();
    return out;
  }
  if (parts[0] == "icosahedral" && parts.size() == 2) {
    if (parts[1] == "B") {
      out.module = icosahedral_module(IcosahedralVariant::BodyCentred);
    } else if (parts[1] == "F") {
      out.module = icosahedral_module(IcosahedralVariant::FaceCentred);
    } else {
      return std::nullopt;
    }
    return out;
  }
  if (parts[0] == "cyclotomic" && parts.size() == 2) {
    const std::optional<long> m = parse_long(parts[1]);
    if (!m) return std::nullopt;
    out.module = cyclotomic_module(static_cast<int>(*m));
    return out;
  }
  if (parts[0] == "order" && parts.size() == 3) {
    const std::optional<long> d = parse_long(parts[1]);
    const std::optional<long> f = parse_long(parts[2]);
    if (!d || !f) return std::nullopt;
    PlanarOrder o = quadratic_order(*d, *f);
    out.module = o.as_module();
    out.order = std::move(o);
    return out;
  }
  return std::nullopt;
}

}  // namespace cokit
