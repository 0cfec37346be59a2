#include "cokit/numberfield.hpp"

#include <sstream>

#include "cokit/gauss.hpp"

namespace cokit {

namespace {

std::vector<Rational> zero_vec(int n) { return std::vector<Rational>(n, Rational(0)); }

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

RatPoly to_poly(const std::vector<Rational>& v) {
  return RatPoly(std::vector<Rational>(v.begin(), v.end()));
}

QBox eval_box(const RatPoly& p, const QBox& z) {
  QBox acc{QInterval::point(Rational(0)), QInterval::point(Rational(0))};
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + *it;
  }
  return acc;
}

QBox mirror_box(const QBox& b) {
  return {b.re, QInterval(-b.im.hi, -b.im.lo)};
}

bool box_subset(const QBox& inner, const QBox& outer) {
  return outer.re.lo <= inner.re.lo && inner.re.hi <= outer.re.hi && outer.im.lo <= inner.im.lo &&
         inner.im.hi <= outer.im.hi;
}

bool box_disjoint(const QBox& a, const QBox& b) {
  return a.re.hi < b.re.lo || b.re.hi < a.re.lo || a.im.hi < b.im.lo || b.im.hi < a.im.lo;
}

// One subdivision step of a box isolating exactly one root: returns the half
// that still has winding number 1.  Cuts through a root are dodged by moving
// the cut point.
QBox split_root_box(const RatPoly& f, const QBox& b) {
  bool split_re = b.re.width() >= b.im.width();
  for (const Rational frac : {Rational(1, 2), Rational(2, 5), Rational(3, 5)}) {
    QBox lohalf = b, hihalf = b;
    if (split_re) {
      Rational cut = b.re.lo + b.re.width() * frac;
      lohalf.re.hi = cut;
      hihalf.re.lo = cut;
    } else {
      Rational cut = b.im.lo + b.im.width() * frac;
      lohalf.im.hi = cut;
      hihalf.im.lo = cut;
    }
    try {
      if (winding_number(f, lohalf) == 1) return lohalf;
      if (winding_number(f, hihalf) == 1) return hihalf;
    } catch (const Error&) {
      continue;  // root on the cut line; try an off-center cut
    }
  }
  throw Error(Err::InternalMismatch, "root box refinement failed");
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraicField

AlgebraicField::AlgebraicField(RatPoly mp, std::variant<RealEmbedding, ComplexEmbedding> emb)
    : minpoly_(std::move(mp)), embedding_(std::move(emb)) {
  if (minpoly_.degree() < 1) throw Error(Err::InvalidField, "minpoly must be nonconstant");
  if (!minpoly_.is_monic()) throw Error(Err::InvalidField, "minpoly not monic");
  if (!is_squarefree(minpoly_)) throw Error(Err::InvalidField, "minpoly not squarefree");
  if (minpoly_.degree() > 1 && has_rational_root(minpoly_))
    throw Error(Err::InvalidField, "minpoly has a rational root, hence is not irreducible");
  build_reduction_table();
}

void AlgebraicField::build_reduction_table() {
  int n = degree();
  if (n < 2) return;
  std::vector<Rational> red0(n);
  for (int i = 0; i < n; ++i) red0[i] = -minpoly_.c[i];
  reduction_.push_back(red0);
  for (int k = 1; k <= n - 2; ++k) {
    const auto& prev = reduction_.back();
    std::vector<Rational> cur = zero_vec(n);
    Rational carry = prev[n - 1];
    for (int i = 1; i < n; ++i) cur[i] = prev[i - 1];
    for (int i = 0; i < n; ++i) cur[i] += carry * red0[i];
    reduction_.push_back(cur);
  }
}

const QInterval& AlgebraicField::real_interval() const {
  if (!is_real()) throw Error(Err::NotRealField, "field has a complex embedding");
  return std::get<RealEmbedding>(embedding_).interval;
}

const QBox& AlgebraicField::complex_box() const {
  if (!is_imaginary()) throw Error(Err::NotImaginaryField, "field has a real embedding");
  return std::get<ComplexEmbedding>(embedding_).box;
}

const std::vector<Rational>& AlgebraicField::conj_coeffs() const {
  if (!is_imaginary()) throw Error(Err::NotImaginaryField, "field has a real embedding");
  return std::get<ComplexEmbedding>(embedding_).conj_coeffs;
}

bool AlgebraicField::same_presentation(const AlgebraicField& o) const {
  if (this == &o) return true;
  if (minpoly_ != o.minpoly_) return false;
  if (is_real() != o.is_real()) return false;
  if (is_real()) {
    const QInterval& a = real_interval();
    const QInterval& b = o.real_interval();
    if (a.lo == b.lo && a.hi == b.hi) return true;
    if (degree() == 1) return true;  // unique root
    Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo >= hi) return false;
    return count_real_roots(minpoly_, lo, hi) == 1;
  }
  const QBox& a = complex_box();
  const QBox& b = o.complex_box();
  return a.re.lo == b.re.lo && a.re.hi == b.re.hi && a.im.lo == b.im.lo && a.im.hi == b.im.hi;
}

std::vector<Rational> AlgebraicField::mul_coeffs(const std::vector<Rational>& a,
                                                 const std::vector<Rational>& b) const {
  int n = degree();
  if (n == 1) return {a[0] * b[0]};
  std::vector<Rational> conv(2 * n - 1, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < n; ++j) conv[i + j] += a[i] * b[j];
  }
  for (int k = 2 * n - 2; k >= n; --k) {
    if (sgn(conv[k]) == 0) continue;
    const auto& red = reduction_[k - n];
    for (int i = 0; i < n; ++i) conv[i] += conv[k] * red[i];
    conv[k] = 0;
  }
  conv.resize(n);
  return conv;
}

std::vector<Rational> AlgebraicField::inv_coeffs(const std::vector<Rational>& a) const {
  if (all_zero(a)) throw Error(Err::DivisionByZero, "division by zero field element");
  int n = degree();
  if (n == 1) return {1 / a[0]};
  PolyXgcd x = poly_xgcd(to_poly(a), minpoly_);
  if (x.g.degree() != 0)
    throw Error(Err::DivisionByZero, "element not invertible; minpoly is not irreducible");
  std::vector<Rational> u = zero_vec(n);
  // deg u < deg minpoly, but reduce defensively via compose with θ.
  RatPoly ured = divmod(x.u, minpoly_).second;
  for (int i = 0; i <= ured.degree(); ++i) u[i] = ured.c[i];
  return u;
}

std::vector<Rational> AlgebraicField::compose_coeffs(const std::vector<Rational>& poly,
                                                     const std::vector<Rational>& at) const {
  int n = degree();
  std::vector<Rational> acc = zero_vec(n);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = mul_coeffs(acc, at);
    acc[0] += *it;
  }
  return acc;
}

FieldPtr AlgebraicField::rationals() {
  static FieldPtr q = make_real(RatPoly::x(), QInterval(Rational(0), Rational(0)));
  return q;
}

FieldPtr AlgebraicField::make_real(RatPoly minpoly, QInterval interval,
                                   std::vector<std::vector<Rational>> radical_coeffs) {
  auto f = std::shared_ptr<AlgebraicField>(
      new AlgebraicField(std::move(minpoly), RealEmbedding{interval}));
  const RatPoly& mp = f->minpoly();
  if (mp.degree() == 1) {
    Rational root = -mp.c[0];
    if (!interval.contains(root))
      throw Error(Err::InvalidField, "isolating interval does not contain the root");
  } else {
    if (!(interval.lo < interval.hi))
      throw Error(Err::InvalidField, "isolating interval is empty");
    if (count_real_roots(mp, interval.lo, interval.hi) != 1)
      throw Error(Err::InvalidField, "isolating interval does not contain exactly one real root");
  }
  FieldPtr fc = f;
  for (auto& w : radical_coeffs) {
    if (static_cast<int>(w.size()) > f->degree())
      throw Error(Err::InvalidField, "radical coefficient vector too long");
    w.resize(f->degree(), Rational(0));
    if (all_zero(w)) throw Error(Err::InvalidField, "zero radical");
    auto sq = f->mul_coeffs(w, w);
    for (std::size_t i = 1; i < sq.size(); ++i)
      if (sgn(sq[i]) != 0) throw Error(Err::InvalidField, "radical square is not rational");
    if (sgn(sq[0]) <= 0) throw Error(Err::InvalidField, "radical square must be positive");
    if (sign(make_element(fc, w)) < 0)
      for (auto& q : w) q = -q;
    f->radicals_.emplace_back(w, sq[0]);
  }
  return fc;
}

FieldPtr AlgebraicField::make_imaginary(RatPoly minpoly, QBox box,
                                        std::optional<std::vector<Rational>> conj_coeffs) {
  int deg = minpoly.degree();
  if (deg < 2) throw Error(Err::InvalidField, "imaginary field must have degree >= 2");
  std::vector<Rational> cc;
  if (conj_coeffs) {
    cc = *conj_coeffs;
    if (static_cast<int>(cc.size()) > deg)
      throw Error(Err::InvalidField, "conjugation coefficient vector too long");
    cc.resize(deg, Rational(0));
  } else if (deg == 2) {
    // x² + bx + c: the nontrivial automorphism sends θ to −b − θ.
    cc = {-minpoly.c[1], Rational(-1)};
  } else {
    throw Error(Err::InvalidField, "conjugation image required for degree > 2");
  }
  auto f = std::shared_ptr<AlgebraicField>(
      new AlgebraicField(std::move(minpoly), ComplexEmbedding{box, cc}));
  const RatPoly& mp = f->minpoly();
  if (!(box.re.lo < box.re.hi) || !(box.im.lo < box.im.hi))
    throw Error(Err::InvalidField, "isolating rectangle is empty");
  if (sgn(box.im.lo) < 0)
    throw Error(Err::InvalidField, "isolating rectangle must lie in the upper half-plane");
  if (winding_number(mp, box) != 1)
    throw Error(Err::InvalidField, "isolating rectangle does not contain exactly one root");
  // Conjugation must be a root-valued involution…
  std::vector<Rational> mp_at_conj = f->compose_coeffs(mp.c, cc);
  if (!all_zero(mp_at_conj))
    throw Error(Err::InvalidField, "conjugation image is not a root of minpoly");
  std::vector<Rational> twice = f->compose_coeffs(cc, cc);
  std::vector<Rational> ident = zero_vec(deg);
  ident[1] = 1;
  if (twice != ident) throw Error(Err::InvalidField, "conjugation is not an involution");
  if (cc == ident) throw Error(Err::InvalidField, "conjugation cannot be the identity");
  // …and must send the isolated root to its mirror image.  The mirror box
  // contains exactly the conjugate root (the root set is conjugation-stable),
  // so certify conj(θ) inside it by interval refinement.
  if (deg > 2) {
    QBox target = mirror_box(box);
    QBox enclosure = box;
    bool certified = false;
    for (int iter = 0; iter < 80; ++iter) {
      QBox val = eval_box(to_poly(cc), enclosure);
      if (box_subset(val, target)) {
        certified = true;
        break;
      }
      if (box_disjoint(val, target))
        throw Error(Err::InvalidField, "conjugation image is a different root, not the conjugate");
      enclosure = split_root_box(mp, enclosure);
    }
    if (!certified)
      throw Error(Err::InvalidField, "could not certify the conjugation against the embedding");
  }
  return f;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr f, std::vector<Rational> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  if (!field_) throw Error(Err::InvalidField, "element requires a field");
  if (static_cast<int>(coeffs_.size()) > field_->degree())
    throw Error(Err::InvalidField, "coefficient vector longer than field degree");
  coeffs_.resize(field_->degree(), Rational(0));
}

bool FieldElement::is_zero() const { return all_zero(coeffs_); }

bool FieldElement::is_rational_form() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

std::optional<Rational> FieldElement::as_rational() const {
  if (!is_rational_form()) return std::nullopt;
  return coeffs_[0];
}

FieldElement FieldElement::lifted_to(const FieldPtr& f) const {
  if (!f) throw Error(Err::InvalidField, "cannot lift to a null field");
  if (field_) {
    if (field_ == f || field_->same_presentation(*f)) {
      FieldElement r = *this;
      r.field_ = f;
      return r;
    }
    throw Error(Err::FieldMismatch, "elements belong to different fields");
  }
  return make_rational(f, coeffs_[0]);
}

namespace {

// Unifies owners: plain rationals adopt the attached operand's field.
void align(FieldElement& a, FieldElement& b) {
  if (a.field() && b.field()) {
    if (a.field() == b.field()) return;
    if (a.field()->same_presentation(*b.field())) {
      b = b.lifted_to(a.field());
      return;
    }
    throw Error(Err::FieldMismatch, "elements belong to different fields");
  }
  if (a.field() && !b.field())
    b = b.lifted_to(a.field());
  else if (!a.field() && b.field())
    a = a.lifted_to(b.field());
}

}  // namespace

FieldElement operator+(const FieldElement& a_in, const FieldElement& b_in) {
  FieldElement a = a_in, b = b_in;
  align(a, b);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

FieldElement operator-(const FieldElement& a_in, const FieldElement& b_in) {
  FieldElement a = a_in, b = b_in;
  align(a, b);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
  return a;
}

FieldElement operator*(const FieldElement& a_in, const FieldElement& b_in) {
  FieldElement a = a_in, b = b_in;
  align(a, b);
  if (!a.field_) {
    a.coeffs_[0] *= b.coeffs_[0];
    return a;
  }
  a.coeffs_ = a.field_->mul_coeffs(a.coeffs_, b.coeffs_);
  return a;
}

FieldElement operator/(const FieldElement& a_in, const FieldElement& b_in) {
  FieldElement a = a_in, b = b_in;
  align(a, b);
  if (!a.field_) {
    if (sgn(b.coeffs_[0]) == 0) throw Error(Err::DivisionByZero, "division by zero");
    a.coeffs_[0] /= b.coeffs_[0];
    return a;
  }
  a.coeffs_ = a.field_->mul_coeffs(a.coeffs_, b.field_->inv_coeffs(b.coeffs_));
  return a;
}

FieldElement operator-(const FieldElement& a) {
  FieldElement r = a;
  return FieldElement(0) - r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) { return *this = *this + o; }
FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this = *this - o; }
FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = *this * o; }
FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this = *this / o; }

bool operator==(const FieldElement& a_in, const FieldElement& b_in) {
  FieldElement a = a_in, b = b_in;
  try {
    align(a, b);
  } catch (const Error&) {
    return false;
  }
  return a.coeffs() == b.coeffs();
}

FieldElement make_element(const FieldPtr& f, std::vector<Rational> coeffs) {
  return FieldElement(f, std::move(coeffs));
}

FieldElement make_rational(const FieldPtr& f, const Rational& v) {
  std::vector<Rational> c(f->degree(), Rational(0));
  c[0] = v;
  return FieldElement(f, std::move(c));
}

FieldElement generator(const FieldPtr& f) {
  if (f->degree() == 1) return make_rational(f, -f->minpoly().c[0]);
  std::vector<Rational> c(f->degree(), Rational(0));
  c[1] = 1;
  return FieldElement(f, std::move(c));
}

int sign(const FieldElement& a) {
  if (!a.field()) return sgn(a.coeffs()[0]);
  const AlgebraicField& f = *a.field();
  if (!f.is_real()) throw Error(Err::NotRealField, "sign requires a real embedding");
  if (a.is_zero()) return 0;
  RatPoly val = to_poly(a.coeffs());
  if (f.degree() == 1) return sgn(eval(val, -f.minpoly().c[0]));
  QInterval iv = f.real_interval();
  int s_lo = sgn(eval(f.minpoly(), iv.lo));
  for (int iter = 0; iter < 20000; ++iter) {
    QInterval enc = eval_interval(val, iv);
    if (!enc.contains_zero()) return sgn(enc.lo) != 0 ? sgn(enc.lo) : sgn(enc.hi);
    Rational mid = iv.mid();
    int sm = sgn(eval(f.minpoly(), mid));
    if (sm == 0) throw Error(Err::InternalMismatch, "rational root inside isolating interval");
    if (sm == s_lo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  throw Error(Err::InternalMismatch, "sign refinement did not converge");
}

std::string to_string(const FieldElement& a) {
  if (a.is_rational_form()) return rational_str(a.coeffs()[0]);
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) os << ", ";
    os << rational_str(a.coeffs()[i]);
  }
  os << "]";
  return os.str();
}

Rational field_norm(const FieldElement& kappa) {
  if (!kappa.field()) return kappa.coeffs()[0];
  int n = kappa.field()->degree();
  MatQ m(n, n);
  std::vector<Rational> theta(n, Rational(0));
  if (n == 1)
    theta[0] = -kappa.field()->minpoly().c[0];
  else
    theta[1] = 1;
  std::vector<Rational> col = kappa.coeffs();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m(i, j) = col[i];
    if (j + 1 < n) col = kappa.field()->mul_coeffs(col, theta);
  }
  return detail::gauss_det(m);
}

FieldElement conj(const FieldElement& a) {
  if (!a.field()) return a;
  const AlgebraicField& f = *a.field();
  if (!f.is_imaginary()) throw Error(Err::NotImaginaryField, "conjugation requires a complex embedding");
  return make_element(a.field(), f.compose_coeffs(a.coeffs(), f.conj_coeffs()));
}

FieldElement complex_abs_square(const FieldElement& a) {
  if (!a.field()) return a * a;
  return a * conj(a);
}

std::optional<FieldElement> sqrt_rational_in(const FieldPtr& f, const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (auto r = rational_sqrt(q)) return make_rational(f, *r);
  for (const auto& [w, s] : f->radicals()) {
    if (auto r = rational_sqrt(q / s)) {
      FieldElement root = make_element(f, w) * make_rational(f, *r);
      return root;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// SubfieldEmbedding

SubfieldEmbedding SubfieldEmbedding::make(FieldPtr ambient, FieldElement gen) {
  if (!ambient) throw Error(Err::InvalidField, "subfield needs an ambient field");
  gen = gen.lifted_to(ambient);
  int n = ambient->degree();
  std::vector<std::vector<Rational>> cols;
  std::vector<Rational> cur(n, Rational(0));
  cur[0] = 1;
  for (int k = 0; k < n + 1; ++k) {
    cols.push_back(cur);
    MatQ m(n, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (int i = 0; i < n; ++i) m(i, static_cast<int>(j)) = cols[j][i];
    if (detail::gauss_rank(m) < static_cast<int>(cols.size())) {
      cols.pop_back();
      break;
    }
    cur = ambient->mul_coeffs(cur, gen.coeffs());
  }
  SubfieldEmbedding e;
  e.ambient = std::move(ambient);
  e.gen = std::move(gen);
  e.k_degree = static_cast<int>(cols.size());
  e.power_matrix = MatQ(n, e.k_degree);
  for (int j = 0; j < e.k_degree; ++j)
    for (int i = 0; i < n; ++i) e.power_matrix(i, j) = cols[j][i];
  return e;
}

std::optional<VecQ> in_subfield(const FieldElement& x_in, const SubfieldEmbedding& K) {
  FieldElement x = x_in.lifted_to(K.ambient);
  VecQ b(K.ambient->degree());
  for (int i = 0; i < K.ambient->degree(); ++i) b(i) = x.coeffs()[i];
  return detail::gauss_solve(K.power_matrix, b);
}

bool subfield_contains(const SubfieldEmbedding& K, const FieldElement& x) {
  return in_subfield(x, K).has_value();
}

FieldElement subfield_element(const SubfieldEmbedding& K, const VecQ& coords) {
  if (coords.size() != static_cast<Eigen::Index>(K.k_degree))
    throw Error(Err::DimensionMismatch, "subfield coordinate vector has wrong length");
  FieldElement acc = make_rational(K.ambient, Rational(0));
  FieldElement p = make_rational(K.ambient, Rational(1));
  for (int j = 0; j < K.k_degree; ++j) {
    acc += p * FieldElement(coords(j));
    if (j + 1 < K.k_degree) p *= K.gen;
  }
  return acc;
}

SubfieldEmbedding real_subfield(const FieldPtr& imaginary_field) {
  if (!imaginary_field->is_imaginary())
    throw Error(Err::NotImaginaryField, "real_subfield requires an imaginary field");
  FieldElement theta = generator(imaginary_field);
  return SubfieldEmbedding::make(imaginary_field, theta + conj(theta));
}

bool same_embedding(const SubfieldEmbedding& a, const SubfieldEmbedding& b) {
  if (!a.ambient->same_presentation(*b.ambient)) return false;
  return a.gen.coeffs() == b.gen.coeffs();
}

}  // namespace cokit
