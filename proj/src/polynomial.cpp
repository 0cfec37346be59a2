#include "cokit/polynomial.hpp"

#include <algorithm>
#include <map>

namespace cokit {

RatPoly RatPoly::constant(const Rational& v) {
  RatPoly p;
  if (sgn(v) != 0) p.c = {v};
  return p;
}

RatPoly RatPoly::x() {
  RatPoly p;
  p.c = {Rational(0), Rational(1)};
  return p;
}

void RatPoly::trim() {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

bool operator==(const RatPoly& a, const RatPoly& b) { return a.c == b.c; }

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

RatPoly operator-(const RatPoly& a) {
  RatPoly r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

RatPoly operator*(const RatPoly& a, const Rational& s) {
  if (sgn(s) == 0) return {};
  RatPoly r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(Err::DivisionByZero, "polynomial division by zero");
  RatPoly rem = a, quot;
  int db = b.degree();
  if (rem.degree() >= db) quot.c.assign(rem.degree() - db + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    Rational f = rem.leading() / b.leading();
    int shift = rem.degree() - db;
    quot.c[shift] = f;
    for (int i = 0; i <= db; ++i) rem.c[shift + i] -= f * b.c[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

RatPoly derivative(const RatPoly& a) {
  RatPoly r;
  for (int i = 1; i <= a.degree(); ++i) r.c.push_back(a.c[i] * Rational(i));
  r.trim();
  return r;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.leading() != 1) {
    Rational inv = 1 / a.leading();
    for (auto& v : a.c) v *= inv;
  }
  return a;
}

PolyXgcd poly_xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly u0 = RatPoly::constant(Rational(1)), u1;
  RatPoly v0, v1 = RatPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    RatPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!r0.is_zero() && r0.leading() != 1) {
    Rational inv = 1 / r0.leading();
    r0 = r0 * inv;
    u0 = u0 * inv;
    v0 = v0 * inv;
  }
  return {r0, u0, v0};
}

bool is_squarefree(const RatPoly& a) {
  if (a.degree() <= 1) return !a.is_zero();
  return poly_gcd(a, derivative(a)).degree() == 0;
}

Rational eval(const RatPoly& a, const Rational& x) {
  Rational acc(0);
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QInterval eval_interval(const RatPoly& a, const QInterval& iv) {
  QInterval acc = QInterval::point(Rational(0));
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * iv + *it;
  return acc;
}

namespace {

std::vector<Integer> divisors_of(const Integer& n_in) {
  Integer n = abs(n_in);
  std::map<Integer, int> fac;
  Integer d(2);
  while (d * d <= n) {
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      ++fac[d];
      n /= d;
    }
    ++d;
  }
  if (n > 1) ++fac[n];
  std::vector<Integer> divs{Integer(1)};
  for (auto& [p, e] : fac) {
    std::size_t base = divs.size();
    Integer pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// Sturm chain of the squarefree part; variations at a point ignore zeros.
struct SturmChain {
  std::vector<RatPoly> seq;
  explicit SturmChain(const RatPoly& f) {
    RatPoly g = poly_gcd(f, derivative(f));
    RatPoly sf = g.degree() >= 1 ? divmod(f, g).first : f;
    seq.push_back(sf);
    RatPoly d = derivative(sf);
    if (!d.is_zero()) seq.push_back(d);
    while (seq.size() >= 2 && !seq.back().is_zero()) {
      RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
      if (r.is_zero()) break;
      seq.push_back(-r);
    }
  }
  int variations(const Rational& x) const {
    int v = 0, prev = 0;
    for (const auto& p : seq) {
      int s = sgn(eval(p, x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }
};

}  // namespace

bool has_rational_root(const RatPoly& a) {
  if (a.degree() < 1) return false;
  Integer den(1);
  for (const auto& v : a.c) den = lcm(den, v.get_den());
  std::vector<Integer> ic;
  for (const auto& v : a.c) {
    Rational scaled = v * Rational(den);
    ic.push_back(scaled.get_num());
  }
  if (sgn(ic.front()) == 0) return true;
  auto nums = divisors_of(ic.front());
  auto dens = divisors_of(ic.back());
  for (const auto& p : nums)
    for (const auto& q : dens) {
      if (gcd(p, q) != 1) continue;
      for (int s : {1, -1}) {
        Rational cand(p * s, q);
        cand.canonicalize();
        if (sgn(eval(a, cand)) == 0) return true;
      }
    }
  return false;
}

int count_real_roots(const RatPoly& a, const Rational& lo, const Rational& hi) {
  if (a.degree() < 1) return 0;
  if (lo >= hi) return 0;
  SturmChain chain(a);
  return chain.variations(lo) - chain.variations(hi);
}

EdgeImage compose_linear(const RatPoly& a, const Rational& z0re, const Rational& z0im,
                         const Rational& dzre, const Rational& dzim) {
  RatPoly lin_re(std::vector<Rational>{z0re, dzre});
  RatPoly lin_im(std::vector<Rational>{z0im, dzim});
  RatPoly acc_re, acc_im;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) {
    RatPoly nre = acc_re * lin_re - acc_im * lin_im + RatPoly::constant(*it);
    RatPoly nim = acc_re * lin_im + acc_im * lin_re;
    acc_re = std::move(nre);
    acc_im = std::move(nim);
  }
  return {acc_re, acc_im};
}

namespace {

struct Corner {
  Rational re, im;
};

std::vector<Corner> box_corners(const QBox& b) {
  return {{b.re.lo, b.im.lo}, {b.re.hi, b.im.lo}, {b.re.hi, b.im.hi}, {b.re.lo, b.im.hi}};
}

}  // namespace

bool root_on_boundary(const RatPoly& a, const QBox& box) {
  auto cs = box_corners(box);
  for (int e = 0; e < 4; ++e) {
    const Corner& c0 = cs[e];
    const Corner& c1 = cs[(e + 1) % 4];
    EdgeImage img = compose_linear(a, c0.re, c0.im, c1.re - c0.re, c1.im - c0.im);
    RatPoly g;
    if (img.P.is_zero() && img.Q.is_zero()) return true;
    if (img.P.is_zero())
      g = img.Q;
    else if (img.Q.is_zero())
      g = img.P;
    else
      g = poly_gcd(img.P, img.Q);
    if (g.degree() < 1) continue;
    if (sgn(eval(g, Rational(0))) == 0) return true;
    if (count_real_roots(g, Rational(0), Rational(1)) > 0) return true;
  }
  return false;
}

int winding_number(const RatPoly& a, const QBox& box) {
  if (root_on_boundary(a, box))
    throw Error(Err::InvalidField, "root of the minimal polynomial on the region boundary");
  // Vertices of the boundary-image polyline, refined until every segment's
  // value box excludes the origin (so polyline and true image are homotopic
  // in the punctured plane).
  std::vector<std::pair<Rational, Rational>> verts;
  auto cs = box_corners(box);
  for (int e = 0; e < 4; ++e) {
    const Corner& c0 = cs[e];
    const Corner& c1 = cs[(e + 1) % 4];
    EdgeImage img = compose_linear(a, c0.re, c0.im, c1.re - c0.re, c1.im - c0.im);
    struct Seg {
      Rational t0, t1;
      int depth;
    };
    std::vector<Seg> stack{{Rational(0), Rational(1), 0}};
    std::vector<std::pair<Rational, Rational>> edge_pts;
    while (!stack.empty()) {
      Seg s = stack.back();
      stack.pop_back();
      QInterval ti{s.t0, s.t1};
      QBox val{eval_interval(img.P, ti), eval_interval(img.Q, ti)};
      if (val.contains_zero()) {
        if (s.depth > 64)
          throw Error(Err::InvalidField, "cannot certify root region boundary");
        Rational mid = (s.t0 + s.t1) / 2;
        // Depth-first, right segment pushed first so output stays ordered.
        stack.push_back({mid, s.t1, s.depth + 1});
        stack.push_back({s.t0, mid, s.depth + 1});
      } else {
        edge_pts.emplace_back(eval(img.P, s.t0), eval(img.Q, s.t0));
      }
    }
    verts.insert(verts.end(), edge_pts.begin(), edge_pts.end());
  }
  verts.push_back(verts.front());
  int wn = 0;
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    const auto& [x0, y0] = verts[i];
    const auto& [x1, y1] = verts[i + 1];
    Rational cross = x0 * y1 - y0 * x1;
    if (sgn(y0) <= 0) {
      if (sgn(y1) > 0 && sgn(cross) > 0) ++wn;
    } else {
      if (sgn(y1) <= 0 && sgn(cross) < 0) --wn;
    }
  }
  return wn;
}

}  // namespace cokit
