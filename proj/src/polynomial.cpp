#include "chessboard/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace chessboard {

Poly Poly::constant(const Rat& a) {
  Poly p;
  if (a != 0) p.c = {a};
  return p;
}

Poly Poly::linear(const Rat& a0, const Rat& a1) {
  Poly p;
  p.c = {a0, a1};
  p.normalize();
  return p;
}

void Poly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat Poly::eval(const Rat& t) const {
  Rat v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

Poly Poly::derivative() const {
  Poly p;
  for (size_t i = 1; i < c.size(); ++i) p.c.push_back(Rat(static_cast<long>(i)) * c[i]);
  p.normalize();
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.normalize();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.normalize();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.normalize();
  return r;
}

Poly operator*(const Rat& s, const Poly& a) {
  if (s == 0) return Poly::zero();
  Poly r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

Poly poly_rem(const Poly& a, const Poly& b) {
  assert(!b.is_zero());
  Poly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rat f = r.c.back() / b.c.back();
    int shift = r.degree() - b.degree();
    for (size_t i = 0; i < b.c.size(); ++i)
      r.c[i + shift] -= f * b.c[i];
    r.normalize();
  }
  return r;
}

Poly deflate(const Poly& a, const Rat& r) {
  assert(a.eval(r) == 0);
  std::vector<Rat> out(a.c.size() - 1, Rat(0));
  Rat carry = 0;
  for (int i = a.degree(); i >= 1; --i) {
    carry = a.c[i] + carry * r;
    out[i - 1] = carry;
  }
  Poly p;
  p.c = std::move(out);
  p.normalize();
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rat lead = a.c.back();
    for (auto& x : a.c) x /= lead;
  }
  return a;
}

Poly squarefree_part(const Poly& a) {
  if (a.degree() <= 1) return a;
  Poly g = poly_gcd(a, a.derivative());
  if (g.degree() == 0) return a;
  // exact division a / g
  Poly q;
  Poly r = a;
  q.c.assign(a.c.size() - g.c.size() + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= g.degree()) {
    Rat f = r.c.back() / g.c.back();
    int shift = r.degree() - g.degree();
    q.c[shift] = f;
    for (size_t i = 0; i < g.c.size(); ++i) r.c[i + shift] -= f * g.c[i];
    r.normalize();
  }
  assert(r.is_zero());
  q.normalize();
  return q;
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() >= 1) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(Rat(-1) * r);
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  int vars = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sgn(p.eval(x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++vars;
      prev = s;
    }
  }
  return vars;
}

}  // namespace

int sturm_count(const Poly& p, const Rat& a, const Rat& b) {
  assert(a < b);
  auto chain = sturm_chain(p);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Poly dot(const PolyVec& a, const Vec& b) {
  assert(a.size() == b.size());
  Poly s;
  for (size_t i = 0; i < a.size(); ++i) s = s + b[i] * a[i];
  return s;
}

Poly dot(const PolyVec& a, const PolyVec& b) {
  assert(a.size() == b.size());
  Poly s;
  for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

PolyVec to_polyvec(const Vec& v) {
  PolyVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Poly::constant(x));
  return out;
}

PolyVec moving_point(const Vec& from, const Vec& to) {
  PolyVec out;
  out.reserve(from.size());
  for (size_t i = 0; i < from.size(); ++i)
    out.push_back(Poly::linear(from[i], to[i] - from[i]));
  return out;
}

Vec eval(const PolyVec& v, const Rat& t) {
  Vec out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.eval(t));
  return out;
}

namespace {

Poly poly_det(std::vector<std::vector<Poly>>& m, int n) {
  if (n == 1) return m[0][0];
  Poly out;
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (!m[i][0].is_zero()) {
      std::vector<std::vector<Poly>> minor_m;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        minor_m.push_back(std::vector<Poly>(m[r].begin() + 1, m[r].end()));
      }
      Poly sub = poly_det(minor_m, n - 1);
      out = sign > 0 ? out + m[i][0] * sub : out - m[i][0] * sub;
    }
    sign = -sign;
  }
  return out;
}

}  // namespace

PolyVec cross_nullvector(const std::vector<PolyVec>& rows, int d) {
  assert(static_cast<int>(rows.size()) == d - 1);
  if (d == 1) return {Poly::constant(Rat(1))};
  PolyVec v(d);
  for (int skip = 0; skip < d; ++skip) {
    std::vector<std::vector<Poly>> sub;
    for (const auto& row : rows) {
      std::vector<Poly> r;
      for (int j = 0; j < d; ++j)
        if (j != skip) r.push_back(row[j]);
      sub.push_back(std::move(r));
    }
    Poly det = poly_det(sub, d - 1);
    v[skip] = skip % 2 == 0 ? det : Rat(-1) * det;
  }
  return v;
}

AlgebraicNumber AlgebraicNumber::rational(const Rat& r) {
  AlgebraicNumber a;
  a.rational_ = true;
  a.value_ = r;
  a.lo_ = r - 1;
  a.hi_ = r + 1;
  return a;
}

AlgebraicNumber AlgebraicNumber::isolated(Poly squarefree, const Rat& lo,
                                          const Rat& hi) {
  AlgebraicNumber a;
  a.rational_ = false;
  a.p_ = std::move(squarefree);
  a.lo_ = lo;
  a.hi_ = hi;
  assert(a.p_.eval(lo) != 0 && a.p_.eval(hi) != 0);
  assert(sturm_count(a.p_, lo, hi) == 1);
  return a;
}

void AlgebraicNumber::refine() {
  if (rational_) {
    lo_ = (lo_ + value_) / 2;
    hi_ = (value_ + hi_) / 2;
    return;
  }
  Rat mid = (lo_ + hi_) / 2;
  Rat v = p_.eval(mid);
  if (v == 0) {
    rational_ = true;
    value_ = mid;
    lo_ = (lo_ + mid) / 2;
    hi_ = (mid + hi_) / 2;
    return;
  }
  if (sgn(v) == sgn(p_.eval(lo_)))
    lo_ = mid;
  else
    hi_ = mid;
}

int AlgebraicNumber::sign_of(const Poly& q) {
  if (q.is_zero()) return 0;
  if (rational_) return sgn(q.eval(value_));
  Poly g = poly_gcd(p_, q);
  if (g.degree() >= 1 && g.eval(lo_) != 0 && g.eval(hi_) != 0 &&
      sturm_count(g, lo_, hi_) > 0)
    return 0;  // q shares this root
  Poly qs = squarefree_part(q);
  while (true) {
    bool lo_root = qs.eval(lo_) == 0, hi_root = qs.eval(hi_) == 0;
    if (!lo_root && !hi_root && sturm_count(qs, lo_, hi_) == 0)
      return sgn(q.eval((lo_ + hi_) / 2));
    refine();
    if (rational_) return sgn(q.eval(value_));
  }
}

int AlgebraicNumber::compare(AlgebraicNumber& other) {
  if (rational_ && other.rational_)
    return value_ < other.value_ ? -1 : (value_ == other.value_ ? 0 : 1);
  if (rational_) return -other.compare(*this);
  if (other.rational_) {
    // sign of (root - r)
    Poly shift = Poly::linear(-other.value_, Rat(1));
    return sign_of(shift);
  }
  while (true) {
    if (hi_ <= other.lo_) return -1;
    if (other.hi_ <= lo_) return 1;
    Rat olo = std::max(lo_, other.lo_), ohi = std::min(hi_, other.hi_);
    Poly g = poly_gcd(p_, other.p_);
    if (g.degree() >= 1 && olo < ohi && g.eval(olo) != 0 && g.eval(ohi) != 0 &&
        sturm_count(g, olo, ohi) > 0)
      return 0;
    refine();
    other.refine();
    if (rational_ && other.rational_) return compare(other);
  }
}

bool AlgebraicNumber::exclude(const Poly& q) {
  if (q.is_zero()) return false;
  if (sign_of(q) == 0) return false;
  Poly qs = squarefree_part(q);
  while (qs.eval(lo_) == 0 || qs.eval(hi_) == 0 ||
         sturm_count(qs, lo_, hi_) > 0)
    refine();
  return true;
}

Rat AlgebraicNumber::probe_below() {
  return rational_ ? Rat((lo_ + value_) / 2) : lo_;
}

Rat AlgebraicNumber::probe_above() {
  return rational_ ? Rat((value_ + hi_) / 2) : hi_;
}

double AlgebraicNumber::approx() const {
  if (rational_) return value_.get_d();
  return (lo_.get_d() + hi_.get_d()) / 2;
}

std::vector<AlgebraicNumber> isolate_roots(const Poly& p, const Rat& lo,
                                           const Rat& hi) {
  std::vector<AlgebraicNumber> roots;
  if (p.is_zero())
    throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  Poly q = squarefree_part(p);
  if (q.degree() < 1) return roots;
  // Strip roots at the interval boundary so Sturm endpoints are regular.
  while (q.degree() >= 1 && q.eval(lo) == 0) q = deflate(q, lo);
  while (q.degree() >= 1 && q.eval(hi) == 0) q = deflate(q, hi);
  if (q.degree() >= 1 && q.degree() <= 1) {
    Rat root = -q.c[0] / q.c[1];
    if (lo < root && root < hi) roots.push_back(AlgebraicNumber::rational(root));
    return roots;
  }
  if (q.degree() < 1) return roots;

  std::vector<std::pair<Rat, Rat>> work{{lo, hi}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int cnt = sturm_count(q, a, b);
    // count in (a, b]; b is never a root here by construction
    if (cnt == 0) continue;
    if (cnt == 1) {
      if (q.degree() == 2) {
        // exact extraction when the discriminant is a perfect square
        Rat A = q.c[2], B = q.c[1], C = q.c[0];
        Rat disc = B * B - 4 * A * C;
        BigInt num = disc.get_num(), den = disc.get_den();
        if (disc >= 0 && mpz_perfect_square_p(num.get_mpz_t()) &&
            mpz_perfect_square_p(den.get_mpz_t())) {
          BigInt sn, sd;
          mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
          mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
          Rat sq(sn, sd);
          sq.canonicalize();
          for (Rat root : {Rat((-B + sq) / (2 * A)), Rat((-B - sq) / (2 * A))})
            if (a < root && root < b)
              roots.push_back(AlgebraicNumber::rational(root));
          continue;
        }
      }
      roots.push_back(AlgebraicNumber::isolated(q, a, b));
      continue;
    }
    Rat mid = (a + b) / 2;
    if (q.eval(mid) == 0) {
      roots.push_back(AlgebraicNumber::rational(mid));
      Poly q2 = deflate(q, mid);
      // Re-isolate both halves against the deflated polynomial.
      std::vector<std::pair<Rat, Rat>> halves{{a, mid}, {mid, b}};
      for (auto [ha, hb] : halves) {
        Poly qq = q2;
        while (qq.degree() >= 1 && qq.eval(ha) == 0) qq = deflate(qq, ha);
        while (qq.degree() >= 1 && qq.eval(hb) == 0) qq = deflate(qq, hb);
        if (qq.degree() >= 1)
          for (auto& r : isolate_roots(qq, ha, hb)) roots.push_back(std::move(r));
      }
      continue;
    }
    work.push_back({a, mid});
    work.push_back({mid, b});
  }
  std::sort(roots.begin(), roots.end(),
            [](AlgebraicNumber& x, AlgebraicNumber& y) {
              return const_cast<AlgebraicNumber&>(x).compare(
                         const_cast<AlgebraicNumber&>(y)) < 0;
            });
  return roots;
}

}  // namespace chessboard
