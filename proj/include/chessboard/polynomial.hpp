#pragma once

#include <memory>
#include <vector>

#include "chessboard/linalg.hpp"

namespace chessboard {

// Univariate polynomial with rational coefficients, dense, trailing zeros
// stripped (empty = zero polynomial).
struct Poly {
  std::vector<Rat> c;

  static Poly zero() { return {}; }
  static Poly constant(const Rat& a);
  static Poly linear(const Rat& a0, const Rat& a1);  // a0 + a1 t

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void normalize();
  Rat eval(const Rat& t) const;
  Poly derivative() const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& a);
bool operator==(const Poly& a, const Poly& b);

// Remainder of a by b (b nonzero).
Poly poly_rem(const Poly& a, const Poly& b);
// Exact division by (t - r); r must be a root.
Poly deflate(const Poly& a, const Rat& r);
Poly poly_gcd(Poly a, Poly b);   // monic gcd
Poly squarefree_part(const Poly& a);

// Number of distinct roots in (a, b]; requires p squarefree-ish (counts
// distinct roots), p(a) != 0.
int sturm_count(const Poly& p, const Rat& a, const Rat& b);

// Vector of polynomials, used for directions of moving hyperplane families.
using PolyVec = std::vector<Poly>;

Poly dot(const PolyVec& a, const Vec& b);
Poly dot(const PolyVec& a, const PolyVec& b);
PolyVec to_polyvec(const Vec& v);
PolyVec moving_point(const Vec& from, const Vec& to);  // from + t(to-from)
Vec eval(const PolyVec& v, const Rat& t);

// Generalized cross product: for d-1 rows in R^d, the vector of signed
// maximal minors, orthogonal to every row. Rows may have polynomial entries.
PolyVec cross_nullvector(const std::vector<PolyVec>& rows, int d);

// A real root of a squarefree polynomial, either exactly rational or isolated
// in an open interval containing no other root of its polynomial. Supports
// exact sign queries of other polynomials at the root.
class AlgebraicNumber {
 public:
  static AlgebraicNumber rational(const Rat& r);
  static AlgebraicNumber isolated(Poly squarefree, const Rat& lo, const Rat& hi);

  bool is_rational() const { return rational_; }
  const Rat& value() const { return value_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  const Poly& poly() const { return p_; }

  void refine();
  // Sign of q at the root (exact).
  int sign_of(const Poly& q);
  // -1/0/+1 ordering; refines both operands as needed.
  int compare(AlgebraicNumber& other);
  // Shrinks this root's interval until q has no root in it; returns false if
  // q vanishes exactly at this root.
  bool exclude(const Poly& q);
  // Rational probes strictly adjacent to the root within the current
  // interval (call exclude() first to make them safe).
  Rat probe_below();
  Rat probe_above();

  double approx() const;

 private:
  bool rational_ = true;
  Rat value_;
  Poly p_;
  Rat lo_, hi_;
};

// All distinct real roots of p in the open interval (lo, hi), ascending.
std::vector<AlgebraicNumber> isolate_roots(const Poly& p, const Rat& lo,
                                           const Rat& hi);

}  // namespace chessboard
