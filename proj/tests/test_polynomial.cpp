#include <doctest.h>

#include "chessboard/polynomial.hpp"

using namespace chessboard;

namespace {
Poly from_roots(const std::vector<Rat>& roots) {
  Poly p = Poly::constant(Rat(1));
  for (const auto& r : roots) p = p * Poly::linear(-r, Rat(1));
  return p;
}
}  // namespace

TEST_CASE("poly arithmetic") {
  Poly p = Poly::linear(Rat(1), Rat(2));   // 1 + 2t
  Poly q = Poly::linear(Rat(-3), Rat(1));  // -3 + t
  Poly pq = p * q;
  CHECK(pq.eval(Rat(2)) == p.eval(Rat(2)) * q.eval(Rat(2)));
  CHECK((p - p).is_zero());
  CHECK(pq.degree() == 2);
  CHECK(poly_rem(pq, p).is_zero());
  CHECK(pq.derivative().eval(Rat(0)) == Rat(2) * Rat(-3) + Rat(1));
}

TEST_CASE("gcd and squarefree part") {
  Poly a = from_roots({Rat(1), Rat(1), Rat(2)});
  Poly sq = squarefree_part(a);
  CHECK(sq.degree() == 2);
  CHECK(sq.eval(Rat(1)) == 0);
  CHECK(sq.eval(Rat(2)) == 0);
  Poly g = poly_gcd(from_roots({Rat(1), Rat(3)}), from_roots({Rat(3), Rat(5)}));
  CHECK(g.degree() == 1);
  CHECK(g.eval(Rat(3)) == 0);
}

TEST_CASE("root isolation finds exactly the roots in range") {
  Poly p = from_roots({Rat(-2), Rat(1, 3), Rat(5), Rat(9)});
  auto roots = isolate_roots(p, Rat(-10), Rat(7));
  REQUIRE(roots.size() == 3);
  std::vector<Rat> expect{Rat(-2), Rat(1, 3), Rat(5)};
  for (size_t i = 0; i < expect.size(); ++i) {
    auto r = AlgebraicNumber::rational(expect[i]);
    CHECK(roots[i].compare(r) == 0);
  }
  // quadratics with square discriminant come out exactly rational
  Poly q = from_roots({Rat(1, 2), Rat(3)});
  auto qr = isolate_roots(q, Rat(0), Rat(10));
  REQUIRE(qr.size() == 2);
  CHECK(qr[0].is_rational());
  CHECK(qr[0].value() == Rat(1, 2));
  CHECK(qr[1].value() == Rat(3));
}

TEST_CASE("irrational roots are isolated and comparable") {
  // t^2 - 2: roots ±sqrt(2)
  Poly p;
  p.c = {Rat(-2), Rat(0), Rat(1)};
  auto roots = isolate_roots(p, Rat(-10), Rat(10));
  REQUIRE(roots.size() == 2);
  CHECK(!roots[1].is_rational());
  // sqrt2 vs 1.5 and 1.4
  AlgebraicNumber sqrt2 = roots[1];
  AlgebraicNumber r15 = AlgebraicNumber::rational(Rat(3, 2));
  AlgebraicNumber r14 = AlgebraicNumber::rational(Rat(7, 5));
  CHECK(sqrt2.compare(r15) < 0);
  CHECK(sqrt2.compare(r14) > 0);
  // sign of t^2-3 at sqrt2 is negative, of t-1 positive
  Poly q;
  q.c = {Rat(-3), Rat(0), Rat(1)};
  CHECK(sqrt2.sign_of(q) == -1);
  CHECK(sqrt2.sign_of(Poly::linear(Rat(-1), Rat(1))) == 1);
  CHECK(sqrt2.sign_of(p) == 0);

  // equal roots from different polynomials compare equal
  Poly p2;
  p2.c = {Rat(-4), Rat(0), Rat(2)};  // 2t^2-4, same roots
  auto roots2 = isolate_roots(p2, Rat(0), Rat(10));
  REQUIRE(roots2.size() == 1);
  AlgebraicNumber other = roots2[0];
  CHECK(sqrt2.compare(other) == 0);
}

TEST_CASE("exclude shrinks probes past foreign roots") {
  Poly p;
  p.c = {Rat(-2), Rat(0), Rat(1)};  // sqrt2 ~ 1.414
  auto sqrt2 = isolate_roots(p, Rat(1), Rat(2))[0];
  Poly near = Poly::linear(Rat(-7, 5), Rat(1));  // root at 1.4
  CHECK(sqrt2.exclude(near));
  CHECK(near.eval(sqrt2.probe_below()) > 0);  // probe now above 1.4
  CHECK(!sqrt2.exclude(p));                   // own polynomial vanishes there
  // rational roots also support probes
  auto r = AlgebraicNumber::rational(Rat(2));
  CHECK(r.exclude(Poly::linear(Rat(-1), Rat(1))));
  CHECK(r.probe_below() < Rat(2));
  CHECK(r.probe_above() > Rat(2));
  CHECK(r.probe_below() > Rat(1));
}

TEST_CASE("cross nullvector is orthogonal to its rows") {
  std::vector<PolyVec> rows;
  rows.push_back(moving_point(Vec{Rat(1), Rat(0), Rat(2)}, Vec{Rat(3), Rat(1), Rat(2)}));
  rows.push_back(to_polyvec(Vec{Rat(0), Rat(1), Rat(1)}));
  PolyVec v = cross_nullvector(rows, 3);
  for (const auto& row : rows) {
    Poly d = dot(v, row);
    CHECK(d.is_zero());
  }
  // and at a sample time the vector is nonzero
  CHECK(!is_zero_vec(eval(v, Rat(1, 2))));
}
