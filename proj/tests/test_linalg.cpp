#include <doctest.h>

#include "chessboard/linalg.hpp"
#include "chessboard/predicates.hpp"

using namespace chessboard;

namespace {
Vec rv(Rng& rng, int d) {
  Vec v(d);
  for (auto& x : v) x = rng.range(Rat(-10), Rat(10));
  return v;
}
}  // namespace

TEST_CASE("rank and nullspace basics") {
  Mat id3{{Rat(1), Rat(0), Rat(0)},
          {Rat(0), Rat(1), Rat(0)},
          {Rat(0), Rat(0), Rat(1)}};
  CHECK(rank(id3) == 3);
  CHECK(nullspace(id3, 3).empty());

  Mat e1{{Rat(1), Rat(0), Rat(0)}};
  Mat comp = orthogonal_complement(e1, 3);
  CHECK(comp.size() == 2);
  for (const auto& row : comp) CHECK(dot(row, e1[0]) == 0);
}

TEST_CASE("rank-nullity on random rational matrices") {
  Rng rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    Mat m;
    for (int r = 0; r < 4; ++r) m.push_back(rv(rng, 6));
    int rk = rank(m);
    int nullity = static_cast<int>(nullspace(m, 6).size());
    CHECK(rk + nullity == 6);
    // elimination with rows reversed must agree
    Mat rev(m.rbegin(), m.rend());
    CHECK(rank(rev) == rk);
    for (const auto& nv : nullspace(m, 6))
      for (const auto& row : m) CHECK(dot(nv, row) == 0);
  }
}

TEST_CASE("complement is an involution") {
  Rng rng(5);
  for (int iter = 0; iter < 10; ++iter) {
    Mat rows{rv(rng, 4), rv(rng, 4)};
    Subspace L = Subspace::span(rows, 4);
    Subspace back = L.complement().complement();
    CHECK(back.token == L.token);
  }
}

TEST_CASE("canonical directions") {
  Vec v{Rat(-2, 3), Rat(4, 3)};
  Vec c = canonical_direction(v);
  CHECK(c == Vec{Rat(1), Rat(-2)});
  CHECK(canonical_direction(Vec{Rat(0), Rat(-5)}) == Vec{Rat(0), Rat(1)});
  // scale invariance up to sign
  CHECK(canonical_direction(vec_scale(Rat(-7, 9), v)) == c);
}

TEST_CASE("subspace tokens identify equal subspaces") {
  Mat b1{{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  Mat b2{{Rat(2), Rat(2), Rat(3)}, {Rat(0), Rat(0), Rat(-1)}};
  CHECK(Subspace::span(b1, 3).token == Subspace::span(b2, 3).token);
  Mat b3{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  CHECK(Subspace::span(b1, 3).token != Subspace::span(b3, 3).token);
  CHECK(Subspace::span(b1, 3).contains(Vec{Rat(3), Rat(3), Rat(-2)}));
  CHECK(!Subspace::span(b1, 3).contains(Vec{Rat(1), Rat(0), Rat(0)}));
}

TEST_CASE("side and chessboard color") {
  Hyperplane h{{Rat(1), Rat(0)}, Rat(0)};  // x = 0
  CHECK(side(h, Vec{Rat(1), Rat(5)}) == 1);
  CHECK(side(h, Vec{Rat(0), Rat(3)}) == 0);
  CHECK(side(h, Vec{Rat(-2), Rat(0)}) == -1);
  // flipping orientation negates
  Hyperplane hf{{Rat(-1), Rat(0)}, Rat(0)};
  CHECK(side(hf, Vec{Rat(1), Rat(5)}) == -1);

  std::vector<Hyperplane> none;
  CHECK(chessboard_color(none, Vec{Rat(3), Rat(4)}) == CellColor::A);
  std::vector<Hyperplane> one{h};
  CHECK(chessboard_color(one, Vec{Rat(1), Rat(0)}) == CellColor::B);
  CHECK(chessboard_color(one, Vec{Rat(-1), Rat(0)}) == CellColor::A);
  CHECK(chessboard_color(one, Vec{Rat(0), Rat(9)}) == CellColor::Boundary);
}

TEST_CASE("chessboard parity agrees with sign of the affine product") {
  // For K hyperplanes the parity class A corresponds to sign (-1)^K of the
  // product of the affine forms.
  Rng rng(333);
  std::vector<Hyperplane> hs;
  for (int i = 0; i < 5; ++i) hs.push_back({rv(rng, 3), rng.range(Rat(-4), Rat(4))});
  int K = static_cast<int>(hs.size());
  for (int iter = 0; iter < 1000; ++iter) {
    Vec x = rv(rng, 3);
    Rat prod = 1;
    for (const auto& h : hs) prod *= dot(h.normal, x) - h.offset;
    if (prod == 0) continue;
    CellColor c = chessboard_color(hs, x);
    int expect = (K % 2 == 0 ? 1 : -1) * sgn(prod);
    CHECK(c == (expect > 0 ? CellColor::A : CellColor::B));
  }
}

TEST_CASE("single hyperplane crossing flips the color") {
  Rng rng(77);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Hyperplane> hs;
    for (int i = 0; i < 3; ++i)
      hs.push_back({rv(rng, 2), rng.range(Rat(-4), Rat(4))});
    // segment crossing exactly hyperplane 0
    const auto& h = hs[0];
    Vec p = rv(rng, 2);
    if (side(h, p) == 0) continue;
    // reflect p across h along the normal: q = p - 2*(side distance)*n/|n|^2
    Rat t = (dot(h.normal, p) - h.offset) / dot(h.normal, h.normal);
    Vec q = vec_sub(p, vec_scale(2 * t, h.normal));
    bool crosses_others = false;
    for (size_t i = 1; i < hs.size(); ++i)
      if (side(hs[i], p) != side(hs[i], q) || side(hs[i], p) == 0)
        crosses_others = true;
    if (crosses_others) continue;
    CellColor cp = chessboard_color(hs, p);
    CellColor cq = chessboard_color(hs, q);
    CHECK(cp != cq);
    CHECK(cp != CellColor::Boundary);
    CHECK(cq != CellColor::Boundary);
  }
}

TEST_CASE("check_generic catches planted degeneracies") {
  auto specs = make_specs({{Subspace::full(2), 1}});
  // three collinear points in the plane, full-dimensional family
  std::vector<Vec> pts{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  auto rep = check_generic(pts, specs);
  CHECK(!rep.ok);
  CHECK(rep.witness_subset.size() == 3);

  std::vector<Vec> dup{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
  CHECK(!check_generic(dup, specs).ok);

  Rng rng(3);
  std::vector<Vec> random_pts;
  for (int i = 0; i < 5; ++i) random_pts.push_back(rv(rng, 2));
  auto rep2 = check_generic(random_pts, specs);
  CHECK(rep2.ok);
}

TEST_CASE("perturb determinism and identity") {
  Rng r1(5), r2(5);
  std::vector<Vec> pts{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  auto a = perturb(pts, Rat(1, 1000000), r1);
  auto b = perturb(pts, Rat(1, 1000000), r2);
  CHECK(a == b);
  Rng r3(5);
  CHECK(perturb(pts, Rat(0), r3) == pts);

  // degenerate input becomes generic after a small perturbation
  auto specs = make_specs({{Subspace::full(2), 1}});
  Rng r4(9);
  bool fixed = false;
  std::vector<Vec> cur = pts;
  for (int tries = 0; tries < 3 && !fixed; ++tries) {
    cur = perturb(cur, Rat(1, 1000000), r4);
    fixed = check_generic(cur, specs).ok;
  }
  CHECK(fixed);
}
