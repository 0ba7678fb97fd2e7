#include <doctest.h>

#include "chessboard/parity.hpp"

using namespace chessboard;

TEST_CASE("stirling2 recurrence values") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 0) == 0);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  for (int k = 1; k <= 10; ++k) CHECK(stirling2(k, k) == 1);
  for (int d = 1; d <= 10; ++d) CHECK(stirling2(d, 1) == 1);
}

TEST_CASE("stirling parity formula matches the recurrence") {
  for (int m = 1; m <= 64; ++m)
    for (int k = 1; k <= m; ++k) {
      int exact = mpz_odd_p(stirling2(m, k).get_mpz_t()) ? 1 : 0;
      CHECK(stirling2_parity(m, k) == exact);
    }
  CHECK(stirling2_parity(4, 2) == 1);
  for (int d = 1; d <= 20; ++d) CHECK(stirling2_parity(d + 1, 2) == 1);
  CHECK(stirling2_parity(5, 3) == 1);  // S(5,3)=25
  CHECK_THROWS(stirling2_parity(2, 3));
}

TEST_CASE("multinomial values and parity") {
  CHECK(multinomial(7, {4, 2, 1}) == 105);
  CHECK(multinomial(5, {5}) == 1);
  CHECK(multinomial(4, {2, 2}) == 6);
  CHECK(multinomial_parity({4, 2, 1}) == 1);
  CHECK(multinomial_parity({2, 2}) == 0);
  CHECK_THROWS(multinomial(3, {2, 2}));

  Rng rng(123);
  for (int iter = 0; iter < 10000; ++iter) {
    int n = 1 + static_cast<int>(rng.next_below(4));
    std::vector<int> parts;
    int total = 0;
    for (int i = 0; i < n; ++i) {
      int p = 1 + static_cast<int>(rng.next_below(16));
      if (total + p > 64) break;
      parts.push_back(p);
      total += p;
    }
    if (parts.empty()) continue;
    int exact = mpz_odd_p(multinomial(total, parts).get_mpz_t()) ? 1 : 0;
    CHECK(multinomial_parity(parts) == exact);
  }
}

TEST_CASE("automorphism group order") {
  Subspace r2 = Subspace::full(2);
  Subspace lx = Subspace::span({{Rat(1), Rat(0)}}, 2);
  Subspace ly = Subspace::span({{Rat(0), Rat(1)}}, 2);

  auto distinct = make_specs({{lx, 1}, {ly, 1}});
  CHECK(automorphism_group_order(InstanceSignature::from_specs(2, distinct)) == 1);

  auto lang = make_specs({{r2, 1}, {r2, 1}});
  CHECK(automorphism_group_order(InstanceSignature::from_specs(2, lang)) == 2);

  auto three = make_specs({{r2, 1}, {r2, 1}, {lx, 2}});
  CHECK(automorphism_group_order(InstanceSignature::from_specs(2, three)) == 2);
}

TEST_CASE("compute_N on the anchor instances") {
  Subspace r2 = Subspace::full(2);
  SUBCASE("ham sandwich") {
    for (int d = 1; d <= 4; ++d) {
      auto specs = make_specs({{Subspace::full(d), 1}});
      auto rep = compute_N(InstanceSignature::from_specs(d, specs));
      CHECK(rep.N == 1);
      CHECK(rep.N_mod2 == 1);
    }
  }
  SUBCASE("langerman d=2") {
    auto specs = make_specs({{r2, 1}, {r2, 1}});
    auto rep = compute_N(InstanceSignature::from_specs(2, specs));
    CHECK(rep.N == 3);
    CHECK(rep.group_order == 2);
  }
  SUBCASE("two distinct fixed directions") {
    Subspace lx = Subspace::span({{Rat(1), Rat(0)}}, 2);
    Subspace ly = Subspace::span({{Rat(0), Rat(1)}}, 2);
    auto specs = make_specs({{lx, 1}, {ly, 1}});
    auto rep = compute_N(InstanceSignature::from_specs(2, specs));
    CHECK(rep.N == 2);
    CHECK(rep.N_mod2 == 0);
  }
  SUBCASE("veronese corollary spec") {
    Subspace r3 = Subspace::full(3);
    Subspace xy = Subspace::span({{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}}, 3);
    Subspace ex = Subspace::span({{Rat(1), Rat(0), Rat(0)}}, 3);
    auto specs = make_specs({{r3, 2}, {xy, 1}, {ex, 1}});
    auto rep = compute_N(InstanceSignature::from_specs(3, specs));
    CHECK(rep.multinomial_value == 105);
    CHECK(rep.N == 105 * 7);
    CHECK(rep.N_mod2 == 1);
  }
  SUBCASE("invariant under family permutation") {
    Subspace lx = Subspace::span({{Rat(1), Rat(0)}}, 2);
    auto a = make_specs({{r2, 2}, {lx, 1}});
    auto b = make_specs({{lx, 1}, {r2, 2}});
    CHECK(compute_N(InstanceSignature::from_specs(2, a)).N ==
          compute_N(InstanceSignature::from_specs(2, b)).N);
  }
  SUBCASE("n=1 parity matches the closed form") {
    for (int d = 1; d <= 6; ++d)
      for (int k = 1; k <= 6; ++k) {
        auto specs = make_specs({{Subspace::full(d), k}});
        auto rep = compute_N(InstanceSignature::from_specs(d, specs));
        CHECK(rep.N_mod2 == stirling2_parity(d + k - 1, k));
      }
  }
}

TEST_CASE("takahashi table rows and diagonal") {
  auto grid = takahashi_table(20, 20);
  for (int d = 1; d <= 20; ++d) {
    CHECK(grid[d - 1][0] == 1);  // k=1
    CHECK(grid[d - 1][1] == 1);  // k=2
  }
  for (int k = 1; k <= 20; ++k) CHECK(grid[0][k - 1] == 1);  // d=1
  // spot check the sierpinski gap: S(4,3)=6 even
  CHECK(grid[1][2] == 0);  // d=2,k=3 -> S(4,3)
}
