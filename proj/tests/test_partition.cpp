#include <doctest.h>

#include <set>

#include "chessboard/parity.hpp"
#include "chessboard/partition.hpp"

using namespace chessboard;

TEST_CASE("partition counts match the closed formula") {
  Subspace r2 = Subspace::full(2);
  Subspace r1 = Subspace::full(1);

  SUBCASE("single family, one hyperplane") {
    auto specs = make_specs({{r2, 1}});
    int count = 0;
    enumerate_valid_partitions(2, specs, [&](const ValidPartition&) {
      ++count;
      return true;
    });
    CHECK(count == 1);
  }
  SUBCASE("two langerman families") {
    auto specs = make_specs({{r2, 1}, {r2, 1}});
    std::set<std::string> seen;
    enumerate_valid_partitions(4, specs, [&](const ValidPartition& p) {
      seen.insert(p.bar_notation());
      return true;
    });
    CHECK(seen.size() == 6);
    CHECK(count_valid_partitions(4, specs) == 6);
  }
  SUBCASE("mixed stirling refinements") {
    // families (l=2,k=3) and (l=2,k=2) over M=7:
    // multinomial(7;4,3)·S(4,3)·S(3,2) = 35·6·3
    Subspace r2b = Subspace::full(2);
    auto specs = make_specs({{r2b, 3}, {r2b, 2}});
    long long count = 0;
    std::set<std::string> seen;
    enumerate_valid_partitions(7, specs, [&](const ValidPartition& p) {
      ++count;
      seen.insert(p.bar_notation());
      return true;
    });
    CHECK(count == 35 * 6 * 3);
    CHECK(seen.size() == static_cast<size_t>(count));
    CHECK(count_valid_partitions(7, specs) == BigInt(630));
    CHECK(count_valid_partitions(7, specs) ==
          multinomial(7, {4, 3}) * stirling2(4, 3) * stirling2(3, 2));
  }
  SUBCASE("necklace") {
    for (int k = 2; k <= 4; ++k) {
      auto specs = make_specs({{r1, k}});
      int count = 0;
      enumerate_valid_partitions(k, specs, [&](const ValidPartition&) {
        ++count;
        return true;
      });
      CHECK(count == 1);  // S(k,k)=1
    }
  }
}

TEST_CASE("bar notation") {
  ValidPartition p;
  p.families = {{{0, 3}, {2}, {6}}, {{1, 4}, {5}}};
  CHECK(p.bar_notation() == "14|3|7 || 25|6");
  ValidPartition q;
  q.families = {{{3, 0}, {6}, {2}}, {{5}, {4, 1}}};
  q.canonicalize();
  CHECK(q.bar_notation() == p.bar_notation());
}

TEST_CASE("groups recover the ordered partition") {
  ValidPartition p;
  p.families = {{{0, 3}, {2}, {6}}, {{1, 4}, {5}}};
  CHECK(p.group(0) == std::vector<int>{0, 2, 3, 6});
  CHECK(p.group(1) == std::vector<int>{1, 4, 5});
}
