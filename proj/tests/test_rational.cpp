#include <doctest.h>

#include "chessboard/rational.hpp"

using namespace chessboard;

TEST_CASE("rational parse and round trip") {
  CHECK(parse_rat("1/3") == Rat(1, 3));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("4/6") == Rat(2, 3));
  CHECK(rat_str(Rat(2, 3)) == "2/3");
  CHECK(rat_str(Rat(5)) == "5");
  CHECK(parse_rat(rat_str(Rat(-22, 7))) == Rat(-22, 7));
  CHECK_THROWS(parse_rat("abc"));
}

TEST_CASE("rng determinism and range") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(7);
  for (int i = 0; i < 200; ++i) {
    Rat u = c.unit();
    CHECK(u >= 0);
    CHECK(u < 1);
  }
  Rng d1(9), d2(9);
  CHECK(d1.fork(3).next() == d2.fork(3).next());
  CHECK(d1.fork(3).next() != d1.fork(4).next());
}
