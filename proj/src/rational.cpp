#include "chessboard/rational.hpp"

namespace chessboard {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("next_below(0)");
  // Rejection to kill modulo bias.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

Rat Rng::unit() {
  std::uint64_t v = next() >> 11;  // 53 bits
  Rat r(BigInt(v), BigInt(1) << 53);
  r.canonicalize();
  return r;
}

Rat Rng::range(const Rat& lo, const Rat& hi) { return lo + unit() * (hi - lo); }

Rng Rng::fork(std::uint64_t label) {
  Rng child(state_ ^ (0xa0761d6478bd642full * (label + 1)));
  child.next();
  return child;
}

}  // namespace chessboard
