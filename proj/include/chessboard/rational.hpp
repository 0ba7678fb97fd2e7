#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chessboard {

using Rat = mpq_class;
using BigInt = mpz_class;

// Parses "p/q", "p", or a plain integer literal into a reduced rational.
Rat parse_rat(const std::string& s);

// Canonical serialization: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

inline int sgn(const Rat& r) { return ::sgn(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Deterministic splitmix64-based generator. All randomized behavior in the
// library flows through this so runs are reproducible from a single seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform in [0, n).
  std::uint64_t next_below(std::uint64_t n);

  // Uniform rational in [0,1) with denominator 2^53.
  Rat unit();

  // Uniform rational in [lo, hi) with denominator hi-lo scaled by 2^53.
  Rat range(const Rat& lo, const Rat& hi);

  // Child generator with an independent stream.
  Rng fork(std::uint64_t label);

 private:
  std::uint64_t state_;
};

}  // namespace chessboard
