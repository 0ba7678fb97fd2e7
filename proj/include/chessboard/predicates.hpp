#pragma once

#include <optional>
#include <span>
#include <vector>

#include "chessboard/linalg.hpp"

namespace chessboard {

// Oriented hyperplane {x : <normal,x> = offset}. The positive side is
// <normal,x> >= offset.
struct Hyperplane {
  Vec normal;
  Rat offset;
};

// Sign of <normal,x> - offset.
int side(const Hyperplane& h, const Vec& x);

enum class CellColor { A, B, Boundary };

// Parity two-coloring: Boundary when x lies on some hyperplane; otherwise A
// when x is on the strictly positive side of an even number of hyperplanes.
CellColor chessboard_color(std::span<const Hyperplane> hs, const Vec& x);

// One constrained family of parallel hyperplanes: directions live in L,
// k hyperplanes, m = dim L + k - 1 incidence points.
struct FamilySpec {
  Subspace L;
  int k = 1;
  Mat B_L;  // basis rows of the orthogonal complement of L

  static FamilySpec make(Subspace L, int k);
  int l() const { return L.dim; }
  int m() const { return L.dim + k - 1; }
};

std::vector<FamilySpec> make_specs(std::vector<std::pair<Subspace, int>> parts);

// M color classes of points, each of odd cardinality.
struct ColoredPointConfig {
  int d = 0;
  std::vector<std::vector<Vec>> colors;

  int num_colors() const { return static_cast<int>(colors.size()); }
  int total_points() const;
  // Flat ids enumerate color 0's points, then color 1's, ...
  int flat_id(int color, int index) const;
  std::pair<int, int> color_of(int flat) const;
  const Vec& point(int flat) const;
  Vec& point(int flat);
  std::vector<Vec> all_points() const;
  bool all_odd() const;
};

struct GenericityReport {
  bool ok = true;
  std::vector<int> witness_subset;  // indices into the checked point list
  int witness_family = -1;
  bool exhaustive = true;  // false when the predicate family was sampled
};

// Verifies the finite rank predicates the construction lemmas rely on: for
// every family and every subset of at most m_i+1 points split into at most
// k_i classes, the within-class difference vectors together with B_L must
// have full expected rank. Exhaustive below `work_cap` predicate
// evaluations, sampled above it.
GenericityReport check_generic(const std::vector<Vec>& pts,
                               const std::vector<FamilySpec>& specs,
                               std::uint64_t work_cap = 2'000'000);

// Moves every point independently by a vector with sup-norm <= magnitude.
std::vector<Vec> perturb(const std::vector<Vec>& pts, const Rat& magnitude,
                         Rng& rng);

}  // namespace chessboard
