#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chessboard/partition.hpp"

namespace chessboard {

struct ArrFamily {
  Vec direction;               // canonical primitive integer vector
  std::vector<Rat> offsets;    // strictly increasing
};

struct Arrangement {
  std::vector<ArrFamily> families;

  std::vector<Hyperplane> hyperplanes() const;
  int total_hyperplanes() const;
  std::string key() const;  // exact canonical encoding of the geometry
};

struct Degenerate {
  enum class Kind { RankDeficient, OffsetCollision, ExtraIncidence };
  Kind kind;
  int family = -1;
  std::vector<int> witness;  // offending point indices
};

using ConstructResult = std::variant<Arrangement, Degenerate>;

// Realizes the unique arrangement inducing `chi` on `pts` (one family per
// spec): the within-class difference vectors plus B_L pin the direction, the
// class representatives pin the offsets.
ConstructResult construct_arrangement(const ValidPartition& chi,
                                      const std::vector<Vec>& pts,
                                      const std::vector<FamilySpec>& specs);

struct NotValid {
  enum class Kind { EmptyHyperplane, DoubleIncidence, WrongGroupSize };
  Kind kind;
  int family = -1;
  int witness_point = -1;
};

using InducedResult = std::variant<ValidPartition, NotValid>;

// Reads the partition {h ∩ P} back off an arrangement.
InducedResult induced_partition(const Arrangement& arr,
                                const std::vector<Vec>& pts,
                                const std::vector<FamilySpec>& specs);

struct Codim2Flats {
  Mat flat_basis;       // rows spanning the (d-2)-dimensional direction space
  Mat rotation_plane;   // two rows spanning its orthogonal complement
  std::vector<int> reps;  // one pivot point index per class
};

// For classes totalling l-2+k points: the unique codim-2 subspace K with some
// v in L orthogonal to K whose translates cover the classes.
std::variant<Codim2Flats, Degenerate> construct_codim2_flats(
    const std::vector<std::vector<int>>& classes, const std::vector<Vec>& pts,
    const FamilySpec& spec);

// Closed-region bisection test: for every color, both closed sides must hold
// at least half of the class.
bool is_bisecting(const Arrangement& arr, const ColoredPointConfig& config);

// Per-color closed counts (a = |A or boundary|, b = |B or boundary|).
std::vector<std::pair<int, int>> color_counts(const Arrangement& arr,
                                              const ColoredPointConfig& config);

// Arrangements share a key exactly when related by a permutation of families
// preserving (L, k).
std::string equivalence_class_key(const Arrangement& arr,
                                  const std::vector<FamilySpec>& specs);

int count_classes(const std::vector<std::string>& keys);

}  // namespace chessboard
