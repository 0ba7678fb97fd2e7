#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chessboard/predicates.hpp"

namespace chessboard {

// Ordered split of [M] into n groups of sizes m_i, each refined into k_i
// unordered nonempty classes. Classes are kept sorted and listed by minimal
// element, which makes the representation canonical.
struct ValidPartition {
  // families[i] = list of classes; each class = sorted point indices.
  std::vector<std::vector<std::vector<int>>> families;

  std::vector<int> group(int i) const;  // sorted union of family i's classes
  bool operator==(const ValidPartition&) const = default;
  void canonicalize();

  // Bar notation, e.g. "14|3|7 || 25|6" (indices printed 1-based; multi-digit
  // indices separated by commas).
  std::string bar_notation() const;
};

// Emits every valid partition of [M] exactly once. Returns false from the
// callback to stop early. Total count is multinomial(M;m)·prod S(m_i,k_i).
void enumerate_valid_partitions(
    int M, const std::vector<FamilySpec>& specs,
    const std::function<bool(const ValidPartition&)>& fn);

BigInt count_valid_partitions(int M, const std::vector<FamilySpec>& specs);

}  // namespace chessboard
