#pragma once

#include <cstdint>
#include <optional>

#include "chessboard/arrangement.hpp"

namespace chessboard {

// Combinatorial description of a candidate arrangement: one incidence point
// per color plus the refined partition of the color indices. Realizing it on
// concrete positions recovers the geometry.
struct ArrData {
  std::vector<int> incidence;  // incidence[j] = flat point id for color j
  ValidPartition chi;          // partition of color indices 0..M-1

  bool operator==(const ArrData&) const = default;
  std::string id() const;
  // Points ordered by color for construct_arrangement.
  std::vector<Vec> points(const ColoredPointConfig& config) const;
};

ConstructResult realize(const ArrData& data, const ColoredPointConfig& config,
                        const std::vector<FamilySpec>& specs);

struct OracleResult {
  // One representative per equivalence class, with its realization.
  std::vector<std::pair<ArrData, Arrangement>> representatives;
  // Every bisecting candidate (labeled, before quotienting by the group).
  std::vector<ArrData> all_bisecting;
  long long candidates_checked = 0;
  int degenerate_candidates = 0;

  int class_count() const { return static_cast<int>(representatives.size()); }
};

struct OracleOptions {
  bool find_first = false;
  long long max_candidates = -1;  // negative = unlimited
};

// Enumerates every (colorful selection, valid partition) pair, keeps the
// bisecting ones, and groups them by symmetry class. Exact and complete on
// generic configs.
OracleResult brute_force_bisectors(const ColoredPointConfig& config,
                                   const std::vector<FamilySpec>& specs,
                                   const OracleOptions& opts = {});

// Number of (colorful selection, partition) candidates the oracle would scan.
BigInt oracle_candidate_count(const ColoredPointConfig& config,
                              const std::vector<FamilySpec>& specs);

}  // namespace chessboard
