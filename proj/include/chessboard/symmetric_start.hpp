#pragma once

#include "chessboard/oracle.hpp"

namespace chessboard {

struct SymmetricStart {
  ColoredPointConfig config;      // cluster j's center is its first point
  std::vector<Vec> centers;
  std::vector<ArrData> canonical;             // one per valid partition
  std::vector<Arrangement> canonical_arrs;    // realizations on the config
  int class_count = 0;
  bool oracle_verified = false;   // exhaustive count check ran
};

struct StartOptions {
  // Box the centers are drawn from; defaults to [0,64)^d.
  std::optional<std::pair<Vec, Vec>> center_box;
  int max_attempts = 32;
  // Exhaustive verification budgets.
  long long oracle_budget = 400'000;
  std::uint64_t generic_budget = 400'000;
};

// Well separated clusters, each roughly symmetric about its center: every
// valid partition of the centers realizes as a bisecting arrangement and
// (verified exhaustively when affordable) these are the only ones.
SymmetricStart build_symmetric_start(const std::vector<FamilySpec>& specs,
                                     const std::vector<int>& cluster_sizes,
                                     std::uint64_t seed,
                                     const StartOptions& opts = {});

SymmetricStart build_symmetric_start(const std::vector<FamilySpec>& specs,
                                     int cluster_size, std::uint64_t seed,
                                     const StartOptions& opts = {});

}  // namespace chessboard
