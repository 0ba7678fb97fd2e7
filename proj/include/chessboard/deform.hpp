#pragma once

#include <memory>
#include <optional>

#include "chessboard/oracle.hpp"
#include "chessboard/polynomial.hpp"

namespace chessboard {

// One straight-line single-point move.
struct Move {
  int color = 0;
  int index = 0;
  Vec target;
};

struct DeformationPath {
  ColoredPointConfig base;
  std::vector<Move> moves;
};

struct PivotStep {
  std::string state;       // bar notation of the almost-valid data
  int moving_family = -1;
  int freed_point = -1;
  int hit_point = -1;
  int rule = 0;            // 1 = translation, 2 = rotation, 0 = terminal swap
};

struct EventRecord {
  double time_approx = 0;
  std::string time_interval;  // exact rational or isolating interval
  std::vector<std::string> dying;
  std::vector<std::string> born;
  std::string partner;
  int delta = 0;  // -2, 0, +2
  bool anomaly = false;  // tracked-set bookkeeping could not be paired fully
  std::vector<PivotStep> pivot_trace;
};

struct DeformError : std::runtime_error {
  enum class Kind { SimultaneousEvents, GenericityViolation, CycleDetected };
  Kind kind;
  explicit DeformError(Kind k, const std::string& what)
      : std::runtime_error(what), kind(k) {}
};

struct MorphOptions {
  // Detect births on arrangements not currently tracked by scanning every
  // candidate (complete but costs one oracle pass per move).
  bool full_detection = false;
  bool record_traces = true;
};

struct MoveOutcome {
  std::vector<EventRecord> events;
  int anomalies = 0;
};

// Deformation session: maintains the set of bisecting arrangements of a
// moving configuration across exceptional times.
class MorphSession {
 public:
  MorphSession(ColoredPointConfig start, std::vector<FamilySpec> specs,
               std::vector<ArrData> tracked, MorphOptions opts = {});

  // Moves one point along a straight segment, resolving every event.
  // Throws DeformError when path genericity fails; the configuration is left
  // at the move start in that case.
  MoveOutcome run_move(int flat_point, const Vec& target);

  const ColoredPointConfig& config() const { return config_; }
  const std::vector<ArrData>& tracked() const { return tracked_; }
  const std::vector<FamilySpec>& specs() const { return specs_; }
  std::vector<std::string> tracked_class_keys() const;

 private:
  ColoredPointConfig config_;
  std::vector<FamilySpec> specs_;
  std::vector<ArrData> tracked_;
  MorphOptions opts_;
};

// The almost-valid data at an exceptional time.
struct PivotState {
  std::vector<int> incidence_plus;  // M+1 flat ids
  // classes_plus[f] = classes of flat ids per family
  std::vector<std::vector<std::vector<int>>> classes_plus;
  int oversaturated_family = -1;
  int arrived_point = -1;  // newest incidence
  int unbalanced_color = -1;
};

// Finds the partner of an almost-bisecting arrangement at a frozen
// exceptional time by the moving-hyperplane walk. `tstar` provides exact
// signs at the event time; `q_flat`/`q_path` describe the one moving point.
std::pair<ArrData, std::vector<PivotStep>> pivot_moving_hyperplane(
    const ColoredPointConfig& config, const std::vector<FamilySpec>& specs,
    int q_flat, const PolyVec& q_path, AlgebraicNumber& tstar,
    const ArrData& before, int hit_family, int hit_class, int new_point);

struct ParityInvarianceReport {
  bool ok = true;
  bool parity_constant = true;
  bool deltas_ok = true;
  bool oracle_agrees = true;  // tracked set vs oracle at move boundaries
  int events = 0;
  std::vector<int> tracked_sizes;  // after each move
  std::string failure;
};

ParityInvarianceReport verify_parity_invariance(
    const DeformationPath& path, const std::vector<FamilySpec>& specs,
    long long oracle_budget = 400'000);

}  // namespace chessboard
