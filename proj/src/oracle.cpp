#include "chessboard/oracle.hpp"

#include <map>
#include <sstream>

namespace chessboard {

std::string ArrData::id() const {
  std::ostringstream os;
  for (int x : incidence) os << x << ",";
  os << "!";
  for (const auto& fam : chi.families) {
    for (const auto& cls : fam) {
      for (int x : cls) os << x << ".";
      os << "|";
    }
    os << "/";
  }
  return os.str();
}

std::vector<Vec> ArrData::points(const ColoredPointConfig& config) const {
  std::vector<Vec> pts;
  pts.reserve(incidence.size());
  for (int flat : incidence) pts.push_back(config.point(flat));
  return pts;
}

ConstructResult realize(const ArrData& data, const ColoredPointConfig& config,
                        const std::vector<FamilySpec>& specs) {
  return construct_arrangement(data.chi, data.points(config), specs);
}

BigInt oracle_candidate_count(const ColoredPointConfig& config,
                              const std::vector<FamilySpec>& specs) {
  BigInt n = count_valid_partitions(config.num_colors(), specs);
  for (const auto& c : config.colors) n *= static_cast<long>(c.size());
  return n;
}

OracleResult brute_force_bisectors(const ColoredPointConfig& config,
                                   const std::vector<FamilySpec>& specs,
                                   const OracleOptions& opts) {
  const int M = config.num_colors();
  std::vector<ValidPartition> partitions;
  enumerate_valid_partitions(M, specs, [&](const ValidPartition& p) {
    partitions.push_back(p);
    return true;
  });

  OracleResult out;
  std::map<std::string, size_t> class_index;

  std::vector<int> pick(M, 0);
  bool done = false;
  while (!done) {
    ArrData data;
    data.incidence.resize(M);
    for (int j = 0; j < M; ++j) data.incidence[j] = config.flat_id(j, pick[j]);
    for (const auto& chi : partitions) {
      if (opts.max_candidates >= 0 &&
          out.candidates_checked >= opts.max_candidates)
        throw std::runtime_error("oracle candidate budget exceeded");
      ++out.candidates_checked;
      data.chi = chi;
      auto res = realize(data, config, specs);
      if (std::holds_alternative<Degenerate>(res)) {
        ++out.degenerate_candidates;
        continue;
      }
      const Arrangement& arr = std::get<Arrangement>(res);
      if (!is_bisecting(arr, config)) continue;
      out.all_bisecting.push_back(data);
      std::string key = equivalence_class_key(arr, specs);
      if (!class_index.count(key)) {
        class_index[key] = out.representatives.size();
        out.representatives.emplace_back(data, arr);
        if (opts.find_first) return out;
      }
    }
    // next colorful selection
    int j = 0;
    while (j < M) {
      if (++pick[j] < static_cast<int>(config.colors[j].size())) break;
      pick[j] = 0;
      ++j;
    }
    if (j == M) done = true;
  }
  return out;
}

}  // namespace chessboard
