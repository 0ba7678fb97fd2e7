#include "chessboard/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace chessboard {

std::vector<Hyperplane> Arrangement::hyperplanes() const {
  std::vector<Hyperplane> hs;
  for (const auto& f : families)
    for (const auto& c : f.offsets) hs.push_back({f.direction, c});
  return hs;
}

int Arrangement::total_hyperplanes() const {
  int n = 0;
  for (const auto& f : families) n += static_cast<int>(f.offsets.size());
  return n;
}

std::string Arrangement::key() const {
  std::ostringstream os;
  for (const auto& f : families) {
    os << vec_str(f.direction) << "@";
    for (const auto& c : f.offsets) os << rat_str(c) << ";";
    os << "#";
  }
  return os.str();
}

ConstructResult construct_arrangement(const ValidPartition& chi,
                                      const std::vector<Vec>& pts,
                                      const std::vector<FamilySpec>& specs) {
  const int d = specs.empty() ? 0 : specs[0].L.ambient;
  Arrangement arr;
  // (family, class) -> sorted position among that family's offsets is not
  // needed downstream; offsets are sorted and incidences recomputed exactly.
  for (size_t fi = 0; fi < specs.size(); ++fi) {
    const auto& classes = chi.families[fi];
    Mat rows = specs[fi].B_L;
    for (const auto& cls : classes)
      for (size_t t = 1; t < cls.size(); ++t)
        rows.push_back(vec_sub(pts[cls[t]], pts[cls[0]]));
    Mat ns = nullspace(rows, d);
    if (ns.size() != 1) {
      Degenerate deg{Degenerate::Kind::RankDeficient, static_cast<int>(fi), {}};
      for (const auto& cls : classes)
        deg.witness.insert(deg.witness.end(), cls.begin(), cls.end());
      return deg;
    }
    ArrFamily fam;
    fam.direction = canonical_direction(ns[0]);
    std::vector<Rat> offs;
    for (const auto& cls : classes) offs.push_back(dot(fam.direction, pts[cls[0]]));
    std::sort(offs.begin(), offs.end());
    for (size_t t = 1; t < offs.size(); ++t)
      if (offs[t] == offs[t - 1])
        return Degenerate{Degenerate::Kind::OffsetCollision,
                          static_cast<int>(fi),
                          {}};
    fam.offsets = std::move(offs);
    arr.families.push_back(std::move(fam));
  }

  // Every incidence must be accounted for by the partition.
  for (size_t fi = 0; fi < arr.families.size(); ++fi) {
    const auto& fam = arr.families[fi];
    std::set<int> own;
    for (const auto& cls : chi.families[fi]) own.insert(cls.begin(), cls.end());
    for (size_t pi = 0; pi < pts.size(); ++pi) {
      Rat v = dot(fam.direction, pts[pi]);
      bool incident = std::any_of(fam.offsets.begin(), fam.offsets.end(),
                                  [&](const Rat& c) { return c == v; });
      if (incident && !own.count(static_cast<int>(pi)))
        return Degenerate{Degenerate::Kind::ExtraIncidence,
                          static_cast<int>(fi),
                          {static_cast<int>(pi)}};
    }
  }
  return arr;
}

InducedResult induced_partition(const Arrangement& arr,
                                const std::vector<Vec>& pts,
                                const std::vector<FamilySpec>& specs) {
  ValidPartition part;
  part.families.resize(arr.families.size());
  std::vector<int> hits(pts.size(), 0);
  for (size_t fi = 0; fi < arr.families.size(); ++fi) {
    const auto& fam = arr.families[fi];
    int family_points = 0;
    for (const auto& c : fam.offsets) {
      std::vector<int> cls;
      for (size_t pi = 0; pi < pts.size(); ++pi)
        if (dot(fam.direction, pts[pi]) == c) {
          cls.push_back(static_cast<int>(pi));
          ++hits[pi];
          if (hits[pi] > 1)
            return NotValid{NotValid::Kind::DoubleIncidence,
                            static_cast<int>(fi), static_cast<int>(pi)};
        }
      if (cls.empty())
        return NotValid{NotValid::Kind::EmptyHyperplane, static_cast<int>(fi),
                        -1};
      family_points += static_cast<int>(cls.size());
      part.families[fi].push_back(std::move(cls));
    }
    if (family_points != specs[fi].m())
      return NotValid{NotValid::Kind::WrongGroupSize, static_cast<int>(fi), -1};
  }
  part.canonicalize();
  return part;
}

std::variant<Codim2Flats, Degenerate> construct_codim2_flats(
    const std::vector<std::vector<int>>& classes, const std::vector<Vec>& pts,
    const FamilySpec& spec) {
  const int d = spec.L.ambient;
  Mat rows = spec.B_L;
  Codim2Flats out;
  for (const auto& cls : classes) {
    out.reps.push_back(cls[0]);
    for (size_t t = 1; t < cls.size(); ++t)
      rows.push_back(vec_sub(pts[cls[t]], pts[cls[0]]));
  }
  if (rank(rows) != d - 2)
    return Degenerate{Degenerate::Kind::RankDeficient, -1, {}};
  out.rotation_plane = nullspace(rows, d);
  out.flat_basis = std::move(rows);
  return out;
}

std::vector<std::pair<int, int>> color_counts(const Arrangement& arr,
                                              const ColoredPointConfig& config) {
  auto hs = arr.hyperplanes();
  std::vector<std::pair<int, int>> counts;
  counts.reserve(config.colors.size());
  for (const auto& cls : config.colors) {
    int a = 0, b = 0;
    for (const auto& x : cls) {
      CellColor c = chessboard_color(hs, x);
      if (c != CellColor::B) ++a;
      if (c != CellColor::A) ++b;
    }
    counts.emplace_back(a, b);
  }
  return counts;
}

bool is_bisecting(const Arrangement& arr, const ColoredPointConfig& config) {
  auto counts = color_counts(arr, config);
  for (size_t j = 0; j < counts.size(); ++j) {
    int n = static_cast<int>(config.colors[j].size());
    if (2 * counts[j].first < n || 2 * counts[j].second < n) return false;
  }
  return true;
}

std::string equivalence_class_key(const Arrangement& arr,
                                  const std::vector<FamilySpec>& specs) {
  // Families permutable by the symmetry group share (L token, k); sort each
  // such block's payloads.
  std::map<std::pair<std::string, int>, std::vector<std::string>> blocks;
  std::vector<std::pair<std::string, int>> order;
  for (size_t fi = 0; fi < specs.size(); ++fi) {
    std::pair<std::string, int> id{specs[fi].L.token, specs[fi].k};
    std::ostringstream payload;
    payload << vec_str(arr.families[fi].direction) << "@";
    for (const auto& c : arr.families[fi].offsets) payload << rat_str(c) << ";";
    if (!blocks.count(id)) order.push_back(id);
    blocks[id].push_back(payload.str());
  }
  std::ostringstream os;
  for (const auto& id : order) {
    auto& v = blocks[id];
    std::sort(v.begin(), v.end());
    os << id.first << "*" << id.second << "{";
    for (const auto& s : v) os << s << "&";
    os << "}";
  }
  return os.str();
}

int count_classes(const std::vector<std::string>& keys) {
  std::set<std::string> uniq(keys.begin(), keys.end());
  return static_cast<int>(uniq.size());
}

}  // namespace chessboard
