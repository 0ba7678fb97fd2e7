#include "chessboard/predicates.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace chessboard {

int side(const Hyperplane& h, const Vec& x) {
  return sgn(Rat(dot(h.normal, x) - h.offset));
}

CellColor chessboard_color(std::span<const Hyperplane> hs, const Vec& x) {
  int positives = 0;
  for (const auto& h : hs) {
    int s = side(h, x);
    if (s == 0) return CellColor::Boundary;
    if (s > 0) ++positives;
  }
  return positives % 2 == 0 ? CellColor::A : CellColor::B;
}

FamilySpec FamilySpec::make(Subspace L, int k) {
  if (k < 1) throw std::invalid_argument("family needs k >= 1");
  if (L.dim < 1) throw std::invalid_argument("family needs dim L >= 1");
  FamilySpec f;
  f.B_L = orthogonal_complement(L.basis, L.ambient);
  f.L = std::move(L);
  f.k = k;
  return f;
}

std::vector<FamilySpec> make_specs(
    std::vector<std::pair<Subspace, int>> parts) {
  std::vector<FamilySpec> specs;
  specs.reserve(parts.size());
  for (auto& [L, k] : parts) specs.push_back(FamilySpec::make(std::move(L), k));
  return specs;
}

int ColoredPointConfig::total_points() const {
  int n = 0;
  for (const auto& c : colors) n += static_cast<int>(c.size());
  return n;
}

int ColoredPointConfig::flat_id(int color, int index) const {
  int id = index;
  for (int j = 0; j < color; ++j) id += static_cast<int>(colors[j].size());
  return id;
}

std::pair<int, int> ColoredPointConfig::color_of(int flat) const {
  for (size_t j = 0; j < colors.size(); ++j) {
    if (flat < static_cast<int>(colors[j].size())) return {static_cast<int>(j), flat};
    flat -= static_cast<int>(colors[j].size());
  }
  throw std::out_of_range("flat point id");
}

const Vec& ColoredPointConfig::point(int flat) const {
  auto [j, i] = color_of(flat);
  return colors[j][i];
}

Vec& ColoredPointConfig::point(int flat) {
  auto [j, i] = color_of(flat);
  return colors[j][i];
}

std::vector<Vec> ColoredPointConfig::all_points() const {
  std::vector<Vec> pts;
  pts.reserve(total_points());
  for (const auto& c : colors) pts.insert(pts.end(), c.begin(), c.end());
  return pts;
}

bool ColoredPointConfig::all_odd() const {
  for (const auto& c : colors)
    if (c.size() % 2 == 0) return false;
  return true;
}

namespace {

// Enumerates partitions of {0..n-1} into at most kmax nonempty classes via
// restricted growth strings, invoking fn(class_of) for each.
void for_each_partition(int n, int kmax,
                        const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> a(n, 0), mx(n, 0);
  while (true) {
    int classes = n == 0 ? 0 : mx[n - 1] + 1;
    if (classes <= kmax)
      if (!fn(a)) return;
    // next restricted growth string
    int i = n - 1;
    while (i > 0) {
      int cap = mx[i - 1] + 1;
      if (a[i] < cap) break;
      --i;
    }
    if (i <= 0) return;
    ++a[i];
    mx[i] = std::max(mx[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      mx[j] = mx[j - 1];
    }
  }
}

// Rank test for one subset+partition: within-class differences plus B_L must
// be independent whenever their count is at most d.
bool predicate_holds(const std::vector<Vec>& pts, const std::vector<int>& subset,
                     const std::vector<int>& class_of, const FamilySpec& spec,
                     int d) {
  int classes = 0;
  for (int c : class_of) classes = std::max(classes, c + 1);
  int diffs = static_cast<int>(subset.size()) - classes;
  int total = diffs + static_cast<int>(spec.B_L.size());
  if (total > d) return true;  // not a genericity statement
  Mat m = spec.B_L;
  std::vector<int> rep(classes, -1);
  for (size_t i = 0; i < subset.size(); ++i) {
    int c = class_of[i];
    if (rep[c] < 0) {
      rep[c] = subset[i];
    } else {
      m.push_back(vec_sub(pts[subset[i]], pts[rep[c]]));
    }
  }
  return rank(std::move(m)) == total;
}

void for_each_subset(int n, int kmax,
                     const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> idx;
  std::function<bool(int)> rec = [&](int start) {
    if (!idx.empty())
      if (!fn(idx)) return false;
    if (static_cast<int>(idx.size()) == kmax) return true;
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      if (!rec(i + 1)) return false;
      idx.pop_back();
    }
    return true;
  };
  rec(0);
}

}  // namespace

GenericityReport check_generic(const std::vector<Vec>& pts,
                               const std::vector<FamilySpec>& specs,
                               std::uint64_t work_cap) {
  GenericityReport rep;
  if (pts.empty()) return rep;
  const int d = static_cast<int>(pts[0].size());
  const int n = static_cast<int>(pts.size());

  // Coincident points violate every family's smallest predicate.
  for (int i = 0; i < n && rep.ok; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i] == pts[j]) {
        rep.ok = false;
        rep.witness_subset = {i, j};
        rep.witness_family = 0;
        return rep;
      }

  std::uint64_t budget = work_cap;
  for (size_t fi = 0; fi < specs.size(); ++fi) {
    const FamilySpec& spec = specs[fi];
    const int cap = std::min(n, spec.m() + 1);
    bool exhausted_budget = false;
    for_each_subset(n, cap, [&](const std::vector<int>& subset) {
      bool keep = true;
      for_each_partition(
          static_cast<int>(subset.size()), spec.k,
          [&](const std::vector<int>& class_of) {
            if (budget == 0) {
              exhausted_budget = true;
              return false;
            }
            --budget;
            if (!predicate_holds(pts, subset, class_of, spec, d)) {
              rep.ok = false;
              rep.witness_subset = subset;
              rep.witness_family = static_cast<int>(fi);
              keep = false;
              return false;
            }
            return true;
          });
      return keep && !exhausted_budget;
    });
    if (!rep.ok) return rep;
    if (exhausted_budget) {
      rep.exhaustive = false;
      // Sampled fallback: random subsets of the maximal size.
      Rng rng(0x9e3779b9u ^ n);
      for (int attempt = 0; attempt < 2000 && rep.ok; ++attempt) {
        std::vector<int> subset;
        while (static_cast<int>(subset.size()) < cap) {
          int c = static_cast<int>(rng.next_below(n));
          if (std::find(subset.begin(), subset.end(), c) == subset.end())
            subset.push_back(c);
        }
        std::sort(subset.begin(), subset.end());
        for_each_partition(cap, spec.k, [&](const std::vector<int>& class_of) {
          if (!predicate_holds(pts, subset, class_of, spec, d)) {
            rep.ok = false;
            rep.witness_subset = subset;
            rep.witness_family = static_cast<int>(fi);
            return false;
          }
          return true;
        });
      }
      if (!rep.ok) return rep;
    }
  }
  return rep;
}

std::vector<Vec> perturb(const std::vector<Vec>& pts, const Rat& magnitude,
                         Rng& rng) {
  if (magnitude < 0) throw std::invalid_argument("negative magnitude");
  std::vector<Vec> out = pts;
  if (magnitude == 0) return out;
  for (auto& p : out)
    for (auto& x : p) x += rng.range(-magnitude, magnitude);
  return out;
}

}  // namespace chessboard
