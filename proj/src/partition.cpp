#include "chessboard/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chessboard/parity.hpp"

namespace chessboard {

std::vector<int> ValidPartition::group(int i) const {
  std::vector<int> g;
  for (const auto& cls : families[i]) g.insert(g.end(), cls.begin(), cls.end());
  std::sort(g.begin(), g.end());
  return g;
}

void ValidPartition::canonicalize() {
  for (auto& fam : families) {
    for (auto& cls : fam) std::sort(cls.begin(), cls.end());
    std::sort(fam.begin(), fam.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
  }
}

std::string ValidPartition::bar_notation() const {
  bool wide = false;
  for (const auto& fam : families)
    for (const auto& cls : fam)
      for (int x : cls)
        if (x >= 9) wide = true;
  std::ostringstream os;
  for (size_t i = 0; i < families.size(); ++i) {
    if (i) os << " || ";
    for (size_t c = 0; c < families[i].size(); ++c) {
      if (c) os << "|";
      for (size_t t = 0; t < families[i][c].size(); ++t) {
        if (t && wide) os << ",";
        os << families[i][c][t] + 1;
      }
    }
  }
  return os.str();
}

namespace {

// Set partitions of `elems` into exactly k nonempty classes, canonical order.
void for_each_set_partition(
    const std::vector<int>& elems, int k,
    const std::function<bool(const std::vector<std::vector<int>>&)>& fn,
    bool& stop) {
  int n = static_cast<int>(elems.size());
  if (k > n) return;
  std::vector<int> a(n, 0), mx(n, 0);
  auto emit = [&]() {
    int classes = mx[n - 1] + 1;
    if (classes != k) return true;
    std::vector<std::vector<int>> cls(k);
    for (int i = 0; i < n; ++i) cls[a[i]].push_back(elems[i]);
    // Restricted growth strings already order classes by minimal element.
    return fn(cls);
  };
  while (true) {
    if (!emit()) {
      stop = true;
      return;
    }
    int i = n - 1;
    while (i > 0 && a[i] >= mx[i - 1] + 1) --i;
    if (i <= 0) return;
    ++a[i];
    mx[i] = std::max(mx[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      mx[j] = mx[j - 1];
    }
  }
}

// Ordered partitions of `pool` into groups of the given sizes.
void for_each_grouping(
    std::vector<int> pool, const std::vector<int>& sizes, size_t gi,
    std::vector<std::vector<int>>& acc,
    const std::function<bool(const std::vector<std::vector<int>>&)>& fn,
    bool& stop) {
  if (gi == sizes.size()) {
    if (!fn(acc)) stop = true;
    return;
  }
  int need = sizes[gi];
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int start) {
    if (stop) return;
    if (static_cast<int>(chosen.size()) == need) {
      std::vector<int> rest;
      size_t ci = 0;
      for (int x : pool) {
        if (ci < chosen.size() && x == chosen[ci]) {
          ++ci;
        } else {
          rest.push_back(x);
        }
      }
      acc.push_back(chosen);
      for_each_grouping(rest, sizes, gi + 1, acc, fn, stop);
      acc.pop_back();
      return;
    }
    for (int i = start; i < static_cast<int>(pool.size()); ++i) {
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace

void enumerate_valid_partitions(
    int M, const std::vector<FamilySpec>& specs,
    const std::function<bool(const ValidPartition&)>& fn) {
  std::vector<int> sizes;
  int sum = 0;
  for (const auto& s : specs) {
    sizes.push_back(s.m());
    sum += s.m();
  }
  if (sum != M)
    throw std::invalid_argument("sum of family sizes m_i must equal M");

  std::vector<int> pool(M);
  std::iota(pool.begin(), pool.end(), 0);
  bool stop = false;
  std::vector<std::vector<int>> groups;

  std::function<bool(const std::vector<std::vector<int>>&)> on_grouping =
      [&](const std::vector<std::vector<int>>& gs) {
        // Refine each group into k_i classes, taking the cartesian product
        // family by family.
        ValidPartition part;
        part.families.resize(specs.size());
        std::function<bool(size_t)> refine = [&](size_t fi) -> bool {
          if (fi == specs.size()) return fn(part);
          bool inner_stop = false;
          bool keep_going = true;
          for_each_set_partition(
              gs[fi], specs[fi].k,
              [&](const std::vector<std::vector<int>>& cls) {
                part.families[fi] = cls;
                if (!refine(fi + 1)) {
                  keep_going = false;
                  return false;
                }
                return true;
              },
              inner_stop);
          part.families[fi].clear();
          return keep_going;
        };
        return refine(0);
      };

  for_each_grouping(pool, sizes, 0, groups, on_grouping, stop);
}

BigInt count_valid_partitions(int M, const std::vector<FamilySpec>& specs) {
  std::vector<int> ms;
  BigInt prod = 1;
  for (const auto& s : specs) {
    ms.push_back(s.m());
    prod *= stirling2(s.m(), s.k);
  }
  return multinomial(M, ms) * prod;
}

}  // namespace chessboard
