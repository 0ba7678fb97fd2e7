#include "chessboard/symmetric_start.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "chessboard/parity.hpp"

namespace chessboard {

namespace {

Rat l1_norm(const Vec& v) {
  Rat s = 0;
  for (const auto& x : v) s += rat_abs(x);
  return s;
}

// Smallest gap between distinct center projections along v. Centers sharing
// a hyperplane of a canonical arrangement legitimately project equally, so
// equal values impose no constraint. Returns 0 when all projections agree.
Rat min_projection_gap(const std::vector<Vec>& centers, const Vec& v) {
  std::vector<Rat> proj;
  proj.reserve(centers.size());
  for (const auto& p : centers) proj.push_back(dot(v, p));
  std::sort(proj.begin(), proj.end());
  proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
  Rat best = 0;
  for (size_t i = 1; i < proj.size(); ++i) {
    Rat g = proj[i] - proj[i - 1];
    if (best == 0 || g < best) best = g;
  }
  return best;
}

}  // namespace

SymmetricStart build_symmetric_start(const std::vector<FamilySpec>& specs,
                                     int cluster_size, std::uint64_t seed,
                                     const StartOptions& opts) {
  int M = 0;
  for (const auto& s : specs) M += s.m();
  return build_symmetric_start(specs, std::vector<int>(M, cluster_size), seed,
                               opts);
}

SymmetricStart build_symmetric_start(const std::vector<FamilySpec>& specs,
                                     const std::vector<int>& cluster_sizes,
                                     std::uint64_t seed,
                                     const StartOptions& opts) {
  if (specs.empty()) throw std::invalid_argument("no families");
  const int d = specs[0].L.ambient;
  int M = 0;
  for (const auto& s : specs) M += s.m();
  if (static_cast<int>(cluster_sizes.size()) != M)
    throw std::invalid_argument("need one cluster size per color");
  for (int s : cluster_sizes)
    if (s < 1 || s % 2 == 0)
      throw std::invalid_argument("cluster sizes must be odd and positive");

  Vec box_lo(d, Rat(0)), box_hi(d, Rat(64));
  if (opts.center_box) {
    box_lo = opts.center_box->first;
    box_hi = opts.center_box->second;
  }

  Rng rng(seed);
  std::string last_failure = "no attempt ran";
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    Rng attempt_rng = rng.fork(attempt);

    // Generic centers.
    std::vector<Vec> centers(M, Vec(d));
    for (auto& p : centers)
      for (int i = 0; i < d; ++i) p[i] = attempt_rng.range(box_lo[i], box_hi[i]);
    auto gen = check_generic(centers, specs, opts.generic_budget);
    if (!gen.ok) {
      last_failure = "degenerate centers";
      continue;
    }

    // All canonical arrangements through the centers.
    ColoredPointConfig center_cfg;
    center_cfg.d = d;
    for (const auto& p : centers) center_cfg.colors.push_back({p});

    std::vector<ArrData> canonical;
    std::vector<Arrangement> arrs;
    bool degenerate = false;
    enumerate_valid_partitions(M, specs, [&](const ValidPartition& chi) {
      ArrData data;
      data.incidence.resize(M);
      for (int j = 0; j < M; ++j) data.incidence[j] = j;
      data.chi = chi;
      auto res = construct_arrangement(chi, centers, specs);
      if (std::holds_alternative<Degenerate>(res)) {
        degenerate = true;
        return false;
      }
      canonical.push_back(std::move(data));
      arrs.push_back(std::get<Arrangement>(res));
      return true;
    });
    if (degenerate) {
      last_failure = "degenerate canonical arrangement";
      continue;
    }

    // Cluster radius from the tightest projection gap over the canonical
    // directions.
    Rat eps(1, 4);
    for (const auto& arr : arrs)
      for (const auto& fam : arr.families) {
        Rat gap = min_projection_gap(centers, fam.direction);
        if (gap == 0) continue;  // single projection value, no constraint
        Rat bound = gap / (8 * l1_norm(fam.direction));
        if (bound < eps) eps = bound;
      }

    // Clusters: center plus near-antipodal pairs, lightly perturbed.
    SymmetricStart out;
    out.config.d = d;
    Rat eta = eps / 1024;
    for (int j = 0; j < M; ++j) {
      std::vector<Vec> cluster{centers[j]};
      int pairs = (cluster_sizes[j] - 1) / 2;
      for (int t = 0; t < pairs; ++t) {
        Vec xi(d), noise_a(d), noise_b(d);
        for (int i = 0; i < d; ++i) {
          xi[i] = attempt_rng.range(eps / 2, eps);
          if (attempt_rng.next() & 1) xi[i] = -xi[i];
          noise_a[i] = attempt_rng.range(-eta, eta);
          noise_b[i] = attempt_rng.range(-eta, eta);
        }
        cluster.push_back(vec_add(vec_add(centers[j], xi), noise_a));
        cluster.push_back(vec_add(vec_sub(centers[j], xi), noise_b));
      }
      out.config.colors.push_back(std::move(cluster));
    }
    out.centers = centers;
    out.canonical = std::move(canonical);
    out.canonical_arrs = std::move(arrs);

    // Median property along every canonical direction: the center must split
    // each cluster evenly and strictly.
    bool median_ok = true;
    for (const auto& arr : out.canonical_arrs) {
      for (const auto& fam : arr.families) {
        for (int j = 0; j < M && median_ok; ++j) {
          Rat c = dot(fam.direction, centers[j]);
          int below = 0, above = 0;
          for (size_t i = 1; i < out.config.colors[j].size(); ++i) {
            int s = sgn(Rat(dot(fam.direction, out.config.colors[j][i]) - c));
            if (s == 0) {
              median_ok = false;
              break;
            }
            (s < 0 ? below : above)++;
          }
          if (below != above) median_ok = false;
        }
        if (!median_ok) break;
      }
      if (!median_ok) break;
    }
    if (!median_ok) {
      last_failure = "median property failed";
      continue;
    }

    // Each canonical arrangement must bisect the clustered config.
    bool bisect_ok = true;
    for (const auto& arr : out.canonical_arrs)
      if (!is_bisecting(arr, out.config)) {
        bisect_ok = false;
        break;
      }
    if (!bisect_ok) {
      last_failure = "canonical arrangement not bisecting";
      continue;
    }

    auto cfg_gen =
        check_generic(out.config.all_points(), specs, opts.generic_budget);
    if (!cfg_gen.ok) {
      last_failure = "degenerate cluster points";
      continue;
    }

    std::set<std::string> keys;
    for (size_t i = 0; i < out.canonical_arrs.size(); ++i)
      keys.insert(equivalence_class_key(out.canonical_arrs[i], specs));
    out.class_count = static_cast<int>(keys.size());

    // Exhaustive confirmation that the canonical set is the whole bisecting
    // set, when the candidate space is small enough to scan.
    BigInt cand = oracle_candidate_count(out.config, specs);
    if (cand <= BigInt(static_cast<long>(opts.oracle_budget))) {
      OracleResult oracle = brute_force_bisectors(out.config, specs);
      std::set<std::string> oracle_keys;
      for (const auto& [data, arr] : oracle.representatives)
        oracle_keys.insert(equivalence_class_key(arr, specs));
      if (oracle_keys != keys ||
          oracle.all_bisecting.size() != out.canonical.size()) {
        last_failure = "cluster config admits extra bisectors";
        continue;
      }
      out.oracle_verified = true;
    }
    return out;
  }
  throw std::runtime_error("symmetric start construction failed: " +
                           last_failure);
}

}  // namespace chessboard
