#include "chessboard/deform.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace chessboard {

namespace {

Poly poly_div_exact(const Poly& a, const Poly& b) {
  Poly q, r = a;
  q.c.assign(a.c.size() - b.c.size() + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rat f = r.c.back() / b.c.back();
    int shift = r.degree() - b.degree();
    q.c[shift] = f;
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] -= f * b.c[i];
    r.normalize();
  }
  assert(r.is_zero());
  q.normalize();
  return q;
}

// Divides out the common polynomial factor of the coordinates so the
// direction never vanishes along the move.
void content_reduce(PolyVec& v) {
  Poly g;
  for (const auto& p : v) g = poly_gcd(g, p);
  if (g.degree() < 1) return;
  for (auto& p : v)
    if (!p.is_zero()) p = poly_div_exact(p, g);
}

struct SymCand {
  ArrData data;
  bool sym_ok = false;
  bool has_q = false;                   // q belongs to the incidence set
  std::vector<bool> fam_moves;          // family geometry depends on q
  std::vector<PolyVec> dirs;            // per family
  std::vector<std::vector<Poly>> offs;  // per family per class
  struct Prov {
    int family, cls, crosser;
  };
  std::vector<Poly> event_polys;
  std::vector<Prov> provs;
  std::vector<Poly> avoid;
};

std::vector<std::vector<std::vector<int>>> flat_classes(
    const ArrData& data) {
  std::vector<std::vector<std::vector<int>>> out(data.chi.families.size());
  for (size_t f = 0; f < data.chi.families.size(); ++f)
    for (const auto& cls : data.chi.families[f]) {
      std::vector<int> fc;
      for (int color : cls) fc.push_back(data.incidence[color]);
      out[f].push_back(std::move(fc));
    }
  return out;
}

SymCand build_sym(const ArrData& data, const ColoredPointConfig& cfg,
                  const std::vector<FamilySpec>& specs, int q_flat,
                  const PolyVec& q_path) {
  const int d = cfg.d;
  SymCand c;
  c.data = data;
  c.has_q = std::find(data.incidence.begin(), data.incidence.end(), q_flat) !=
            data.incidence.end();
  auto classes = flat_classes(data);
  auto pos = [&](int flat) -> PolyVec {
    return flat == q_flat ? q_path : to_polyvec(cfg.point(flat));
  };
  c.fam_moves.assign(specs.size(), false);
  for (size_t f = 0; f < specs.size(); ++f) {
    std::vector<PolyVec> rows;
    for (const auto& b : specs[f].B_L) rows.push_back(to_polyvec(b));
    for (auto& cls : classes[f]) {
      // anchor on a static member when the class holds q
      auto anchored = cls;
      for (size_t i = 0; i < anchored.size(); ++i)
        if (anchored[i] != q_flat) {
          std::swap(anchored[0], anchored[i]);
          break;
        }
      for (size_t i = 1; i < anchored.size(); ++i) {
        PolyVec diff(d);
        PolyVec a = pos(anchored[i]), b = pos(anchored[0]);
        for (int t = 0; t < d; ++t) diff[t] = a[t] - b[t];
        rows.push_back(std::move(diff));
        if (anchored[i] == q_flat || anchored[0] == q_flat)
          c.fam_moves[f] = true;
      }
      cls = anchored;
    }
    if (static_cast<int>(rows.size()) != d - 1) return c;  // sym_ok stays false
    PolyVec dir = cross_nullvector(rows, d);
    bool all_zero = true;
    for (const auto& p : dir) all_zero = all_zero && p.is_zero();
    if (all_zero) return c;
    content_reduce(dir);
    std::vector<Poly> fam_offs;
    for (const auto& cls : classes[f]) {
      Poly off = dot(dir, pos(cls[0]));
      if (cls[0] == q_flat) c.fam_moves[f] = true;
      fam_offs.push_back(std::move(off));
    }
    c.dirs.push_back(std::move(dir));
    c.offs.push_back(std::move(fam_offs));
  }
  c.sym_ok = true;

  // Event polynomials.
  if (!c.has_q) {
    for (size_t f = 0; f < specs.size(); ++f)
      for (size_t cl = 0; cl < c.offs[f].size(); ++cl) {
        Poly p = dot(c.dirs[f], q_path) - c.offs[f][cl];
        c.event_polys.push_back(std::move(p));
        c.provs.push_back({static_cast<int>(f), static_cast<int>(cl), q_flat});
      }
  } else {
    std::set<int> incid(data.incidence.begin(), data.incidence.end());
    for (size_t f = 0; f < specs.size(); ++f) {
      if (!c.fam_moves[f]) continue;
      for (size_t cl = 0; cl < c.offs[f].size(); ++cl)
        for (int x = 0; x < cfg.total_points(); ++x) {
          if (incid.count(x) || x == q_flat) continue;
          Poly p = dot(c.dirs[f], cfg.point(x)) - c.offs[f][cl];
          c.event_polys.push_back(std::move(p));
          c.provs.push_back({static_cast<int>(f), static_cast<int>(cl), x});
        }
    }
    // degeneracies to keep probes away from: family-internal collisions and
    // q touching hyperplanes other than its own
    auto classes2 = flat_classes(data);
    for (size_t f = 0; f < specs.size(); ++f) {
      if (!c.fam_moves[f]) continue;
      for (size_t a = 0; a < c.offs[f].size(); ++a)
        for (size_t b = a + 1; b < c.offs[f].size(); ++b)
          c.avoid.push_back(c.offs[f][a] - c.offs[f][b]);
    }
    for (size_t f = 0; f < specs.size(); ++f)
      for (size_t cl = 0; cl < c.offs[f].size(); ++cl) {
        bool own = std::find(classes2[f][cl].begin(), classes2[f][cl].end(),
                             q_flat) != classes2[f][cl].end();
        if (!own && (c.fam_moves[f] || true)) {
          Poly p = dot(c.dirs[f], q_path) - c.offs[f][cl];
          if (!p.is_zero() && p.degree() >= 1) c.avoid.push_back(std::move(p));
        }
      }
  }
  return c;
}

ColoredPointConfig config_at(const ColoredPointConfig& cfg, int q_flat,
                             const PolyVec& q_path, const Rat& t) {
  ColoredPointConfig out = cfg;
  out.point(q_flat) = eval(q_path, t);
  return out;
}

std::string interval_str(AlgebraicNumber& t) {
  if (t.is_rational()) return rat_str(t.value());
  return "(" + rat_str(t.lo()) + "," + rat_str(t.hi()) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Pivot walk
// ---------------------------------------------------------------------------

namespace {

struct WalkState {
  const ColoredPointConfig* cfg;
  const std::vector<FamilySpec>* specs;
  int q_flat;
  const PolyVec* q_path;
  AlgebraicNumber* t;
  int d = 0;

  std::vector<std::vector<std::vector<int>>> classes;  // flat ids per family
  std::vector<PolyVec> dirs;
  std::vector<std::vector<Poly>> offs;
  int i0 = -1;
  std::set<int> core0;
  int arrived = -1;

  PolyVec pos(int flat) const {
    return flat == q_flat ? *q_path : to_polyvec(cfg->point(flat));
  }
  int sign_at(const Poly& p) const { return t->sign_of(p); }

  std::set<int> incident() const {
    std::set<int> s;
    for (const auto& fam : classes)
      for (const auto& cls : fam) s.insert(cls.begin(), cls.end());
    return s;
  }

  // Rebuilds direction and offsets of family f from its current classes.
  // For the oversaturated family the arrived incidence is dropped from the
  // pinning rows; the event guarantees consistency at t*.
  void repin_family(int f, int drop_flat) {
    std::vector<PolyVec> rows;
    for (const auto& b : (*specs)[f].B_L) rows.push_back(to_polyvec(b));
    for (auto& cls : classes[f]) {
      auto anchored = cls;
      std::sort(anchored.begin(), anchored.end());
      // static anchor first, drop candidate last
      std::stable_sort(anchored.begin(), anchored.end(), [&](int a, int b2) {
        auto rank = [&](int x) {
          if (x == drop_flat) return 2;
          return x == q_flat ? 1 : 0;
        };
        return rank(a) < rank(b2);
      });
      for (size_t i = 1; i < anchored.size(); ++i) {
        if (anchored[i] == drop_flat) continue;
        PolyVec a = pos(anchored[i]), b = pos(anchored[0]);
        PolyVec diff(d);
        for (int tt = 0; tt < d; ++tt) diff[tt] = a[tt] - b[tt];
        rows.push_back(std::move(diff));
      }
      cls = anchored;
    }
    if (static_cast<int>(rows.size()) != d - 1)
      throw DeformError(DeformError::Kind::GenericityViolation,
                        "pivot family pinning rank mismatch");
    PolyVec dir = cross_nullvector(rows, d);
    bool all_zero = true;
    for (const auto& p : dir) all_zero = all_zero && p.is_zero();
    if (all_zero)
      throw DeformError(DeformError::Kind::GenericityViolation,
                        "pivot family direction vanished");
    content_reduce(dir);
    dirs[f] = std::move(dir);
    offs[f].clear();
    for (const auto& cls : classes[f]) offs[f].push_back(dot(dirs[f], pos(cls[0])));
  }

  // Chessboard label of point x: 0 = A, 1 = B, 2 = boundary. Optionally one
  // hyperplane's side is overridden (used for freshly freed points).
  int label(int x, int ov_f = -1, int ov_c = -1, int ov_side = 0) const {
    int positives = 0;
    PolyVec px = pos(x);
    for (size_t f = 0; f < dirs.size(); ++f) {
      Poly dx = dot(dirs[f], px);
      for (size_t c = 0; c < offs[f].size(); ++c) {
        int s;
        if (static_cast<int>(f) == ov_f && static_cast<int>(c) == ov_c)
          s = ov_side;
        else
          s = sign_at(dx - offs[f][c]);
        if (s == 0) return 2;
        if (s > 0) ++positives;
      }
    }
    return positives % 2;
  }

  // Interior split (A count, B count) of a color, skipping incident points.
  std::pair<int, int> interior_split(int color) const {
    auto inc = incident();
    int a = 0, b = 0;
    for (size_t i = 0; i < cfg->colors[color].size(); ++i) {
      int flat = cfg->flat_id(color, static_cast<int>(i));
      if (inc.count(flat)) continue;
      int l = label(flat);
      if (l == 2)
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "unexpected incidence during pivot");
      (l == 0 ? a : b)++;
    }
    return {a, b};
  }

  std::string state_key(int unbalanced) const {
    std::ostringstream os;
    for (const auto& fam : classes) {
      for (const auto& cls : fam) {
        auto s = cls;
        std::sort(s.begin(), s.end());
        for (int x : s) os << x << ".";
        os << "|";
      }
      os << "/";
    }
    os << "@" << arrived << "#" << unbalanced;
    return os.str();
  }
};

}  // namespace

std::pair<ArrData, std::vector<PivotStep>> pivot_moving_hyperplane(
    const ColoredPointConfig& config, const std::vector<FamilySpec>& specs,
    int q_flat, const PolyVec& q_path, AlgebraicNumber& tstar,
    const ArrData& before, int hit_family, int hit_class, int new_point) {
  WalkState w;
  w.cfg = &config;
  w.specs = &specs;
  w.q_flat = q_flat;
  w.q_path = &q_path;
  w.t = &tstar;
  w.d = config.d;
  w.classes = flat_classes(before);
  w.classes[hit_family][hit_class].push_back(new_point);
  w.i0 = hit_family;
  for (const auto& cls : w.classes[hit_family])
    if (cls.size() >= 2) w.core0.insert(cls.begin(), cls.end());
  w.arrived = new_point;
  w.dirs.resize(specs.size());
  w.offs.resize(specs.size());
  for (size_t f = 0; f < specs.size(); ++f)
    w.repin_family(static_cast<int>(f),
                   static_cast<int>(f) == hit_family ? new_point : -1);
  // consistency: the arrived point really lies on its hyperplane at t*
  if (w.sign_at(dot(w.dirs[hit_family], w.pos(new_point)) -
                w.offs[hit_family][hit_class]) != 0)
    throw DeformError(DeformError::Kind::GenericityViolation,
                      "event incidence does not hold at the event time");

  std::vector<PivotStep> trace;
  std::set<std::string> visited;
  const int max_steps = 4096;

  for (int step = 0; step < max_steps; ++step) {
    int j = config.color_of(w.arrived).first;
    // the other incident point of the unbalanced color
    int other = -1;
    {
      auto inc = w.incident();
      for (int flat : inc) {
        if (flat == w.arrived) continue;
        if (config.color_of(flat).first == j) {
          if (other != -1)
            throw DeformError(DeformError::Kind::GenericityViolation,
                              "three incident points of one color");
          other = flat;
        }
      }
    }
    if (other < 0)
      throw DeformError(DeformError::Kind::GenericityViolation,
                        "unbalanced color lost its second incidence");

    std::string key = w.state_key(j);
    if (visited.count(key))
      throw DeformError(DeformError::Kind::CycleDetected,
                        "pivot revisited a state");
    visited.insert(key);

    if (w.core0.count(other)) {
      // terminal swap: drop the core representative of the arrived color
      PivotStep st;
      st.rule = 0;
      st.freed_point = other;
      st.hit_point = w.arrived;
      trace.push_back(st);
      ArrData out;
      out.incidence.assign(config.num_colors(), -1);
      ValidPartition chi;
      chi.families.resize(specs.size());
      for (size_t f = 0; f < w.classes.size(); ++f)
        for (const auto& cls : w.classes[f]) {
          std::vector<int> colors;
          for (int flat : cls) {
            if (flat == other) continue;
            int col = config.color_of(flat).first;
            if (out.incidence[col] != -1)
              throw DeformError(DeformError::Kind::GenericityViolation,
                                "partner data is not colorful");
            out.incidence[col] = flat;
            colors.push_back(col);
          }
          if (colors.empty())
            throw DeformError(DeformError::Kind::GenericityViolation,
                              "terminal swap emptied a hyperplane");
          chi.families[f].push_back(std::move(colors));
        }
      chi.canonicalize();
      out.chi = std::move(chi);
      return {out, trace};
    }

    if (other == q_flat)
      throw DeformError(DeformError::Kind::GenericityViolation,
                        "walk attempted to free the moving point");

    // locate `other`
    int of = -1, oc = -1;
    for (size_t f = 0; f < w.classes.size() && of < 0; ++f)
      for (size_t c = 0; c < w.classes[f].size(); ++c) {
        const auto& cls = w.classes[f][c];
        if (std::find(cls.begin(), cls.end(), other) != cls.end()) {
          of = static_cast<int>(f);
          oc = static_cast<int>(c);
          break;
        }
      }

    // interior split of color j before freeing `other`
    auto [ja, jb] = w.interior_split(j);
    if (std::abs(ja - jb) != 1)
      throw DeformError(DeformError::Kind::GenericityViolation,
                        "unbalanced color is not off by one");
    int deficient = ja < jb ? 0 : 1;

    auto inc = w.incident();
    std::vector<int> uncovered;
    for (int x = 0; x < config.total_points(); ++x)
      if (!inc.count(x)) uncovered.push_back(x);
    if (uncovered.empty())
      throw DeformError(DeformError::Kind::GenericityViolation,
                        "no free point available for the walk");

    if (w.classes[of][oc].size() == 1) {
      // translation: slide the hyperplane off `other` in the direction that
      // rebalances color j, to the first uncovered point (wrapping around).
      int dir = 0;
      for (int cand_dir : {+1, -1}) {
        int lab = w.label(other, of, oc, -cand_dir);
        if (lab == 2) continue;
        if (lab == deficient) {
          dir = cand_dir;
          break;
        }
      }
      if (dir == 0)
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "no translation direction rebalances the color");

      Poly base = w.offs[of][oc];
      auto w_of = [&](int x) { return dot(w.dirs[of], w.pos(x)) - base; };
      int best = -1;
      Poly best_w;
      bool wrapped = false;
      for (int x : uncovered) {
        Poly wx = w_of(x);
        int s = w.sign_at(wx);
        if (s == 0)
          throw DeformError(DeformError::Kind::GenericityViolation,
                            "uncovered point sits on the sliding hyperplane");
        if (s * dir < 0) continue;
        if (best < 0 || w.sign_at((wx - best_w)) * dir < 0) {
          best = x;
          best_w = wx;
        }
      }
      if (best < 0) {
        // wrap through infinity: re-enter from the far side
        wrapped = true;
        for (int x : uncovered) {
          Poly wx = w_of(x);
          if (best < 0 || w.sign_at((wx - best_w)) * dir < 0) {
            best = x;
            best_w = wx;
          }
        }
      }
      PivotStep st;
      st.rule = 1;
      st.moving_family = of;
      st.freed_point = other;
      st.hit_point = best;
      st.state = w.state_key(j) + (wrapped ? " wrap" : "");
      trace.push_back(st);

      w.classes[of][oc] = {best};
      w.offs[of][oc] = dot(w.dirs[of], w.pos(best));
      w.arrived = best;
    } else {
      // rotation of a fully static family about its codim-2 flats
      if (of == w.i0)
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "rotation requested on the oversaturated family");
      auto classes_minus = w.classes[of];
      auto& cls_o = classes_minus[oc];
      cls_o.erase(std::find(cls_o.begin(), cls_o.end(), other));
      // all static: exact rational rotation data
      std::vector<Vec> pts;
      std::vector<std::vector<int>> idx_classes;
      std::map<int, int> local;
      for (const auto& cls : classes_minus) {
        std::vector<int> loc;
        for (int flat : cls) {
          if (flat == q_flat)
            throw DeformError(DeformError::Kind::GenericityViolation,
                              "rotating family depends on the moving point");
          if (!local.count(flat)) {
            local[flat] = static_cast<int>(pts.size());
            pts.push_back(config.point(flat));
          }
          loc.push_back(local[flat]);
        }
        idx_classes.push_back(std::move(loc));
      }
      auto flats_res = construct_codim2_flats(idx_classes, pts, specs[of]);
      if (std::holds_alternative<Degenerate>(flats_res))
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "codim-2 pinning is rank deficient");
      const auto& flats = std::get<Codim2Flats>(flats_res);
      const Vec& u1 = flats.rotation_plane[0];
      const Vec& u2 = flats.rotation_plane[1];
      // current direction (rational since the family is static)
      Vec v0(w.d);
      for (int i = 0; i < w.d; ++i) {
        if (w.dirs[of][i].degree() > 0)
          throw DeformError(DeformError::Kind::GenericityViolation,
                            "static family has a moving direction");
        v0[i] = w.dirs[of][i].is_zero() ? Rat(0) : w.dirs[of][i].c[0];
      }
      // sweep axis independent of v0
      Mat test{v0, u1};
      Vec axis = rank(test) == 2 ? u1 : u2;

      struct Hit {
        bool infinite;
        Rat tau;
        int x;
        int cls;
      };
      std::vector<Hit> hits;
      Rat min_abs_tau = 0;
      bool have_min = false;
      for (int x : uncovered) {
        const Vec& px = config.point(x);
        for (size_t c = 0; c < classes_minus.size(); ++c) {
          Vec rel = vec_sub(px, config.point(classes_minus[c][0]));
          Rat A = dot(v0, rel), B = dot(axis, rel);
          if (A == 0)
            throw DeformError(DeformError::Kind::GenericityViolation,
                              "uncovered point incident before rotation");
          if (B == 0) {
            hits.push_back({true, Rat(0), x, static_cast<int>(c)});
          } else {
            Rat tau = -A / B;
            hits.push_back({false, tau, x, static_cast<int>(c)});
            Rat a = rat_abs(tau);
            if (!have_min || a < min_abs_tau) {
              min_abs_tau = a;
              have_min = true;
            }
          }
        }
      }
      if (hits.empty())
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "rotation found no stopping point");
      Rat delta = have_min ? Rat(min_abs_tau / 2) : Rat(1);

      // pick the rotation direction that rebalances color j
      int dir = 0;
      for (int cand_dir : {+1, -1}) {
        Vec v_probe = vec_add(v0, vec_scale(cand_dir * delta, axis));
        auto saved_dir = w.dirs[of];
        auto saved_offs = w.offs[of];
        w.dirs[of] = to_polyvec(v_probe);
        w.offs[of].clear();
        for (const auto& cls : classes_minus)
          w.offs[of].push_back(
              Poly::constant(dot(v_probe, config.point(cls[0]))));
        int lab = w.label(other);
        auto [pa, pb] = w.interior_split(j);
        w.dirs[of] = saved_dir;
        w.offs[of] = saved_offs;
        if (lab == 2) continue;
        int aa = pa + (lab == 0 ? 1 : 0), bb = pb + (lab == 1 ? 1 : 0);
        if (aa == bb) {
          dir = cand_dir;
          break;
        }
      }
      if (dir == 0)
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "no rotation direction rebalances the color");

      // angular order from tau=0 in the chosen direction, wrapping at
      // infinity
      auto angle_key = [&](const Hit& h) -> std::pair<int, Rat> {
        if (h.infinite) return {1, Rat(0)};
        if (dir > 0)
          return h.tau > 0 ? std::make_pair(0, h.tau)
                           : std::make_pair(2, h.tau);
        return h.tau < 0 ? std::make_pair(0, Rat(-h.tau))
                         : std::make_pair(2, Rat(-h.tau));
      };
      const Hit* first = nullptr;
      std::pair<int, Rat> first_key;
      for (const auto& h : hits) {
        auto k = angle_key(h);
        if (!first || k < first_key) {
          first = &h;
          first_key = k;
        }
      }
      Vec v_new = first->infinite
                      ? axis
                      : vec_add(v0, vec_scale(first->tau, axis));
      v_new = canonical_direction(v_new);

      PivotStep st;
      st.rule = 2;
      st.moving_family = of;
      st.freed_point = other;
      st.hit_point = first->x;
      st.state = w.state_key(j);
      trace.push_back(st);

      classes_minus[first->cls].push_back(first->x);
      w.classes[of] = classes_minus;
      w.dirs[of] = to_polyvec(v_new);
      w.offs[of].clear();
      for (const auto& cls : w.classes[of])
        w.offs[of].push_back(Poly::constant(dot(v_new, config.point(cls[0]))));
      // distinct offsets sanity
      for (size_t a = 0; a < w.offs[of].size(); ++a)
        for (size_t b = a + 1; b < w.offs[of].size(); ++b)
          if ((w.offs[of][a] - w.offs[of][b]).is_zero())
            throw DeformError(DeformError::Kind::GenericityViolation,
                              "rotation collapsed two hyperplanes");
      w.arrived = first->x;
    }
  }
  throw DeformError(DeformError::Kind::CycleDetected,
                    "pivot walk exceeded the step budget");
}

// ---------------------------------------------------------------------------
// Morph session
// ---------------------------------------------------------------------------

MorphSession::MorphSession(ColoredPointConfig start,
                           std::vector<FamilySpec> specs,
                           std::vector<ArrData> tracked, MorphOptions opts)
    : config_(std::move(start)),
      specs_(std::move(specs)),
      tracked_(std::move(tracked)),
      opts_(opts) {}

std::vector<std::string> MorphSession::tracked_class_keys() const {
  std::vector<std::string> keys;
  for (const auto& data : tracked_) {
    auto res = realize(data, config_, specs_);
    if (std::holds_alternative<Arrangement>(res))
      keys.push_back(
          equivalence_class_key(std::get<Arrangement>(res), specs_));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

namespace {

struct Pending {
  std::shared_ptr<AlgebraicNumber> time;
  int cand;
  SymCand::Prov prov;
};

}  // namespace

MoveOutcome MorphSession::run_move(int flat_point, const Vec& target) {
  MoveOutcome outcome;
  const Vec from = config_.point(flat_point);
  if (from == target) return outcome;
  for (int x = 0; x < config_.total_points(); ++x)
    if (x != flat_point && config_.point(x) == target)
      throw DeformError(DeformError::Kind::GenericityViolation,
                        "move target collides with another point");
  PolyVec q_path = moving_point(from, target);

  std::vector<SymCand> cands;
  std::map<std::string, int> cand_index;
  std::vector<bool> live;

  auto add_cand = [&](const ArrData& data, bool is_live) -> int {
    auto it = cand_index.find(data.id());
    if (it != cand_index.end()) return it->second;
    SymCand c = build_sym(data, config_, specs_, flat_point, q_path);
    int idx = static_cast<int>(cands.size());
    cands.push_back(std::move(c));
    live.push_back(is_live);
    cand_index[data.id()] = idx;
    return idx;
  };

  std::set<std::string> tracked_ids;
  for (const auto& data : tracked_) tracked_ids.insert(data.id());

  for (const auto& data : tracked_) {
    int idx = add_cand(data, true);
    if (!cands[idx].sym_ok)
      throw DeformError(DeformError::Kind::GenericityViolation,
                        "tracked arrangement lost its pinning rank");
  }
  if (opts_.full_detection) {
    const int M = config_.num_colors();
    std::vector<ValidPartition> partitions;
    enumerate_valid_partitions(M, specs_, [&](const ValidPartition& p) {
      partitions.push_back(p);
      return true;
    });
    long long combos = 1;
    for (const auto& c : config_.colors) combos *= static_cast<long long>(c.size());
    if (combos * static_cast<long long>(partitions.size()) > 300000)
      throw std::runtime_error("full event detection beyond candidate budget");
    std::vector<int> pick(M, 0);
    bool done = false;
    while (!done) {
      ArrData data;
      data.incidence.resize(M);
      for (int j = 0; j < M; ++j)
        data.incidence[j] = config_.flat_id(j, pick[j]);
      for (const auto& chi : partitions) {
        data.chi = chi;
        int idx = add_cand(data, tracked_ids.count(data.id()) > 0);
        (void)idx;
      }
      int j = 0;
      while (j < M) {
        if (++pick[j] < static_cast<int>(config_.colors[j].size())) break;
        pick[j] = 0;
        ++j;
      }
      if (j == M) done = true;
    }
  }

  // Collect candidate event times.
  std::vector<Pending> pending;
  auto harvest = [&](int ci, const Rat& lo) {
    const SymCand& c = cands[ci];
    if (!c.sym_ok) return;
    for (size_t e = 0; e < c.event_polys.size(); ++e) {
      const Poly& p = c.event_polys[e];
      if (p.is_zero()) {
        if (live[ci])
          throw DeformError(DeformError::Kind::GenericityViolation,
                            "point rides a tracked hyperplane");
        continue;
      }
      if (live[ci] && ((lo == 0 && p.eval(Rat(0)) == 0) || p.eval(Rat(1)) == 0))
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "incidence at a move endpoint");
      if (p.degree() < 1) continue;
      for (auto& root : isolate_roots(p, lo, Rat(1)))
        pending.push_back({std::make_shared<AlgebraicNumber>(root), ci,
                           c.provs[e]});
    }
  };
  for (size_t ci = 0; ci < cands.size(); ++ci)
    harvest(static_cast<int>(ci), Rat(0));

  auto status_at = [&](const ArrData& data, const Rat& t) -> std::optional<bool> {
    ColoredPointConfig snap = config_at(config_, flat_point, q_path, t);
    auto res = realize(data, snap, specs_);
    if (!std::holds_alternative<Arrangement>(res)) return std::nullopt;
    return is_bisecting(std::get<Arrangement>(res), snap);
  };

  // Process events in exact time order.
  std::vector<char> used(pending.size(), 0);
  while (true) {
    int best = -1;
    for (size_t i = 0; i < pending.size(); ++i) {
      if (used[i]) continue;
      if (best < 0 ||
          pending[i].time->compare(*pending[best].time) < 0)
        best = static_cast<int>(i);
    }
    if (best < 0) break;
    std::vector<int> group{best};
    for (size_t i = 0; i < pending.size(); ++i) {
      if (used[i] || static_cast<int>(i) == best) continue;
      if (pending[i].time->compare(*pending[best].time) == 0)
        group.push_back(static_cast<int>(i));
    }
    for (int g : group) used[g] = 1;
    AlgebraicNumber& tstar = *pending[best].time;

    // Probe safety: the min-scan refined this time against every other
    // pending root, so only avoid-polynomials (and, later, the partner's
    // polynomials) still need excluding from the interval.
    std::set<int> group_cands;
    for (int g : group) group_cands.insert(pending[g].cand);
    auto exclude_avoid = [&](int ci) {
      for (const auto& p : cands[ci].avoid) {
        if (p.is_zero()) continue;
        if (tstar.sign_of(p) == 0)
          throw DeformError(DeformError::Kind::GenericityViolation,
                            "degeneracy coincides with an event");
        tstar.exclude(p);
      }
    };
    auto exclude_events_of = [&](int ci) {
      int vanish = 0;
      for (const auto& p : cands[ci].event_polys) {
        if (p.is_zero()) continue;
        if (tstar.sign_of(p) == 0)
          ++vanish;
        else
          tstar.exclude(p);
      }
      return vanish;
    };
    for (int ci : group_cands) exclude_avoid(ci);

    Rat ta = tstar.probe_below();
    Rat tb = tstar.probe_above();

    struct Participant {
      int cand;
      bool before, after;
      SymCand::Prov prov;
    };
    std::vector<Participant> participants;
    for (int ci : group_cands) {
      // provenance: first group entry of this candidate
      SymCand::Prov prov{};
      int vanishing = 0;
      for (int g : group)
        if (pending[g].cand == ci) {
          if (vanishing == 0) prov = pending[g].prov;
          ++vanishing;
        }
      auto b = status_at(cands[ci].data, ta);
      auto a = status_at(cands[ci].data, tb);
      if (!b || !a)
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "degenerate realization at a probe time");
      if (*b == *a) continue;  // touch or spurious root
      if (vanishing > 1)
        throw DeformError(DeformError::Kind::SimultaneousEvents,
                          "one arrangement met two degeneracies at once");
      participants.push_back({ci, *b, *a, prov});
    }
    if (participants.empty()) continue;
    if (participants.size() > 2)
      throw DeformError(DeformError::Kind::SimultaneousEvents,
                        "more than two arrangements changed at one time");

    // find the partner by the moving-hyperplane walk
    const Participant& lead = participants[0];
    auto [partner, trace] = pivot_moving_hyperplane(
        config_, specs_, flat_point, q_path, tstar, cands[lead.cand].data,
        lead.prov.family, lead.prov.cls, lead.prov.crosser);
    if (partner.id() == cands[lead.cand].data.id())
      throw DeformError(DeformError::Kind::GenericityViolation,
                        "walk returned its starting arrangement");

    if (participants.size() == 2 &&
        partner.id() != cands[participants[1].cand].data.id())
      throw DeformError(DeformError::Kind::SimultaneousEvents,
                        "two events with unrelated partners at one time");

    int partner_ci = -1;
    bool partner_was_new = cand_index.count(partner.id()) == 0;
    if (participants.size() == 1) {
      partner_ci = add_cand(partner, false);
      if (!cands[partner_ci].sym_ok)
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "partner arrangement is not realizable");
      // the partner's own dual crossing must vanish at t*
      int vanish = exclude_events_of(partner_ci);
      exclude_avoid(partner_ci);
      if (vanish < 1)
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "partner has no incidence at the event time");
      if (vanish > 1)
        throw DeformError(DeformError::Kind::SimultaneousEvents,
                          "partner meets two degeneracies at once");
      ta = tstar.probe_below();
      tb = tstar.probe_above();
      auto b = status_at(partner, ta);
      auto a = status_at(partner, tb);
      if (!b || !a)
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "partner degenerate at a probe time");
      if (*b == *a)
        throw DeformError(DeformError::Kind::GenericityViolation,
                          "partner status did not flip across the event");
      participants.push_back({partner_ci, *b, *a, lead.prov});
      // re-evaluate the lead with the final probes
      auto b0 = status_at(cands[lead.cand].data, ta);
      auto a0 = status_at(cands[lead.cand].data, tb);
      participants[0].before = *b0;
      participants[0].after = *a0;
    }

    EventRecord rec;
    rec.time_approx = tstar.approx();
    rec.time_interval = interval_str(tstar);
    rec.pivot_trace = opts_.record_traces ? trace : std::vector<PivotStep>{};
    rec.partner = partner.id();
    int dying = 0, born = 0;
    for (const auto& p : participants) {
      if (p.before && !p.after) {
        ++dying;
        rec.dying.push_back(cands[p.cand].data.id());
        if (live[p.cand]) {
          live[p.cand] = false;
          auto it = std::find_if(
              tracked_.begin(), tracked_.end(), [&](const ArrData& d) {
                return d.id() == cands[p.cand].data.id();
              });
          if (it != tracked_.end()) tracked_.erase(it);
        } else {
          rec.anomaly = true;  // a true bisector we were not tracking died
          ++outcome.anomalies;
        }
      } else if (!p.before && p.after) {
        ++born;
        rec.born.push_back(cands[p.cand].data.id());
        if (!live[p.cand]) {
          live[p.cand] = true;
          tracked_.push_back(cands[p.cand].data);
          if (p.cand == partner_ci && partner_was_new) {
            harvest(p.cand, tb);
            used.resize(pending.size(), 0);
          }
        }
      }
    }
    rec.delta = born - dying;
    outcome.events.push_back(std::move(rec));
  }

  config_.point(flat_point) = target;
  for (const auto& data : tracked_) {
    auto res = realize(data, config_, specs_);
    if (!std::holds_alternative<Arrangement>(res))
      throw DeformError(DeformError::Kind::GenericityViolation,
                        "tracked arrangement degenerate at move end");
    if (!is_bisecting(std::get<Arrangement>(res), config_))
      throw DeformError(DeformError::Kind::GenericityViolation,
                        "tracked arrangement stopped bisecting unnoticed");
  }
  return outcome;
}

ParityInvarianceReport verify_parity_invariance(
    const DeformationPath& path, const std::vector<FamilySpec>& specs,
    long long oracle_budget) {
  ParityInvarianceReport rep;
  ColoredPointConfig cfg = path.base;

  auto oracle_tracked = [&](const ColoredPointConfig& c) {
    OracleResult res = brute_force_bisectors(c, specs);
    return res.all_bisecting;
  };
  BigInt cand = oracle_candidate_count(cfg, specs);
  bool use_oracle = cand <= BigInt(static_cast<long>(oracle_budget));
  if (!use_oracle) {
    rep.ok = false;
    rep.failure = "instance beyond the oracle budget";
    return rep;
  }

  MorphOptions opts;
  opts.full_detection = true;
  MorphSession session(cfg, specs, oracle_tracked(cfg), opts);
  size_t parity = session.tracked().size() % 2;
  rep.tracked_sizes.push_back(static_cast<int>(session.tracked().size()));

  for (const auto& mv : path.moves) {
    int flat = session.config().flat_id(mv.color, mv.index);
    MoveOutcome out;
    try {
      out = session.run_move(flat, mv.target);
    } catch (const DeformError& e) {
      rep.ok = false;
      rep.failure = e.what();
      return rep;
    }
    rep.events += static_cast<int>(out.events.size());
    for (const auto& ev : out.events) {
      if (ev.delta != -2 && ev.delta != 0 && ev.delta != 2) {
        rep.deltas_ok = false;
        rep.ok = false;
      }
      if (ev.anomaly) {
        rep.ok = false;
        rep.failure = "untracked bisector died";
      }
    }
    rep.tracked_sizes.push_back(static_cast<int>(session.tracked().size()));
    if (session.tracked().size() % 2 != parity) {
      rep.parity_constant = false;
      rep.ok = false;
    }
    // boundary cross-check against the oracle
    auto truth = oracle_tracked(session.config());
    std::set<std::string> a, b;
    for (const auto& d : truth) a.insert(d.id());
    for (const auto& d : session.tracked()) b.insert(d.id());
    if (a != b) {
      rep.oracle_agrees = false;
      rep.ok = false;
      rep.failure = "tracked set differs from the oracle at a move boundary";
    }
  }
  return rep;
}

}  // namespace chessboard
