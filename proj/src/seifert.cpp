#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>

#include "linklab/invariants.hpp"
#include "linklab/moves.hpp"

namespace linklab {

// The Seifert surface is modelled as one flat disk per smoothed circle,
// stacked by nesting depth (deeper circles sit higher), joined by bands at
// the crossings.  A band between sibling circles keeps the crossing's half
// twist; a band between a circle and one nested directly inside it is an
// untwisted ramp.  Generator curves hug each disk's rim between the bands
// they use, so all projected crossings between curves fall into three local
// classes (same-rim, shared twisted band, ramp over a rim) and pushoff
// linking numbers reduce to exact bookkeeping over those classes.
struct SeifertSurface {
  const PlanarDiagram diagram;

  int circle_count = 0;
  std::vector<int> circle_of_arc;               // arc -> circle
  std::vector<std::vector<Arc>> circle_arcs;    // traversal order
  std::vector<std::vector<int>> circle_sites;   // crossing index at each transition
  std::vector<int> orientation;                 // +1 when the circle runs counterclockwise
  std::vector<int> depth;

  struct Band {
    int crossing = -1;      // index into diagram.crossings()
    int circle_a = -1;      // circle of the (u_in -> o_out) smoothing piece
    int circle_b = -1;      // circle of the (o_in -> u_out) piece
    int site_a = -1, site_b = -1;  // positions in circle_sites
    bool nested = false;
    int parent = -1;        // outer circle when nested
    int sign = 0;
  };
  std::vector<Band> bands;

  std::vector<std::vector<int>> cycles;  // fundamental cycles as band indices

  explicit SeifertSurface(const PlanarDiagram& d);
  IntMatrix pushoff_matrix() const;
};

namespace {

// Conventions fixed by calibration against independently computed Alexander
// polynomials and determinants (see tests/oracles.cpp); each is a global
// orientation choice and the set below reproduces the usual tables.
constexpr int kBandSign = -1;   // sign of a shared twisted-band crossing
constexpr int kCapNormal = +1;  // disk normal is +z on counterclockwise circles
constexpr int kSelfTwist = -1;  // framing correction per twisted band

struct Uf {
  std::vector<int> p;
  explicit Uf(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

SeifertSurface::SeifertSurface(const PlanarDiagram& d) : diagram(d) {
  const auto& crossings = d.crossings();
  const int n_arcs = d.arc_count();

  if (split_partition(d).size() != 1)
    throw DiagramError("Seifert algorithm needs a connected diagram");

  // Oriented smoothing successor: u_in -> o_out and o_in -> u_out.
  std::vector<Arc> succ(n_arcs + 1, 0);
  for (const Crossing& c : crossings) {
    succ[c.under_in] = c.over_out;
    succ[c.over_in] = c.under_out;
  }

  circle_of_arc.assign(n_arcs + 1, -1);
  for (Arc a = 1; a <= n_arcs; ++a) {
    if (circle_of_arc[a] != -1) continue;
    const int id = circle_count++;
    std::vector<Arc> arcs;
    Arc cur = a;
    do {
      circle_of_arc[cur] = id;
      arcs.push_back(cur);
      cur = succ[cur] == 0 ? a : succ[cur];
    } while (cur != a);
    circle_arcs.push_back(std::move(arcs));
  }

  if (crossings.empty()) {
    orientation.assign(circle_count, +1);
    depth.assign(circle_count, 0);
    circle_sites.resize(circle_count);
    return;
  }

  // Crossing index lookup for arc transitions (arc -> crossing where it is an
  // in-slot).
  std::vector<int> in_cross(n_arcs + 1, -1);
  for (size_t i = 0; i < crossings.size(); ++i) {
    in_cross[crossings[i].under_in] = static_cast<int>(i);
    in_cross[crossings[i].over_in] = static_cast<int>(i);
  }
  circle_sites.resize(circle_count);
  for (int s = 0; s < circle_count; ++s)
    for (Arc a : circle_arcs[s]) circle_sites[s].push_back(in_cross[a]);

  // Smoothed regions: faces of the diagram merged across each crossing's two
  // non-smoothing corners.
  FaceStructure fs(d);
  Uf regions(static_cast<int>(fs.faces().size()));
  for (size_t i = 0; i < crossings.size(); ++i) {
    const bool positive = crossings[i].sign == Sign::positive;
    const int ca = positive ? 1 : 0;
    const int cb = positive ? 3 : 2;
    regions.unite(fs.face_at_corner(static_cast<int>(i), ca),
                  fs.face_at_corner(static_cast<int>(i), cb));
  }

  // Each smoothed circle has a well-defined left and right region.
  std::vector<int> left_region(circle_count, -1), right_region(circle_count, -1);
  for (int s = 0; s < circle_count; ++s) {
    for (Arc a : circle_arcs[s]) {
      const int lf = regions.find(fs.face_of_side({a, true}));
      const int rf = regions.find(fs.face_of_side({a, false}));
      if (left_region[s] == -1) {
        left_region[s] = lf;
        right_region[s] = rf;
      } else if (left_region[s] != lf || right_region[s] != rf) {
        throw DiagramError("internal: smoothed circle has inconsistent sides");
      }
    }
  }

  // Region tree rooted at a deterministic outer region; circles separate
  // their two regions, deeper region = inside.
  const int outer = regions.find(fs.face_of_side({1, false}));
  std::map<int, std::vector<std::pair<int, int>>> adjacency;  // region -> (circle, other)
  for (int s = 0; s < circle_count; ++s) {
    adjacency[left_region[s]].push_back({s, right_region[s]});
    adjacency[right_region[s]].push_back({s, left_region[s]});
  }
  std::map<int, int> region_depth;
  region_depth[outer] = 0;
  std::vector<int> queue{outer};
  depth.assign(circle_count, -1);
  orientation.assign(circle_count, 0);
  std::vector<int> inside_region(circle_count, -1);
  for (size_t q = 0; q < queue.size(); ++q) {
    const int r = queue[q];
    for (auto [circle, other] : adjacency[r]) {
      if (depth[circle] != -1) continue;
      depth[circle] = region_depth.at(r);
      inside_region[circle] = other;
      orientation[circle] = (left_region[circle] == other) ? +1 : -1;
      if (!region_depth.count(other)) {
        region_depth[other] = region_depth.at(r) + 1;
        queue.push_back(other);
      }
    }
  }
  for (int s = 0; s < circle_count; ++s)
    if (depth[s] == -1) throw DiagramError("internal: region tree did not reach every circle");

  // Bands, one per crossing.
  for (size_t i = 0; i < crossings.size(); ++i) {
    const Crossing& c = crossings[i];
    Band b;
    b.crossing = static_cast<int>(i);
    b.circle_a = circle_of_arc[c.under_in];
    b.circle_b = circle_of_arc[c.over_in];
    b.sign = sign_value(c.sign);
    if (b.circle_a == b.circle_b)
      throw DiagramError("internal: smoothing produced a one-circle crossing");
    auto site_of = [&](int circle, Arc in_arc) {
      const auto& arcs = circle_arcs[circle];
      for (size_t k = 0; k < arcs.size(); ++k)
        if (arcs[k] == in_arc) return static_cast<int>(k);
      throw DiagramError("internal: crossing site missing from circle");
    };
    b.site_a = site_of(b.circle_a, c.under_in);
    b.site_b = site_of(b.circle_b, c.over_in);

    const bool positive = c.sign == Sign::positive;
    const int merged_corner = positive ? 1 : 0;
    const int band_region = regions.find(fs.face_at_corner(static_cast<int>(i), merged_corner));
    const bool inside_a = band_region == inside_region[b.circle_a];
    const bool inside_b = band_region == inside_region[b.circle_b];
    if (inside_a && inside_b) throw DiagramError("internal: band region inside both circles");
    b.nested = inside_a || inside_b;
    if (b.nested) {
      b.parent = inside_a ? b.circle_a : b.circle_b;
      const int child = inside_a ? b.circle_b : b.circle_a;
      if (depth[child] != depth[b.parent] + 1 || orientation[child] != orientation[b.parent])
        throw DiagramError("internal: nested band geometry is inconsistent");
    } else {
      if (depth[b.circle_a] != depth[b.circle_b] ||
          orientation[b.circle_a] != -orientation[b.circle_b])
        throw DiagramError("internal: sibling band geometry is inconsistent");
    }
    bands.push_back(b);
  }

  // Fundamental cycles from a spanning tree over (circles, bands).
  std::vector<int> tree_parent_band(circle_count, -1);
  std::vector<char> reached(circle_count, 0);
  reached[0] = 1;
  std::vector<int> order{0};
  for (size_t q = 0; q < order.size(); ++q) {
    for (size_t bi = 0; bi < bands.size(); ++bi) {
      const Band& b = bands[bi];
      int to = -1;
      if (b.circle_a == order[q] && !reached[b.circle_b]) to = b.circle_b;
      if (b.circle_b == order[q] && !reached[b.circle_a]) to = b.circle_a;
      if (to == -1) continue;
      reached[to] = 1;
      tree_parent_band[to] = static_cast<int>(bi);
      order.push_back(to);
    }
  }
  for (int s = 0; s < circle_count; ++s)
    if (!reached[s]) throw DiagramError("internal: Seifert graph is disconnected");

  std::set<int> tree_bands;
  for (int s = 0; s < circle_count; ++s)
    if (tree_parent_band[s] >= 0) tree_bands.insert(tree_parent_band[s]);

  auto tree_path_up = [&](int circle) {
    std::vector<int> path;  // band indices from circle up to the root
    int cur = circle;
    while (tree_parent_band[cur] >= 0) {
      const int bi = tree_parent_band[cur];
      path.push_back(bi);
      cur = bands[bi].circle_a == cur ? bands[bi].circle_b : bands[bi].circle_a;
    }
    return path;
  };

  for (size_t bi = 0; bi < bands.size(); ++bi) {
    if (tree_bands.count(static_cast<int>(bi))) continue;
    // cycle: the extra band, then the tree path between its endpoints
    std::vector<int> up_a = tree_path_up(bands[bi].circle_a);
    std::vector<int> up_b = tree_path_up(bands[bi].circle_b);
    while (!up_a.empty() && !up_b.empty() && up_a.back() == up_b.back()) {
      up_a.pop_back();
      up_b.pop_back();
    }
    std::vector<int> cycle{static_cast<int>(bi)};
    cycle.insert(cycle.end(), up_b.begin(), up_b.end());
    cycle.insert(cycle.end(), up_a.rbegin(), up_a.rend());
    cycles.push_back(std::move(cycle));
  }
}

namespace {

// A curve's one visit to a circle: slants in and out at its entry/exit sites,
// an arc between them at its radial slot, run along the circle's traversal
// direction from entry to exit.
struct CapSegment {
  int cycle = -1;
  int slot = -1;
  // angular keys: (site, band width slot, micro side); side 0 = slant,
  // side -1/+1 = ramp placed just before/after the slant
  std::array<int, 3> key_in{}, key_out{};
};

struct RampPiece {
  int cycle = -1;
  std::array<int, 3> key{};
  bool inward = false;  // true: the curve descends from this parent circle to the child
};

struct BandPassage {
  int cycle = -1;
  int width = -1;
  int dir = 0;  // +1 traversing circle_a -> circle_b
};

bool cyclic_inside(const std::array<int, 3>& a, const std::array<int, 3>& k,
                   const std::array<int, 3>& b) {
  // strict cyclic "k lies between a and b" in traversal order
  if (a < b) return a < k && k < b;
  return k > a || k < b;
}

}  // namespace

IntMatrix SeifertSurface::pushoff_matrix() const {
  const int m = static_cast<int>(cycles.size());
  IntMatrix v(m, m);
  if (m == 0) return v;

  // Traversal data per cycle: per band, direction; per circle, entry/exit.
  std::vector<std::map<int, BandPassage>> passage(m);   // band -> passage
  std::vector<std::map<int, CapSegment>> segment(m);    // circle -> segment
  std::vector<std::vector<int>> band_users(bands.size());

  for (int i = 0; i < m; ++i) {
    const std::vector<int>& cyc = cycles[i];
    // cycles are built to start from circle_a of their leading band
    const int start = bands[cyc.front()].circle_a;
    int at = start;
    for (int bi : cyc) {
      const Band& b = bands[bi];
      if (b.circle_a != at && b.circle_b != at)
        throw DiagramError("internal: generator cycle does not chain");
      BandPassage p;
      p.cycle = i;
      p.dir = (b.circle_a == at) ? +1 : -1;
      passage[i][bi] = p;
      band_users[bi].push_back(i);
      at = (b.circle_a == at) ? b.circle_b : b.circle_a;
    }
    if (at != start) throw DiagramError("internal: generator cycle does not close");
  }
  for (auto& users : band_users) std::sort(users.begin(), users.end());
  for (int i = 0; i < m; ++i)
    for (auto& [bi, p] : passage[i]) {
      const auto& users = band_users[bi];
      p.width = static_cast<int>(std::find(users.begin(), users.end(), i) - users.begin());
    }

  // Micro key of a strand's slant at one band foot.  Width order along the
  // rim follows the band's width axis on the circle_a side and reverses on
  // the circle_b side (the half twist / transposition).
  auto foot_key = [&](const Band& b, bool at_a, int width, int n_users) {
    const int site = at_a ? b.site_a : b.site_b;
    const int w = at_a ? width : (n_users - 1 - width);
    return std::array<int, 3>{site, w, 0};
  };

  std::vector<std::vector<RampPiece>> ramps_on_circle(circle_count);

  for (int i = 0; i < m; ++i) {
    // walk the cycle again recording cap segments between consecutive bands
    const std::vector<int>& cyc = cycles[i];
    const int k = static_cast<int>(cyc.size());
    int at = bands[cyc.front()].circle_a;
    for (int step = 0; step < k; ++step) {
      const int bi_out = cyc[step];
      const int bi_in = cyc[(step - 1 + k) % k];
      const Band& bin = bands[bi_in];
      const Band& bout = bands[bi_out];
      const bool in_at_a = bin.circle_a == at;
      const bool out_at_a = bout.circle_a == at;
      CapSegment seg;
      seg.cycle = i;
      seg.key_in = foot_key(bin, in_at_a, passage[i].at(bi_in).width,
                            static_cast<int>(band_users[bi_in].size()));
      seg.key_out = foot_key(bout, out_at_a, passage[i].at(bi_out).width,
                             static_cast<int>(band_users[bi_out].size()));
      segment[i][at] = seg;

      // ramp pieces live on the parent circle of a nested band
      for (const int bi : {bi_in, bi_out}) {
        const Band& b = bands[bi];
        if (!b.nested || b.parent != at) continue;
        const bool entering = bi == bi_in;  // arrived on this circle via the ramp
        RampPiece rp;
        rp.cycle = i;
        rp.inward = !entering;  // leaving the parent = descending inward
        const bool foot_at_a = b.circle_a == at;
        auto key = foot_key(b, foot_at_a, passage[i].at(bi).width,
                            static_cast<int>(band_users[bi].size()));
        key[2] = entering ? -1 : +1;  // keep the ramp off the curve's own arc
        rp.key = key;
        ramps_on_circle[at].push_back(rp);
      }
      at = out_at_a ? bout.circle_b : bout.circle_a;
    }
  }

  // radial slots per circle: rank by cycle index
  std::map<std::pair<int, int>, int> radial_slot;  // (circle, cycle) -> slot
  for (int s = 0; s < circle_count; ++s) {
    int slot = 0;
    for (int i = 0; i < m; ++i)
      if (segment[i].count(s)) radial_slot[{s, i}] = slot++;
  }

  // Contribution tables.  Directions on a cap: the arc runs along the
  // traversal tangent, slants and ramps are radial; det(t_ccw, r_out) = -1.
  auto det_arc_vs_radial = [&](int circle, bool radial_outward, bool arc_first) {
    const int o = orientation[circle];
    int d = radial_outward ? -o : +o;  // det(arc, radial)
    return arc_first ? d : -d;
  };

  // Sum of signed crossings between curve i and the pushoff of curve j; the
  // linking number is half of it.
  auto crossing_sum = [&](int i, int j) {
    long long total = 0;

    // shared twisted bands
    for (size_t bi = 0; bi < bands.size(); ++bi) {
      if (bands[bi].nested) continue;
      auto pi = passage[i].find(static_cast<int>(bi));
      auto pj = passage[j].find(static_cast<int>(bi));
      if (pi == passage[i].end() || pj == passage[j].end()) continue;
      total += kBandSign * bands[bi].sign * pi->second.dir * pj->second.dir;
    }

    // same-cap crossings: the deeper curve's slants cross the shallower
    // curve's arc; the pushed copy of j goes over when the cap normal points
    // up.
    for (int s = 0; s < circle_count; ++s) {
      auto si = segment[i].find(s);
      auto sj = segment[j].find(s);
      if (si == segment[i].end() || sj == segment[j].end()) continue;
      const CapSegment& a = si->second;
      const CapSegment& b = sj->second;
      const bool i_shallower = radial_slot.at({s, i}) < radial_slot.at({s, j});
      const CapSegment& shallow = i_shallower ? a : b;
      const CapSegment& deep = i_shallower ? b : a;
      const int nu = kCapNormal * orientation[s];  // +1: pushed copy of j on top
      for (int which = 0; which < 2; ++which) {
        const auto& key = which == 0 ? deep.key_in : deep.key_out;
        if (!cyclic_inside(shallow.key_in, key, shallow.key_out)) continue;
        const bool radial_outward = which == 1;  // out-slant ascends to the rim
        // crossing between deep's slant and shallow's arc; order by pushoff
        const bool j_is_slant = !i_shallower;
        const bool j_first = nu > 0;  // pushed copy over => j's direction first
        const bool arc_first = (j_is_slant ? !j_first : j_first);
        total += det_arc_vs_radial(s, radial_outward, arc_first);
      }
    }

    // ramps pass over every arc interval covering their key
    for (int s = 0; s < circle_count; ++s) {
      for (const RampPiece& rp : ramps_on_circle[s]) {
        const int other = rp.cycle == i ? j : (rp.cycle == j ? i : -1);
        if (other < 0) continue;
        auto so = segment[other].find(s);
        if (so == segment[other].end()) continue;
        if (!cyclic_inside(so->second.key_in, rp.key, so->second.key_out)) continue;
        // the ramp is over; sign = det(ramp, arc)
        total += det_arc_vs_radial(s, !rp.inward, /*arc_first=*/false);
      }
    }
    return total;
  };

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const long long sum = crossing_sum(i, j);
      if (sum % 2 != 0) throw DiagramError("internal: odd crossing sum in pushoff linking");
      v.at(i, j) = sum / 2;
    }
    long long twist = 0;
    for (int bi : cycles[i])
      if (!bands[bi].nested) twist += bands[bi].sign;
    if (twist % 2 != 0) throw DiagramError("internal: odd twist sum along a generator");
    v.at(i, i) = kSelfTwist * twist / 2;
  }
  return v;
}

SeifertData seifert_algorithm(const PlanarDiagram& d) {
  auto surface = std::make_shared<SeifertSurface>(d);
  SeifertData out;
  out.seifert_circle_count = surface->circle_count;
  out.crossing_count = static_cast<int>(d.crossings().size());
  out.boundary_components = static_cast<int>(d.components().size());
  const int betti = static_cast<int>(surface->bands.size()) - surface->circle_count + 1;
  const int two_genus = betti - (out.boundary_components - 1);
  if (two_genus < 0 || two_genus % 2 != 0)
    throw DiagramError("internal: Euler characteristic of the surface is off");
  out.genus = two_genus / 2;
  for (const auto& cyc : surface->cycles) {
    GeneratorCurve g;
    for (int bi : cyc) g.band_crossing_ids.push_back(d.crossings()[surface->bands[bi].crossing].id);
    out.generator_curves.push_back(std::move(g));
  }
  out.surface = std::move(surface);
  return out;
}

IntMatrix seifert_matrix(const SeifertData& s) {
  if (!s.surface) return IntMatrix(0, 0);
  return s.surface->pushoff_matrix();
}

}  // namespace linklab
