#include "linklab/moves.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>

namespace linklab {

namespace {

struct SlotRef {
  int crossing = -1;  // index into crossings()
  int slot = -1;      // rotation slot 0..3
};

struct Incidence {
  SlotRef in, out;  // where the arc enters / leaves a crossing
  bool used() const { return in.crossing >= 0; }
};

// Rotation slots are identified by position in FaceStructure::rotation.
std::vector<Incidence> arc_incidences(const PlanarDiagram& d) {
  std::vector<Incidence> inc(d.arc_count() + 1);
  for (size_t i = 0; i < d.crossings().size(); ++i) {
    auto rot = FaceStructure::rotation(d.crossings()[i]);
    for (int s = 0; s < 4; ++s) {
      auto [arc, is_in] = rot[s];
      SlotRef ref{static_cast<int>(i), s};
      if (is_in)
        inc[arc].in = ref;
      else
        inc[arc].out = ref;
    }
  }
  return inc;
}

}  // namespace

std::array<std::pair<Arc, bool>, 4> FaceStructure::rotation(const Crossing& c) {
  // Counterclockwise order of the four ends; the sign fixes which pair of
  // opposite corners the overstrand occupies.
  if (c.sign == Sign::positive)
    return {{{c.under_in, true}, {c.over_out, false}, {c.under_out, false}, {c.over_in, true}}};
  return {{{c.under_in, true}, {c.over_in, true}, {c.under_out, false}, {c.over_out, false}}};
}

FaceStructure::FaceStructure(const PlanarDiagram& d) {
  const auto inc = arc_incidences(d);
  corner_face_.assign(d.crossings().size(), {-1, -1, -1, -1});

  // A directed side (arc, forward) walks the arc with the face on its left;
  // it terminates at the in-slot when forward, at the out-slot otherwise.
  std::map<std::pair<Arc, bool>, bool> seen;
  for (Arc a = 1; a <= d.arc_count(); ++a) {
    if (!inc[a].used()) continue;
    seen[{a, true}] = false;
    seen[{a, false}] = false;
  }

  for (auto& [start, visited] : seen) {
    if (visited) continue;
    std::vector<ArcSide> face;
    std::pair<Arc, bool> cur = start;
    while (!seen.at(cur)) {
      seen.at(cur) = true;
      face.push_back({cur.first, cur.second});
      const SlotRef end = cur.second ? inc[cur.first].in : inc[cur.first].out;
      const int exit_slot = (end.slot + 3) % 4;  // clockwise neighbour = left turn
      corner_face_[end.crossing][exit_slot] = static_cast<int>(faces_.size());
      auto rot = rotation(d.crossings()[end.crossing]);
      auto [next_arc, next_is_in] = rot[exit_slot];
      cur = {next_arc, !next_is_in};
    }
    for (const ArcSide& s : face) side_face_[{s.arc, s.forward}] = static_cast<int>(faces_.size());
    faces_.push_back(std::move(face));
  }

  // Euler characteristic per connected piece of the crossing graph; a failure
  // means the declared signs admit no planar embedding.
  std::vector<int> piece(d.crossings().size());
  std::iota(piece.begin(), piece.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (piece[x] != x) x = piece[x] = piece[piece[x]];
    return x;
  };
  for (Arc a = 1; a <= d.arc_count(); ++a)
    if (inc[a].used()) piece[find(inc[a].in.crossing)] = find(inc[a].out.crossing);

  std::map<int, std::array<int, 3>> counts;  // piece root -> {V, E, F}
  for (size_t i = 0; i < d.crossings().size(); ++i) counts[find(static_cast<int>(i))][0]++;
  for (Arc a = 1; a <= d.arc_count(); ++a)
    if (inc[a].used()) counts[find(inc[a].in.crossing)][1]++;
  for (const auto& face : faces_) {
    const SlotRef end = face.front().forward ? inc[face.front().arc].in : inc[face.front().arc].out;
    counts[find(end.crossing)][2]++;
  }
  for (const auto& [root, vef] : counts)
    if (vef[0] - vef[1] + vef[2] != 2)
      throw DiagramError("crossing signs are not consistent with a planar embedding");
}

int FaceStructure::face_of_side(const ArcSide& side) const {
  auto it = side_face_.find({side.arc, side.forward});
  if (it == side_face_.end()) throw DiagramError("arc side has no face (free loop?)");
  return it->second;
}

std::string MoveDescriptor::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case MoveKind::R1Add:
      out << "R1+ arc=" << arc << " variant=" << variant;
      break;
    case MoveKind::R1Remove:
      out << "R1- crossing=" << crossing_a;
      break;
    case MoveKind::R2Add:
      out << "R2+ a=" << side_a.arc << (side_a.forward ? "f" : "b")
          << " b=" << side_b.arc << (side_b.forward ? "f" : "b")
          << (a_over ? " over" : " under") << " v=" << variant;
      break;
    case MoveKind::R2Remove:
      out << "R2- crossings=" << crossing_a << "," << crossing_b << " over_arc=" << over_arc
          << " under_arc=" << under_arc;
      break;
    case MoveKind::R3:
      out << "R3 corner=" << corner_crossing << " moving_arc=" << moving_arc;
      break;
  }
  return out.str();
}

namespace {

// Drops the given crossings, fuses each listed arc family into a single arc,
// rebuilds the cycles and renumbers arcs 1..N.  Shared helper for the
// removing moves.
PlanarDiagram smooth_and_rebuild(const PlanarDiagram& d, const std::set<int>& dropped_ids,
                                 const std::vector<std::vector<Arc>>& fusions) {
  std::vector<int> parent(d.arc_count() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& family : fusions)
    for (size_t i = 1; i < family.size(); ++i) parent[find(family[i])] = find(family[0]);

  std::map<int, Arc> relabel;
  std::vector<Component> components;
  for (const Component& comp : d.components()) {
    std::vector<int> roots;
    for (Arc a : comp.cycle) {
      int r = find(a);
      if (!roots.empty() && roots.back() == r) continue;
      roots.push_back(r);
    }
    while (roots.size() > 1 && roots.front() == roots.back()) roots.pop_back();
    std::vector<Arc> cycle;
    for (int r : roots) {
      auto [it, fresh] = relabel.try_emplace(r, static_cast<Arc>(relabel.size()) + 1);
      (void)fresh;
      cycle.push_back(it->second);
    }
    components.push_back({comp.name, std::move(cycle)});
  }

  std::vector<Crossing> crossings;
  for (const Crossing& c : d.crossings()) {
    if (dropped_ids.count(c.id)) continue;
    Crossing n = c;
    n.under_in = relabel.at(find(c.under_in));
    n.under_out = relabel.at(find(c.under_out));
    n.over_in = relabel.at(find(c.over_in));
    n.over_out = relabel.at(find(c.over_out));
    crossings.push_back(n);
  }
  return make_diagram(std::move(crossings), std::move(components));
}

bool is_kink(const Crossing& c) { return c.under_out == c.over_in || c.over_out == c.under_in; }

PlanarDiagram apply_r1_remove(const PlanarDiagram& d, int crossing_id) {
  const Crossing& c = d.crossing_by_id(crossing_id);
  if (!is_kink(c)) throw DiagramError("move not applicable: crossing is not a kink");
  std::vector<Arc> family;
  if (c.under_out == c.over_in)
    family = {c.under_in, c.under_out, c.over_out};
  else
    family = {c.over_in, c.over_out, c.under_out};
  return smooth_and_rebuild(d, {crossing_id}, {family});
}

PlanarDiagram apply_r2_remove(const PlanarDiagram& d, const MoveDescriptor& m) {
  const Crossing& c1 = d.crossing_by_id(m.crossing_a);
  const Crossing& c2 = d.crossing_by_id(m.crossing_b);
  if (c1.sign == c2.sign) throw DiagramError("move not applicable: bigon signs must differ");
  if (c1.over_out != m.over_arc || c2.over_in != m.over_arc)
    throw DiagramError("move not applicable: over arc does not join the crossings");
  std::vector<Arc> over_family{c1.over_in, m.over_arc, c2.over_out};
  std::vector<Arc> under_family;
  if (c1.under_out == m.under_arc && c2.under_in == m.under_arc)
    under_family = {c1.under_in, m.under_arc, c2.under_out};
  else if (c2.under_out == m.under_arc && c1.under_in == m.under_arc)
    under_family = {c2.under_in, m.under_arc, c1.under_out};
  else
    throw DiagramError("move not applicable: under arc does not join the crossings");
  return smooth_and_rebuild(d, {c1.id, c2.id}, {over_family, under_family});
}

int next_crossing_id(const PlanarDiagram& d) {
  int id = 0;
  for (const Crossing& c : d.crossings()) id = std::max(id, c.id);
  return id + 1;
}

// Splits arc `a` by inserting `extra` new labels after it within its cycle;
// the slot elsewhere that consumed `a` (its head) is rewired to the last new
// label.  For a free loop the pieces simply extend the one-arc cycle.
struct SpliceResult {
  std::vector<Crossing> crossings;
  std::vector<Component> components;
  std::vector<Arc> pieces;  // a followed by the new labels
};

SpliceResult splice_arc(const PlanarDiagram& d, Arc a, int extra, Arc first_new) {
  SpliceResult r;
  r.crossings = d.crossings();
  r.components = d.components();
  r.pieces = {a};
  for (int i = 0; i < extra; ++i) r.pieces.push_back(first_new + i);

  const auto inc = arc_incidences(d);
  if (inc[a].used()) {
    // rewire the head slot of a to the last piece
    Crossing& c = r.crossings[inc[a].in.crossing];
    Arc last = r.pieces.back();
    if (c.under_in == a)
      c.under_in = last;
    else
      c.over_in = last;
  }
  for (Component& comp : r.components) {
    auto it = std::find(comp.cycle.begin(), comp.cycle.end(), a);
    if (it == comp.cycle.end()) continue;
    comp.cycle.insert(it + 1, r.pieces.begin() + 1, r.pieces.end());
    break;
  }
  return r;
}

PlanarDiagram apply_r1_add(const PlanarDiagram& d, Arc a, int variant) {
  if (a < 1 || a > d.arc_count()) throw DiagramError("move not applicable: unknown arc");
  const bool free_loop = !arc_incidences(d)[a].used();
  const bool under_first = (variant & 1) == 0;
  const Sign sign = (variant & 2) ? Sign::negative : Sign::positive;

  SpliceResult sp = splice_arc(d, a, free_loop ? 1 : 2, d.arc_count() + 1);
  const Arc loop = sp.pieces[1];
  const Arc tail = free_loop ? a : sp.pieces[2];

  Crossing c;
  c.id = next_crossing_id(d);
  c.sign = sign;
  if (under_first) {
    c.under_in = a;
    c.under_out = loop;
    c.over_in = loop;
    c.over_out = tail;
  } else {
    c.over_in = a;
    c.over_out = loop;
    c.under_in = loop;
    c.under_out = tail;
  }
  sp.crossings.push_back(c);
  return make_diagram(std::move(sp.crossings), std::move(sp.components));
}

// Builds an R2 poke.  The finger leaves side_a into the shared face and
// crosses side_b's strand twice.  The sign of the first crossing is forced by
// the geometry: the finger arrives from the face, i.e. from the left of the
// side_b walk, so det(finger, strand) depends only on whether that walk runs
// with or against the strand's orientation (and on who is on top).
std::optional<PlanarDiagram> build_r2_add(const PlanarDiagram& d, const MoveDescriptor& m) {
  const Arc x = m.side_a.arc, y = m.side_b.arc;
  if (x < 1 || x > d.arc_count() || y < 1 || y > d.arc_count()) return std::nullopt;
  const bool pokee_swapped = (m.variant & 1) != 0;  // pokee meets the far crossing first
  const int sigma = m.side_b.forward ? +1 : -1;
  const Sign s1 = (sigma * (m.a_over ? +1 : -1)) > 0 ? Sign::positive : Sign::negative;
  const Sign s2 = flipped(s1);
  const int id1 = next_crossing_id(d);
  const int id2 = id1 + 1;

  std::vector<Crossing> crossings;
  std::vector<Component> components;
  Arc poker_in, poker_mid, poker_out;          // poker pieces through c1 then c2
  Arc pokee_in, pokee_mid, pokee_out;          // pokee pieces in the pokee's own order

  const auto inc = arc_incidences(d);
  if (x != y) {
    const bool x_free = !inc[x].used();
    SpliceResult sx = splice_arc(d, x, x_free ? 1 : 2, d.arc_count() + 1);
    const Arc next_label = d.arc_count() + 1 + (x_free ? 1 : 2);
    PlanarDiagram mid = make_diagram(
        std::move(sx.crossings), std::move(sx.components));  // labels only; revalidated later
    const auto inc2 = arc_incidences(mid);
    const bool y_free = !inc2[y].used();
    SpliceResult sy = splice_arc(mid, y, y_free ? 1 : 2, next_label);
    crossings = std::move(sy.crossings);
    components = std::move(sy.components);
    poker_in = x;
    poker_mid = sx.pieces[1];
    poker_out = x_free ? x : sx.pieces[2];
    pokee_in = y;
    pokee_mid = sy.pieces[1];
    pokee_out = y_free ? y : sy.pieces[2];
  } else {
    // Self-poke: the strand crosses itself twice; one splice with four or
    // five pieces depending on whether x is a free loop.
    const bool x_free = !inc[x].used();
    SpliceResult sx = splice_arc(d, x, x_free ? 3 : 4, d.arc_count() + 1);
    crossings = std::move(sx.crossings);
    components = std::move(sx.components);
    poker_in = sx.pieces[0];
    poker_mid = sx.pieces[1];
    poker_out = sx.pieces[2];
    pokee_in = sx.pieces[2];
    pokee_mid = sx.pieces[3];
    pokee_out = x_free ? sx.pieces[0] : sx.pieces[4];
  }

  Crossing c1, c2;
  c1.id = id1;
  c2.id = id2;
  c1.sign = s1;
  c2.sign = s2;
  const Arc pk_first_in = pokee_swapped ? pokee_mid : pokee_in;
  const Arc pk_first_out = pokee_swapped ? pokee_out : pokee_mid;
  const Arc pk_second_in = pokee_swapped ? pokee_in : pokee_mid;
  const Arc pk_second_out = pokee_swapped ? pokee_mid : pokee_out;
  if (m.a_over) {
    c1.over_in = poker_in;
    c1.over_out = poker_mid;
    c1.under_in = pk_first_in;
    c1.under_out = pk_first_out;
    c2.over_in = poker_mid;
    c2.over_out = poker_out;
    c2.under_in = pk_second_in;
    c2.under_out = pk_second_out;
  } else {
    c1.under_in = poker_in;
    c1.under_out = poker_mid;
    c1.over_in = pk_first_in;
    c1.over_out = pk_first_out;
    c2.under_in = poker_mid;
    c2.under_out = poker_out;
    c2.over_in = pk_second_in;
    c2.over_out = pk_second_out;
  }
  crossings.push_back(c1);
  crossings.push_back(c2);

  try {
    PlanarDiagram out = make_diagram(std::move(crossings), std::move(components));
    FaceStructure check(out);  // planarity filter
    return out;
  } catch (const DiagramError&) {
    return std::nullopt;
  }
}

struct TriangleStrand {
  Arc side;              // the strand's arc on the triangle
  int first, second;     // triangle crossings in the strand's own direction
  bool over_first, over_second;
};

// The three strands bounding a triangular face, or nothing when the face is
// not a genuine triangle with three distinct corner crossings.
std::optional<std::array<TriangleStrand, 3>> triangle_strands(const PlanarDiagram& d,
                                                              const std::vector<ArcSide>& face) {
  if (face.size() != 3) return std::nullopt;
  const auto inc = arc_incidences(d);
  std::array<TriangleStrand, 3> strands;
  std::set<int> corners;
  for (int i = 0; i < 3; ++i) {
    const Arc a = face[i].arc;
    if (!inc[a].used()) return std::nullopt;
    const Crossing& head = d.crossings()[inc[a].in.crossing];
    const Crossing& tail = d.crossings()[inc[a].out.crossing];
    if (head.id == tail.id) return std::nullopt;
    strands[i].side = a;
    strands[i].first = tail.id;
    strands[i].second = head.id;
    strands[i].over_first = (tail.over_out == a);
    strands[i].over_second = (head.over_in == a);
    corners.insert(head.id);
    corners.insert(tail.id);
  }
  if (corners.size() != 3) return std::nullopt;
  // Sides must pairwise share the three corners.
  for (int i = 0; i < 3; ++i) {
    std::set<int> mine{strands[i].first, strands[i].second};
    int shared = 0;
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      if (mine.count(strands[j].first) || mine.count(strands[j].second)) ++shared;
    }
    if (shared != 2) return std::nullopt;
  }
  return strands;
}

PlanarDiagram apply_r3(const PlanarDiagram& d, const MoveDescriptor& m) {
  // Re-locate the triangle from (corner crossing, moving arc).
  FaceStructure fs(d);
  for (const auto& face : fs.faces()) {
    auto strands = triangle_strands(d, face);
    if (!strands) continue;
    const TriangleStrand* mover = nullptr;
    for (const auto& s : *strands)
      if (s.side == m.moving_arc) mover = &s;
    if (!mover) continue;
    bool corner_matches = true;
    for (const auto& s : *strands)
      if (&s != mover && s.first != m.corner_crossing && s.second != m.corner_crossing)
        corner_matches = false;
    if (!corner_matches || mover->first == m.corner_crossing ||
        mover->second == m.corner_crossing)
      continue;
    if (mover->over_first != mover->over_second) continue;  // must be top or bottom strand

    // Strand pieces s1 | first | s2 | second | s3 along each strand; after the
    // slide the two partner crossings swap their order along every strand.
    const auto inc = arc_incidences(d);
    struct Pieces {
      Arc s1, s2, s3;
      int first, second;      // old crossing ids in strand order
      bool over_at_first, over_at_second;
    };
    auto pieces_for = [&](const TriangleStrand& s) {
      Pieces p;
      p.s2 = s.side;
      p.first = s.first;
      p.second = s.second;
      p.over_at_first = s.over_first;
      p.over_at_second = s.over_second;
      const Crossing& tail = d.crossings()[inc[s.side].out.crossing];
      const Crossing& head = d.crossings()[inc[s.side].in.crossing];
      p.s1 = s.over_first ? tail.over_in : tail.under_in;
      p.s3 = s.over_second ? head.over_out : head.under_out;
      return p;
    };

    std::array<Pieces, 3> ps;
    for (int i = 0; i < 3; ++i) ps[i] = pieces_for((*strands)[i]);

    // Crossing id -> (sign, and which strands meet there).
    std::map<int, Crossing> rebuilt;
    for (const auto& p : ps) {
      for (int which = 0; which < 2; ++which) {
        const int old_id = which == 0 ? p.first : p.second;
        // After the move this strand meets the same partner at the other end:
        // swap first/second, so the arcs flowing through swap accordingly.
        const Arc in_arc = which == 0 ? p.s2 : p.s1;
        const Arc out_arc = which == 0 ? p.s3 : p.s2;
        const bool over = which == 0 ? p.over_at_first : p.over_at_second;
        Crossing& c = rebuilt[old_id];
        c.id = old_id;
        c.sign = d.crossing_by_id(old_id).sign;
        if (over) {
          c.over_in = in_arc;
          c.over_out = out_arc;
        } else {
          c.under_in = in_arc;
          c.under_out = out_arc;
        }
      }
    }

    std::vector<Crossing> crossings;
    for (const Crossing& c : d.crossings()) {
      auto it = rebuilt.find(c.id);
      crossings.push_back(it == rebuilt.end() ? c : it->second);
    }
    return make_diagram(std::move(crossings), d.components());
  }
  throw DiagramError("move not applicable: no matching R3 triangle");
}

}  // namespace

std::vector<MoveDescriptor> reidemeister_moves(const PlanarDiagram& d) {
  std::vector<MoveDescriptor> out;
  const auto inc = arc_incidences(d);

  // R1 removals
  for (const Crossing& c : d.crossings()) {
    if (!is_kink(c)) continue;
    MoveDescriptor m;
    m.kind = MoveKind::R1Remove;
    m.crossing_a = c.id;
    out.push_back(m);
  }

  // R2 removals
  for (const Crossing& c1 : d.crossings()) {
    for (const Crossing& c2 : d.crossings()) {
      if (c1.id == c2.id || c1.sign == c2.sign) continue;
      if (c1.over_out != c2.over_in) continue;
      MoveDescriptor m;
      m.kind = MoveKind::R2Remove;
      m.crossing_a = c1.id;
      m.crossing_b = c2.id;
      m.over_arc = c1.over_out;
      if (c1.under_out == c2.under_in && c1.under_out != m.over_arc) {
        m.under_arc = c1.under_out;
        out.push_back(m);
      } else if (c2.under_out == c1.under_in && c2.under_out != m.over_arc) {
        m.under_arc = c2.under_out;
        out.push_back(m);
      }
    }
  }

  // R3 slides
  if (!d.crossings().empty()) {
    FaceStructure fs(d);
    for (const auto& face : fs.faces()) {
      auto strands = triangle_strands(d, face);
      if (!strands) continue;
      for (const auto& s : *strands) {
        if (s.over_first != s.over_second) continue;
        int corner = 0;
        for (const auto& t : *strands) {
          if (t.side == s.side) continue;
          for (int c : {t.first, t.second})
            if (c != s.first && c != s.second) corner = c;
        }
        MoveDescriptor m;
        m.kind = MoveKind::R3;
        m.corner_crossing = corner;
        m.moving_arc = s.side;
        out.push_back(m);
      }
    }
  }

  // R1 additions: four variants per arc.
  for (Arc a = 1; a <= d.arc_count(); ++a)
    for (int v = 0; v < 4; ++v) {
      MoveDescriptor m;
      m.kind = MoveKind::R1Add;
      m.arc = a;
      m.variant = v;
      out.push_back(m);
    }

  // R2 additions: ordered pairs of arc sides on a common face, plus free
  // loops which may be carried to any face first.
  std::vector<std::pair<std::vector<ArcSide>, bool>> pokeable_faces;
  if (!d.crossings().empty()) {
    FaceStructure fs(d);
    for (const auto& face : fs.faces()) pokeable_faces.push_back({face, false});
  }
  std::vector<Arc> free_loops;
  for (Arc a = 1; a <= d.arc_count(); ++a)
    if (!inc[a].used()) free_loops.push_back(a);

  std::set<std::pair<ArcSide, ArcSide>> seen;
  auto emit_r2 = [&](const ArcSide& sa, const ArcSide& sb) {
    if (sa.arc == sb.arc && sa.forward == sb.forward && inc[sa.arc].used()) return;
    if (!seen.insert({sa, sb}).second) return;
    for (bool a_over : {true, false})
      for (int variant = 0; variant < 2; ++variant) {
        MoveDescriptor m;
        m.kind = MoveKind::R2Add;
        m.side_a = sa;
        m.side_b = sb;
        m.a_over = a_over;
        m.variant = variant;
        out.push_back(m);
      }
  };

  for (const auto& [face, is_virtual] : pokeable_faces) {
    (void)is_virtual;
    for (size_t i = 0; i < face.size(); ++i)
      for (size_t j = 0; j < face.size(); ++j)
        if (i != j) emit_r2(face[i], face[j]);
    // free loops can be carried into this face before poking
    for (Arc loop : free_loops)
      for (bool fwd : {true, false})
        for (size_t j = 0; j < face.size(); ++j) {
          emit_r2({loop, fwd}, face[j]);
          emit_r2(face[j], {loop, fwd});
        }
  }
  // loop-with-loop pokes (including a loop across itself)
  for (Arc la : free_loops)
    for (Arc lb : free_loops)
      for (bool fa : {true, false})
        for (bool fb : {true, false}) emit_r2({la, fa}, {lb, fb});

  auto rank = [](const MoveDescriptor& m) {
    switch (m.kind) {
      case MoveKind::R1Remove: return 0;
      case MoveKind::R2Remove: return 1;
      case MoveKind::R3: return 2;
      case MoveKind::R1Add: return 3;
      case MoveKind::R2Add: return 4;
    }
    return 5;
  };
  std::sort(out.begin(), out.end(), [&](const MoveDescriptor& a, const MoveDescriptor& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    auto key = [](const MoveDescriptor& m) {
      return std::make_tuple(m.crossing_a, m.crossing_b, m.arc, m.variant, m.side_a,
                             m.side_b, m.a_over, m.corner_crossing, m.moving_arc,
                             m.over_arc, m.under_arc);
    };
    return key(a) < key(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PlanarDiagram apply_move(const PlanarDiagram& d, const MoveDescriptor& m) {
  switch (m.kind) {
    case MoveKind::R1Remove:
      return apply_r1_remove(d, m.crossing_a);
    case MoveKind::R2Remove:
      return apply_r2_remove(d, m);
    case MoveKind::R1Add:
      return apply_r1_add(d, m.arc, m.variant);
    case MoveKind::R2Add: {
      auto out = build_r2_add(d, m);
      if (!out) throw DiagramError("move not applicable: R2 poke is not planar here");
      return *out;
    }
    case MoveKind::R3:
      return apply_r3(d, m);
  }
  throw DiagramError("unknown move kind");
}

}  // namespace linklab
