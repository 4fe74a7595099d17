#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linklab/diagram.hpp"

namespace linklab {

// Directed side of an arc: forward = walking along the arc's orientation with
// the face on the left.
struct ArcSide {
  Arc arc = 0;
  bool forward = true;
  bool operator==(const ArcSide&) const = default;
  bool operator<(const ArcSide& o) const {
    return arc != o.arc ? arc < o.arc : forward < o.forward;
  }
};

// Faces of the 4-valent plane graph, from the rotation system the crossing
// signs induce.  Crossing-free components (free loops) are not part of the
// graph and carry no face data.  Throws DiagramError when the rotation
// system is not spherical (Euler characteristic check per connected piece),
// which catches sign data inconsistent with any planar embedding.
class FaceStructure {
public:
  explicit FaceStructure(const PlanarDiagram& d);

  const std::vector<std::vector<ArcSide>>& faces() const { return faces_; }
  int face_of_side(const ArcSide& side) const;
  // Corner k of a crossing lies between rotation slots k and k+1 (mod 4).
  int face_at_corner(int crossing_index, int corner) const { return corner_face_[crossing_index][corner]; }

  // Rotation order of arc ends around a crossing, counterclockwise.  Slot
  // entries are (arc, is_in_slot).
  static std::array<std::pair<Arc, bool>, 4> rotation(const Crossing& c);

private:
  std::vector<std::vector<ArcSide>> faces_;
  std::map<std::pair<Arc, bool>, int> side_face_;
  std::vector<std::array<int, 4>> corner_face_;
};

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3 };

// Enough data to re-apply a move deterministically on the diagram it was
// enumerated for.
struct MoveDescriptor {
  MoveKind kind = MoveKind::R1Add;

  // R1Add: arc + variant (bit 0: loop passes under first; bit 1: kink sign).
  Arc arc = 0;
  int variant = 0;

  // R1Remove: crossing; R2Remove: crossing pair + the two bigon arcs.
  int crossing_a = 0;
  int crossing_b = 0;
  Arc over_arc = 0;
  Arc under_arc = 0;

  // R2Add: poke side_a across side_b within their shared face; a_over says
  // the poking strand goes on top, variant bit 0 picks which of the two new
  // crossings the poked strand meets first along its own orientation.
  ArcSide side_a, side_b;
  bool a_over = true;

  // R3: triangle with corner crossing (between the two stationary strands)
  // and the arc of the strand that slides across it.
  int corner_crossing = 0;
  Arc moving_arc = 0;

  std::string to_string() const;
  bool operator==(const MoveDescriptor&) const = default;
};

// All applicable moves in a canonical documented order: R1 removals, R2
// removals, R3 slides, R1 additions, R2 additions; within each class ordered
// by the descriptor fields.
std::vector<MoveDescriptor> reidemeister_moves(const PlanarDiagram& d);

PlanarDiagram apply_move(const PlanarDiagram& d, const MoveDescriptor& m);

}  // namespace linklab
