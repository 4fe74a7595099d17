#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace linklab {

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Sign : std::int8_t { negative = -1, positive = +1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }
inline Sign flipped(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }
inline char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

using Arc = int;

// One crossing of an oriented diagram.  The understrand runs under_in ->
// under_out, the overstrand over_in -> over_out.  The sign is part of the
// data: positive means the overstrand crosses left-to-right as seen along the
// understrand direction, and it pins the cyclic order of the four ends in the
// plane (counterclockwise: u_in, o_out, u_out, o_in when positive;
// u_in, o_in, u_out, o_out when negative).
struct Crossing {
  int id = 0;
  Arc under_in = 0, over_in = 0, under_out = 0, over_out = 0;
  Sign sign = Sign::positive;

  bool operator==(const Crossing&) const = default;
};

struct Component {
  std::string name;
  std::vector<Arc> cycle;  // arc labels in orientation order

  bool operator==(const Component&) const = default;
};

// Unordered pair of component names classifying a crossing; the two entries
// may coincide for a self-crossing.
struct ComponentPairTag {
  std::string first, second;  // stored sorted, first <= second

  ComponentPairTag() = default;
  ComponentPairTag(std::string a, std::string b);
  bool self() const { return first == second; }
  std::string to_string() const { return "(" + first + "," + second + ")"; }
  bool operator==(const ComponentPairTag&) const = default;
  bool operator<(const ComponentPairTag& o) const {
    return first != o.first ? first < o.first : second < o.second;
  }
};

// Immutable combinatorial link diagram.  Construct via make_diagram (which
// validates every type invariant) or parse_diagram; all operations below are
// pure and return new diagrams.
class PlanarDiagram {
public:
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Component>& components() const { return components_; }
  int arc_count() const { return arc_count_; }

  const Crossing& crossing_by_id(int id) const;
  bool has_crossing(int id) const;
  const Component& component_by_name(const std::string& name) const;
  bool has_component(const std::string& name) const;
  const std::string& component_of_arc(Arc a) const;

  // Arc label -> owning component index; arcs are 1..arc_count.
  int component_index_of_arc(Arc a) const { return arc_owner_[a]; }

  bool operator==(const PlanarDiagram&) const = default;

  friend PlanarDiagram make_diagram(std::vector<Crossing> crossings,
                                    std::vector<Component> components);

private:
  std::vector<Crossing> crossings_;
  std::vector<Component> components_;
  int arc_count_ = 0;
  std::vector<int> arc_owner_;  // size arc_count_+1, index 0 unused
};

// Validates all invariants (arc multiplicities, cycle consistency) and
// assembles a diagram; throws DiagramError on violations.
PlanarDiagram make_diagram(std::vector<Crossing> crossings, std::vector<Component> components);

// --- operations -----------------------------------------------------------

// Swap the under/over roles at one crossing (flips its handedness); arc
// labels are untouched, so the operation is replayable and involutive.
PlanarDiagram crossing_change(const PlanarDiagram& d, int crossing_id);

ComponentPairTag classify_crossing(const PlanarDiagram& d, int crossing_id);

// Delete all components outside `keep`; crossings between a kept and a
// deleted strand are smoothed away and the kept arcs merged, then arcs are
// renumbered canonically.
PlanarDiagram sublink(const PlanarDiagram& d, const std::set<std::string>& keep);

// Partition of component names into connected pieces of the underlying
// 4-valent plane graph (free loops form their own pieces).  One piece means
// the diagram is connected.
std::vector<std::set<std::string>> split_partition(const PlanarDiagram& d);
inline bool is_visibly_split(const PlanarDiagram& d) { return split_partition(d).size() > 1; }
// Fully split: every component alone in its piece.
bool is_fully_split(const PlanarDiagram& d);

// --- canonical form ---------------------------------------------------------

// Renumber arcs by a deterministic traversal (components in name order; the
// start arc of each cycle chosen to minimize the final encoding), renumber
// crossing ids, and sort crossing lines.  Structural equality of diagrams is
// equality of canonical keys.
PlanarDiagram canonical_form(const PlanarDiagram& d);
std::string canonical_key(const PlanarDiagram& d);
bool structurally_equal(const PlanarDiagram& a, const PlanarDiagram& b);

// Copy with components renamed by the given map (names not mentioned stay).
PlanarDiagram rename_components(const PlanarDiagram& d,
                                const std::map<std::string, std::string>& renames);

}  // namespace linklab
