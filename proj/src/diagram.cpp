#include "linklab/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace linklab {
namespace {

// Arc incidence bookkeeping: where an arc enters a crossing (as u_in/o_in)
// and where it leaves one (u_out/o_out).
struct ArcUse {
  int in_crossing = -1;   // index into crossings_, slot where arc is an in-slot
  bool in_under = false;  // true: u_in, false: o_in
  int out_crossing = -1;
  bool out_under = false;
  int uses = 0;
};

std::vector<ArcUse> collect_uses(const std::vector<Crossing>& crossings, int arc_count) {
  std::vector<ArcUse> uses(arc_count + 1);
  auto touch_in = [&](Arc a, int idx, bool under) {
    if (uses[a].in_crossing >= 0)
      throw DiagramError("arc " + std::to_string(a) + " enters more than one crossing slot");
    uses[a].in_crossing = idx;
    uses[a].in_under = under;
    uses[a].uses++;
  };
  auto touch_out = [&](Arc a, int idx, bool under) {
    if (uses[a].out_crossing >= 0)
      throw DiagramError("arc " + std::to_string(a) + " leaves more than one crossing slot");
    uses[a].out_crossing = idx;
    uses[a].out_under = under;
    uses[a].uses++;
  };
  for (size_t i = 0; i < crossings.size(); ++i) {
    const Crossing& c = crossings[i];
    touch_in(c.under_in, static_cast<int>(i), true);
    touch_in(c.over_in, static_cast<int>(i), false);
    touch_out(c.under_out, static_cast<int>(i), true);
    touch_out(c.over_out, static_cast<int>(i), false);
  }
  return uses;
}

}  // namespace

ComponentPairTag::ComponentPairTag(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  first = std::move(a);
  second = std::move(b);
}

const Crossing& PlanarDiagram::crossing_by_id(int id) const {
  for (const Crossing& c : crossings_)
    if (c.id == id) return c;
  throw DiagramError("unknown crossing id " + std::to_string(id));
}

bool PlanarDiagram::has_crossing(int id) const {
  for (const Crossing& c : crossings_)
    if (c.id == id) return true;
  return false;
}

const Component& PlanarDiagram::component_by_name(const std::string& name) const {
  for (const Component& c : components_)
    if (c.name == name) return c;
  throw DiagramError("unknown component " + name);
}

bool PlanarDiagram::has_component(const std::string& name) const {
  for (const Component& c : components_)
    if (c.name == name) return true;
  return false;
}

const std::string& PlanarDiagram::component_of_arc(Arc a) const {
  if (a < 1 || a > arc_count_) throw DiagramError("arc label out of range");
  return components_[arc_owner_[a]].name;
}

PlanarDiagram make_diagram(std::vector<Crossing> crossings, std::vector<Component> components) {
  PlanarDiagram d;

  // Arc labels must be exactly 1..N, partitioned by the component cycles.
  int arc_count = 0;
  for (const Component& comp : components) {
    if (comp.name.empty()) throw DiagramError("component with empty name");
    if (comp.cycle.empty()) throw DiagramError("component " + comp.name + " has empty cycle");
    arc_count += static_cast<int>(comp.cycle.size());
  }
  if (components.empty()) throw DiagramError("diagram needs at least one component");

  std::vector<int> owner(arc_count + 1, -1);
  for (size_t ci = 0; ci < components.size(); ++ci) {
    for (size_t cj = 0; cj < ci; ++cj)
      if (components[ci].name == components[cj].name)
        throw DiagramError("duplicate component name " + components[ci].name);
    for (Arc a : components[ci].cycle) {
      if (a < 1 || a > arc_count)
        throw DiagramError("arc labels must be 1.." + std::to_string(arc_count) +
                           ", got " + std::to_string(a));
      if (owner[a] != -1) throw DiagramError("arc " + std::to_string(a) + " listed twice in component cycles");
      owner[a] = static_cast<int>(ci);
    }
  }

  std::set<int> ids;
  for (const Crossing& c : crossings) {
    if (c.id <= 0) throw DiagramError("crossing ids must be positive");
    if (!ids.insert(c.id).second) throw DiagramError("duplicate crossing id " + std::to_string(c.id));
    for (Arc a : {c.under_in, c.over_in, c.under_out, c.over_out})
      if (a < 1 || a > arc_count)
        throw DiagramError("crossing " + std::to_string(c.id) + " references unknown arc " + std::to_string(a));
    if (c.under_in == c.under_out || c.over_in == c.over_out)
      throw DiagramError("crossing " + std::to_string(c.id) + " reuses an arc within one strand");
  }

  const std::vector<ArcUse> uses = collect_uses(crossings, arc_count);
  for (Arc a = 1; a <= arc_count; ++a) {
    if (uses[a].uses != 0 && uses[a].uses != 2)
      throw DiagramError("arc " + std::to_string(a) + " appears " + std::to_string(uses[a].uses) +
                         " times in crossing slots, expected 2");
    if (uses[a].uses == 2 && (uses[a].in_crossing < 0 || uses[a].out_crossing < 0))
      throw DiagramError("arc " + std::to_string(a) + " appears twice but not as one in- and one out-slot");
  }

  // Cycle consistency: consecutive arcs must follow the in->out incidence,
  // and a crossing-free arc must be a free loop on its own.
  for (const Component& comp : components) {
    if (comp.cycle.size() == 1) {
      Arc a = comp.cycle.front();
      if (uses[a].uses != 0)
        throw DiagramError("component " + comp.name + " declares a one-arc cycle through crossings");
      continue;
    }
    for (size_t i = 0; i < comp.cycle.size(); ++i) {
      Arc a = comp.cycle[i];
      Arc b = comp.cycle[(i + 1) % comp.cycle.size()];
      if (uses[a].uses == 0)
        throw DiagramError("crossing-free arc " + std::to_string(a) + " inside a multi-arc cycle");
      const Crossing& c = crossings[uses[a].in_crossing];
      Arc expected = uses[a].in_under ? c.under_out : c.over_out;
      if (expected != b)
        throw DiagramError("component " + comp.name + " cycle breaks at arc " + std::to_string(a) +
                           ": strand continues as " + std::to_string(expected) + ", cycle says " +
                           std::to_string(b));
    }
  }

  d.crossings_ = std::move(crossings);
  d.components_ = std::move(components);
  d.arc_count_ = arc_count;
  d.arc_owner_ = std::move(owner);
  return d;
}

PlanarDiagram crossing_change(const PlanarDiagram& d, int crossing_id) {
  std::vector<Crossing> crossings = d.crossings();
  bool found = false;
  for (Crossing& c : crossings) {
    if (c.id != crossing_id) continue;
    std::swap(c.under_in, c.over_in);
    std::swap(c.under_out, c.over_out);
    c.sign = flipped(c.sign);
    found = true;
  }
  if (!found) throw DiagramError("unknown crossing id " + std::to_string(crossing_id));
  return make_diagram(std::move(crossings), d.components());
}

ComponentPairTag classify_crossing(const PlanarDiagram& d, int crossing_id) {
  const Crossing& c = d.crossing_by_id(crossing_id);
  return ComponentPairTag(d.component_of_arc(c.under_in), d.component_of_arc(c.over_in));
}

PlanarDiagram sublink(const PlanarDiagram& d, const std::set<std::string>& keep) {
  if (keep.empty()) throw DiagramError("sublink needs a nonempty component set");
  for (const std::string& name : keep)
    if (!d.has_component(name)) throw DiagramError("unknown component " + name);

  auto kept = [&](Arc a) { return keep.count(d.component_of_arc(a)) > 0; };

  // Union-find over arcs; smoothing a mixed crossing concatenates the kept
  // strand's in- and out-arcs.
  std::vector<int> parent(d.arc_count() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::vector<Crossing> new_crossings;
  for (const Crossing& c : d.crossings()) {
    const bool under_kept = kept(c.under_in);
    const bool over_kept = kept(c.over_in);
    if (under_kept && over_kept) {
      new_crossings.push_back(c);
    } else if (under_kept) {
      unite(c.under_in, c.under_out);
    } else if (over_kept) {
      unite(c.over_in, c.over_out);
    }
  }

  // Relabel surviving arc classes in order of first appearance while walking
  // the kept cycles; collapse merged neighbours.
  std::map<int, Arc> relabel;
  std::vector<Component> new_components;
  for (const Component& comp : d.components()) {
    if (!keep.count(comp.name)) continue;
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
    new_components.push_back({comp.name, std::move(cycle)});
  }

  for (Crossing& c : new_crossings) {
    c.under_in = relabel.at(find(c.under_in));
    c.under_out = relabel.at(find(c.under_out));
    c.over_in = relabel.at(find(c.over_in));
    c.over_out = relabel.at(find(c.over_out));
  }
  return make_diagram(std::move(new_crossings), std::move(new_components));
}

std::vector<std::set<std::string>> split_partition(const PlanarDiagram& d) {
  const int n = static_cast<int>(d.components().size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Crossing& c : d.crossings()) {
    int a = d.component_index_of_arc(c.under_in);
    int b = d.component_index_of_arc(c.over_in);
    parent[find(a)] = find(b);
  }
  std::map<int, std::set<std::string>> pieces;
  for (int i = 0; i < n; ++i) pieces[find(i)].insert(d.components()[i].name);
  std::vector<std::set<std::string>> out;
  for (auto& [root, names] : pieces) out.push_back(std::move(names));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_fully_split(const PlanarDiagram& d) {
  return split_partition(d).size() == d.components().size();
}

// --- canonical form ---------------------------------------------------------

namespace {

// Rotation-invariant per-arc step code used to cut down candidate start arcs
// before full lexicographic minimization.  Depends only on structure and
// component names, never on arc labels.
struct StepCode {
  int enters_under;   // 1 if the arc enters its next crossing as understrand
  int sign;           // sign of that crossing
  int other_under;    // pass type of the other strand's in-arc
  std::string other_component;
  int intra_offset;   // cycle offset to the other strand's in-arc, -1 if inter

  auto key() const { return std::tie(enters_under, sign, other_under, other_component, intra_offset); }
  bool operator<(const StepCode& o) const { return key() < o.key(); }
  bool operator==(const StepCode& o) const { return key() == o.key(); }
};

std::vector<size_t> minimal_rotations(const std::vector<StepCode>& codes) {
  const size_t n = codes.size();
  if (n == 0) return {0};
  std::vector<size_t> best;
  for (size_t start = 0; start < n; ++start) {
    if (best.empty()) {
      best.push_back(start);
      continue;
    }
    int cmp = 0;
    for (size_t k = 0; k < n && cmp == 0; ++k) {
      const StepCode& a = codes[(start + k) % n];
      const StepCode& b = codes[(best.front() + k) % n];
      cmp = a < b ? -1 : (b < a ? 1 : 0);
    }
    if (cmp < 0) {
      best.clear();
      best.push_back(start);
    } else if (cmp == 0) {
      best.push_back(start);
    }
  }
  return best;
}

std::string encode(const PlanarDiagram& d) {
  std::ostringstream out;
  for (const Component& c : d.components()) {
    out << 'C' << c.name << ':';
    for (Arc a : c.cycle) out << a << ',';
    out << ';';
  }
  for (const Crossing& c : d.crossings())
    out << 'X' << c.under_in << ',' << c.over_in << ',' << c.under_out << ',' << c.over_out
        << ',' << sign_char(c.sign) << ';';
  return out.str();
}

PlanarDiagram relabeled(const PlanarDiagram& d, const std::vector<size_t>& starts,
                        const std::vector<const Component*>& order) {
  std::vector<Arc> to_new(d.arc_count() + 1, 0);
  Arc next = 1;
  std::vector<Component> new_components;
  for (size_t i = 0; i < order.size(); ++i) {
    const std::vector<Arc>& cycle = order[i]->cycle;
    std::vector<Arc> new_cycle;
    for (size_t k = 0; k < cycle.size(); ++k) {
      Arc a = cycle[(starts[i] + k) % cycle.size()];
      to_new[a] = next;
      new_cycle.push_back(next);
      ++next;
    }
    new_components.push_back({order[i]->name, std::move(new_cycle)});
  }
  std::vector<Crossing> new_crossings;
  for (const Crossing& c : d.crossings())
    new_crossings.push_back({0, to_new[c.under_in], to_new[c.over_in], to_new[c.under_out],
                             to_new[c.over_out], c.sign});
  std::sort(new_crossings.begin(), new_crossings.end(), [](const Crossing& a, const Crossing& b) {
    return std::tie(a.under_in, a.over_in, a.under_out, a.over_out, a.sign) <
           std::tie(b.under_in, b.over_in, b.under_out, b.over_out, b.sign);
  });
  for (size_t i = 0; i < new_crossings.size(); ++i) new_crossings[i].id = static_cast<int>(i) + 1;
  return make_diagram(std::move(new_crossings), std::move(new_components));
}

}  // namespace

PlanarDiagram canonical_form(const PlanarDiagram& d) {
  std::vector<const Component*> order;
  for (const Component& c : d.components()) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const Component* a, const Component* b) { return a->name < b->name; });

  // Arc in-slot lookup for step codes.
  std::vector<int> in_crossing(d.arc_count() + 1, -1);
  std::vector<bool> in_under(d.arc_count() + 1, false);
  for (size_t i = 0; i < d.crossings().size(); ++i) {
    const Crossing& c = d.crossings()[i];
    in_crossing[c.under_in] = static_cast<int>(i);
    in_under[c.under_in] = true;
    in_crossing[c.over_in] = static_cast<int>(i);
    in_under[c.over_in] = false;
  }

  std::vector<std::vector<size_t>> start_options;
  for (const Component* comp : order) {
    std::vector<StepCode> codes;
    std::map<Arc, int> position;
    for (size_t k = 0; k < comp->cycle.size(); ++k) position[comp->cycle[k]] = static_cast<int>(k);
    for (size_t k = 0; k < comp->cycle.size(); ++k) {
      Arc a = comp->cycle[k];
      if (in_crossing[a] < 0) {
        codes.push_back({0, 0, 0, "", -2});
        continue;
      }
      const Crossing& c = d.crossings()[in_crossing[a]];
      Arc other_in = in_under[a] ? c.over_in : c.under_in;
      StepCode code;
      code.enters_under = in_under[a] ? 1 : 0;
      code.sign = sign_value(c.sign);
      code.other_under = in_under[a] ? 0 : 1;
      code.other_component = d.component_of_arc(other_in);
      code.intra_offset = -1;
      if (code.other_component == comp->name) {
        auto it = position.find(other_in);
        if (it != position.end())
          code.intra_offset =
              (it->second - static_cast<int>(k) + static_cast<int>(comp->cycle.size())) %
              static_cast<int>(comp->cycle.size());
      }
      codes.push_back(std::move(code));
    }
    start_options.push_back(minimal_rotations(codes));
  }

  // Enumerate the surviving start combinations and keep the least encoding.
  std::optional<PlanarDiagram> best;
  std::string best_key;
  std::vector<size_t> pick(order.size(), 0);
  while (true) {
    std::vector<size_t> starts;
    for (size_t i = 0; i < order.size(); ++i) starts.push_back(start_options[i][pick[i]]);
    PlanarDiagram candidate = relabeled(d, starts, order);
    std::string key = encode(candidate);
    if (!best || key < best_key) {
      best = std::move(candidate);
      best_key = std::move(key);
    }
    size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < start_options[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return *best;
}

std::string canonical_key(const PlanarDiagram& d) { return encode(canonical_form(d)); }

bool structurally_equal(const PlanarDiagram& a, const PlanarDiagram& b) {
  return canonical_key(a) == canonical_key(b);
}

PlanarDiagram rename_components(const PlanarDiagram& d,
                                const std::map<std::string, std::string>& renames) {
  std::vector<Component> components = d.components();
  for (Component& c : components) {
    auto it = renames.find(c.name);
    if (it != renames.end()) c.name = it->second;
  }
  return make_diagram(d.crossings(), std::move(components));
}

}  // namespace linklab
