#pragma once

#include <map>
#include <string>

#include "linklab/diagram.hpp"

namespace linklab {

struct ParseError : DiagramError {
  using DiagramError::DiagramError;
};

// Line-based PD text:
//   # comment
//   #! label <name> = <crossing id>     (optional named-crossing directive)
//   X <id> u_in=<arc> o_in=<arc> u_out=<arc> o_out=<arc> sign=<+|->
//   C <name>: <arc> <arc> ...
struct PdFile {
  PlanarDiagram diagram;
  std::map<std::string, int> crossing_labels;
};

PdFile parse_pd_file(const std::string& text);
PlanarDiagram parse_diagram(const std::string& text);

std::string serialize_diagram(const PlanarDiagram& d);

}  // namespace linklab
