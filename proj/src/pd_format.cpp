#include "linklab/pd_format.hpp"

#include <sstream>

namespace linklab {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& token, int line, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos != token.size()) fail(line, "trailing characters in " + what + " '" + token + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, "expected integer for " + what + ", got '" + token + "'");
  }
}

// "u_in=<arc>" style field with a fixed expected key.
int parse_field(const std::string& token, const std::string& key, int line) {
  auto eq = token.find('=');
  if (eq == std::string::npos || token.substr(0, eq) != key)
    fail(line, "expected " + key + "=<arc>, got '" + token + "'");
  return parse_int(token.substr(eq + 1), line, key);
}

}  // namespace

PdFile parse_pd_file(const std::string& text) {
  std::vector<Crossing> crossings;
  std::vector<Component> components;
  std::map<std::string, int> labels;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(raw);
    std::string head;
    if (!(line >> head)) continue;  // blank
    if (head == "#!") {
      std::string kind, name, eq, value;
      if (!(line >> kind >> name >> eq >> value) || kind != "label" || eq != "=")
        fail(line_no, "malformed directive, expected '#! label <name> = <id>'");
      labels[name] = parse_int(value, line_no, "crossing id");
    } else if (head[0] == '#') {
      continue;
    } else if (head == "X") {
      std::string id, ui, oi, uo, oo, sg;
      if (!(line >> id >> ui >> oi >> uo >> oo >> sg)) fail(line_no, "malformed crossing line");
      std::string extra;
      if (line >> extra) fail(line_no, "unexpected token '" + extra + "'");
      Crossing c;
      c.id = parse_int(id, line_no, "crossing id");
      c.under_in = parse_field(ui, "u_in", line_no);
      c.over_in = parse_field(oi, "o_in", line_no);
      c.under_out = parse_field(uo, "u_out", line_no);
      c.over_out = parse_field(oo, "o_out", line_no);
      auto eq = sg.find('=');
      if (eq == std::string::npos || sg.substr(0, eq) != "sign") fail(line_no, "expected sign=+ or sign=-");
      std::string sv = sg.substr(eq + 1);
      if (sv == "+")
        c.sign = Sign::positive;
      else if (sv == "-")
        c.sign = Sign::negative;
      else
        fail(line_no, "sign must be + or -, got '" + sv + "'");
      crossings.push_back(c);
    } else if (head == "C") {
      std::string name;
      if (!(line >> name)) fail(line_no, "component line needs a name");
      if (name.back() == ':') {
        name.pop_back();
      } else {
        std::string colon;
        if (!(line >> colon) || colon != ":") fail(line_no, "expected ':' after component name");
      }
      if (name.empty()) fail(line_no, "component name is empty");
      Component comp{name, {}};
      std::string tok;
      while (line >> tok) comp.cycle.push_back(parse_int(tok, line_no, "arc label"));
      if (comp.cycle.empty()) fail(line_no, "component " + name + " lists no arcs");
      components.push_back(std::move(comp));
    } else {
      fail(line_no, "unknown line type '" + head + "'");
    }
  }

  PdFile out{make_diagram(std::move(crossings), std::move(components)), std::move(labels)};
  for (const auto& [name, id] : out.crossing_labels)
    if (!out.diagram.has_crossing(id))
      throw ParseError("label " + name + " points at missing crossing " + std::to_string(id));
  return out;
}

PlanarDiagram parse_diagram(const std::string& text) { return parse_pd_file(text).diagram; }

std::string serialize_diagram(const PlanarDiagram& d) {
  std::ostringstream out;
  for (const Crossing& c : d.crossings())
    out << "X " << c.id << " u_in=" << c.under_in << " o_in=" << c.over_in
        << " u_out=" << c.under_out << " o_out=" << c.over_out << " sign=" << sign_char(c.sign)
        << "\n";
  for (const Component& comp : d.components()) {
    out << "C " << comp.name << ":";
    for (Arc a : comp.cycle) out << " " << a;
    out << "\n";
  }
  return out.str();
}

}  // namespace linklab
