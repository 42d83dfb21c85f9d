// Graphviz export.

#include "pw/dot.hpp"

#include <sstream>

namespace pw {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const FinPriestley& X, std::optional<Mask> focus) {
  const Poset& P = X.points();
  if (focus && (!subset_of(*focus, P.all()) || !is_upset(P, *focus)))
    throw Error("focus set is not an upset of the space");
  struct Annotation {
    const char* name;
    Mask members;
  };
  std::vector<Annotation> notes;
  if (focus) {
    const Mask U = *focus;
    notes = {{"U", U},
             {"ker", kernel(X, U)},
             {"core", core(X, U)},
             {"reg", regular_part(X, U)},
             {"cen", center(X, U)}};
  }
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int p = 0; p < P.size(); ++p) {
    std::string label = P.label(p);
    std::string tags;
    for (const auto& n : notes)
      if (has(n.members, p)) tags += (tags.empty() ? "" : " ") + std::string(n.name);
    out << "  p" << p << " [label=" << quoted(label);
    if (focus) {
      out << ", xlabel=" << quoted(tags);
      if (has(*focus, p)) out << ", style=filled, fillcolor=lightgray";
    }
    out << "];\n";
  }
  for (const auto& [a, b] : P.covers()) out << "  p" << a << " -> p" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pw
