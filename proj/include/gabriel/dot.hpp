#pragma once

#include <set>
#include <string>
#include <utility>

#include "gabriel/text_format.hpp"

namespace gabriel {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Graphviz digraph of the cover relation, edges pointing upward. Nodes and
/// edges are emitted in lexicographic order of element names.
inline std::string export_dot(const LatticeDocument& doc) {
  std::set<std::string> nodes(doc.elements.begin(), doc.elements.end());
  std::set<std::pair<std::string, std::string>> edges(doc.covers.begin(), doc.covers.end());
  std::string out = "digraph " + detail::dot_quote(doc.name) + " {\n";
  for (const auto& n : nodes) {
    out += "  " + detail::dot_quote(n) + " [label=" + detail::dot_quote(n) + "];\n";
  }
  for (const auto& [lo, hi] : edges) {
    out += "  " + detail::dot_quote(lo) + " -> " + detail::dot_quote(hi) + ";\n";
  }
  return out + "}\n";
}

inline std::string export_dot(const Lattice& lattice, const std::string& name) {
  return export_dot(to_document(lattice, name));
}

}  // namespace gabriel
