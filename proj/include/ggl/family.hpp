#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ggl/graph.hpp"

namespace ggl {

// Parsed form of a graph-description string: either a named family with
// integer parameters, or a combinator applied to sub-specs. For cliquesum
// every child carries an attachment vertex.
struct FamilySpec {
  std::string name;
  std::vector<int> params;
  std::vector<FamilySpec> children;
  std::vector<Vertex> attach;

  bool is_combinator() const { return !children.empty(); }
  friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
    return a.name == b.name && a.params == b.params && a.children == b.children &&
           a.attach == b.attach;
  }
};

struct ParseError : std::invalid_argument {
  ParseError(size_t position, const std::string& message)
      : std::invalid_argument("position " + std::to_string(position) + ": " + message),
        position(position) {}
  size_t position;
};

// Grammar:
//   spec   := name [":" params] | comb "(" arg {"," arg} ")"
//   arg    := spec ["@" int]          (attachment only valid under cliquesum)
//   params := int {("," | "x") int}   (separator consumed only before a digit)
FamilySpec parse_family_spec(const std::string& text);
std::string render(const FamilySpec& spec);

// Builds the canonical labeled graph for a spec. Parameter violations are
// rejected naming the constraint.
Graph family(const FamilySpec& spec);
inline Graph family(const std::string& text) { return family(parse_family_spec(text)); }

// Names usable in specs, for diagnostics and enumeration.
const std::vector<std::string>& family_names();

}  // namespace ggl
