#pragma once

#include <string>
#include <vector>

#include "ggl/game.hpp"

namespace ggl {

inline constexpr int kParityBoth = 2;  // the achieving game's terminal class

struct TypeTriple {
  int parity = 0;  // 0, 1, or kParityBoth
  int nim0 = 0;    // nim value of even-size positions in the class
  int nim1 = 0;    // nim value of odd-size positions
  friend bool operator==(const TypeTriple&, const TypeTriple&) = default;
  friend bool operator<(const TypeTriple& a, const TypeTriple& b) {
    return std::tie(a.parity, a.nim0, a.nim1) < std::tie(b.parity, b.nim0, b.nim1);
  }
};

// Positions are grouped by the smallest intersection set enclosing them;
// each group forms one class of the quotient digraph.
struct StructureClass {
  VertexSet intersection_set;
  std::vector<int> options;  // class indices, sorted, deduped
  TypeTriple type;           // filled in by type_calculus
};

struct StructureDigraph {
  GameSpec spec;
  int vertex_count = 0;
  // Sorted by the sets' bit encoding. Edges always point to a strictly
  // larger set, so index order is a topological order and the source
  // (class of the empty position) is index 0.
  std::vector<StructureClass> classes;
  int source = 0;
  int full_class = -1;  // index of the class of generating positions (Gen only)
  bool types_computed = false;

  std::vector<int> terminal_classes() const;
};

StructureDigraph build_structure_digraph(const Graph& g, GameSpec spec,
                                         const SetFamily& nongen,
                                         const Guards& guards = {});
StructureDigraph build_structure_digraph(const Graph& g, GameSpec spec,
                                         const Guards& guards = {});

// Two-value mex recursion over the quotient, evaluated in reverse
// topological order. For a class with representative set I and parity p:
//   nim_p     = mex of the opposite-parity nim values of its option classes
//   nim_(1-p) = mex of their own-parity values together with nim_p itself
// (a position one vertex short of I moves within the class). The class of
// generating positions is fixed at (both, 0, 0).
void type_calculus(StructureDigraph& d);

// nim value of the game: the even-parity entry of the source class.
int game_nim(const StructureDigraph& d);

// Convenience: build, evaluate, read off.
int structure_nim(const Graph& g, GameSpec spec, const Guards& guards = {});

// Quotient of the structure digraph merging classes that agree in parity,
// option-type set, and longest outgoing path length, refined until edges
// between merged nodes are well defined.
struct SimplifiedDiagram {
  struct Node {
    std::vector<int> members;  // class indices, ascending
    TypeTriple type;
    int longest_path = 0;
    int multiplicity = 1;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> edges;
  int source = 0;
};

SimplifiedDiagram simplify(const StructureDigraph& d);

// Deterministic DOT text. Node ids are I_<hex of the set's bit mask>; the
// shape encodes parity (triangle / invtriangle / oval for "both").
std::string export_dot(const StructureDigraph& d);
std::string export_dot(const SimplifiedDiagram& s, const StructureDigraph& d);

}  // namespace ggl
