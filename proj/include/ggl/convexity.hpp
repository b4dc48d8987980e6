#pragma once

#include <cstddef>
#include <string>

#include "ggl/graph.hpp"

namespace ggl {

// The geodetic closure is a pre-closure (one pass over shortest paths);
// its iterated fixed point is the convex hull.
enum class ClosureKind { Hull, Geodetic };

inline const char* to_string(ClosureKind k) {
  return k == ClosureKind::Hull ? "hull" : "geodetic";
}

// Caps for the enumeration passes; exceeding one raises FamilyLimitError.
struct Guards {
  std::size_t max_family = std::size_t{1} << 20;
  int brute_max_vertices = 22;
};

struct FamilyLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One application of the geodetic closure: union of intervals over pairs.
VertexSet geodetic_closure(const Graph& g, VertexSet p);
// Least fixed point of the geodetic closure above p.
VertexSet convex_hull(const Graph& g, VertexSet p);
VertexSet close(const Graph& g, VertexSet p, ClosureKind kind);
bool is_generating(const Graph& g, VertexSet p, ClosureKind kind);

// Vertices whose neighborhood induces a complete subgraph.
VertexSet simplicial_vertices(const Graph& g);

// All fixed points of close(., kind), discovered breadth-first from the
// closure of the empty set. The geodetic fixed points coincide with the
// convex sets, so both kinds enumerate the same family.
SetFamily closed_sets(const Graph& g, ClosureKind kind, const Guards& guards = {});

// Inclusion-maximal nongenerating sets. These are the terminal positions of
// the avoidance game and determine both games. For Hull they are the maximal
// proper convex sets; for Geodetic a maximal nongenerating set need not be
// closed, so they are enumerated per excluded witness vertex instead.
SetFamily maximal_nongenerating(const Graph& g, ClosureKind kind, const Guards& guards = {});

// Inclusion-minimal generating sets: the minimal transversals of the
// complements of the maximal nongenerating sets.
SetFamily minimal_generating(const Graph& g, ClosureKind kind, const Guards& guards = {});
SetFamily minimal_generating_from(const SetFamily& nongen, int n, const Guards& guards = {});

// Intersection of every maximal nongenerating set; equals the set of
// vertices removable from any generating set.
VertexSet frattini(const Graph& g, ClosureKind kind, const Guards& guards = {});

// Closure of the family under pairwise intersection, plus the ambient set
// (the empty intersection).
SetFamily intersection_lattice(const SetFamily& nongen, VertexSet ambient,
                               const Guards& guards = {});

// Smallest intersection set containing p: the intersection of the family
// members containing p, or the ambient set when none does.
VertexSet ceil(VertexSet p, const SetFamily& nongen, VertexSet ambient);

struct ConvexityReport {
  ClosureKind kind;
  SetFamily maximal_nongenerating;  // N
  SetFamily minimal_generating;     // G
  VertexSet frattini;               // intersection of N
  SetFamily intersection_sets;      // I, includes the ambient set
};

ConvexityReport analyze_convexity(const Graph& g, ClosureKind kind, const Guards& guards = {});

}  // namespace ggl
