#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ggl/vertex_set.hpp"

namespace ggl {

inline constexpr int kUnreachable = -1;

// Immutable simple undirected graph with a fixed vertex ordering, hop
// distances from every vertex, and the interval (shortest-path span) of
// every vertex pair precomputed.
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  int edge_count() const { return edge_count_; }

  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  int distance(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }

  // Vertices on some shortest u-v path. For vertices in different
  // components there is no connecting geodesic and the interval is {u,v}.
  VertexSet interval(Vertex u, Vertex v) const { return interval_[u * n_ + v]; }

  bool connected() const;
  int diameter() const;  // kUnreachable when disconnected

  const std::string& label(Vertex v) const { return labels_[v]; }
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  int n_;
  int edge_count_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<int> dist_;
  std::vector<VertexSet> interval_;
  std::vector<std::string> labels_;
};

// Validates endpoints, rejects self-loops, collapses duplicate edges.
Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                 std::vector<std::string> labels = {});

// Combinators. Every output uses the documented deterministic indexing.

// G's vertices followed by H's, no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);
// Vertex (a,b) -> a*|V(H)|+b; edge iff equal in one coordinate, adjacent in the other.
Graph box_product(const Graph& g, const Graph& h);
// Disjoint union plus all cross edges.
Graph join(const Graph& g, const Graph& h);
// Marked vertices merged into vertex 0; remaining vertices re-indexed in part order.
Graph one_clique_sum(const std::vector<std::pair<Graph, Vertex>>& parts);
// One pendant per vertex of h; the pendant of v gets index |V(h)|+v.
Graph corona(const Graph& h);

// Text format: '#' comments, "n <count>", then "<u> <v>" per edge, 0-based.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace ggl
