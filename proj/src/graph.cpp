#include "ggl/graph.hpp"

#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace ggl {

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (n > kMaxVertices)
    throw std::invalid_argument("graph exceeds the " + std::to_string(kMaxVertices) +
                                "-vertex cap (got " + std::to_string(n) + ")");
  adjacency_.assign(n, VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adjacency_[u] = adjacency_[u].with(v);
    adjacency_[v] = adjacency_[v].with(u);
  }
  for (Vertex v = 0; v < n; ++v) edge_count_ += adjacency_[v].size();
  edge_count_ /= 2;

  if (labels_.empty()) {
    labels_.reserve(n);
    for (Vertex v = 0; v < n; ++v) labels_.push_back("v" + std::to_string(v));
  } else if (static_cast<int>(labels_.size()) != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }

  // Breadth-first distances from every vertex.
  dist_.assign(static_cast<size_t>(n) * n, kUnreachable);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    int* row = &dist_[static_cast<size_t>(s) * n];
    row[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : adjacency_[u]) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }

  interval_.assign(static_cast<size_t>(n) * n, VertexSet{});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      VertexSet span = VertexSet::single(u) | VertexSet::single(v);
      int d = distance(u, v);
      if (d != kUnreachable) {
        for (Vertex w = 0; w < n; ++w) {
          int a = distance(u, w), b = distance(w, v);
          if (a != kUnreachable && b != kUnreachable && a + b == d)
            span = span.with(w);
        }
      }
      interval_[static_cast<size_t>(u) * n + v] = span;
    }
  }
}

bool Graph::connected() const {
  for (Vertex v = 1; v < n_; ++v)
    if (distance(0, v) == kUnreachable) return false;
  return true;
}

int Graph::diameter() const {
  int d = 0;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v) {
      int duv = distance(u, v);
      if (duv == kUnreachable) return kUnreachable;
      d = std::max(d, duv);
    }
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                 std::vector<std::string> labels) {
  return Graph(n, edges, std::move(labels));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int n = g.vertex_count() + h.vertex_count();
  if (n > kMaxVertices)
    throw std::invalid_argument("disjoint union exceeds the vertex cap");
  auto edges = g.edges();
  int offset = g.vertex_count();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + offset, v + offset);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels.push_back("a" + g.label(v));
  for (Vertex v = 0; v < h.vertex_count(); ++v) labels.push_back("b" + h.label(v));
  return Graph(n, edges, std::move(labels));
}

Graph box_product(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  if (ng * nh > kMaxVertices)
    throw std::invalid_argument("box product exceeds the vertex cap");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::string> labels;
  for (Vertex a = 0; a < ng; ++a)
    for (Vertex b = 0; b < nh; ++b)
      labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  for (Vertex a = 0; a < ng; ++a)
    for (Vertex b = 0; b < nh; ++b) {
      Vertex x = a * nh + b;
      for (Vertex b2 : h.neighbors(b))
        if (b2 > b) edges.emplace_back(x, a * nh + b2);
      for (Vertex a2 : g.neighbors(a))
        if (a2 > a) edges.emplace_back(x, a2 * nh + b);
    }
  return Graph(ng * nh, edges, std::move(labels));
}

Graph join(const Graph& g, const Graph& h) {
  Graph base = disjoint_union(g, h);
  auto edges = base.edges();
  int offset = g.vertex_count();
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = 0; v < h.vertex_count(); ++v) edges.emplace_back(u, offset + v);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < base.vertex_count(); ++v) labels.push_back(base.label(v));
  return Graph(base.vertex_count(), edges, std::move(labels));
}

Graph one_clique_sum(const std::vector<std::pair<Graph, Vertex>>& parts) {
  if (parts.size() < 2)
    throw std::invalid_argument("1-clique sum needs at least two parts");
  int n = 1;
  for (const auto& [g, c] : parts) {
    if (c < 0 || c >= g.vertex_count())
      throw std::invalid_argument("1-clique sum attachment vertex out of range");
    n += g.vertex_count() - 1;
  }
  if (n > kMaxVertices)
    throw std::invalid_argument("1-clique sum exceeds the vertex cap");

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::string> labels(n);
  labels[0] = "c";
  int next = 1;
  for (size_t i = 0; i < parts.size(); ++i) {
    const auto& [g, c] = parts[i];
    std::vector<Vertex> map(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (v == c) {
        map[v] = 0;
      } else {
        labels[next] = "p" + std::to_string(i) + g.label(v);
        map[v] = next++;
      }
    }
    for (auto [u, v] : g.edges()) edges.emplace_back(map[u], map[v]);
  }
  return Graph(n, edges, std::move(labels));
}

Graph corona(const Graph& h) {
  int nh = h.vertex_count();
  if (2 * nh > kMaxVertices)
    throw std::invalid_argument("corona exceeds the vertex cap");
  auto edges = h.edges();
  std::vector<std::string> labels;
  for (Vertex v = 0; v < nh; ++v) labels.push_back(h.label(v));
  for (Vertex v = 0; v < nh; ++v) {
    edges.emplace_back(v, nh + v);
    labels.push_back(h.label(v) + "'");
  }
  return Graph(2 * nh, edges, std::move(labels));
}

Graph read_graph(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string key;
      if (!(fields >> key >> n) || key != "n" || n < 1)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected header \"n <count>\"");
      continue;
    }
    Vertex u, v;
    if (!(fields >> u >> v))
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected edge \"<u> <v>\"");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::invalid_argument("missing \"n <count>\" header");
  return make_graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace ggl
