#include "ggl/family.hpp"

#include <cctype>
#include <numeric>

namespace ggl {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return spec;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) { ++pos_; return true; }
    return false;
  }

  int parse_int() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1000000) fail("integer too large");
    }
    return static_cast<int>(value);
  }

  std::string parse_name() {
    skip_space();
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected family name");
    size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-' || peek() == '_')
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  FamilySpec parse_spec() {
    FamilySpec spec;
    spec.name = parse_name();
    skip_space();
    if (consume('(')) {
      bool is_cliquesum = spec.name == "cliquesum";
      while (true) {
        spec.children.push_back(parse_spec());
        skip_space();
        if (is_cliquesum) {
          if (!consume('@')) fail("cliquesum argument needs @vertex");
          spec.attach.push_back(parse_int());
          skip_space();
        } else if (peek() == '@') {
          fail("@vertex is only valid inside cliquesum");
        }
        if (consume(',')) continue;
        if (consume(')')) break;
        fail("expected ',' or ')'");
      }
      return spec;
    }
    if (consume(':')) {
      spec.params.push_back(parse_int());
      // A separator is part of the parameter list only when a digit follows;
      // this lets specs like corona(multipartite:2,3) parse greedily.
      while ((peek() == ',' || peek() == 'x') &&
             std::isdigit(static_cast<unsigned char>(peek(1)))) {
        ++pos_;
        spec.params.push_back(parse_int());
      }
    }
    return spec;
  }
};

std::string render_params(const FamilySpec& spec) {
  bool use_x = spec.name == "grid" || spec.name == "lattice" || spec.name == "windmill";
  std::string out;
  for (size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += use_x ? 'x' : ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

void require(bool ok, const std::string& name, const std::string& constraint) {
  if (!ok) throw std::invalid_argument(name + ": requires " + constraint);
}

void require_arity(const FamilySpec& spec, size_t arity) {
  if (spec.params.size() != arity)
    throw std::invalid_argument(spec.name + ": expected " + std::to_string(arity) +
                                " parameter(s), got " + std::to_string(spec.params.size()));
}

Graph make_path(int n) {
  require(n >= 1, "path", "n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, edges);
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle", "n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return make_graph(n, edges);
}

Graph make_complete(int n) {
  require(n >= 1, "complete", "n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

Graph make_star(int leaves) {
  require(leaves >= 1, "star", "n >= 1 leaves");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return make_graph(leaves + 1, edges);
}

Graph make_hypercube(int d) {
  require(d >= 0, "hypercube", "n >= 0");
  require((1 << d) <= kMaxVertices, "hypercube", "2^n within the vertex cap");
  int n = 1 << d;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) {
    std::string bits;
    for (int k = d - 1; k >= 0; --k) bits += ((v >> k) & 1) ? '1' : '0';
    labels.push_back(bits.empty() ? "e" : bits);
    for (int k = 0; k < d; ++k)
      if (!((v >> k) & 1)) edges.emplace_back(v, v | (1 << k));
  }
  return make_graph(n, edges, std::move(labels));
}

Graph make_lattice(const std::vector<int>& dims, const std::string& name) {
  require(!dims.empty(), name, "at least one dimension");
  long total = 1;
  for (int d : dims) {
    require(d >= 2, name, "every side >= 2");
    total *= d;
    require(total <= kMaxVertices, name, "size within the vertex cap");
  }
  Graph g = make_path(dims[0]);
  for (size_t i = 1; i < dims.size(); ++i) g = box_product(g, make_path(dims[i]));
  // Relabel with 1-based coordinate tuples.
  std::vector<std::string> labels(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int rest = v;
    std::vector<int> coord(dims.size());
    for (size_t i = dims.size(); i-- > 0;) {
      coord[i] = rest % dims[i] + 1;
      rest /= dims[i];
    }
    std::string s = "(";
    for (size_t i = 0; i < coord.size(); ++i) s += (i ? "," : "") + std::to_string(coord[i]);
    labels[v] = s + ")";
  }
  return make_graph(g.vertex_count(), g.edges(), std::move(labels));
}

Graph make_wheel(int n) {
  require(n >= 5, "wheel", "n >= 5");
  require(n <= kMaxVertices, "wheel", "n within the vertex cap");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::string> labels{"c"};
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(0, v);
    edges.emplace_back(v, v == n - 1 ? 1 : v + 1);
    labels.push_back("v" + std::to_string(v));
  }
  return make_graph(n, edges, std::move(labels));
}

Graph make_genwheel(int m, int n) {
  require(m >= 2, "genwheel", "m >= 2 centers");
  require(n >= 3, "genwheel", "n >= 3 rim vertices");
  require(m + n <= kMaxVertices, "genwheel", "m+n within the vertex cap");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::string> labels;
  for (Vertex c = 0; c < m; ++c) labels.push_back("c" + std::to_string(c + 1));
  for (Vertex i = 0; i < n; ++i) {
    Vertex v = m + i;
    labels.push_back("v" + std::to_string(i + 1));
    edges.emplace_back(v, m + (i + 1) % n);
    for (Vertex c = 0; c < m; ++c) edges.emplace_back(c, v);
  }
  return make_graph(m + n, edges, std::move(labels));
}

Graph make_multipartite(const std::vector<int>& parts) {
  require(parts.size() >= 2, "multipartite", "k >= 2 parts");
  int n = 0;
  for (int p : parts) {
    require(p >= 1, "multipartite", "every part nonempty");
    n += p;
  }
  require(n <= kMaxVertices, "multipartite", "size within the vertex cap");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> part_of;
  std::vector<std::string> labels;
  for (size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) {
      labels.push_back("p" + std::to_string(i + 1) + "v" + std::to_string(j + 1));
      part_of.push_back(static_cast<int>(i));
    }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return make_graph(n, edges, std::move(labels));
}

Graph make_split(int m, int n) {
  require(m >= 1, "split", "m >= 1");
  require(n >= 1, "split", "n >= 1");
  require(m + n <= kMaxVertices, "split", "m+n within the vertex cap");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    for (Vertex v = m; v < m + n; ++v) edges.emplace_back(u, v);
  }
  return make_graph(m + n, edges);
}

Graph make_windmill(int n, int blades) {
  require(n >= 2, "windmill", "clique size >= 2");
  require(blades >= 2, "windmill", "at least 2 blades");
  require(1 + blades * (n - 1) <= kMaxVertices, "windmill", "size within the vertex cap");
  std::vector<std::pair<Graph, Vertex>> parts;
  for (int i = 0; i < blades; ++i) parts.emplace_back(make_complete(n), 0);
  return one_clique_sum(parts);
}

// Pendant 0 hangs off rim vertex 1; rim indices pair up symmetrically
// around the attachment (2,3 adjacent to it, then 4,5, ...), which
// reproduces the usual drawing's labels for the 4-pan.
Graph make_pan(int n) {
  require(n >= 3, "pan", "cycle length >= 3");
  require(n + 1 <= kMaxVertices, "pan", "size within the vertex cap");
  std::vector<Vertex> rim(n);
  rim[0] = 1;
  for (int j = 1; j <= (n - 1) / 2; ++j) {
    rim[j] = 2 * j;
    rim[n - j] = 2 * j + 1;
  }
  if (n % 2 == 0) rim[n / 2] = n;
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}};
  for (int j = 0; j < n; ++j) edges.emplace_back(rim[j], rim[(j + 1) % n]);
  return make_graph(n + 1, edges);
}

Graph make_petersen() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, 5 + (i + 2) % 5);  // inner pentagram
  }
  return make_graph(10, edges);
}

Graph make_diamond() {
  return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

Graph make_fig_nim7() {
  return make_graph(9, {{7, 2}, {2, 6}, {6, 4}, {4, 7}, {6, 1}, {1, 4}, {1, 7}, {7, 8},
                        {8, 3}, {3, 7}, {1, 8}, {8, 2}, {2, 5}, {5, 8}, {5, 0}, {0, 8},
                        {0, 3}});
}

Graph make_fig_disj() {
  return make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 2}, {2, 7}, {7, 6}, {6, 1}, {1, 4}});
}

Graph make_fig_bar_p3() {
  return make_graph(5, {{3, 1}, {1, 4}, {4, 0}, {0, 2}, {2, 1}, {1, 0}, {0, 3}, {3, 2}});
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) { return Parser(text).parse(); }

std::string render(const FamilySpec& spec) {
  std::string out = spec.name;
  if (spec.is_combinator()) {
    out += '(';
    for (size_t i = 0; i < spec.children.size(); ++i) {
      if (i) out += ',';
      out += render(spec.children[i]);
      if (i < spec.attach.size()) out += '@' + std::to_string(spec.attach[i]);
    }
    out += ')';
  } else if (!spec.params.empty()) {
    out += ':' + render_params(spec);
  }
  return out;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "path",     "cycle",   "complete",     "star",    "hypercube", "grid",
      "lattice",  "wheel",   "genwheel",     "multipartite",         "split",
      "windmill", "pan",     "petersen",     "diamond", "fig-nim7",  "fig-disj",
      "fig-barP3"};
  return names;
}

Graph family(const FamilySpec& spec) {
  const std::string& name = spec.name;
  if (spec.is_combinator()) {
    if (name == "corona") {
      if (spec.children.size() != 1)
        throw std::invalid_argument("corona: expected exactly one argument");
      return corona(family(spec.children[0]));
    }
    if (name == "cliquesum") {
      std::vector<std::pair<Graph, Vertex>> parts;
      for (size_t i = 0; i < spec.children.size(); ++i)
        parts.emplace_back(family(spec.children[i]), spec.attach[i]);
      return one_clique_sum(parts);
    }
    if (name == "union" || name == "box" || name == "join") {
      if (spec.children.size() < 2)
        throw std::invalid_argument(name + ": expected at least two arguments");
      Graph acc = family(spec.children[0]);
      for (size_t i = 1; i < spec.children.size(); ++i) {
        Graph next = family(spec.children[i]);
        acc = name == "union" ? disjoint_union(acc, next)
            : name == "box"   ? box_product(acc, next)
                              : join(acc, next);
      }
      return acc;
    }
    throw std::invalid_argument("unknown combinator: " + name);
  }

  if (name == "path") { require_arity(spec, 1); return make_path(spec.params[0]); }
  if (name == "cycle") { require_arity(spec, 1); return make_cycle(spec.params[0]); }
  if (name == "complete") { require_arity(spec, 1); return make_complete(spec.params[0]); }
  if (name == "star") { require_arity(spec, 1); return make_star(spec.params[0]); }
  if (name == "hypercube") { require_arity(spec, 1); return make_hypercube(spec.params[0]); }
  if (name == "grid") {
    require_arity(spec, 2);
    int m = spec.params[0], n = spec.params[1];
    require(2 <= m && m <= n && n >= 3, "grid",
            "2 <= m <= n with n >= 3 (use lattice for other boxes of paths)");
    return make_lattice({m, n}, "grid");
  }
  if (name == "lattice") return make_lattice(spec.params, "lattice");
  if (name == "wheel") { require_arity(spec, 1); return make_wheel(spec.params[0]); }
  if (name == "genwheel") { require_arity(spec, 2); return make_genwheel(spec.params[0], spec.params[1]); }
  if (name == "multipartite") return make_multipartite(spec.params);
  if (name == "split") { require_arity(spec, 2); return make_split(spec.params[0], spec.params[1]); }
  if (name == "windmill") { require_arity(spec, 2); return make_windmill(spec.params[0], spec.params[1]); }
  if (name == "pan") { require_arity(spec, 1); return make_pan(spec.params[0]); }
  if (name == "petersen") { require_arity(spec, 0); return make_petersen(); }
  if (name == "diamond") { require_arity(spec, 0); return make_diamond(); }
  if (name == "fig-nim7") { require_arity(spec, 0); return make_fig_nim7(); }
  if (name == "fig-disj") { require_arity(spec, 0); return make_fig_disj(); }
  if (name == "fig-barP3") { require_arity(spec, 0); return make_fig_bar_p3(); }
  throw std::invalid_argument("unknown family name: " + name);
}

}  // namespace ggl
