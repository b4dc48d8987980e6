#include "ggl/closed_forms.hpp"

#include <algorithm>
#include <functional>

#include "ggl/structure.hpp"

namespace ggl {
namespace {

int pty(int k) { return k & 1; }

struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cuts;
};

BlockDecomposition decompose_blocks(const Graph& g) {
  int n = g.vertex_count();
  BlockDecomposition out;
  std::vector<int> depth(n, -1), low(n, 0);
  std::vector<std::pair<Vertex, Vertex>> stack;

  std::function<void(Vertex, Vertex, int)> dfs = [&](Vertex v, Vertex parent, int d) {
    depth[v] = low[v] = d;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (depth[w] == -1) {
        stack.emplace_back(v, w);
        ++children;
        dfs(w, v, d + 1);
        low[v] = std::min(low[v], low[w]);
        if ((parent == -1 && children > 1) || (parent != -1 && low[w] >= depth[v])) {
          out.cuts = out.cuts.with(v);
        }
        if (low[w] >= depth[v]) {
          VertexSet block;
          while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block = block.with(a).with(b);
            if (a == v && b == w) break;
          }
          out.blocks.push_back(block);
        }
      } else if (depth[w] < depth[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], depth[w]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    if (depth[v] == -1) {
      dfs(v, -1, 0);
      if (g.neighbors(v).empty()) out.blocks.push_back(VertexSet::single(v));
    }
  }
  return out;
}

bool induces_clique(const Graph& g, VertexSet s) {
  for (Vertex u : s)
    if (!(s.without(u)).subset_of(g.neighbors(u))) return false;
  return true;
}

SetFamily cosingletons(VertexSet of, int n) {
  SetFamily out;
  for (Vertex v : of) out.push_back(VertexSet::full(n).without(v));
  canonicalize(out);
  return out;
}

// Walks the attached cycle of a pan graph starting at the attachment vertex.
std::vector<Vertex> pan_rim_order(const Graph& g) {
  std::vector<Vertex> rim{1};
  Vertex prev = 1, cur = *(g.neighbors(1).without(0)).begin();
  while (cur != 1) {
    rim.push_back(cur);
    VertexSet next = g.neighbors(cur).without(prev).without(0);
    prev = cur;
    cur = *next.begin();
  }
  return rim;
}

std::optional<int> block_formula(int vertex_count, GameKind game) {
  return game == GameKind::Dng ? 1 - pty(vertex_count) : pty(vertex_count);
}

}  // namespace

std::vector<VertexSet> biconnected_blocks(const Graph& g) { return decompose_blocks(g).blocks; }

VertexSet cut_vertices(const Graph& g) { return decompose_blocks(g).cuts; }

bool is_block_graph(const Graph& g) {
  for (VertexSet block : biconnected_blocks(g))
    if (!induces_clique(g, block)) return false;
  return true;
}

std::optional<int> expected_nim_block(const Graph& g, GameKind game) {
  if (!is_block_graph(g)) return std::nullopt;
  return block_formula(g.vertex_count(), game);
}

std::optional<int> expected_nim(const FamilySpec& spec, GameKind game) {
  const auto& name = spec.name;
  const auto& p = spec.params;
  bool dng = game == GameKind::Dng;

  if (name == "corona" && spec.children.size() == 1) return dng ? 1 : 0;
  if (spec.is_combinator()) return std::nullopt;

  if (name == "cycle" && p.size() == 1 && p[0] >= 3) {
    int n = p[0];
    if (dng) return (n % 4 == 1 || n % 4 == 2) ? 1 : 0;
    return pty(n);
  }
  if (name == "hypercube" && p.size() == 1 && p[0] >= 0) {
    if (p[0] >= 2) return 0;
    return block_formula(1 << p[0], game);  // a point or an edge
  }
  if ((name == "grid" || name == "lattice") && p.size() == 2) {
    int m = std::min(p[0], p[1]), n = std::max(p[0], p[1]);
    if (m < 2) return std::nullopt;
    if (dng) return m == 2 ? 0 : 2 * pty(m + n);
    return pty(m * n);
  }
  if (name == "lattice" && p.size() == 1 && p[0] >= 2)
    return block_formula(p[0], game);  // a path
  if (name == "multipartite" && p.size() >= 2) {
    int small = 0, large = 0, total = 0;
    for (int part : p) {
      if (part < 1) return std::nullopt;
      (part == 1 ? small : large) += 1;
      total += part;
    }
    if (large <= 1) return block_formula(total, game) /* = complete split rule */;
    if (dng) return pty(small + large);
    return pty(large) == 0 ? 2 * pty(small) : pty(small);
  }
  if (name == "split" && p.size() == 2 && p[0] >= 1 && p[1] >= 1) {
    if (p[1] == 1) return block_formula(p[0] + 1, game);  // just a complete graph
    return dng ? 1 - pty(p[0] + p[1]) : pty(p[0] + p[1]);
  }
  if (name == "wheel" && p.size() == 1 && p[0] >= 5) {
    int n = p[0];
    if (dng) return pty(n);
    return n == 5 ? 2 : pty(n);
  }
  if (name == "genwheel" && p.size() == 2 && p[0] >= 1 && p[1] >= 3) {
    int m = p[0], n = p[1];
    if (m == 1)  // one center is just a wheel on n+1 vertices
      return expected_nim(FamilySpec{"wheel", {n + 1}, {}, {}}, game);
    if (n == 3) return dng ? pty(m) : 1 - pty(m);
    return dng ? 1 : 0;
  }
  if (name == "complete" && p.size() == 1 && p[0] >= 1) return block_formula(p[0], game);
  if (name == "path" && p.size() == 1 && p[0] >= 1) return block_formula(p[0], game);
  if (name == "star" && p.size() == 1 && p[0] >= 1) return block_formula(p[0] + 1, game);
  if (name == "windmill" && p.size() == 2 && p[0] >= 2 && p[1] >= 2)
    return block_formula(1 + p[1] * (p[0] - 1), game);
  if (name == "petersen") return dng ? 1 : 0;
  if (name == "diamond") return dng ? 1 : 0;
  if (name == "pan" && p.size() == 1 && p[0] == 4) return dng ? 2 : 0;
  if (name == "fig-nim7" && dng) return 7;
  if (name == "fig-barP3") return block_formula(5, game);  // unique minimal generating set
  return std::nullopt;
}

std::optional<SetFamily> expected_family_N(const FamilySpec& spec) {
  const auto& name = spec.name;
  const auto& p = spec.params;

  if (name == "corona" && spec.children.size() == 1) {
    int nh = family(spec.children[0]).vertex_count();
    if (nh == 1) return SetFamily{VertexSet::single(0), VertexSet::single(1)};
    VertexSet pendants;
    for (Vertex v = nh; v < 2 * nh; ++v) pendants = pendants.with(v);
    return cosingletons(pendants, 2 * nh);
  }
  if (spec.is_combinator()) return std::nullopt;

  if (name == "cycle" && p.size() == 1 && p[0] >= 3) {
    int n = p[0];
    int len = n % 2 == 0 ? n / 2 : (n + 1) / 2;  // arc length
    SetFamily out;
    for (int start = 0; start < n; ++start) {
      VertexSet arc;
      for (int k = 0; k < len; ++k) arc = arc.with((start + k) % n);
      out.push_back(arc);
    }
    canonicalize(out);
    return out;
  }
  if (name == "hypercube" && p.size() == 1 && p[0] >= 0) {
    int d = p[0];
    if (d == 0) return SetFamily{VertexSet{}};
    SetFamily out;
    for (int k = 0; k < d; ++k)
      for (int b = 0; b <= 1; ++b) {
        VertexSet half;
        for (Vertex v = 0; v < (1 << d); ++v)
          if (((v >> k) & 1) == b) half = half.with(v);
        out.push_back(half);
      }
    canonicalize(out);
    return out;
  }
  if (name == "grid" || name == "lattice") {
    std::vector<int> dims = p;
    if (dims.empty()) return std::nullopt;
    for (int d : dims)
      if (d < 2) return std::nullopt;
    int n = 1;
    for (int d : dims) n *= d;
    if (n > kMaxVertices) return std::nullopt;
    SetFamily out;
    for (size_t k = 0; k < dims.size(); ++k) {
      VertexSet lower, upper;  // coordinate k above its floor / below its ceiling
      for (Vertex v = 0; v < n; ++v) {
        int rest = v;
        for (size_t i = dims.size(); i-- > k + 1;) rest /= dims[i];
        int coord = rest % dims[k] + 1;
        if (coord > 1) lower = lower.with(v);
        if (coord < dims[k]) upper = upper.with(v);
      }
      out.push_back(lower);
      out.push_back(upper);
    }
    canonicalize(out);
    return out;
  }
  if (name == "multipartite" && p.size() >= 2) {
    int small = 0, large = 0, total = 0;
    for (int part : p) {
      if (part < 1) return std::nullopt;
      (part == 1 ? small : large) += 1;
      total += part;
    }
    if (total > kMaxVertices) return std::nullopt;
    if (large <= 1) {
      // unique minimal generating set: the large part, or everything when complete
      VertexSet gen;
      int offset = 0;
      for (int part : p) {
        for (int j = 0; j < part; ++j)
          if (large == 0 || part >= 2) gen = gen.with(offset + j);
        offset += part;
      }
      return cosingletons(gen, total);
    }
    SetFamily out;
    std::vector<VertexSet> transversals{VertexSet{}};
    int offset = 0;
    for (int part : p) {
      std::vector<VertexSet> next;
      for (VertexSet t : transversals)
        for (int j = 0; j < part; ++j) next.push_back(t.with(offset + j));
      transversals = std::move(next);
      offset += part;
    }
    out = std::move(transversals);
    canonicalize(out);
    return out;
  }
  if (name == "split" && p.size() == 2 && p[0] >= 1 && p[1] >= 1) {
    int m = p[0], n = p[1];
    if (m + n > kMaxVertices) return std::nullopt;
    VertexSet gen;  // the independent part; everything when it is a single vertex
    for (Vertex v = (n >= 2 ? m : 0); v < m + n; ++v) gen = gen.with(v);
    return cosingletons(gen, m + n);
  }
  if (name == "wheel" && p.size() == 1 && p[0] >= 5) {
    int n = p[0];
    SetFamily out;
    for (Vertex i = 1; i < n; ++i) {
      Vertex next = i == n - 1 ? 1 : i + 1;
      out.push_back(VertexSet::full(n).without(i).without(next));
    }
    canonicalize(out);
    return out;
  }
  if (name == "genwheel" && p.size() == 2 && p[0] >= 2 && p[1] >= 3) {
    int m = p[0], n = p[1];
    if (m + n > kMaxVertices) return std::nullopt;
    if (n == 3) {  // complete split graph with the centers as independent part
      VertexSet centers;
      for (Vertex c = 0; c < m; ++c) centers = centers.with(c);
      return cosingletons(centers, m + n);
    }
    SetFamily out;
    for (Vertex c = 0; c < m; ++c)
      for (int j = 0; j < n; ++j)
        out.push_back(VertexSet::single(c).with(m + j).with(m + (j + 1) % n));
    canonicalize(out);
    return out;
  }
  if (name == "complete" && p.size() == 1 && p[0] >= 1)
    return cosingletons(VertexSet::full(p[0]), p[0]);
  if (name == "path" && p.size() == 1 && p[0] >= 1) {
    int n = p[0];
    if (n == 1) return SetFamily{VertexSet{}};
    return cosingletons(VertexSet::single(0).with(n - 1), n);
  }
  if (name == "star" && p.size() == 1 && p[0] >= 1) {
    int leaves = p[0];
    if (leaves == 1) return cosingletons(VertexSet::full(2), 2);
    VertexSet leafset;
    for (Vertex v = 1; v <= leaves; ++v) leafset = leafset.with(v);
    return cosingletons(leafset, leaves + 1);
  }
  if (name == "windmill" && p.size() == 2 && p[0] >= 2 && p[1] >= 2) {
    int n = 1 + p[1] * (p[0] - 1);
    if (n > kMaxVertices) return std::nullopt;
    return cosingletons(VertexSet::full(n).without(0), n);
  }
  if (name == "diamond")
    return SetFamily{VertexSet(0b0111), VertexSet(0b1110)};
  if (name == "pan" && p.size() == 1 && p[0] >= 3) {
    // 1-clique sum of the cycle and the pendant edge at vertex 1: the
    // maximal nongenerating sets are the cycle's arcs through the
    // attachment extended by the pendant, plus everything but the pendant.
    int n = p[0];
    if (n + 1 > kMaxVertices) return std::nullopt;
    Graph g = family(spec);
    std::vector<Vertex> rim = pan_rim_order(g);
    int len = n % 2 == 0 ? n / 2 : (n + 1) / 2;
    SetFamily out{VertexSet::full(n + 1).without(0)};
    for (int start = 0; start < n; ++start) {
      VertexSet arc;
      for (int k = 0; k < len; ++k) arc = arc.with(rim[(start + k) % n]);
      if (arc.contains(1)) out.push_back(arc.with(0));
    }
    canonicalize(out);
    return out;
  }
  if (name == "petersen") {
    Graph g = family(spec);
    SetFamily out;
    for (Vertex v = 0; v < 10; ++v) out.push_back(g.neighbors(v).with(v));
    // the induced 5-cycles: 2-regular connected 5-subsets
    for (Mask m = 0; m < (1u << 10); ++m) {
      VertexSet s(m);
      if (s.size() != 5) continue;
      bool ok = true;
      for (Vertex v : s)
        if ((g.neighbors(v) & s).size() != 2) { ok = false; break; }
      if (!ok) continue;
      VertexSet seen = VertexSet::single(*s.begin());
      for (int step = 0; step < 5; ++step)
        for (Vertex v : seen) seen |= g.neighbors(v) & s;
      if (seen == s) out.push_back(s);
    }
    canonicalize(out);
    return out;
  }
  if (name == "fig-barP3")
    return cosingletons(VertexSet(0b11100), 5);
  if (name == "fig-disj") {
    SetFamily co{VertexSet(0b00000001), VertexSet(0b00001000), VertexSet(0b00110000),
                 VertexSet(0b11000000)};
    return complement_family(co, 8);
  }
  return std::nullopt;
}

std::optional<VertexSet> expected_frattini(const FamilySpec& spec) {
  const auto& name = spec.name;
  const auto& p = spec.params;

  if (name == "corona" && spec.children.size() == 1) {
    int nh = family(spec.children[0]).vertex_count();
    if (nh == 1) return VertexSet{};
    return VertexSet::full(nh);
  }
  if (spec.is_combinator()) return std::nullopt;

  if (name == "cycle" && p.size() == 1 && p[0] >= 3) return VertexSet{};
  if (name == "hypercube" && p.size() == 1 && p[0] >= 0) return VertexSet{};
  if (name == "grid" || name == "lattice") {
    std::vector<int> dims = p;
    if (dims.empty()) return std::nullopt;
    int n = 1;
    for (int d : dims) {
      if (d < 2) return std::nullopt;
      n *= d;
    }
    if (n > kMaxVertices) return std::nullopt;
    VertexSet interior;
    for (Vertex v = 0; v < n; ++v) {
      int rest = v;
      bool inside = true;
      for (size_t i = dims.size(); i-- > 0;) {
        int coord = rest % dims[i] + 1;
        rest /= dims[i];
        if (coord == 1 || coord == dims[i]) { inside = false; break; }
      }
      if (inside) interior = interior.with(v);
    }
    return interior;
  }
  if (name == "multipartite" && p.size() >= 2) {
    VertexSet small;
    int offset = 0, total = 0;
    for (int part : p) {
      if (part < 1) return std::nullopt;
      total += part;
      if (part == 1) small = small.with(offset);
      offset += part;
    }
    if (total > kMaxVertices) return std::nullopt;
    return small;
  }
  if (name == "split" && p.size() == 2 && p[0] >= 1 && p[1] >= 1) {
    if (p[1] == 1) return VertexSet{};  // complete graph
    return VertexSet::full(p[0]);
  }
  if (name == "wheel" && p.size() == 1 && p[0] >= 5) return VertexSet::single(0);
  if (name == "genwheel" && p.size() == 2 && p[0] >= 2 && p[1] >= 3) {
    if (p[1] == 3) {  // complete split graph: the triangle is the clique part
      VertexSet rim;
      for (int j = 0; j < 3; ++j) rim = rim.with(p[0] + j);
      return rim;
    }
    return VertexSet{};
  }
  if (name == "complete" && p.size() == 1 && p[0] >= 1) return VertexSet{};
  if (name == "path" && p.size() == 1 && p[0] >= 1) {
    VertexSet interior;
    for (Vertex v = 1; v + 1 < p[0]; ++v) interior = interior.with(v);
    return interior;
  }
  if (name == "star" && p.size() == 1 && p[0] >= 1)
    return p[0] == 1 ? VertexSet{} : VertexSet::single(0);
  if (name == "windmill" && p.size() == 2 && p[0] >= 2 && p[1] >= 2)
    return VertexSet::single(0);
  if (name == "diamond") return VertexSet(0b0110);
  if (name == "pan" && p.size() == 1 && p[0] >= 3) return VertexSet::single(1);
  if (name == "petersen") return VertexSet{};
  if (name == "fig-barP3") return VertexSet(0b00011);
  if (name == "fig-disj") return VertexSet(0b00000110);
  return std::nullopt;
}

FamilyResult closed_form(const FamilySpec& spec) {
  FamilyResult out;
  out.dng = expected_nim(spec, GameKind::Dng);
  out.gen = expected_nim(spec, GameKind::Gen);
  out.nongenerating = expected_family_N(spec);
  out.frattini = expected_frattini(spec);
  return out;
}

namespace {

std::string graph_descriptor(const Graph& g) {
  std::string s = std::to_string(g.vertex_count()) + ":";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) s += "-";
    s += std::to_string(u) + std::to_string(v);
    first = false;
  }
  return s;
}

void run_cells(Table1Report& report, const std::string& row, const std::string& param,
               const Graph& g, int expected_dng, int expected_gen, const Guards& guards) {
  for (GameKind game : {GameKind::Dng, GameKind::Gen}) {
    Table1Cell cell;
    cell.row = row;
    cell.param = param;
    cell.game = to_string(game);
    cell.expected = game == GameKind::Dng ? expected_dng : expected_gen;
    cell.computed = structure_nim(g, GameSpec{game, ClosureKind::Hull}, guards);
    cell.ok = cell.expected == cell.computed;
    report.all_ok = report.all_ok && cell.ok;
    report.cells.push_back(std::move(cell));
  }
}

void run_spec_cells(Table1Report& report, const std::string& row, const FamilySpec& spec,
                    const Guards& guards) {
  Graph g = family(spec);
  run_cells(report, row, render(spec), g, *expected_nim(spec, GameKind::Dng),
            *expected_nim(spec, GameKind::Gen), guards);
}

void for_each_connected_graph_upto(int max_n, const std::function<void(const Graph&)>& fn) {
  for (int n = 1; n <= max_n; ++n) {
    int pairs = n * (n - 1) / 2;
    for (Mask em = 0; em < (Mask{1} << pairs); ++em) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      std::vector<VertexSet> adj(n);
      int bit = 0;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
          if ((em >> bit) & 1) {
            edges.emplace_back(u, v);
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
          }
      VertexSet seen = VertexSet::single(0);
      for (int step = 0; step < n; ++step)
        for (Vertex v : seen) seen |= adj[v];
      if (seen != VertexSet::full(n)) continue;
      fn(make_graph(n, edges));
    }
  }
}

}  // namespace

const std::vector<std::string>& table1_row_names() {
  static const std::vector<std::string> rows = {"cycle",    "hypercube", "grid",
                                                "multipartite",          "wheel",
                                                "genwheel", "split",     "corona",
                                                "block"};
  return rows;
}

Table1Report run_table1(const Table1Options& options, const Guards& guards) {
  Table1Report report;
  auto wants = [&](const std::string& row) {
    return options.rows.empty() ||
           std::find(options.rows.begin(), options.rows.end(), row) != options.rows.end();
  };

  if (wants("cycle"))
    for (int n = 3; n <= 12; ++n)
      run_spec_cells(report, "cycle", FamilySpec{"cycle", {n}, {}, {}}, guards);
  if (wants("hypercube"))
    for (int d = 2; d <= 4; ++d)
      run_spec_cells(report, "hypercube", FamilySpec{"hypercube", {d}, {}, {}}, guards);
  if (wants("grid"))
    for (int m = 2; m <= 4; ++m)
      for (int n = m; n <= 5; ++n) {
        // the 2x2 box of paths is outside the grid family's parameter range
        FamilySpec spec = m == 2 && n == 2 ? FamilySpec{"lattice", {2, 2}, {}, {}}
                                           : FamilySpec{"grid", {m, n}, {}, {}};
        run_spec_cells(report, "grid", spec, guards);
      }
  if (wants("multipartite")) {
    std::vector<int> parts;
    std::function<void(int, int)> sweep = [&](int remaining, int minimum) {
      if (parts.size() >= 2 && remaining == 0) {
        run_spec_cells(report, "multipartite", FamilySpec{"multipartite", parts, {}, {}},
                       guards);
      }
      for (int next = minimum; next <= remaining; ++next) {
        parts.push_back(next);
        sweep(remaining - next, next);
        parts.pop_back();
      }
    };
    for (int total = 2; total <= 8; ++total) sweep(total, 1);
  }
  if (wants("wheel"))
    for (int n = 5; n <= 9; ++n)
      run_spec_cells(report, "wheel", FamilySpec{"wheel", {n}, {}, {}}, guards);
  if (wants("genwheel"))
    for (int m = 2; m <= 3; ++m)
      for (int n = 3; n <= 6; ++n)
        run_spec_cells(report, "genwheel", FamilySpec{"genwheel", {m, n}, {}, {}}, guards);
  if (wants("split"))
    for (int m = 1; m <= 4; ++m)
      for (int n = 2; n <= 4; ++n)
        run_spec_cells(report, "split", FamilySpec{"split", {m, n}, {}, {}}, guards);
  if (wants("corona"))
    for_each_connected_graph_upto(4, [&](const Graph& h) {
      Graph g = corona(h);
      run_cells(report, "corona", "corona(" + graph_descriptor(h) + ")", g, 1, 0, guards);
    });
  if (wants("block")) {
    report.notes.push_back(
        "block row accepts any graph whose biconnected blocks are cliques "
        "(cut-vertex decomposition), which subsumes trees, complete graphs, "
        "and windmills");
    std::vector<FamilySpec> samples;
    for (int n = 2; n <= 8; ++n) samples.push_back({"path", {n}, {}, {}});
    for (int leaves = 2; leaves <= 7; ++leaves) samples.push_back({"star", {leaves}, {}, {}});
    for (int n = 2; n <= 6; ++n) samples.push_back({"complete", {n}, {}, {}});
    for (int blades = 2; blades <= 3; ++blades)
      samples.push_back({"windmill", {3, blades}, {}, {}});
    for (const FamilySpec& spec : samples) {
      Graph g = family(spec);
      run_cells(report, "block", render(spec), g, *expected_nim_block(g, GameKind::Dng),
                *expected_nim_block(g, GameKind::Gen), guards);
    }
  }
  if (options.inject_mismatch) {
    Table1Cell cell{"injected", "synthetic", "dng", 1, 0, false};
    report.all_ok = false;
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace ggl
