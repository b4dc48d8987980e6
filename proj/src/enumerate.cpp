#include "ggl/enumerate.hpp"

#include <sstream>

namespace ggl {
namespace {

bool connected_masks(const std::vector<VertexSet>& adj, int n) {
  VertexSet seen = VertexSet::single(0);
  for (int step = 0; step < n; ++step) {
    VertexSet next = seen;
    for (Vertex v : seen) next |= adj[v];
    if (next == seen) break;
    seen = next;
  }
  return seen == VertexSet::full(n);
}

}  // namespace

void for_each_labeled_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  int pairs = n * (n - 1) / 2;
  for (std::uint64_t em = 0; em < (std::uint64_t{1} << pairs); ++em) {
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
    if (!connected_masks(adj, n)) continue;
    fn(make_graph(n, edges));
  }
}

std::uint64_t count_labeled_connected_graphs(int n) {
  std::uint64_t count = 0;
  for_each_labeled_connected_graph(n, [&](const Graph&) { ++count; });
  return count;
}

Graph random_connected_graph(int n, double edge_probability, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<VertexSet> adj(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (chance(rng, edge_probability)) {
          edges.emplace_back(u, v);
          adj[u] = adj[u].with(v);
          adj[v] = adj[v].with(u);
        }
    if (connected_masks(adj, n)) return make_graph(n, edges);
  }
}

std::string graph_recipe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << ";edges=";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out << ",";
    out << u << "-" << v;
    first = false;
  }
  return out.str();
}

void verify_engines(const Graph& g, VerifyReport& report, const Guards& guards) {
  ++report.graphs;
  for (ClosureKind closure : {ClosureKind::Hull, ClosureKind::Geodetic}) {
    SetFamily nongen = maximal_nongenerating(g, closure, guards);
    for (GameKind game : {GameKind::Dng, GameKind::Gen}) {
      GameSpec spec{game, closure};
      int brute = nim_brute(g, spec, guards);
      int fast = FastSolver(g, spec, nongen).game_nim();
      StructureDigraph d = build_structure_digraph(g, spec, nongen, guards);
      type_calculus(d);
      int structural = game_nim(d);
      ++report.checks;
      if (brute != fast || brute != structural) {
        std::ostringstream out;
        out << "engine mismatch game=" << to_string(game) << " closure=" << to_string(closure)
            << " brute=" << brute << " fast=" << fast << " structure=" << structural << " on "
            << graph_recipe(g);
        report.failures.push_back(out.str());
      }
    }
  }
}

void verify_union_law(const Graph& g, const Graph& h, VerifyReport& report,
                      const Guards& guards) {
  Graph u = disjoint_union(g, h);
  SetFamily expected;
  VertexSet vg, vh;
  for (Vertex v = 0; v < g.vertex_count(); ++v) vg = vg.with(v);
  for (Vertex v = 0; v < h.vertex_count(); ++v) vh = vh.with(g.vertex_count() + v);
  for (VertexSet n : maximal_nongenerating(g, ClosureKind::Hull, guards))
    expected.push_back(n | vh);
  for (VertexSet n : maximal_nongenerating(h, ClosureKind::Hull, guards)) {
    VertexSet shifted;
    for (Vertex v : n) shifted = shifted.with(g.vertex_count() + v);
    expected.push_back(vg | shifted);
  }
  canonicalize(expected);
  ++report.checks;
  if (expected != maximal_nongenerating(u, ClosureKind::Hull, guards))
    report.failures.push_back("disjoint-union law failed on " + graph_recipe(g) + " + " +
                              graph_recipe(h));
}

void verify_box_laws(const Graph& g, const Graph& h, std::mt19937_64& rng,
                     VerifyReport& report, const Guards& guards) {
  if (g.vertex_count() * h.vertex_count() > kMaxVertices) return;
  Graph b = box_product(g, h);
  int nh = h.vertex_count();
  auto lift_g = [&](VertexSet s) {
    VertexSet out;
    for (Vertex a : s)
      for (Vertex y = 0; y < nh; ++y) out = out.with(a * nh + y);
    return out;
  };
  auto lift_h = [&](VertexSet s) {
    VertexSet out;
    for (Vertex a = 0; a < g.vertex_count(); ++a)
      for (Vertex y : s) out = out.with(a * nh + y);
    return out;
  };

  SetFamily expected;
  for (VertexSet n : maximal_nongenerating(g, ClosureKind::Hull, guards))
    expected.push_back(lift_g(n));
  for (VertexSet n : maximal_nongenerating(h, ClosureKind::Hull, guards))
    expected.push_back(lift_h(n));
  canonicalize(expected);
  ++report.checks;
  if (expected != maximal_nongenerating(b, ClosureKind::Hull, guards))
    report.failures.push_back("box-product law failed on " + graph_recipe(g) + " x " +
                              graph_recipe(h));

  VertexSet phi_expected = lift_g(frattini(g, ClosureKind::Hull, guards)) &
                           lift_h(frattini(h, ClosureKind::Hull, guards));
  ++report.checks;
  if (phi_expected != frattini(b, ClosureKind::Hull, guards))
    report.failures.push_back("box-product Frattini law failed on " + graph_recipe(g) +
                              " x " + graph_recipe(h));

  // hull factorization: the hull of a subset is the product of the hulls of
  // its projections
  for (int trial = 0; trial < 8; ++trial) {
    VertexSet s = random_subset(rng, b.vertex_count());
    VertexSet pg, ph;
    for (Vertex x : s) {
      pg = pg.with(x / nh);
      ph = ph.with(x % nh);
    }
    VertexSet product = lift_g(convex_hull(g, pg)) & lift_h(convex_hull(h, ph));
    ++report.checks;
    if (s.empty() ? !convex_hull(b, s).empty() : convex_hull(b, s) != product) {
      report.failures.push_back("hull factorization failed on " + graph_recipe(g) + " x " +
                                graph_recipe(h) + " subset " + to_string(s));
    }
  }
}

void verify_cliquesum_law(const std::vector<std::pair<Graph, Vertex>>& parts,
                          VerifyReport& report, const Guards& guards) {
  // the law covers sums of nontrivial connected graphs
  for (const auto& [g, c] : parts)
    if (g.vertex_count() < 2 || !g.connected()) return;
  Graph sum = one_clique_sum(parts);

  // re-index each part the way one_clique_sum does
  std::vector<std::vector<Vertex>> maps;
  int next = 1;
  for (const auto& [g, c] : parts) {
    std::vector<Vertex> map(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) map[v] = v == c ? 0 : next++;
    maps.push_back(std::move(map));
  }
  SetFamily expected;
  VertexSet all = sum.vertices();
  for (size_t i = 0; i < parts.size(); ++i) {
    const auto& [g, c] = parts[i];
    VertexSet others = all;
    for (Vertex v = 0; v < g.vertex_count(); ++v) others = others.without(maps[i][v]);
    for (VertexSet n : maximal_nongenerating(g, ClosureKind::Hull, guards)) {
      if (!n.contains(c)) continue;
      VertexSet lifted = others.with(0);
      for (Vertex v : n) lifted = lifted.with(maps[i][v]);
      expected.push_back(lifted);
    }
  }
  canonicalize(expected);
  ++report.checks;
  if (expected != maximal_nongenerating(sum, ClosureKind::Hull, guards)) {
    std::string what = "1-clique-sum law failed on";
    for (const auto& [g, c] : parts)
      what += " " + graph_recipe(g) + "@" + std::to_string(c);
    report.failures.push_back(what);
  }
}

void verify_nongenerator_theorem(const Graph& g, ClosureKind kind, VerifyReport& report,
                                 const Guards& guards) {
  int n = g.vertex_count();
  VertexSet phi = frattini(g, kind, guards);
  for (Vertex v = 0; v < n; ++v) {
    bool removable = true;
    for (Mask m = 0; m < (Mask{1} << n) && removable; ++m) {
      VertexSet s(m);
      if (!s.contains(v)) continue;
      if (is_generating(g, s, kind) && !is_generating(g, s.without(v), kind))
        removable = false;
    }
    ++report.checks;
    if (removable != phi.contains(v)) {
      report.failures.push_back("nongenerator theorem failed at vertex " + std::to_string(v) +
                                " closure=" + to_string(kind) + " on " + graph_recipe(g));
      return;
    }
  }
}

VerifyReport verify_exhaustive(int max_vertices, const VerifyOptions& options,
                               const Guards& guards) {
  VerifyReport report;
  std::uint64_t total = 0;
  if (options.progress)
    for (int n = 1; n <= max_vertices; ++n) total += count_labeled_connected_graphs(n);

  std::vector<Graph> law_pool;
  std::mt19937_64 rng(0x67676c);  // fixed stream for pair sampling
  std::uint64_t done = 0;
  for (int n = 1; n <= max_vertices; ++n) {
    for_each_labeled_connected_graph(n, [&](const Graph& g) {
      if (options.engines) verify_engines(g, report, guards);
      if (options.nongenerator) {
        verify_nongenerator_theorem(g, ClosureKind::Hull, report, guards);
        verify_nongenerator_theorem(g, ClosureKind::Geodetic, report, guards);
      }
      if (options.laws && n >= 2 && chance(rng, 0.02)) law_pool.push_back(g);
      ++done;
      if (options.progress) options.progress(done, total);
    });
  }

  if (options.laws && law_pool.size() >= 2) {
    for (size_t i = 0; i + 1 < law_pool.size(); i += 2) {
      const Graph& g = law_pool[i];
      const Graph& h = law_pool[i + 1];
      verify_union_law(g, h, report, guards);
      verify_box_laws(g, h, rng, report, guards);
      if (g.connected() && h.connected()) {
        Vertex cg = static_cast<Vertex>(rng() % g.vertex_count());
        Vertex ch = static_cast<Vertex>(rng() % h.vertex_count());
        verify_cliquesum_law({{g, cg}, {h, ch}}, report, guards);
      }
    }
  }
  return report;
}

VerifyReport verify_random(int count, int min_vertices, int max_vertices, std::uint64_t seed,
                           const VerifyOptions& options, const Guards& guards) {
  VerifyReport report;
  std::mt19937_64 rng(seed);
  Graph previous = make_graph(1, {});
  for (int i = 0; i < count; ++i) {
    int n = min_vertices + static_cast<int>(rng() % (max_vertices - min_vertices + 1));
    Graph g = random_connected_graph(n, options.edge_probability, rng);
    if (options.engines) verify_engines(g, report, guards);
    if (options.nongenerator && n <= 7) {
      verify_nongenerator_theorem(g, ClosureKind::Hull, report, guards);
      verify_nongenerator_theorem(g, ClosureKind::Geodetic, report, guards);
    }
    if (options.laws && i % 7 == 3 && previous.vertex_count() >= 2) {
      verify_union_law(previous, g, report, guards);
      if (previous.vertex_count() * g.vertex_count() <= kMaxVertices)
        verify_box_laws(previous, g, rng, report, guards);
    }
    previous = g;
    if (options.progress) options.progress(i + 1, count);
  }
  return report;
}

}  // namespace ggl
