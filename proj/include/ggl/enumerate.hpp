#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ggl/structure.hpp"

namespace ggl {

// Fixed-point coin flip on the raw engine output, so results are identical
// across platforms for a given seed.
inline bool chance(std::mt19937_64& rng, double probability) {
  return rng() < static_cast<std::uint64_t>(probability * 18446744073709551616.0);
}

// Uniform random subset of the first n vertices.
inline VertexSet random_subset(std::mt19937_64& rng, int n) {
  return VertexSet(static_cast<Mask>(rng()) & VertexSet::full(n).bits());
}

// Every labeled connected graph on exactly n vertices, in edge-mask order.
void for_each_labeled_connected_graph(int n, const std::function<void(const Graph&)>& fn);
std::uint64_t count_labeled_connected_graphs(int n);

// Uniform edge probability with rejection until connected.
Graph random_connected_graph(int n, double edge_probability, std::mt19937_64& rng);

std::string graph_recipe(const Graph& g);  // reproduction string "n=..;edges=.."

struct VerifyReport {
  std::uint64_t graphs = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  int worker_count = 1;
  bool ok() const { return failures.empty(); }
};

// Compares the brute-force, collapsed-memo, and structure-digraph nim values
// for both games and both closure operators on one graph.
void verify_engines(const Graph& g, VerifyReport& report, const Guards& guards = {});

// Checks the composition laws for the maximal nongenerating family and the
// Frattini subset against direct enumeration on the composed graph:
// disjoint union, box product (plus the hull factorization on random
// subsets), and 1-clique sums.
void verify_union_law(const Graph& g, const Graph& h, VerifyReport& report,
                      const Guards& guards = {});
void verify_box_laws(const Graph& g, const Graph& h, std::mt19937_64& rng,
                     VerifyReport& report, const Guards& guards = {});
void verify_cliquesum_law(const std::vector<std::pair<Graph, Vertex>>& parts,
                          VerifyReport& report, const Guards& guards = {});

// True on every graph: a vertex lies in every maximal nongenerating set
// exactly when deleting it from any generating set leaves one.
void verify_nongenerator_theorem(const Graph& g, ClosureKind kind, VerifyReport& report,
                                 const Guards& guards = {});

struct VerifyOptions {
  bool engines = true;
  bool laws = true;
  bool nongenerator = false;  // opt-in; quadratic sweep over generating sets
  double edge_probability = 0.4;
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

// Every labeled connected graph with up to max_vertices vertices, plus the
// composition laws on deterministically sampled pairs of them.
VerifyReport verify_exhaustive(int max_vertices, const VerifyOptions& options = {},
                               const Guards& guards = {});

// Seeded random connected graphs with min_vertices..max_vertices vertices.
VerifyReport verify_random(int count, int min_vertices, int max_vertices,
                           std::uint64_t seed, const VerifyOptions& options = {},
                           const Guards& guards = {});

}  // namespace ggl
