#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggl/family.hpp"
#include "ggl/game.hpp"

namespace ggl {

// Biconnected blocks (as vertex sets) and cut vertices of a graph,
// per connected component.
std::vector<VertexSet> biconnected_blocks(const Graph& g);
VertexSet cut_vertices(const Graph& g);
// True when every biconnected block induces a complete subgraph.
bool is_block_graph(const Graph& g);

// Closed-form expectations for families whose games are solved outright.
// Every formula is implemented from its proposition directly; absent means
// no closed form covers the spec (or its parameters are out of range).
std::optional<int> expected_nim(const FamilySpec& spec, GameKind game);
std::optional<SetFamily> expected_family_N(const FamilySpec& spec);
std::optional<VertexSet> expected_frattini(const FamilySpec& spec);

// Block graphs have the simplicial vertices as their unique minimal
// generating set; this accepts any graph the detector recognizes.
std::optional<int> expected_nim_block(const Graph& g, GameKind game);

struct FamilyResult {
  std::optional<int> dng, gen;
  std::optional<SetFamily> nongenerating;
  std::optional<VertexSet> frattini;
  std::string note;
};
FamilyResult closed_form(const FamilySpec& spec);

struct Table1Cell {
  std::string row;
  std::string param;
  std::string game;
  int expected = 0;
  int computed = 0;
  bool ok = false;
};

struct Table1Report {
  std::vector<Table1Cell> cells;
  std::vector<std::string> notes;
  bool all_ok = true;
  int worker_count = 1;
};

struct Table1Options {
  std::vector<std::string> rows;  // empty = every row
  bool inject_mismatch = false;   // adds one synthetic failing cell (for testing)
};

// Sweeps the family rows, computes nim values with the structure engine and
// compares them against the closed forms.
Table1Report run_table1(const Table1Options& options = {}, const Guards& guards = {});

const std::vector<std::string>& table1_row_names();

}  // namespace ggl
