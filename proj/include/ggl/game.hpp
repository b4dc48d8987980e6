#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ggl/convexity.hpp"

namespace ggl {

// Gen: the first player to make the selected set generating wins.
// Dng: selecting a vertex that would make the set generating is forbidden;
// the player left without a legal move loses. Normal play throughout.
enum class GameKind { Gen, Dng };

inline const char* to_string(GameKind k) { return k == GameKind::Gen ? "gen" : "dng"; }

struct GameSpec {
  GameKind game = GameKind::Dng;
  ClosureKind closure = ClosureKind::Hull;
};

// Positions are the jointly-selected vertices; move order never matters.
using Position = VertexSet;

// Least nonnegative integer missing from the set.
int mex(const std::vector<int>& values);
inline int nim_sum(int a, int b) { return a ^ b; }

// Legal successor positions in ascending-vertex order. An achieving position
// that already generates is terminal and has none; an avoidance position must
// itself be nongenerating.
std::vector<Position> options(const Graph& g, GameSpec spec, Position p);

// Depth-first nim computation memoized on the exact selected set.
class BruteSolver {
 public:
  BruteSolver(const Graph& g, GameSpec spec, const Guards& guards = {});
  int nim(Position p);
  int game_nim() { return nim(Position{}); }

 private:
  const Graph& graph_;
  GameSpec spec_;
  std::unordered_map<Mask, int> memo_;
};

// Same recursion memoized on (smallest intersection set containing the
// position, position parity): equal-parity positions enclosed by the same
// intersection set share their nim value, which collapses the game tree.
class FastSolver {
 public:
  FastSolver(const Graph& g, GameSpec spec, SetFamily nongen);
  int nim(Position p);
  int game_nim() { return nim(Position{}); }
  const SetFamily& nongenerating() const { return nongen_; }

 private:
  bool generating(Position p) const;
  const Graph& graph_;
  GameSpec spec_;
  SetFamily nongen_;
  std::unordered_map<std::uint64_t, int> memo_;
};

int nim_brute(const Graph& g, GameSpec spec, const Guards& guards = {});
int nim_fast(const Graph& g, GameSpec spec, const Guards& guards = {});

// Smallest-index vertex whose option has nim value 0; absent when the
// position is terminal or already losing.
std::optional<Vertex> winning_move(const Graph& g, GameSpec spec, Position p,
                                   const Guards& guards = {});

// When every maximal nongenerating set has the same parity r, every avoidance
// play lasts the same number of moves mod 2 and the game's nim value is r.
std::optional<int> parity_forced_nim(const SetFamily& nongen);

}  // namespace ggl
