#include "ggl/game.hpp"

#include <stdexcept>

namespace ggl {
namespace {

// nim values are bounded by the vertex count, so a word of seen-bits suffices.
int mex_of_bits(std::uint64_t seen) {
  int v = 0;
  while (seen & (std::uint64_t{1} << v)) ++v;
  return v;
}

}  // namespace

int mex(const std::vector<int>& values) {
  std::uint64_t seen = 0;
  for (int v : values)
    if (v >= 0 && v < 64) seen |= std::uint64_t{1} << v;
  return mex_of_bits(seen);
}

std::vector<Position> options(const Graph& g, GameSpec spec, Position p) {
  std::vector<Position> out;
  bool p_generates = is_generating(g, p, spec.closure);
  if (spec.game == GameKind::Gen) {
    if (p_generates) return out;  // terminal
    for (Vertex v : p.complement(g.vertex_count())) out.push_back(p.with(v));
    return out;
  }
  if (p_generates) throw std::invalid_argument("illegal avoidance position: set generates");
  for (Vertex v : p.complement(g.vertex_count())) {
    Position q = p.with(v);
    if (!is_generating(g, q, spec.closure)) out.push_back(q);
  }
  return out;
}

BruteSolver::BruteSolver(const Graph& g, GameSpec spec, const Guards& guards)
    : graph_(g), spec_(spec) {
  if (g.vertex_count() > guards.brute_max_vertices)
    throw FamilyLimitError("brute-force nim limited to " +
                           std::to_string(guards.brute_max_vertices) + " vertices");
}

int BruteSolver::nim(Position p) {
  if (spec_.game == GameKind::Gen && is_generating(graph_, p, spec_.closure)) return 0;
  auto it = memo_.find(p.bits());
  if (it != memo_.end()) return it->second;
  std::uint64_t seen = 0;
  for (Vertex v : p.complement(graph_.vertex_count())) {
    Position q = p.with(v);
    if (spec_.game == GameKind::Dng && is_generating(graph_, q, spec_.closure)) continue;
    seen |= std::uint64_t{1} << nim(q);
  }
  int value = mex_of_bits(seen);
  memo_.emplace(p.bits(), value);
  return value;
}

FastSolver::FastSolver(const Graph& g, GameSpec spec, SetFamily nongen)
    : graph_(g), spec_(spec), nongen_(std::move(nongen)) {}

bool FastSolver::generating(Position p) const {
  for (VertexSet s : nongen_)
    if (p.subset_of(s)) return false;
  return true;
}

int FastSolver::nim(Position p) {
  if (spec_.game == GameKind::Gen && generating(p)) return 0;
  VertexSet enclosing = ceil(p, nongen_, graph_.vertices());
  std::uint64_t key = (std::uint64_t{enclosing.bits()} << 1) | p.parity();
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  std::uint64_t seen = 0;
  for (Vertex v : p.complement(graph_.vertex_count())) {
    Position q = p.with(v);
    if (spec_.game == GameKind::Dng && generating(q)) continue;
    seen |= std::uint64_t{1} << nim(q);
  }
  int value = mex_of_bits(seen);
  memo_.emplace(key, value);
  return value;
}

int nim_brute(const Graph& g, GameSpec spec, const Guards& guards) {
  return BruteSolver(g, spec, guards).game_nim();
}

int nim_fast(const Graph& g, GameSpec spec, const Guards& guards) {
  return FastSolver(g, spec, maximal_nongenerating(g, spec.closure, guards)).game_nim();
}

std::optional<Vertex> winning_move(const Graph& g, GameSpec spec, Position p,
                                   const Guards& guards) {
  FastSolver solver(g, spec, maximal_nongenerating(g, spec.closure, guards));
  for (Position q : options(g, spec, p))
    if (solver.nim(q) == 0) return *(q - p).begin();
  return std::nullopt;
}

std::optional<int> parity_forced_nim(const SetFamily& nongen) {
  if (nongen.empty()) return std::nullopt;
  int r = nongen.front().parity();
  for (VertexSet s : nongen)
    if (s.parity() != r) return std::nullopt;
  return r;
}

}  // namespace ggl
