#include "ggl/convexity.hpp"

#include <deque>
#include <unordered_set>

namespace ggl {
namespace {

void check_family_limit(std::size_t size, const Guards& guards, const char* what) {
  if (size > guards.max_family)
    throw FamilyLimitError(std::string(what) + " exceeded the family cap of " +
                           std::to_string(guards.max_family) +
                           " (raise it to push further)");
}

// Keep only inclusion-maximal members.
SetFamily prune_dominated(SetFamily family) {
  canonicalize(family);
  SetFamily out;
  for (VertexSet s : family) {
    bool dominated = false;
    for (VertexSet t : family)
      if (s != t && s.subset_of(t)) { dominated = true; break; }
    if (!dominated) out.push_back(s);
  }
  return out;
}

// Maximal independent sets of the conflict graph on `allowed`, where
// conflict[v] lists the vertices incompatible with v. Classic recursion
// with a pivot, phrased on compatibility masks.
void maximal_independent_sets(VertexSet allowed, const std::vector<VertexSet>& compatible,
                              VertexSet chosen, VertexSet candidates, VertexSet excluded,
                              SetFamily& out) {
  if (candidates.empty() && excluded.empty()) {
    out.push_back(chosen);
    return;
  }
  Vertex pivot = -1;
  int best = -1;
  for (Vertex u : candidates | excluded) {
    int covered = (candidates & compatible[u]).size();
    if (covered > best) { best = covered; pivot = u; }
  }
  for (Vertex v : candidates - compatible[pivot]) {
    maximal_independent_sets(allowed, compatible, chosen.with(v),
                             candidates & compatible[v], excluded & compatible[v], out);
    candidates = candidates.without(v);
    excluded = excluded.with(v);
  }
}

}  // namespace

VertexSet geodetic_closure(const Graph& g, VertexSet p) {
  VertexSet acc = p;
  for (Vertex u : p)
    for (Vertex v : p) {
      if (v <= u) continue;
      acc |= g.interval(u, v);
    }
  return acc;
}

VertexSet convex_hull(const Graph& g, VertexSet p) {
  VertexSet cur = p;
  for (;;) {
    VertexSet next = geodetic_closure(g, cur);
    if (next == cur) return cur;
    cur = next;
  }
}

VertexSet close(const Graph& g, VertexSet p, ClosureKind kind) {
  return kind == ClosureKind::Hull ? convex_hull(g, p) : geodetic_closure(g, p);
}

bool is_generating(const Graph& g, VertexSet p, ClosureKind kind) {
  return close(g, p, kind) == g.vertices();
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    VertexSet nb = g.neighbors(v);
    bool simplicial = true;
    for (Vertex u : nb)
      if (!(nb.without(u)).subset_of(g.neighbors(u))) { simplicial = false; break; }
    if (simplicial) out = out.with(v);
  }
  return out;
}

SetFamily closed_sets(const Graph& g, ClosureKind kind, const Guards& guards) {
  (void)kind;  // geodetic fixed points are exactly the convex sets
  std::unordered_set<Mask> seen;
  std::deque<VertexSet> queue;
  VertexSet start = convex_hull(g, VertexSet{});
  seen.insert(start.bits());
  queue.push_back(start);
  while (!queue.empty()) {
    VertexSet c = queue.front();
    queue.pop_front();
    for (Vertex v : c.complement(g.vertex_count())) {
      VertexSet d = convex_hull(g, c.with(v));
      if (seen.insert(d.bits()).second) {
        check_family_limit(seen.size(), guards, "closed-set enumeration");
        queue.push_back(d);
      }
    }
  }
  SetFamily out;
  out.reserve(seen.size());
  for (Mask m : seen) out.push_back(VertexSet(m));
  canonicalize(out);
  return out;
}

SetFamily maximal_nongenerating(const Graph& g, ClosureKind kind, const Guards& guards) {
  VertexSet all = g.vertices();
  if (kind == ClosureKind::Hull) {
    SetFamily proper;
    for (VertexSet c : closed_sets(g, kind, guards))
      if (c != all) proper.push_back(c);
    return prune_dominated(std::move(proper));
  }

  // Geodetic: a set is nongenerating exactly when some witness vertex w is
  // missed by its closure, i.e. the set avoids w and contains no pair whose
  // interval covers w. Per witness that is an independence condition, so the
  // candidates are the maximal independent sets of a conflict graph.
  int n = g.vertex_count();
  SetFamily pool;
  std::vector<VertexSet> compatible(n);
  for (Vertex w = 0; w < n; ++w) {
    VertexSet allowed = all.without(w);
    for (Vertex u : allowed) {
      VertexSet ok;
      for (Vertex v : allowed)
        if (v != u && !g.interval(u, v).contains(w)) ok = ok.with(v);
      compatible[u] = ok;
    }
    maximal_independent_sets(allowed, compatible, VertexSet{}, allowed, VertexSet{}, pool);
    check_family_limit(pool.size(), guards, "nongenerating-set enumeration");
  }
  return prune_dominated(std::move(pool));
}

SetFamily minimal_generating_from(const SetFamily& nongen, int n, const Guards& guards) {
  // A set generates exactly when it meets the complement of every maximal
  // nongenerating set, so the minimal generating sets are the minimal
  // transversals; build them edge by edge with absorption.
  SetFamily transversals{VertexSet{}};
  for (VertexSet edge : complement_family(nongen, n)) {
    SetFamily next;
    for (VertexSet t : transversals) {
      if (t.intersects(edge)) {
        next.push_back(t);
      } else {
        for (Vertex v : edge) next.push_back(t.with(v));
      }
    }
    canonicalize(next);
    // absorption: drop any proper superset of another candidate
    SetFamily minimal;
    for (VertexSet s : next) {
      bool absorbed = false;
      for (VertexSet t : next)
        if (t != s && t.subset_of(s)) { absorbed = true; break; }
      if (!absorbed) minimal.push_back(s);
    }
    transversals = std::move(minimal);
    check_family_limit(transversals.size(), guards, "generating-set enumeration");
  }
  canonicalize(transversals);
  return transversals;
}

SetFamily minimal_generating(const Graph& g, ClosureKind kind, const Guards& guards) {
  return minimal_generating_from(maximal_nongenerating(g, kind, guards),
                                 g.vertex_count(), guards);
}

VertexSet frattini(const Graph& g, ClosureKind kind, const Guards& guards) {
  return family_intersection(maximal_nongenerating(g, kind, guards), g.vertex_count());
}

SetFamily intersection_lattice(const SetFamily& nongen, VertexSet ambient,
                               const Guards& guards) {
  std::unordered_set<Mask> seen{ambient.bits()};
  std::deque<VertexSet> queue{ambient};
  for (VertexSet s : nongen)
    if (seen.insert(s.bits()).second) queue.push_back(s);
  while (!queue.empty()) {
    VertexSet i = queue.front();
    queue.pop_front();
    for (VertexSet s : nongen) {
      VertexSet meet = i & s;
      if (seen.insert(meet.bits()).second) {
        check_family_limit(seen.size(), guards, "intersection-lattice enumeration");
        queue.push_back(meet);
      }
    }
  }
  SetFamily out;
  out.reserve(seen.size());
  for (Mask m : seen) out.push_back(VertexSet(m));
  canonicalize(out);
  return out;
}

VertexSet ceil(VertexSet p, const SetFamily& nongen, VertexSet ambient) {
  VertexSet acc = ambient;
  for (VertexSet s : nongen)
    if (p.subset_of(s)) acc &= s;
  return acc;
}

ConvexityReport analyze_convexity(const Graph& g, ClosureKind kind, const Guards& guards) {
  ConvexityReport report;
  report.kind = kind;
  report.maximal_nongenerating = maximal_nongenerating(g, kind, guards);
  report.minimal_generating =
      minimal_generating_from(report.maximal_nongenerating, g.vertex_count(), guards);
  report.frattini = family_intersection(report.maximal_nongenerating, g.vertex_count());
  report.intersection_sets =
      intersection_lattice(report.maximal_nongenerating, g.vertices(), guards);
  return report;
}

}  // namespace ggl
