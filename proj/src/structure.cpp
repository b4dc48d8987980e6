#include "ggl/structure.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ggl {
namespace {

int nim_at(const TypeTriple& t, int parity) { return parity == 0 ? t.nim0 : t.nim1; }

std::uint64_t mex_bit(int v) { return std::uint64_t{1} << v; }

int mex_of_bits(std::uint64_t seen) {
  int v = 0;
  while (seen & (std::uint64_t{1} << v)) ++v;
  return v;
}

}  // namespace

std::vector<int> StructureDigraph::terminal_classes() const {
  std::vector<int> out;
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].options.empty()) out.push_back(static_cast<int>(i));
  return out;
}

StructureDigraph build_structure_digraph(const Graph& g, GameSpec spec,
                                         const SetFamily& nongen, const Guards& guards) {
  VertexSet all = g.vertices();
  VertexSet phi = family_intersection(nongen, g.vertex_count());

  // Discover reachable classes from the class of the empty position: each
  // one-vertex extension of a representative lands in the class of its
  // enclosing intersection set.
  std::unordered_map<Mask, std::vector<Mask>> edges;
  std::deque<VertexSet> queue{phi};
  edges[phi.bits()];
  bool reached_full = false;
  while (!queue.empty()) {
    VertexSet i = queue.front();
    queue.pop_front();
    auto& outs = edges[i.bits()];
    for (Vertex v : i.complement(g.vertex_count())) {
      VertexSet j = ceil(i.with(v), nongen, all);
      if (j == all) {
        if (spec.game == GameKind::Gen) { outs.push_back(j.bits()); reached_full = true; }
        continue;  // generating extensions are not avoidance moves
      }
      outs.push_back(j.bits());
      if (!edges.count(j.bits())) {
        edges[j.bits()];
        if (edges.size() > guards.max_family)
          throw FamilyLimitError("structure digraph exceeded the family cap");
        queue.push_back(j);
      }
    }
    std::sort(outs.begin(), outs.end());
    outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
  }
  if (reached_full) edges[all.bits()];

  StructureDigraph d;
  d.spec = spec;
  d.vertex_count = g.vertex_count();
  std::vector<Mask> order;
  order.reserve(edges.size());
  for (const auto& [mask, _] : edges) order.push_back(mask);
  std::sort(order.begin(), order.end());
  std::unordered_map<Mask, int> index;
  for (size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);

  d.classes.resize(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    StructureClass& cls = d.classes[i];
    cls.intersection_set = VertexSet(order[i]);
    for (Mask m : edges[order[i]]) {
      assert(m > order[i]);  // options strictly enlarge the set: acyclic
      cls.options.push_back(index[m]);
    }
  }
  d.source = index.at(phi.bits());
  assert(d.source == 0);
  if (reached_full) d.full_class = index.at(all.bits());
  return d;
}

StructureDigraph build_structure_digraph(const Graph& g, GameSpec spec,
                                         const Guards& guards) {
  return build_structure_digraph(g, spec, maximal_nongenerating(g, spec.closure, guards),
                                 guards);
}

void type_calculus(StructureDigraph& d) {
  for (size_t idx = d.classes.size(); idx-- > 0;) {
    StructureClass& cls = d.classes[idx];
    if (static_cast<int>(idx) == d.full_class) {
      cls.type = TypeTriple{kParityBoth, 0, 0};
      continue;
    }
    int p = cls.intersection_set.parity();
    std::uint64_t opposite_seen = 0, own_seen = 0;
    for (int j : cls.options) {
      assert(j > static_cast<int>(idx) && d.classes[j].type.parity >= 0);
      opposite_seen |= mex_bit(nim_at(d.classes[j].type, 1 - p));
      own_seen |= mex_bit(nim_at(d.classes[j].type, p));
    }
    int nim_own = mex_of_bits(opposite_seen);
    int nim_other = mex_of_bits(own_seen | mex_bit(nim_own));
    cls.type.parity = p;
    cls.type.nim0 = p == 0 ? nim_own : nim_other;
    cls.type.nim1 = p == 0 ? nim_other : nim_own;
  }
  d.types_computed = true;
}

int game_nim(const StructureDigraph& d) {
  if (!d.types_computed) throw std::logic_error("type_calculus has not run");
  return d.classes[d.source].type.nim0;
}

int structure_nim(const Graph& g, GameSpec spec, const Guards& guards) {
  StructureDigraph d = build_structure_digraph(g, spec, guards);
  type_calculus(d);
  return game_nim(d);
}

SimplifiedDiagram simplify(const StructureDigraph& d) {
  if (!d.types_computed) throw std::logic_error("type_calculus has not run");
  size_t count = d.classes.size();

  std::vector<int> longest(count, 0);
  for (size_t i = count; i-- > 0;)
    for (int j : d.classes[i].options)
      longest[i] = std::max(longest[i], 1 + longest[j]);

  // Initial blocks: (parity, set of option types, longest path). Then refine
  // by block-level option signatures until stable, so every member of a
  // block has options into exactly the same blocks.
  std::vector<int> block(count);
  {
    std::map<std::tuple<int, std::vector<TypeTriple>, int>, int> ids;
    for (size_t i = 0; i < count; ++i) {
      std::vector<TypeTriple> opt_types;
      for (int j : d.classes[i].options) opt_types.push_back(d.classes[j].type);
      std::sort(opt_types.begin(), opt_types.end());
      opt_types.erase(std::unique(opt_types.begin(), opt_types.end()), opt_types.end());
      auto key = std::make_tuple(d.classes[i].type.parity, std::move(opt_types), longest[i]);
      block[i] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }
  }
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next(count);
    for (size_t i = 0; i < count; ++i) {
      std::vector<int> opts;
      for (int j : d.classes[i].options) opts.push_back(block[j]);
      std::sort(opts.begin(), opts.end());
      opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
      auto key = std::make_pair(block[i], std::move(opts));
      next[i] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }
    bool stable = true;
    for (size_t i = 0; i < count; ++i)
      if (next[i] != block[i]) { stable = false; break; }
    block = std::move(next);
    if (stable) break;
  }

  // Blocks are numbered in first-member order, so node order is by the
  // smallest member index (ascending set encoding).
  SimplifiedDiagram s;
  int blocks = *std::max_element(block.begin(), block.end()) + 1;
  s.nodes.resize(blocks);
  for (size_t i = 0; i < count; ++i) {
    auto& node = s.nodes[block[i]];
    node.members.push_back(static_cast<int>(i));
    node.type = d.classes[i].type;
    node.longest_path = longest[i];
  }
  for (auto& node : s.nodes) {
    node.multiplicity = static_cast<int>(node.members.size());
    for (int m : node.members) assert(d.classes[m].type == node.type);
  }
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < count; ++i)
    for (int j : d.classes[i].options) edges.emplace_back(block[i], block[j]);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  s.edges = std::move(edges);
  s.source = block[d.source];
  return s;
}

namespace {

std::string node_id(VertexSet s) {
  std::ostringstream out;
  out << "I_" << std::hex << s.bits();
  return out.str();
}

const char* shape_of(int parity) {
  return parity == 0 ? "triangle" : parity == 1 ? "invtriangle" : "oval";
}

std::string node_label(const TypeTriple& t, int multiplicity) {
  std::string parity = t.parity == kParityBoth ? "both" : std::to_string(t.parity);
  return "p=" + parity + " n0=" + std::to_string(t.nim0) + " n1=" + std::to_string(t.nim1) +
         " ×" + std::to_string(multiplicity);
}

}  // namespace

std::string export_dot(const StructureDigraph& d) {
  if (!d.types_computed) throw std::logic_error("type_calculus has not run");
  std::ostringstream out;
  out << "digraph structure {\n";
  for (const auto& cls : d.classes)
    out << "  " << node_id(cls.intersection_set) << " [label=\"" << node_label(cls.type, 1)
        << "\", shape=" << shape_of(cls.type.parity) << "];\n";
  for (const auto& cls : d.classes)
    for (int j : cls.options)
      out << "  " << node_id(cls.intersection_set) << " -> "
          << node_id(d.classes[j].intersection_set) << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const SimplifiedDiagram& s, const StructureDigraph& d) {
  std::ostringstream out;
  out << "digraph simplified {\n";
  for (const auto& node : s.nodes)
    out << "  " << node_id(d.classes[node.members.front()].intersection_set) << " [label=\""
        << node_label(node.type, node.multiplicity) << "\", shape=" << shape_of(node.type.parity)
        << "];\n";
  for (auto [a, b] : s.edges)
    out << "  " << node_id(d.classes[s.nodes[a].members.front()].intersection_set) << " -> "
        << node_id(d.classes[s.nodes[b].members.front()].intersection_set) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ggl
