#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ggl/closed_forms.hpp"
#include "ggl/enumerate.hpp"
#include "ggl/family.hpp"
#include "ggl/structure.hpp"

using nlohmann::json;
using namespace ggl;

namespace {

// Exit status contract: 0 success, 1 verification mismatch, 2 usage/parse error.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string family_text;
  std::string graph_file;
  std::string game = "dng";
  std::string closure = "hull";
  std::string engine = "auto";
  std::string format = "text";
  int max_vertices = kMaxVertices;
  std::size_t max_family = Guards{}.max_family;
  int brute_cap = Guards{}.brute_max_vertices;

  Guards guards() const { return Guards{max_family, brute_cap}; }
  GameKind game_kind() const { return game == "gen" ? GameKind::Gen : GameKind::Dng; }
  ClosureKind closure_kind() const {
    return closure == "geodetic" ? ClosureKind::Geodetic : ClosureKind::Hull;
  }
  GameSpec game_spec() const { return GameSpec{game_kind(), closure_kind()}; }
  bool json_output() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool graph_source) {
  if (graph_source) {
    auto* fam = cmd->add_option("--family", opt.family_text, "family spec, e.g. wheel:5");
    auto* file = cmd->add_option("--graph", opt.graph_file, "graph file path");
    fam->excludes(file);
    file->excludes(fam);
  }
  cmd->add_option("--game", opt.game, "gen or dng")->check(CLI::IsMember({"gen", "dng"}));
  cmd->add_option("--closure", opt.closure, "hull or geodetic")
      ->check(CLI::IsMember({"hull", "geodetic"}));
  cmd->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-vertices", opt.max_vertices, "vertex cap for inputs");
  cmd->add_option("--max-family", opt.max_family, "cap on enumerated family sizes");
  cmd->add_option("--brute-cap", opt.brute_cap, "vertex cap for the brute engine");
}

Graph load_graph(const CommonOptions& opt) {
  if (opt.family_text.empty() && opt.graph_file.empty())
    throw CLI::ValidationError("exactly one of --family or --graph is required");
  Graph g = [&] {
    if (!opt.family_text.empty()) return family(opt.family_text);
    std::ifstream in(opt.graph_file);
    if (!in) throw std::invalid_argument("cannot open graph file: " + opt.graph_file);
    return read_graph(in);
  }();
  if (g.vertex_count() > opt.max_vertices)
    throw std::invalid_argument("graph has " + std::to_string(g.vertex_count()) +
                                " vertices, above the cap of " +
                                std::to_string(opt.max_vertices));
  return g;
}

std::string graph_name(const CommonOptions& opt) {
  return !opt.family_text.empty() ? opt.family_text : opt.graph_file;
}

json set_to_json(VertexSet s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

json family_to_json(const SetFamily& f) {
  json out = json::array();
  for (VertexSet s : f) out.push_back(set_to_json(s));
  return out;
}

struct EngineRun {
  int nim = 0;
  std::string engine_used;
  SetFamily nongen;  // populated unless the brute engine ran
};

EngineRun run_engine(const Graph& g, GameSpec spec, const std::string& requested,
                     const Guards& guards) {
  EngineRun run;
  auto structure = [&] {
    run.nongen = maximal_nongenerating(g, spec.closure, guards);
    StructureDigraph d = build_structure_digraph(g, spec, run.nongen, guards);
    type_calculus(d);
    run.nim = game_nim(d);
    run.engine_used = "structure";
  };
  auto fast = [&] {
    run.nongen = maximal_nongenerating(g, spec.closure, guards);
    run.nim = FastSolver(g, spec, run.nongen).game_nim();
    run.engine_used = "fast";
  };
  auto brute = [&] {
    run.nim = nim_brute(g, spec, guards);
    run.engine_used = "brute";
  };
  if (requested == "structure") { structure(); return run; }
  if (requested == "fast") { fast(); return run; }
  if (requested == "brute") { brute(); return run; }
  try {
    structure();
  } catch (const FamilyLimitError&) {
    try {
      fast();
    } catch (const FamilyLimitError&) {
      brute();
    }
  }
  return run;
}

int cmd_nim(const CommonOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Graph g = load_graph(opt);
  GameSpec spec = opt.game_spec();
  EngineRun run = run_engine(g, spec, opt.engine, opt.guards());

  std::optional<Vertex> move;
  if (!run.nongen.empty() || run.engine_used != "brute") {
    FastSolver solver(g, spec,
                      run.nongen.empty()
                          ? maximal_nongenerating(g, spec.closure, opt.guards())
                          : run.nongen);
    for (Position q : options(g, spec, Position{}))
      if (solver.nim(q) == 0) { move = *q.begin(); break; }
  } else {
    move = winning_move(g, spec, Position{}, opt.guards());
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                        start).count();

  if (opt.json_output()) {
    json out{{"graph", graph_name(opt)},   {"n", g.vertex_count()},
             {"m", g.edge_count()},        {"game", opt.game},
             {"closure", opt.closure},     {"engine", run.engine_used},
             {"nim", run.nim},             {"elapsed_ms", ms}};
    out["winning_move"] = move ? json(*move) : json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "graph: " << graph_name(opt) << "\n"
              << "game: " << opt.game << "  closure: " << opt.closure << "\n"
              << "nim: " << run.nim << "\n"
              << "winning-move: " << (move ? std::to_string(*move) : "none") << "\n"
              << "engine: " << run.engine_used << "\n"
              << "elapsed-ms: " << ms << "\n";
  }
  return kExitOk;
}

int cmd_analyze(const CommonOptions& opt, bool both_closures) {
  Graph g = load_graph(opt);
  Guards guards = opt.guards();
  std::vector<ClosureKind> kinds;
  if (both_closures) {
    kinds = {ClosureKind::Hull, ClosureKind::Geodetic};
  } else {
    kinds = {opt.closure_kind()};
  }

  VertexSet simplicial = simplicial_vertices(g);
  std::vector<ConvexityReport> reports;
  for (ClosureKind kind : kinds) reports.push_back(analyze_convexity(g, kind, guards));

  std::optional<bool> operators_equal;
  if (both_closures) {
    if (g.vertex_count() <= 16) {
      bool equal = true;
      for (Mask m = 0; m < (Mask{1} << g.vertex_count()) && equal; ++m)
        equal = geodetic_closure(g, VertexSet(m)) == convex_hull(g, VertexSet(m));
      operators_equal = equal;
    }
  }
  bool families_equal =
      both_closures && reports[0].maximal_nongenerating == reports[1].maximal_nongenerating;

  if (opt.json_output()) {
    json out{{"graph", graph_name(opt)}, {"n", g.vertex_count()}, {"m", g.edge_count()},
             {"simplicial", set_to_json(simplicial)}};
    out["closures"] = json::array();
    for (size_t i = 0; i < kinds.size(); ++i) {
      out["closures"].push_back(
          {{"closure", to_string(kinds[i])},
           {"maximal_nongenerating", family_to_json(reports[i].maximal_nongenerating)},
           {"minimal_generating", family_to_json(reports[i].minimal_generating)},
           {"frattini", set_to_json(reports[i].frattini)},
           {"intersection_count", reports[i].intersection_sets.size()}});
    }
    if (both_closures) {
      out["operators_equal"] = operators_equal ? json(*operators_equal) : json(nullptr);
      out["families_equal"] = families_equal;
      out["games_equal"] = families_equal;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "graph: " << graph_name(opt) << "\nvertices: " << g.vertex_count()
            << "\nedges: " << g.edge_count() << "\nsimplicial: " << to_string(simplicial)
            << "\n";
  for (size_t i = 0; i < kinds.size(); ++i) {
    const ConvexityReport& r = reports[i];
    std::cout << "closure: " << to_string(kinds[i]) << "\n"
              << "  maximal-nongenerating (" << r.maximal_nongenerating.size()
              << "): " << to_string(r.maximal_nongenerating) << "\n"
              << "  minimal-generating (" << r.minimal_generating.size()
              << "): " << to_string(r.minimal_generating) << "\n"
              << "  frattini: " << to_string(r.frattini) << "\n"
              << "  intersection-sets: " << r.intersection_sets.size() << "\n";
  }
  if (both_closures) {
    std::cout << "operators: "
              << (operators_equal ? (*operators_equal ? "equal" : "differ") : "not checked")
              << "\n"
              << "families: " << (families_equal ? "equal" : "differ") << "\n"
              << "games: " << (families_equal ? "identical" : "differ") << "\n";
  }
  return kExitOk;
}

int cmd_diagram(const CommonOptions& opt, bool simplified, const std::string& output) {
  Graph g = load_graph(opt);
  GameSpec spec = opt.game_spec();
  StructureDigraph d = build_structure_digraph(g, spec, opt.guards());
  type_calculus(d);
  int nim = game_nim(d);
  std::string dot = simplified ? export_dot(simplify(d), d) : export_dot(d);
  dot += "// game=" + std::string(to_string(spec.game)) +
         " closure=" + std::string(to_string(spec.closure)) + " nim=" + std::to_string(nim) +
         "\n";
  if (output.empty() || output == "-") {
    std::cout << dot;
  } else {
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot write " + output);
    out << dot;
    std::cout << "wrote " << output << "\nnim: " << nim << "\n";
  }
  return kExitOk;
}

int cmd_table1(const CommonOptions& opt, const std::vector<std::string>& rows,
               bool inject_mismatch) {
  Table1Options options;
  options.rows = rows;
  options.inject_mismatch = inject_mismatch;
  Table1Report report = run_table1(options, opt.guards());

  if (opt.json_output()) {
    json cells = json::array();
    for (const Table1Cell& c : report.cells)
      cells.push_back({{"row", c.row},
                       {"param", c.param},
                       {"game", c.game},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"ok", c.ok}});
    json out{{"cells", cells},
             {"notes", report.notes},
             {"all_ok", report.all_ok},
             {"worker_count", report.worker_count}};
    std::cout << out.dump(2) << "\n";
  } else {
    int failures = 0;
    for (const Table1Cell& c : report.cells) {
      if (!c.ok) ++failures;
      std::ostringstream line;
      line << (c.ok ? "ok   " : "FAIL ") << c.row << " " << c.param << " " << c.game
           << " expected=" << c.expected << " computed=" << c.computed;
      std::cout << line.str() << "\n";
    }
    for (const std::string& note : report.notes) std::cout << "note: " << note << "\n";
    std::cout << (report.all_ok ? "all rows match" : std::to_string(failures) + " mismatches")
              << " (" << report.cells.size() << " cells, workers=" << report.worker_count
              << ")\n";
  }
  return report.all_ok ? kExitOk : kExitMismatch;
}

void print_verify_report(const CommonOptions& opt, const VerifyReport& report,
                         const json& parameters) {
  if (opt.json_output()) {
    json out{{"graphs", report.graphs},
             {"checks", report.checks},
             {"failures", report.failures},
             {"ok", report.ok()},
             {"worker_count", report.worker_count}};
    out["parameters"] = parameters;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "parameters: " << parameters.dump() << "\n"
            << "graphs: " << report.graphs << "\nchecks: " << report.checks << "\n";
  for (const std::string& f : report.failures) std::cout << "FAIL " << f << "\n";
  std::cout << (report.ok() ? "all checks passed" : "MISMATCHES FOUND") << "\n";
  if (!report.ok())
    std::cout << "reproduce with the printed graph recipes (edges are 0-based)\n";
}

int cmd_verify_exhaustive(const CommonOptions& opt, int max_vertices, bool laws,
                          bool nongenerator) {
  if (max_vertices > 7)
    throw CLI::ValidationError("exhaustive verification is limited to 7 vertices");
  VerifyOptions options;
  options.laws = laws;
  options.nongenerator = nongenerator;
  if (max_vertices >= 7)
    options.progress = [](std::uint64_t done, std::uint64_t total) {
      if (done % 5000 == 0 || done == total)
        std::cerr << "\rverified " << done << "/" << total << std::flush;
      if (done == total) std::cerr << "\n";
    };
  VerifyReport report = verify_exhaustive(max_vertices, options, opt.guards());
  print_verify_report(opt, report,
                      json{{"mode", "exhaustive"},
                           {"max_vertices", max_vertices},
                           {"laws", laws},
                           {"nongenerator", nongenerator}});
  return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_verify_random(const CommonOptions& opt, int count, const std::string& vertices,
                      std::uint64_t seed, double probability) {
  int lo = 0, hi = 0;
  if (auto dash = vertices.find('-'); dash != std::string::npos) {
    lo = std::stoi(vertices.substr(0, dash));
    hi = std::stoi(vertices.substr(dash + 1));
  } else {
    lo = hi = std::stoi(vertices);
  }
  if (lo < 1 || hi < lo || hi > kMaxVertices)
    throw CLI::ValidationError("bad --vertices range");
  VerifyOptions options;
  options.edge_probability = probability;
  VerifyReport report = verify_random(count, lo, hi, seed, options, opt.guards());
  print_verify_report(opt, report,
                      json{{"mode", "random"},
                           {"count", count},
                           {"vertices", vertices},
                           {"seed", seed},
                           {"edge_probability", probability}});
  return report.ok() ? kExitOk : kExitMismatch;
}

bool unique_geodesics(const Graph& g) {
  // count shortest paths between every pair; geodetic graphs have exactly one
  int n = g.vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<long> count(n, 0);
    count[s] = 1;
    for (int d = 1; d <= n; ++d)
      for (Vertex v = 0; v < n; ++v) {
        if (g.distance(s, v) != d) continue;
        long total = 0;
        for (Vertex w : g.neighbors(v))
          if (g.distance(s, w) == d - 1) total += count[w];
        count[v] = total;
        if (total > 1) return false;
      }
  }
  return true;
}

int cmd_search(const CommonOptions& opt, int target_nim, int vertices, int iterations,
               std::uint64_t seed, double probability, bool diameter2, bool geodetic_only,
               const std::string& out_dir, bool include_fixtures,
               const std::string& probe) {
  Guards guards = opt.guards();
  std::mt19937_64 rng(seed);

  if (probe == "union-odd") {
    // sampled probe of the avoidance game on disjoint unions of two
    // odd-order zero-valued graphs; reports the observed union values
    int n = vertices % 2 == 1 ? vertices : vertices + 1;
    std::vector<Graph> zeros;
    int built = 0;
    GameSpec spec{GameKind::Dng, opt.closure_kind()};
    while (static_cast<int>(zeros.size()) < 24 && built < iterations) {
      ++built;
      Graph g = random_connected_graph(n, probability, rng);
      if (structure_nim(g, spec, guards) == 0) zeros.push_back(g);
    }
    int pairs = 0, ones = 0;
    std::vector<std::string> counterexamples;
    for (size_t i = 0; i + 1 < zeros.size(); i += 2) {
      Graph u = disjoint_union(zeros[i], zeros[i + 1]);
      int nim = structure_nim(u, spec, guards);
      ++pairs;
      if (nim == 1) {
        ++ones;
      } else {
        counterexamples.push_back("nim=" + std::to_string(nim) + " on " +
                                  graph_recipe(zeros[i]) + " + " + graph_recipe(zeros[i + 1]));
      }
    }
    json out{{"probe", "union-odd"},     {"component_vertices", n},
             {"zero_graphs", zeros.size()}, {"pairs", pairs},
             {"nim_one", ones},          {"counterexamples", counterexamples},
             {"seed", seed}};
    if (opt.json_output()) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "probe union-odd: " << pairs << " pairs, " << ones
                << " with union nim 1\n";
      for (const auto& c : counterexamples) std::cout << "counterexample: " << c << "\n";
      if (counterexamples.empty()) std::cout << "no counterexample found\n";
    }
    return kExitOk;
  }

  GameSpec spec = opt.game_spec();
  auto matches = [&](const Graph& g) {
    if (g.vertex_count() != vertices) return false;
    if (diameter2 && g.diameter() != 2) return false;
    if (geodetic_only && !unique_geodesics(g)) return false;
    return structure_nim(g, spec, guards) == target_nim;
  };
  auto emit = [&](const Graph& g, const std::string& origin, int iteration) {
    std::string file;
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      file = out_dir + "/witness-nim" + std::to_string(target_nim) + ".graph";
      std::ofstream out(file);
      out << "# " << origin << " witness, game=" << to_string(spec.game)
          << " closure=" << to_string(spec.closure) << " nim=" << target_nim << "\n";
      write_graph(out, g);
    }
    if (opt.json_output()) {
      json out{{"found", true},   {"origin", origin},     {"iterations", iteration},
               {"recipe", graph_recipe(g)}, {"nim", target_nim}, {"seed", seed}};
      if (!file.empty()) out["file"] = file;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "witness found (" << origin << ", iteration " << iteration
                << "): " << graph_recipe(g) << "\n";
      if (!file.empty()) std::cout << "wrote " << file << "\n";
    }
  };

  if (include_fixtures) {
    for (const char* name : {"fig-nim7", "petersen", "diamond", "fig-disj", "fig-barP3"}) {
      Graph g = family(std::string(name));
      if (matches(g)) { emit(g, name, 0); return kExitOk; }
    }
  }
  for (int i = 1; i <= iterations; ++i) {
    Graph g = random_connected_graph(vertices, probability, rng);
    if (matches(g)) { emit(g, "random", i); return kExitOk; }
  }
  if (opt.json_output()) {
    std::cout << json{{"found", false}, {"iterations", iterations}, {"seed", seed}}.dump(2)
              << "\n";
  } else {
    std::cout << "no witness in " << iterations << " iterations\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"building games on graphs under geodetic convexity"};
  app.require_subcommand(1);

  int env_cap = kMaxVertices;
  if (const char* env = std::getenv("GGL_MAX_VERTICES")) env_cap = std::atoi(env);

  CommonOptions nim_opt, analyze_opt, diagram_opt, table_opt, verify_opt, search_opt;
  for (CommonOptions* o :
       {&nim_opt, &analyze_opt, &diagram_opt, &table_opt, &verify_opt, &search_opt})
    o->max_vertices = std::min(env_cap, kMaxVertices);

  auto* nim_cmd = app.add_subcommand("nim", "nim value of a game");
  add_common(nim_cmd, nim_opt, true);
  nim_cmd->add_option("--engine", nim_opt.engine, "auto, structure, fast, or brute")
      ->check(CLI::IsMember({"auto", "structure", "fast", "brute"}));

  bool both_closures = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "generating structure of a graph");
  add_common(analyze_cmd, analyze_opt, true);
  analyze_cmd->add_flag("--both-closures", both_closures,
                        "compare hull and geodetic families");

  bool simplified = false;
  std::string diagram_out;
  auto* diagram_cmd = app.add_subcommand("diagram", "structure diagram as DOT");
  add_common(diagram_cmd, diagram_opt, true);
  diagram_cmd->add_flag("--simplified", simplified, "merge equivalent classes");
  diagram_cmd->add_option("--output,-o", diagram_out, "output path (default stdout)");

  std::vector<std::string> table_rows;
  bool inject_mismatch = false;
  auto* table_cmd = app.add_subcommand("table1", "closed-form family sweep");
  add_common(table_cmd, table_opt, false);
  table_cmd->add_option("--rows", table_rows, "subset of rows to run")
      ->delimiter(',')
      ->check(CLI::IsMember(table1_row_names()));
  table_cmd->add_flag("--inject-mismatch", inject_mismatch,
                      "add a synthetic failing cell (for exit-status testing)");

  auto* verify_cmd = app.add_subcommand("verify", "engine and law cross-checks");
  add_common(verify_cmd, verify_opt, false);
  verify_cmd->require_subcommand(1);
  int exhaustive_max = 6;
  bool no_laws = false, nongenerator = false;
  auto* exhaustive_cmd =
      verify_cmd->add_subcommand("exhaustive", "every labeled connected graph up to a size");
  exhaustive_cmd->add_option("--max-vertices", exhaustive_max, "largest size (<= 7)");
  exhaustive_cmd->add_flag("--no-laws", no_laws, "skip composition-law checks");
  exhaustive_cmd->add_flag("--nongenerator", nongenerator,
                           "also sweep the nongenerator characterization");
  int random_count = 200;
  std::string random_vertices = "6-9";
  std::uint64_t random_seed = 42;
  double random_p = 0.4;
  auto* random_cmd = verify_cmd->add_subcommand("random", "seeded random connected graphs");
  random_cmd->add_option("--count", random_count, "number of graphs");
  random_cmd->add_option("--vertices", random_vertices, "size or range, e.g. 9 or 6-9");
  random_cmd->add_option("--seed", random_seed, "rng seed");
  random_cmd->add_option("--p", random_p, "edge probability");

  auto* search_cmd = app.add_subcommand("search", "random search for nim witnesses");
  add_common(search_cmd, search_opt, false);
  int target_nim = 7, search_vertices = 9, search_iterations = 2000;
  std::uint64_t search_seed = 1;
  double search_p = 0.4;
  bool diameter2 = false, geodetic_only = false, no_fixtures = false;
  std::string out_dir, probe;
  search_cmd->add_option("--target-nim", target_nim, "nim value to hit");
  search_cmd->add_option("--vertices", search_vertices, "graph size");
  search_cmd->add_option("--iterations", search_iterations, "random attempts");
  search_cmd->add_option("--seed", search_seed, "rng seed");
  search_cmd->add_option("--p", search_p, "edge probability");
  search_cmd->add_flag("--diameter2", diameter2, "only diameter-2 graphs");
  search_cmd->add_flag("--geodetic-only", geodetic_only,
                       "only graphs with unique shortest paths");
  search_cmd->add_flag("--no-fixtures", no_fixtures, "skip the named seed witnesses");
  search_cmd->add_option("--out-dir", out_dir, "directory for witness graph files");
  search_cmd->add_option("--probe", probe, "conjecture probe: union-odd")
      ->check(CLI::IsMember({"union-odd"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (nim_cmd->parsed()) return cmd_nim(nim_opt);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_opt, both_closures);
    if (diagram_cmd->parsed()) return cmd_diagram(diagram_opt, simplified, diagram_out);
    if (table_cmd->parsed()) return cmd_table1(table_opt, table_rows, inject_mismatch);
    if (verify_cmd->parsed()) {
      if (exhaustive_cmd->parsed())
        return cmd_verify_exhaustive(verify_opt, exhaustive_max, !no_laws, nongenerator);
      return cmd_verify_random(verify_opt, random_count, random_vertices, random_seed,
                               random_p);
    }
    if (search_cmd->parsed())
      return cmd_search(search_opt, target_nim, search_vertices, search_iterations,
                        search_seed, search_p, diameter2, geodetic_only, out_dir,
                        !no_fixtures, probe);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
