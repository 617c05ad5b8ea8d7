#include "indpoly/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "indpoly/dp.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/generators.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/oracle.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& path, const std::string& text) {
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    return true;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

Graph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  if (format == "json" || (format == "auto" && looks_like_json(path, text)))
    return parse_graph_json(text);
  return parse_edge_list(text);
}

// Polynomial coefficients routinely exceed 64 bits, so JSON records are
// assembled by hand: the coefficient array carries bare integer literals of
// arbitrary size rather than doubles.
std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string coefficients_json(const Polynomial& poly) {
  std::string out = "[";
  const std::vector<BigInt> desc = poly.descending();
  for (std::size_t k = 0; k < desc.size(); ++k) {
    if (k) out += ", ";
    out += desc[k].get_str();
  }
  out += "]";
  return out;
}

struct ComputeOutcome {
  Polynomial poly;
  StatsTotals totals;
  std::size_t n = 0;
  double wall_ms = 0.0;
};

ComputeOutcome run_compute(const Graph& graph, bool forest) {
  ComputeOutcome out;
  out.n = graph.vertex_count();
  const auto start = Clock::now();
  if (forest) {
    Forest f = split_components(graph);
    out.poly = independence_polynomial(f, &out.totals);
  } else {
    Tree tree = validate_tree(graph);
    TreeResult result = independence_polynomial(tree);
    out.poly = std::move(result.polynomial);
    out.totals.vertex_visits = result.stats.total_vertex_visits();
    out.totals.edge_explorations = result.stats.total_edge_explorations();
    out.totals.poly_mul_scalar_ops = result.stats.poly_mul_scalar_ops;
  }
  out.wall_ms = elapsed_ms(start);
  return out;
}

void print_stats_lines(std::ostream& os, const ComputeOutcome& oc) {
  os << "n = " << oc.n << "\n";
  os << "alpha = " << oc.poly.degree() << "\n";
  os << "vertex_visits = " << oc.totals.vertex_visits << "\n";
  os << "edge_explorations = " << oc.totals.edge_explorations << "\n";
  os << "poly_mul_scalar_ops = " << oc.totals.poly_mul_scalar_ops << "\n";
  os << "wall_time_ms = " << oc.wall_ms << "\n";
}

void print_compute(std::ostream& os, const std::string& input,
                   const ComputeOutcome& oc, const std::string& format,
                   bool stats) {
  if (format == "json") {
    os << "{\"input\": \"" << json_escape(input) << "\", \"n\": " << oc.n
       << ", \"alpha\": " << oc.poly.degree()
       << ", \"coefficients\": " << coefficients_json(oc.poly)
       << ", \"polynomial\": \"" << json_escape(oc.poly.to_string()) << "\"";
    if (stats) {
      os << ", \"stats\": {\"vertex_visits\": " << oc.totals.vertex_visits
         << ", \"edge_explorations\": " << oc.totals.edge_explorations
         << ", \"poly_mul_scalar_ops\": " << oc.totals.poly_mul_scalar_ops
         << ", \"wall_time_ms\": " << oc.wall_ms << "}";
    }
    os << "}\n";
    return;
  }
  if (format == "pretty") {
    os << oc.poly.to_string() << "\n";
  } else {
    os << oc.poly.to_descending_list() << "\n";
  }
  if (stats) print_stats_lines(os, oc);
}

TreeFamily family_from_name(const std::string& name) {
  if (auto family = parse_family(name)) return *family;
  throw Error("unknown tree family: " + name);
}

std::uint64_t seed_or_env(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("INDPOLY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("INDPOLY_SEED is not a valid seed: ") + env);
    }
  }
  return 1;
}

// ---------------------------------------------------------------------------
// verify: cross-check the tree engine against independent oracles.

struct SuiteResult {
  std::string name;
  std::string detail;
  bool ok = true;
};

void describe_tree(std::ostream& err, const Tree& tree) {
  err << "  offending tree (n = " << tree.vertex_count() << "):\n";
  std::istringstream lines(to_edge_list(tree.graph()));
  std::string line;
  while (std::getline(lines, line)) err << "    " << line << "\n";
}

struct TreeCheckCounters {
  std::uint64_t trees = 0;
  bool counters_ok = true;
  bool identities_ok = true;
};

BigInt expected_pair_count(std::size_t n) {
  // Independent sets of size two are non-adjacent vertex pairs.
  BigInt pairs = BigInt(static_cast<unsigned long>(n)) *
                 BigInt(static_cast<unsigned long>(n ? n - 1 : 0)) / 2;
  return pairs - BigInt(static_cast<unsigned long>(n ? n - 1 : 0));
}

bool check_tree_against_oracle(const Tree& tree, SuiteResult& oracle_suite,
                               TreeCheckCounters& counters,
                               std::ostream& err) {
  TreeResult result = independence_polynomial(tree);
  Polynomial brute = brute_force_polynomial(tree.graph());
  ++counters.trees;
  if (result.polynomial != brute) {
    oracle_suite.ok = false;
    err << "FAIL oracle mismatch\n";
    describe_tree(err, tree);
    err << "  engine: " << result.polynomial.to_descending_list() << "\n";
    err << "  oracle: " << brute.to_descending_list() << "\n";
    return false;
  }
  const std::size_t n = tree.vertex_count();
  if (!result.stats.every_vertex_visited_once() ||
      !result.stats.every_edge_explored_once() ||
      result.stats.total_vertex_visits() != n ||
      result.stats.total_edge_explorations() != n - 1) {
    counters.counters_ok = false;
    err << "FAIL traversal counters off\n";
    describe_tree(err, tree);
  }
  const Polynomial& p = result.polynomial;
  bool ids = p.coefficient(0) == 1 &&
             p.coefficient(1) == BigInt(static_cast<unsigned long>(n)) &&
             p.coefficient(2) == expected_pair_count(n) &&
             p.degree() == static_cast<std::size_t>(greedy_tree_mis(tree));
  if (!ids) {
    counters.identities_ok = false;
    err << "FAIL coefficient identities off\n";
    describe_tree(err, tree);
  }
  return true;
}

bool check_root_invariance(const Tree& tree, const Polynomial& expected,
                           std::ostream& err, std::uint64_t& rooted_runs) {
  const std::size_t n = tree.vertex_count();
  if (n < 3) return true;
  for (Vertex v = 0; v < n; ++v) {
    if (tree.degree(v) < 2) continue;
    StateMapResult rooted = compute_states(tree, v);
    ++rooted_runs;
    if (rooted.states.at(v).subtree != expected ||
        !states_satisfy_recurrence(rooted)) {
      err << "FAIL root invariance broken at root " << v << "\n";
      describe_tree(err, tree);
      err << "  expected: " << expected.to_descending_list() << "\n";
      err << "  got:      "
          << rooted.states.at(v).subtree.to_descending_list() << "\n";
      return false;
    }
  }
  return true;
}

int cmd_verify(std::size_t exhaustive_max_n, std::uint64_t random_count,
               std::size_t random_max_n, std::uint64_t seed, std::ostream& out,
               std::ostream& err) {
  if (exhaustive_max_n > kEnumerateMaxVertices)
    throw Error("--exhaustive-max-n is capped at " +
                std::to_string(kEnumerateMaxVertices));
  if (random_max_n > kBruteForceMaxVertices)
    throw Error("--random-max-n is capped at " +
                std::to_string(kBruteForceMaxVertices));
  if (random_max_n == 0) throw Error("--random-max-n must be positive");

  SuiteResult exhaustive{"oracle-exhaustive", "", true};
  SuiteResult random_suite{"oracle-random", "", true};
  SuiteResult invariance{"root-invariance", "", true};
  SuiteResult counters_suite{"traversal-counters", "", true};
  SuiteResult identities{"coefficient-identities", "", true};

  TreeCheckCounters counters;
  std::uint64_t rooted_runs = 0;
  std::uint64_t invariance_trees = 0;

  std::uint64_t exhaustive_trees = 0;
  for (std::size_t n = 1; n <= exhaustive_max_n; ++n) {
    enumerate_all_trees(n, [&](const Tree& tree) {
      ++exhaustive_trees;
      if (check_tree_against_oracle(tree, exhaustive, counters, err) &&
          tree.vertex_count() >= 3) {
        ++invariance_trees;
        Polynomial expected = independence_polynomial(tree).polynomial;
        if (!check_root_invariance(tree, expected, err, rooted_runs))
          invariance.ok = false;
      }
    });
  }
  exhaustive.detail = std::to_string(exhaustive_trees) + " trees, n <= " +
                      std::to_string(exhaustive_max_n);

  const std::size_t random_min_n = std::min<std::size_t>(9, random_max_n);
  std::mt19937_64 rng(seed);
  const std::size_t span = random_max_n - random_min_n + 1;
  for (std::uint64_t i = 0; i < random_count; ++i) {
    const std::size_t n = random_min_n + static_cast<std::size_t>(
                                             rng() % span);
    Tree tree = gen_random_tree(n, rng());
    if (check_tree_against_oracle(tree, random_suite, counters, err) &&
        n <= 12) {
      ++invariance_trees;
      Polynomial expected = independence_polynomial(tree).polynomial;
      if (!check_root_invariance(tree, expected, err, rooted_runs))
        invariance.ok = false;
    }
  }
  random_suite.detail = std::to_string(random_count) + " random trees, " +
                        std::to_string(random_min_n) + " <= n <= " +
                        std::to_string(random_max_n) + ", seed " +
                        std::to_string(seed);
  invariance.detail = std::to_string(invariance_trees) + " trees, " +
                      std::to_string(rooted_runs) + " rooted runs";
  counters_suite.ok = counters.counters_ok;
  counters_suite.detail = std::to_string(counters.trees) +
                          " runs, every vertex once, every edge once";
  identities.ok = counters.identities_ok;
  identities.detail = std::to_string(counters.trees) + " trees";

  bool all_ok = true;
  for (const SuiteResult* s :
       {&exhaustive, &random_suite, &invariance, &counters_suite,
        &identities}) {
    out << (s->ok ? "PASS" : "FAIL") << " " << s->name;
    if (!s->detail.empty()) out << "  (" << s->detail << ")";
    out << "\n";
    all_ok = all_ok && s->ok;
  }
  out << (all_ok ? "verify: all suites passed"
                 : "verify: FAILURES detected")
      << "\n";
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench

Tree build_sized_tree(TreeFamily family, std::size_t n, std::size_t legs,
                      std::uint64_t seed) {
  if (n == 0) throw Error("bench sizes must be positive");
  switch (family) {
    case TreeFamily::Path:
      return gen_path(n);
    case TreeFamily::Star:
      return gen_star(n - 1);
    case TreeFamily::Random:
      return gen_random_tree(n, seed);
    case TreeFamily::Caterpillar: {
      const std::size_t spine = std::max<std::size_t>(1, n / (1 + legs));
      return gen_caterpillar(spine, legs);
    }
    case TreeFamily::CompleteBinary: {
      std::size_t depth = 0;
      while (depth < 25 && ((std::size_t{2} << (depth + 1)) - 1) <= n)
        ++depth;
      return gen_complete_binary(depth);
    }
    case TreeFamily::Spider: {
      if (n < legs + 1)
        return gen_spider(legs, 1);
      return gen_spider(legs, std::max<std::size_t>(1, (n - 1) / legs));
    }
  }
  throw std::logic_error("unhandled tree family");
}

int cmd_bench(const std::string& family_name, std::vector<std::size_t> sizes,
              std::uint64_t repeats, std::size_t legs, bool traversal_only,
              std::uint64_t seed, const std::string& csv_path,
              std::ostream& out, std::ostream& err) {
  const TreeFamily family = family_from_name(family_name);
  if (sizes.empty()) throw Error("--sizes requires at least one size");
  if (!std::is_sorted(sizes.begin(), sizes.end()))
    throw Error("--sizes must be ascending");
  if (repeats == 0) throw Error("--repeats must be positive");

  std::ofstream file;
  std::ostream* csv = &out;
  if (csv_path != "-") {
    file.open(csv_path);
    if (!file) throw Error("cannot open csv output file: " + csv_path);
    csv = &file;
  }
  *csv << "family,n,wall_ms,vertex_visits,edge_explorations,"
          "poly_mul_scalar_ops,repeats\n";

  for (std::size_t requested : sizes) {
    Tree tree = build_sized_tree(family, requested, legs, seed);
    const std::size_t n = tree.vertex_count();
    std::vector<double> walls;
    walls.reserve(repeats);
    StatsTotals totals;
    for (std::uint64_t r = 0; r < repeats; ++r) {
      const auto start = Clock::now();
      if (traversal_only) {
        TraversalStats stats = traverse_only(tree);
        walls.push_back(elapsed_ms(start));
        totals.vertex_visits = stats.total_vertex_visits();
        totals.edge_explorations = stats.total_edge_explorations();
        totals.poly_mul_scalar_ops = stats.poly_mul_scalar_ops;
      } else {
        TreeResult result = independence_polynomial(tree);
        walls.push_back(elapsed_ms(start));
        totals.vertex_visits = result.stats.total_vertex_visits();
        totals.edge_explorations = result.stats.total_edge_explorations();
        totals.poly_mul_scalar_ops = result.stats.poly_mul_scalar_ops;
      }
    }
    std::sort(walls.begin(), walls.end());
    const double median = walls[walls.size() / 2];
    *csv << family_name << "," << n << "," << median << ","
         << totals.vertex_visits << "," << totals.edge_explorations << ","
         << totals.poly_mul_scalar_ops << "," << repeats << "\n";
    if (csv != &out)
      err << "bench: " << family_name << " n=" << n << " done in " << median
          << " ms (median of " << repeats << ")\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"independence polynomials of trees and forests"};
  app.name("indpoly");
  app.require_subcommand(1);
  app.set_version_flag("--version", "indpoly 0.1.0");

  // compute
  auto* compute = app.add_subcommand(
      "compute", "compute the independence polynomial of a tree or forest");
  std::string in_path = "-";
  std::string in_format = "auto";
  std::string out_format = "paper";
  bool forest = false;
  bool stats = false;
  compute->add_option("input", in_path, "edge-list or JSON file ('-' = stdin)");
  compute->add_option("--input-format", in_format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "json"}));
  compute->add_option("--format", out_format, "output format")
      ->check(CLI::IsMember({"paper", "json", "pretty"}));
  compute->add_flag("--forest", forest,
                    "accept disconnected forests (product over components)");
  compute->add_flag("--stats", stats, "print traversal statistics");

  // eval
  auto* eval = app.add_subcommand(
      "eval", "evaluate the independence polynomial at an integer point");
  std::string eval_path = "-";
  std::string eval_format = "auto";
  std::string at_text;
  bool eval_forest = false;
  eval->add_option("input", eval_path, "edge-list or JSON file ('-' = stdin)");
  eval->add_option("--input-format", eval_format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "json"}));
  eval->add_option("--at", at_text, "integer evaluation point")->required();
  eval->add_flag("--forest", eval_forest, "accept disconnected forests");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a tree from a named family");
  std::string gen_family;
  TreeFamilySpec spec;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_out = "-";
  gen->add_option("--family", gen_family, "path|star|caterpillar|complete_binary|spider|random")
      ->required();
  gen->add_option("--n", spec.n, "vertex count (path, star, random)");
  gen->add_option("--spine", spec.spine, "spine length (caterpillar)");
  gen->add_option("--legs", spec.legs, "legs per spine vertex (caterpillar) or leg count (spider)");
  gen->add_option("--depth", spec.depth, "depth (complete_binary)");
  gen->add_option("--leg-length", spec.leg_length, "leg length (spider)");
  gen->add_option("--seed", gen_seed, "RNG seed (random; INDPOLY_SEED fallback)");
  gen->add_option("--out", gen_out, "output file ('-' = stdout)");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "cross-check the engine against independent oracles");
  std::size_t exhaustive_max_n = 6;
  std::uint64_t random_count = 200;
  std::size_t random_max_n = 16;
  std::optional<std::uint64_t> verify_seed;
  verify->add_option("--exhaustive-max-n", exhaustive_max_n,
                     "check every labeled tree up to this size");
  verify->add_option("--random-count", random_count, "random trees to check");
  verify->add_option("--random-max-n", random_max_n,
                     "largest random tree size");
  verify->add_option("--seed", verify_seed,
                     "RNG seed (INDPOLY_SEED fallback)");

  // bench
  auto* bench = app.add_subcommand(
      "bench", "time the engine across tree families and sizes");
  std::string bench_family;
  std::vector<std::size_t> sizes;
  std::uint64_t repeats = 3;
  std::size_t bench_legs = 1;
  bool traversal_only = false;
  std::optional<std::uint64_t> bench_seed;
  std::string csv_path = "-";
  bench->add_option("--family", bench_family, "tree family")->required();
  bench->add_option("--sizes", sizes, "ascending vertex counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--repeats", repeats, "timed repetitions per size");
  bench->add_option("--legs", bench_legs,
                    "legs per spine vertex (caterpillar) or leg count (spider)");
  bench->add_flag("--traversal-only", traversal_only,
                  "skip polynomial arithmetic; time the tree walk alone");
  bench->add_option("--seed", bench_seed, "RNG seed (INDPOLY_SEED fallback)");
  bench->add_option("--csv", csv_path, "CSV output file ('-' = stdout)");

  std::vector<const char*> argv;
  argv.push_back("indpoly");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (compute->parsed()) {
    Graph graph = load_graph(in_path, in_format);
    ComputeOutcome oc = run_compute(graph, forest);
    print_compute(out, in_path, oc, out_format, stats);
    return 0;
  }
  if (eval->parsed()) {
    Graph graph = load_graph(eval_path, eval_format);
    ComputeOutcome oc = run_compute(graph, eval_forest);
    BigInt point;
    try {
      point = BigInt(at_text);
    } catch (const std::exception&) {
      throw Error("--at expects an integer, got: " + at_text);
    }
    out << oc.poly.evaluate(point).get_str() << "\n";
    return 0;
  }
  if (gen->parsed()) {
    spec.family = family_from_name(gen_family);
    spec.seed = seed_or_env(gen_seed);
    Tree tree = build_tree(spec);
    const std::string text = to_edge_list(tree.graph());
    if (gen_out == "-") {
      out << text;
    } else {
      std::ofstream file(gen_out);
      if (!file) throw Error("cannot open output file: " + gen_out);
      file << text;
    }
    return 0;
  }
  if (verify->parsed()) {
    return cmd_verify(exhaustive_max_n, random_count, random_max_n,
                      seed_or_env(verify_seed), out, err);
  }
  if (bench->parsed()) {
    return cmd_bench(bench_family, sizes, repeats, bench_legs, traversal_only,
                     seed_or_env(bench_seed), csv_path, out, err);
  }
  throw std::logic_error("no subcommand dispatched");
}

}  // namespace
}  // namespace indpoly

namespace indpoly {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace indpoly
