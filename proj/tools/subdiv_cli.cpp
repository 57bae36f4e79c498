// subdiv: density certificates, subdivision counts, constructions,
// extraction and verification harnesses, all reported as JSON.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "subdiv/subdiv.hpp"

namespace {

using namespace subdiv;

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNotDense = 3,
  kViolated = 4,
  kInconclusive = 5,
  kInvalidWitness = 6,
};

class InputError : public Error {
public:
  using Error::Error;
};

std::string read_source(const std::string &path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string &arg) {
  if (arg != "-")
    if (auto g = named_graph(arg)) return *g;
  if (arg != "-" && !std::filesystem::exists(arg))
    throw InputError("'" + arg + "' is neither a built-in graph name nor a readable file");
  return parse_graph(read_source(arg));
}

Pattern load_pattern(const std::string &arg, const Limits &limits) {
  if (arg != "-" && !std::filesystem::exists(arg)) return Pattern::named(arg);
  Graph g = parse_graph(read_source(arg));
  if (g.order() > limits.pattern_max_order)
    throw CapExceeded("pattern order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(limits.pattern_max_order));
  // Unlabelled: a family name would not carry this file's vertex numbering.
  return Pattern::from_graph(std::move(g), {}, limits);
}

void print(const Json &j) { std::cout << j.dump(2) << '\n'; }

struct CapOptions {
  std::optional<int> pattern_order;
  std::optional<int> subset_n;
  std::optional<int> embed_n;
  std::optional<int> embed_size;
  std::optional<int> search_n;
  std::optional<std::size_t> max_sets;
  std::optional<std::size_t> max_witnesses;

  void attach(CLI::App *cmd) {
    cmd->add_option("--cap-pattern-order", pattern_order, "raise/lower the pattern order cap (default 12, max 16)");
    cmd->add_option("--cap-subset-n", subset_n, "host order cap for the subset engine (default 16)");
    cmd->add_option("--cap-embed-n", embed_n, "host order cap for the embedding engine (default 24)");
    cmd->add_option("--cap-embed-size", embed_size, "vertex-set size cap for the embedding engine (default 12)");
    cmd->add_option("--cap-search-n", search_n, "host order cap for witness/clique search (default 64)");
    cmd->add_option("--cap-max-sets", max_sets, "stop collecting vertex sets here (default 2^20)");
    cmd->add_option("--cap-max-witnesses", max_witnesses, "stop witness enumeration here (default 2^22)");
  }

  Limits resolve() const {
    Limits l;
    l.threads = threads_from_env(1);
    auto apply = [](auto &field, const auto &value, const char *name) {
      if (!value) return;
      std::cerr << "warning: cap " << name << " changed from " << field << " to " << *value << '\n';
      field = *value;
    };
    apply(l.pattern_max_order, pattern_order, "pattern-order");
    apply(l.subset_engine_max_n, subset_n, "subset-n");
    apply(l.embed_engine_max_n, embed_n, "embed-n");
    apply(l.embed_max_set_size, embed_size, "embed-size");
    apply(l.search_max_n, search_n, "search-n");
    apply(l.max_sets, max_sets, "max-sets");
    apply(l.max_witnesses, max_witnesses, "max-witnesses");
    if (l.pattern_max_order > kHardPatternOrderCeiling)
      throw InputError("pattern order cap cannot exceed " + std::to_string(kHardPatternOrderCeiling));
    if (l.search_max_n > kMaskWidth || l.subset_engine_max_n > kMaskWidth || l.embed_engine_max_n > kMaskWidth)
      throw InputError("host caps cannot exceed " + std::to_string(kMaskWidth));
    return l;
  }
};

// density ------------------------------------------------------------------

struct DensityArgs {
  std::string graph, pattern, anchor = "edge", subgraphs = "induced";
  std::optional<int> k;
  std::optional<std::uint64_t> t;
  CapOptions caps;
};

int run_density(const DensityArgs &a) {
  const Limits limits = a.caps.resolve();
  const Graph g = load_graph(a.graph);
  const Pattern f = load_pattern(a.pattern, limits);
  const AnchorKind kind = a.anchor == "edge" ? AnchorKind::edge : AnchorKind::vertex;
  const SubgraphKind sub = a.subgraphs == "induced" ? SubgraphKind::induced : SubgraphKind::all;
  if (a.t && *a.t < 1) throw DomainError("t must be at least 1");
  const auto report = a.k ? k_local_density(g, f, *a.k, kind, limits, sub) : local_density(g, f, kind, limits);
  Json j = to_json(report);
  j["pattern"] = pattern_to_json(f);
  if (a.k) j["subgraphs"] = a.subgraphs;
  if (a.t) {
    j["t"] = *a.t;
    j["dense"] = report.dense(*a.t);
  }
  print(j);
  return a.t && !report.dense(*a.t) ? kNotDense : kOk;
}

// subdivisions -------------------------------------------------------------

struct SubdivisionArgs {
  std::string graph, pattern, engine = "subset";
  std::optional<int> max_size;
  bool list = false;
  CapOptions caps;
};

int run_subdivisions(const SubdivisionArgs &a) {
  const Limits limits = a.caps.resolve();
  const Graph g = load_graph(a.graph);
  const Pattern f = load_pattern(a.pattern, limits);
  if (a.engine != "both") {
    const auto res = enumerate_distinguishable(g, f, a.engine == "subset" ? Engine::subset : Engine::embed, a.max_size,
                                               limits);
    print(to_json(res, a.list));
    return res.truncated ? kInconclusive : kOk;
  }
  const auto sa = enumerate_distinguishable_subset(g, f, a.max_size, limits);
  const auto sb = enumerate_distinguishable_embed(g, f, a.max_size, limits);
  const bool truncated = sa.truncated || sb.truncated;
  const bool agree = sa.vertex_sets == sb.vertex_sets && sa.count == sb.count;
  Json j;
  j["engine"] = "both";
  j["count"] = to_decimal(sa.count);
  j["truncated"] = truncated;
  j["agree"] = agree;
  j["engines"] = Json::array({to_json(sa, false), to_json(sb, false)});
  if (a.list) j["vertex_sets"] = to_json(sa, true)["vertex_sets"];
  print(j);
  if (truncated) return kInconclusive;
  if (!agree) {
    std::cerr << "error: engines disagree (subset " << to_decimal(sa.count) << ", embed " << to_decimal(sb.count) << ")\n";
    return kViolated;
  }
  return kOk;
}

// construct ----------------------------------------------------------------

struct ConstructArgs {
  ConstructionSpec spec;
  std::string output, format;
};

int run_construct(const ConstructArgs &a) {
  a.spec.validate();
  GraphFormat format = GraphFormat::edge_list;
  if (a.format == "g6" || (a.format.empty() && a.output.ends_with(".g6"))) format = GraphFormat::graph6;
  const Graph g = a.spec.build();
  std::string header = "construction " + to_json(a.spec).dump();
  if (a.spec.kind == ConstructionKind::split) {
    const auto split = split_construction(a.spec.l, a.spec.t);
    header += "\nA " + Json(split.a.items()).dump() + "\nB " + Json(split.b.items()).dump();
  }
  const std::string text = serialize_graph(g, format, header);
  if (a.output.empty() || a.output == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(a.output, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + a.output + "'");
  return kOk;
}

// extract ------------------------------------------------------------------

struct ExtractArgs {
  std::string witness, graph;
  int ell = 0;
  CapOptions caps;
};

/// Host made of the witness's own route edges, for witnesses given without
/// a graph.
Graph route_host(const SubdivisionWitness &w) {
  int n = 0;
  for (int v : w.branch) n = std::max(n, v + 1);
  std::set<Edge> edges;
  for (const auto &r : w.routes)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] < 0) throw DomainError("negative vertex in route");
      n = std::max(n, r[i] + 1);
      if (i > 0 && r[i - 1] != r[i]) edges.emplace(std::min(r[i - 1], r[i]), std::max(r[i - 1], r[i]));
    }
  return Graph::from_edges(n, std::vector<Edge>(edges.begin(), edges.end()));
}

int report_invalid(const std::vector<std::string> &violations, const char *stage) {
  for (const auto &v : violations) std::cerr << "invalid witness (" << stage << "): " << v << '\n';
  print(Json{{"valid", false}, {"stage", stage}, {"violations", violations}});
  return kInvalidWitness;
}

int run_extract(const ExtractArgs &a) {
  a.caps.resolve();
  Json j;
  try {
    j = Json::parse(read_source(a.witness));
  } catch (const Json::parse_error &e) {
    throw InputError(std::string("witness JSON: ") + e.what());
  }
  SubdivisionWitness w;
  try {
    w = witness_from_json(j);
  } catch (const DomainError &e) {
    return report_invalid({e.what()}, "input");
  }
  Graph g;
  if (!a.graph.empty()) {
    g = load_graph(a.graph);
  } else {
    try {
      g = route_host(w);
    } catch (const DomainError &e) {
      return report_invalid({e.what()}, "input");
    }
  }
  if (auto v = validate_witness(g, w); !v.empty()) return report_invalid(v, "input");
  const auto out = extract_subclique_subdivision(g, w, a.ell);
  if (auto v = validate_witness(g, out); !v.empty()) return report_invalid(v, "output");
  print(to_json(out));
  return kOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  int ell = 0, r = 0, k = 0, d = 0;
  long long t = 0;
  std::string eps = "0.25", pattern, graph;
  std::vector<int> edge;
  CapOptions caps;
};

int finish(const VerificationReport &rep) {
  print(to_json(rep));
  switch (rep.verdict) {
  case Verdict::holds:
    return kOk;
  case Verdict::violated:
    return kViolated;
  case Verdict::inconclusive:
    return kInconclusive;
  }
  return kOk;
}

std::optional<Graph> optional_graph(const std::string &arg) {
  if (arg.empty()) return std::nullopt;
  return load_graph(arg);
}

std::optional<Pattern> optional_pattern(const std::string &arg, const Limits &limits) {
  if (arg.empty()) return std::nullopt;
  return load_pattern(arg, limits);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"subdiv: local density, subdivision counts and verification harnesses"};
  app.require_subcommand(1);
  app.fallthrough(false);

  std::function<int()> action;

  DensityArgs dens;
  auto *density = app.add_subcommand("density", "per-anchor copy counts of a pattern (exit 3 when --t fails)");
  density->add_option("--graph", dens.graph, "host: built-in name, file path, or - for stdin")->required();
  density->add_option("--pattern", dens.pattern, "pattern: built-in name or file path")->required();
  density->add_option("--k", dens.k, "check every induced subgraph class on >= k vertices");
  density->add_option("--anchor", dens.anchor, "edge or vertex anchors")->check(CLI::IsMember({"edge", "vertex"}));
  density->add_option("--t", dens.t, "density threshold");
  density->add_option("--subgraphs", dens.subgraphs, "classes for --k: induced (default) or all")
      ->check(CLI::IsMember({"induced", "all"}));
  dens.caps.attach(density);
  density->callback([&] { action = [&] { return run_density(dens); }; });

  SubdivisionArgs subs;
  auto *subdivisions = app.add_subcommand("subdivisions", "vertex sets spanning a subdivision of the pattern");
  subdivisions->add_option("--graph", subs.graph, "host: built-in name, file path, or - for stdin")->required();
  subdivisions->add_option("--pattern", subs.pattern, "pattern: built-in name or file path")->required();
  subdivisions->add_option("--engine", subs.engine, "subset, embed, or both (exit 4 on disagreement)")
      ->check(CLI::IsMember({"subset", "embed", "both"}));
  subdivisions->add_option("--max-size", subs.max_size, "largest vertex set considered (default: host order)");
  subdivisions->add_flag("--list", subs.list, "include the vertex sets");
  subs.caps.attach(subdivisions);
  subdivisions->callback([&] { action = [&] { return run_subdivisions(subs); }; });

  ConstructArgs cons;
  auto *construct = app.add_subcommand("construct", "write a generated graph with its spec as a header comment");
  construct->require_subcommand(1);
  auto add_output = [&](CLI::App *cmd) {
    cmd->add_option("-o,--output", cons.output, "output path (default stdout)");
    cmd->add_option("--format", cons.format, "g6 or edges (default: from extension, else edges)")
        ->check(CLI::IsMember({"g6", "edges"}));
    cmd->callback([&] { action = [&] { return run_construct(cons); }; });
  };
  auto *c_split = construct->add_subcommand("split", "clique A of ell-2 joined to an independent set of t+1");
  c_split->add_option("--ell", cons.spec.l, "ell >= 4")->required();
  c_split->add_option("--t", cons.spec.t, "t >= 1")->required();
  c_split->parse_complete_callback([&] { cons.spec.kind = ConstructionKind::split; });
  add_output(c_split);
  auto *c_complete = construct->add_subcommand("complete", "complete graph K_r");
  c_complete->add_option("--r", cons.spec.r, "order")->required();
  c_complete->parse_complete_callback([&] { cons.spec.kind = ConstructionKind::complete; });
  add_output(c_complete);
  auto *c_bip = construct->add_subcommand("bipartite", "complete bipartite graph K_{r,s}");
  c_bip->add_option("--r", cons.spec.r, "left side")->required();
  c_bip->add_option("--s", cons.spec.s, "right side")->required();
  c_bip->parse_complete_callback([&] { cons.spec.kind = ConstructionKind::complete_bipartite; });
  add_output(c_bip);
  auto *c_random = construct->add_subcommand("random", std::string("G(n,p) from ") + kRandomGraphGenerator);
  c_random->add_option("--n", cons.spec.n, "order")->required();
  c_random->add_option("--p", cons.spec.p, "edge probability")->required();
  c_random->add_option("--seed", cons.spec.seed, "generator seed")->required();
  c_random->parse_complete_callback([&] { cons.spec.kind = ConstructionKind::random; });
  add_output(c_random);

  ExtractArgs ext;
  auto *extract = app.add_subcommand("extract", "subdivision of K_ell through every branch vertex of a K_k one");
  extract->add_option("--witness", ext.witness, "witness JSON path, or - for stdin")->required();
  extract->add_option("--ell", ext.ell, "target clique order, 2 <= ell <= k")->required();
  extract->add_option("--graph", ext.graph, "host to validate against (default: the witness's own edges)");
  ext.caps.attach(extract);
  extract->callback([&] { action = [&] { return run_extract(ext); }; });

  VerifyArgs ver;
  auto *verify = app.add_subcommand("verify", "run a verification harness (exit 4 violated, 5 inconclusive)");
  verify->require_subcommand(1);
  auto harness = [&](const char *name, const char *help, std::function<int(const Limits &)> fn) {
    auto *cmd = verify->add_subcommand(name, help);
    ver.caps.attach(cmd);
    cmd->callback([&, fn] { action = [&, fn] { return fn(ver.caps.resolve()); }; });
    return cmd;
  };
  auto *v_tuza = harness("tuza-count", "vertex sets of K_r spanning a subdivision of K_ell vs the binomial sum",
                         [&](const Limits &l) { return finish(verify_tuza_count(ver.ell, ver.r, l)); });
  v_tuza->add_option("--ell", ver.ell)->required();
  v_tuza->add_option("--r", ver.r)->required();
  auto *v_2i = harness("thm2i", "exact family of distinguishable K_ell subdivisions in a dense host",
                       [&](const Limits &l) { return finish(verify_thm2i(ver.ell, ver.t, optional_graph(ver.graph), l)); });
  v_2i->add_option("--ell", ver.ell)->required();
  v_2i->add_option("--t", ver.t)->required();
  v_2i->add_option("--graph", ver.graph, "host (default K_r with binom(r-2, ell-2) >= t)");
  auto *v_2ii = harness("thm2ii", "split host: density and s(F,G) against the polynomial bound", [&](const Limits &l) {
    return finish(verify_thm2ii(ver.ell, ver.t, optional_pattern(ver.pattern, l), l));
  });
  v_2ii->add_option("--ell", ver.ell)->required();
  v_2ii->add_option("--t", ver.t)->required();
  v_2ii->add_option("--pattern", ver.pattern, "non-complete pattern on ell vertices (default K_ell^-)");
  auto *v_l5 = harness("lemma5", "per-witness path inequalities in the split host", [&](const Limits &l) {
    return finish(verify_lemma5(ver.ell, ver.t, optional_pattern(ver.pattern, l), l));
  });
  v_l5->add_option("--ell", ver.ell)->required();
  v_l5->add_option("--t", ver.t)->required();
  v_l5->add_option("--pattern", ver.pattern, "pattern on ell vertices (default K_ell^-)");
  auto *v_2iii = harness("thm2iii", "book structure on an edge and the K_ell^- family through it", [&](const Limits &l) {
    std::optional<Edge> e;
    if (!ver.edge.empty()) e = Edge(std::min(ver.edge[0], ver.edge[1]), std::max(ver.edge[0], ver.edge[1]));
    return finish(verify_thm2iii(ver.ell, ver.t, parse_fraction(ver.eps), e, optional_graph(ver.graph), l));
  });
  v_2iii->add_option("--ell", ver.ell)->required();
  v_2iii->add_option("--t", ver.t)->required();
  v_2iii->add_option("--eps", ver.eps, "decimal in (0, 1), default 0.25");
  v_2iii->add_option("--edge", ver.edge, "anchor edge u v (default: first A-internal edge)")->expected(2);
  v_2iii->add_option("--graph", ver.graph, "host (default split(ell,t))");
  auto *v_7 = harness("thm7", "(F,k,t) density: complete-host path when K_k <= F, split host otherwise",
                      [&](const Limits &l) { return finish(verify_thm7(load_pattern(ver.pattern, l), ver.k, ver.t, l)); });
  v_7->add_option("--pattern", ver.pattern)->required();
  v_7->add_option("--k", ver.k)->required();
  v_7->add_option("--t", ver.t)->required();
  auto *v_jung = harness("jung", "K_{r,r} with r = floor(d^2/8) has no subdivision of K_{d+1}",
                         [&](const Limits &l) { return finish(verify_jung(ver.d, l)); });
  v_jung->add_option("--d", ver.d)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const CapExceeded &e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kInconclusive;
  } catch (const InvalidWitness &e) {
    std::cerr << "invalid witness: " << e.what() << '\n';
    return kInvalidWitness;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
