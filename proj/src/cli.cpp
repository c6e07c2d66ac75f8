#include "hcube/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcube/c10.hpp"
#include "hcube/coloring.hpp"
#include "hcube/compression.hpp"
#include "hcube/cube.hpp"
#include "hcube/distance_embedding.hpp"
#include "hcube/embedding.hpp"
#include "hcube/gallery.hpp"
#include "hcube/graph.hpp"
#include "hcube/subdivision.hpp"
#include "hcube/turan.hpp"

namespace hcube {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

json coloring_to_json(const Graph& g, const EdgeColoring& c) {
  json j;
  auto edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["colors"] = c.color;
  return j;
}

Graph parse_gallery_name(const std::string& name) {
  if (name == "g8") return g8().graph;
  if (name == "k23") return k23();
  if (name.rfind("theta:", 0) == 0) {
    std::vector<int> lengths;
    std::stringstream ss(name.substr(6));
    std::string part;
    while (std::getline(ss, part, ',')) lengths.push_back(std::stoi(part));
    return theta(lengths).graph;
  }
  throw std::invalid_argument("unknown gallery name '" + name +
                              "' (g8 | k23 | theta:L1,L2,...)");
}

struct CliContext {
  std::istream* stdin_stream = nullptr;
  std::uint64_t seed = kDefaultCoverSeed;
  std::uint64_t budget = kDefaultSearchBudget;
  int threads = 1;  // accepted for interface stability; single-threaded build
  json payload;
  std::string raw_output;  // non-JSON output when set
  int exit_code = kExitOk;
};

void cmd_graph_check(CliContext& ctx, const std::string& file,
                     const std::string& property) {
  Graph g = (file == "-") ? load_graph(ctx.stdin_stream ? *ctx.stdin_stream : std::cin,
                                       "<stdin>")
                          : load_graph(file);
  ctx.payload["vertices"] = g.vertex_count();
  ctx.payload["edges"] = g.edge_count();
  if (property == "girth") {
    auto gr = girth(g);
    if (gr)
      ctx.payload["girth"] = *gr;
    else
      ctx.payload["girth"] = "infinite";
  } else if (property == "cubical") {
    auto r = find_nice_coloring(g, 0, ctx.budget);
    ctx.payload["nodes"] = r.nodes;
    if (r.status == ColoringSearchResult::Status::Found) {
      ctx.payload["cubical"] = true;
      ctx.payload["colors"] = r.coloring->num_colors;
      ctx.payload["nice_coloring"] = coloring_to_json(g, *r.coloring);
    } else if (r.status == ColoringSearchResult::Status::NoneExists) {
      ctx.payload["cubical"] = false;
      ctx.exit_code = kExitViolated;
    } else {
      ctx.payload["cubical"] = "budget-exhausted";
      ctx.exit_code = kExitBudget;
    }
  } else if (property == "layered") {
    auto r = decide_layered(g, ctx.budget);
    ctx.payload["nodes"] = r.nodes;
    if (r.status == LayeredResult::Status::Layered) {
      ctx.payload["layered"] = true;
      ctx.payload["embedding"] = json::parse(r.embedding->to_json());
    } else if (r.status == LayeredResult::Status::NotLayered) {
      ctx.payload["layered"] = false;
      ctx.exit_code = kExitViolated;
    } else {
      ctx.payload["layered"] = "budget-exhausted";
      ctx.exit_code = kExitBudget;
    }
  } else {
    throw CLI::ValidationError("--property must be cubical|layered|girth");
  }
}

void cmd_embed_subdivision(CliContext& ctx, const std::string& family, int t, int k,
                           const std::string& dot_path) {
  SubdivisionEmbedding se;
  if (family == "odd-complete")
    se = embed_odd_subdivision_complete(t, k);
  else if (family == "even-bipartite")
    se = embed_even_subdivision_bipartite(t, k);
  else
    throw CLI::ValidationError("--family must be odd-complete|even-bipartite");

  auto rep = verify_layer_embedding(se.subdivision.graph, se.embedding);
  ctx.payload["family"] = family;
  ctx.payload["t"] = t;
  ctx.payload["k"] = k;
  ctx.payload["vertices"] = se.subdivision.graph.vertex_count();
  ctx.payload["N"] = se.embedding.ambient_dimension;
  ctx.payload["layer"] = se.embedding.layer;
  ctx.payload["verified"] = rep.ok;
  if (!rep.ok) {
    ctx.payload["violation"] = rep.violation;
    ctx.exit_code = kExitViolated;
  }
  if (!se.partite_parts.empty()) {
    auto cert = check_partite(se.embedding, se.partite_parts);
    ctx.payload["partite_parts"] = se.partite_parts.size();
    ctx.payload["partite_ok"] = cert.has_value();
    if (!cert) ctx.exit_code = kExitViolated;
  }
  ctx.payload["embedding"] = json::parse(se.embedding.to_json());
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    out << to_dot(se.subdivision.graph);
  }
}

void cmd_turan_ex(CliContext& ctx, int n, const std::string& forbid) {
  auto res = ex_exact(n, pattern_from_name(forbid), ctx.budget);
  ctx.payload["n"] = n;
  ctx.payload["forbid"] = forbid;
  ctx.payload["nodes"] = res.nodes;
  if (res.exact) {
    ctx.payload["exact"] = true;
    ctx.payload["value"] = res.lower;
  } else {
    ctx.payload["exact"] = false;
    ctx.payload["lower"] = res.lower;
    ctx.payload["upper"] = res.upper;
    ctx.exit_code = kExitBudget;
  }
  HypercubeGraph q = HypercubeGraph::build(n);
  auto witness = json::array();
  for (int e : res.witness_edges) {
    auto [u, v] = q.graph.edge(e);
    witness.push_back({u, v});
  }
  ctx.payload["witness"] = {{"vertices", q.graph.vertex_count()},
                            {"edges", std::move(witness)}};
}

void cmd_e_of_t(CliContext& ctx, std::int64_t t, int k_max, bool tsv) {
  auto table = json::array();
  std::ostringstream tsv_out;
  tsv_out << "t\te\tn\tk\tN_A\tN_B\n";
  for (std::int64_t i = 1; i <= t; ++i) {
    auto r = e_exact(i, k_max);
    table.push_back({{"t", i},
                     {"e", r.value},
                     {"witness",
                      {{"n", r.witness.n},
                       {"k", r.witness.k},
                       {"N_A", r.witness.num_a},
                       {"N_B", r.witness.num_b}}}});
    tsv_out << i << "\t" << r.value << "\t" << r.witness.n << "\t" << r.witness.k
            << "\t" << r.witness.num_a << "\t" << r.witness.num_b << "\n";
  }
  if (tsv)
    ctx.raw_output = tsv_out.str();
  else
    ctx.payload["table"] = std::move(table);
}

void cmd_c10_build(CliContext& ctx, int n, bool verify) {
  auto cover = build_cover(n, ctx.seed);
  HypercubeGraph q = HypercubeGraph::build(n);
  auto coloring = combined_coloring(q, cover);
  auto cls = largest_class(q, coloring);
  ctx.payload["n"] = n;
  ctx.payload["cover_size"] = cover.perms.size();
  ctx.payload["palette_bound"] = coloring.palette_bound();
  ctx.payload["class_size"] = cls.edges.size();
  ctx.payload["verified"] = false;
  if (verify) {
    if (n > 6)
      throw CLI::ValidationError("--verify supports n <= 6 (exhaustive 10-cycle scan)");
    bool cover_ok = verify_cover(cover);
    auto rep = verify_no_mono_c10(q, cover, coloring);
    ctx.payload["cover_ok"] = cover_ok;
    ctx.payload["cycles_checked"] = rep.cycles;
    ctx.payload["verified"] = cover_ok && rep.ok;
    if (!rep.ok) {
      ctx.payload["failure"] = rep.failure;
      ctx.exit_code = kExitViolated;
    }
  }
}

void cmd_appendix_b(CliContext& ctx, int n, int m, bool verify) {
  auto emb = embed_F(n, m);
  ctx.payload["n"] = n;
  ctx.payload["m"] = m;
  ctx.payload["N"] = emb.target_dimension;
  if (verify) {
    auto rep = verify_fixed_distance(emb);
    ctx.payload["layers"] = rep.layers_used;
    ctx.payload["verified"] = rep.ok();
    if (!rep.ok()) {
      ctx.payload["violation"] = rep.violation;
      ctx.exit_code = kExitViolated;
    }
  } else {
    std::vector<int> layers{emb.image[0].layer()};
    for (const auto& img : emb.image)
      if (img.layer() != layers[0]) {
        layers.push_back(img.layer());
        break;
      }
    ctx.payload["layers"] = layers;
  }
}

void cmd_gallery_get(CliContext& ctx, const std::string& name,
                     const std::string& dot_path) {
  Graph g = parse_gallery_name(name);
  json j = json::parse(graph_to_json(g));
  ctx.payload["name"] = name;
  for (auto& [key, value] : j.items()) ctx.payload[key] = value;
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    out << to_dot(g);
  }
}

void cmd_tables(CliContext& ctx, int table, bool raw) {
  std::string text =
      table == 3 ? render_h_cycle_table() : render_indicator_table(table);
  if (raw) {
    ctx.raw_output = text;
    return;
  }
  ctx.payload["table"] = table;
  ctx.payload["text"] = text;
  if (table != 3) {
    bool ok = true;
    for (const auto& col : table_columns(table))
      ok = ok && table_fidelity_check(table, col.k).ok;
    ctx.payload["matches_construction"] = ok;
    if (!ok) ctx.exit_code = kExitViolated;
  }
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args, std::istream* stdin_stream) {
  CLI::App app{"hypercube layer toolkit"};
  app.require_subcommand(1);

  CliContext ctx;
  ctx.stdin_stream = stdin_stream;
  app.add_option("--seed", ctx.seed, "seed for randomized internals");
  app.add_option("--budget", ctx.budget, "search node budget");
  app.add_option("--threads", ctx.threads, "worker threads (informational)");

  // graph check <file> --property cubical|layered|girth
  auto* graph_cmd = app.add_subcommand("graph", "graph property checks");
  auto* check_cmd = graph_cmd->add_subcommand("check", "check a property");
  std::string check_file, check_property;
  check_cmd->add_option("file", check_file, "graph JSON file, - for stdin")->required();
  check_cmd->add_option("--property", check_property, "cubical|layered|girth")
      ->required();

  // embed subdivision --family ... -t T -k K
  auto* embed_cmd = app.add_subcommand("embed", "explicit layered embeddings");
  auto* sub_cmd = embed_cmd->add_subcommand("subdivision", "subdivision families");
  std::string family, embed_dot;
  int sub_t = 2, sub_k = 1;
  sub_cmd->add_option("--family", family, "odd-complete|even-bipartite")->required();
  sub_cmd->add_option("-t", sub_t, "base graph parameter")->required();
  sub_cmd->add_option("-k", sub_k, "subdivision parameter")->required();
  sub_cmd->add_option("--dot", embed_dot, "write DOT file");

  // turan ex --n N --forbid P
  auto* turan_cmd = app.add_subcommand("turan", "extremal numbers");
  auto* ex_cmd = turan_cmd->add_subcommand("ex", "exact ex(Q_n, pattern)");
  int ex_n = 3;
  std::string forbid;
  ex_cmd->add_option("--n", ex_n, "hypercube dimension")->required();
  ex_cmd->add_option("--forbid", forbid, "C4|C6|C6-|C8|C10")->required();

  // e-of-t --t T
  auto* eoft_cmd = app.add_subcommand("e-of-t", "largest layered edge counts");
  std::int64_t eoft_t = 10;
  int eoft_kmax = 0;
  bool eoft_tsv = false;
  eoft_cmd->add_option("--t", eoft_t, "table up to this t")->required();
  eoft_cmd->add_option("--k-max", eoft_kmax, "layer search cap (0 = default)");
  eoft_cmd->add_flag("--tsv", eoft_tsv, "TSV output");

  // c10 build --n N [--verify]
  auto* c10_cmd = app.add_subcommand("c10", "C10-free construction");
  auto* build_cmd = c10_cmd->add_subcommand("build", "build cover and coloring");
  int c10_n = 5;
  bool c10_verify = false;
  build_cmd->add_option("--n", c10_n, "hypercube dimension")->required();
  build_cmd->add_flag("--verify", c10_verify, "exhaustive verification (n <= 6)");

  // appendix-b --n N --m M [--verify]
  auto* appb_cmd = app.add_subcommand("appendix-b", "fixed-distance layer embeddings");
  int appb_n = 2, appb_m = 3;
  bool appb_verify = false;
  appb_cmd->add_option("--n", appb_n, "source dimension")->required();
  appb_cmd->add_option("--m", appb_m, "target distance (>= 2)")->required();
  appb_cmd->add_flag("--verify", appb_verify, "verify distances and layers");

  // gallery get <name>
  auto* gallery_cmd = app.add_subcommand("gallery", "named constructions");
  auto* get_cmd = gallery_cmd->add_subcommand("get", "emit a gallery graph");
  std::string gallery_name, gallery_dot;
  get_cmd->add_option("name", gallery_name, "g8 | k23 | theta:L1,L2,...")->required();
  get_cmd->add_option("--dot", gallery_dot, "write DOT file");

  // tables reproduce --table 1|2|3
  auto* tables_cmd = app.add_subcommand("tables", "tabulated constructions");
  auto* repro_cmd = tables_cmd->add_subcommand("reproduce", "reproduce a table");
  int table_no = 1;
  bool table_raw = false;
  repro_cmd->add_option("--table", table_no, "1|2|3")->required();
  repro_cmd->add_flag("--raw", table_raw, "print the text only");

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    result.output = app.help();
    result.exit_code = kExitOk;
    return result;
  } catch (const CLI::ParseError& e) {
    result.diagnostics = std::string(e.what()) + "\n" + app.help();
    result.exit_code = kExitUsage;
    return result;
  }

  std::string command;
  for (const auto& a : args) {
    if (!command.empty()) command += ' ';
    command += a;
  }
  ctx.payload["command"] = command;

  try {
    if (*check_cmd) cmd_graph_check(ctx, check_file, check_property);
    else if (*sub_cmd) cmd_embed_subdivision(ctx, family, sub_t, sub_k, embed_dot);
    else if (*ex_cmd) cmd_turan_ex(ctx, ex_n, forbid);
    else if (*eoft_cmd) cmd_e_of_t(ctx, eoft_t, eoft_kmax, eoft_tsv);
    else if (*build_cmd) cmd_c10_build(ctx, c10_n, c10_verify);
    else if (*appb_cmd) cmd_appendix_b(ctx, appb_n, appb_m, appb_verify);
    else if (*get_cmd) cmd_gallery_get(ctx, gallery_name, gallery_dot);
    else if (*repro_cmd) cmd_tables(ctx, table_no, table_raw);
    else {
      result.diagnostics = "missing subcommand\n" + app.help();
      result.exit_code = kExitUsage;
      return result;
    }
  } catch (const CLI::ValidationError& e) {
    result.diagnostics = std::string(e.what()) + "\n";
    result.exit_code = kExitUsage;
    return result;
  } catch (const std::exception& e) {
    result.diagnostics = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitUsage;
    return result;
  }

  result.exit_code = ctx.exit_code;
  result.output = ctx.raw_output.empty() ? ctx.payload.dump(2) + "\n" : ctx.raw_output;
  return result;
}

}  // namespace hcube
