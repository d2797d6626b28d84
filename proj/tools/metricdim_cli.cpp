// Command-line front end: finite-graph dimension solvers, presentation
// classifiers and constructions, certified balls, and the geodesic
// orientation explorer. Exit codes: 0 ok, 2 bad input, 3 size limit,
// 4 provably-infinite answer requested.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metricdim/ball.hpp"
#include "metricdim/errors.hpp"
#include "metricdim/graph_algorithms.hpp"
#include "metricdim/io.hpp"
#include "metricdim/oracle.hpp"
#include "metricdim/orient.hpp"
#include "metricdim/presentation.hpp"
#include "metricdim/resolve.hpp"
#include "metricdim/witness.hpp"

namespace md = metricdim;
using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string generator;
  int k = 0;
  int radius = -1;
  int horizon = -1;
  std::string mode = "weak";
  std::string format = "json";
  int limit = md::kDefaultSubsetSearchLimit;
  long seed = 0;  // all commands are deterministic; recorded for provenance
  std::string set_csv;
  std::vector<int> verify_radii;
  int subset_pool = 6;
  int subset_max = 2;
};

std::vector<md::VertexId> parse_set(const std::string& csv) {
  std::vector<md::VertexId> out;
  std::string current;
  for (char c : csv) {
    if (c == ',') {
      if (!current.empty()) out.emplace_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.emplace_back(current);
  return out;
}

md::FinicyclicPresentation presentation_from_options(const Options& opt) {
  if (!opt.input.empty()) return md::load_presentation(opt.input);
  if (opt.generator.empty()) {
    throw md::InputError("provide --input or --generator");
  }
  md::Graph core({md::VertexId("c")}, {});
  if (opt.generator == "ray") return {core, {md::VertexId("c")}};
  if (opt.generator == "double_ray") {
    return {core, {md::VertexId("c"), md::VertexId("c")}};
  }
  if (opt.generator == "k_spider") {
    if (opt.k < 3) throw md::InputError("k_spider requires --k >= 3");
    return {core, std::vector<md::VertexId>(opt.k, md::VertexId("c"))};
  }
  throw md::InputError("generator " + opt.generator +
                       " does not define a finite-core presentation");
}

md::InfiniteGraphOracle oracle_from_options(const Options& opt) {
  if (!opt.input.empty()) return md::realize(md::load_presentation(opt.input));
  if (opt.generator.empty()) {
    throw md::InputError("provide --input or --generator");
  }
  return md::make_generator(opt.generator, opt.k);
}

int require_radius(const Options& opt, int fallback = -1) {
  const int r = opt.radius >= 0 ? opt.radius : fallback;
  if (r < 0) throw md::InputError("--radius is required");
  return r;
}

int require_horizon(const Options& opt, int radius) {
  if (opt.horizon < 0) throw md::InputError("--horizon is required");
  if (opt.horizon > radius) throw md::InputError("--horizon must not exceed --radius");
  return opt.horizon;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Ball vertices in BFS order (depth, then label); the pool the explore
// command draws its subset family from.
std::vector<md::VertexId> bfs_order(const md::CertifiedBall& ball) {
  std::vector<std::pair<int, md::VertexId>> keyed;
  for (int i = 0; i < ball.graph.order(); ++i) {
    keyed.emplace_back(ball.depth[i], ball.graph.label(i));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<md::VertexId> out;
  for (auto& [d, v] : keyed) out.push_back(v);
  return out;
}

std::vector<std::vector<md::VertexId>> subsets_up_to(
    const std::vector<md::VertexId>& pool, int max_size) {
  std::vector<std::vector<md::VertexId>> out;
  std::vector<md::VertexId> current;
  const std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!current.empty()) out.push_back(current);
    if (static_cast<int>(current.size()) == max_size) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

void run_dim(const Options& opt) {
  const md::Graph g = md::load_graph(opt.input);
  const auto result = opt.mode == "strong"
                          ? md::strong_metric_dimension_exact(g, opt.limit)
                          : md::metric_dimension_exact(g, opt.limit);
  emit(md::dimension_to_json(result));
}

void run_treedim(const Options& opt) {
  const md::Graph g = md::load_graph(opt.input);
  const auto result = opt.mode == "strong" ? md::tree_strong_dimension(g)
                                           : md::tree_weak_dimension(g);
  emit(md::dimension_to_json(result));
}

void run_classify(const Options& opt) {
  if (!opt.input.empty()) {
    const auto p = md::load_presentation(opt.input);
    const auto report = md::classify(p);
    json j = md::classification_to_json(report);
    if (p.ray_attachments.empty() && p.core.order() <= opt.limit) {
      j["weak_dimension"] =
          md::dimension_to_json(md::metric_dimension_exact(p.core, opt.limit));
      j["strong_dimension"] = md::dimension_to_json(
          md::strong_metric_dimension_exact(p.core, opt.limit));
    }
    emit(j);
    return;
  }
  emit(md::classification_to_json(md::classify(oracle_from_options(opt))));
}

void run_construct(const Options& opt) {
  const auto p = presentation_from_options(opt);
  const auto mode = md::resolve_mode_from_string(opt.mode);
  const auto set = mode == md::ResolveMode::Weak
                       ? md::construct_weak_resolving_set(p)
                       : md::construct_strong_resolving_set(p);
  std::vector<int> radii = opt.verify_radii;
  if (radii.empty()) radii = {8, 12, 16};

  json j;
  j["mode"] = opt.mode;
  j["set"] = json::array();
  for (const auto& v : set) j["set"].push_back(v.str());
  j["verification"] = json::array();
  const auto oracle = md::realize(p);
  for (int r : radii) {
    const auto check =
        md::verify_resolving_on_ball(md::build_ball(oracle, r), set, mode);
    j["verification"].push_back({{"radius", r},
                                 {"resolved", check.resolved},
                                 {"unresolved", check.unresolved},
                                 {"undetermined", check.undetermined},
                                 {"ok", check.ok()}});
  }
  emit(j);
}

void run_partition(const Options& opt) {
  emit(md::partition_to_json(md::partition_components(presentation_from_options(opt))));
}

void run_ball(const Options& opt) {
  const auto ball = md::build_ball(oracle_from_options(opt), require_radius(opt));
  if (opt.format == "dot") {
    std::cout << md::ball_to_dot(ball);
  } else {
    emit(md::ball_to_json(ball));
  }
}

void run_orient(const Options& opt) {
  const int radius = require_radius(opt);
  const int horizon = require_horizon(opt, radius);
  const auto w_set = parse_set(opt.set_csv);
  const auto ball = md::build_ball(oracle_from_options(opt), radius);
  const auto og = md::geodesic_orientation(ball, w_set, horizon);
  if (opt.format == "dot") {
    std::cout << md::oriented_to_dot(og);
    return;
  }
  json j = md::oriented_to_json(og);
  j["W"] = json::array();
  for (const auto& w : w_set) j["W"].push_back(w.str());
  j["horizon"] = horizon;
  j["radius"] = radius;
  emit(j);
}

void run_badpairs(const Options& opt) {
  const int radius = require_radius(opt);
  const int horizon = require_horizon(opt, radius);
  const auto w_set = parse_set(opt.set_csv);
  const auto ball = md::build_ball(oracle_from_options(opt), radius);
  const auto og = md::geodesic_orientation(ball, w_set, horizon);
  emit(md::bad_pairs_report(og, ball, w_set, horizon));
}

void run_explore(const Options& opt) {
  const int radius = require_radius(opt);
  const int horizon = require_horizon(opt, radius);
  const auto oracle = oracle_from_options(opt);
  const auto ball = md::build_ball(oracle, radius);
  auto pool = bfs_order(ball);
  if (static_cast<int>(pool.size()) > opt.subset_pool) pool.resize(opt.subset_pool);
  const auto report =
      md::explore_bad_pairs(oracle, subsets_up_to(pool, opt.subset_max),
                            horizon, radius);
  if (opt.format == "table") {
    std::cout << "W | bad_pairs | strongly_resolves_certified\n";
    for (const auto& entry : report.entries) {
      std::string w_text;
      for (const auto& w : entry.w_set) {
        if (!w_text.empty()) w_text += ",";
        w_text += w.str();
      }
      std::cout << w_text << " | " << entry.bad_pairs.size() << " | "
                << (entry.strong_check.ok() ? "yes" : "no") << "\n";
    }
    std::cout << "(evidence, not proof)\n";
    return;
  }
  emit(md::exploration_to_json(report));
}

void run_witness_strong(const Options& opt) {
  const auto p = presentation_from_options(opt);
  emit(md::witness_to_json(md::strong_unresolved_witness(p, parse_set(opt.set_csv))));
}

void run_witness_weak(const Options& opt) {
  if (opt.input.empty() && opt.generator.empty()) {
    throw md::InputError("provide --generator (comb) for the weak witness search");
  }
  const auto oracle = md::make_generator(opt.generator, opt.k == 0 ? 1 : opt.k);
  emit(md::witness_to_json(md::weak_unresolved_witness(oracle, parse_set(opt.set_csv))));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak and strong metric dimension of finite graphs and "
               "finitely presented infinite graphs"};
  app.require_subcommand(1);

  Options opt;
  std::function<void(const Options&)> action;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "seed recorded for reproducibility");
    cmd->add_option("--format", opt.format, "output format");
    cmd->add_option("--limit", opt.limit, "vertex limit for exact search");
  };
  const auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "input file (JSON)");
    cmd->add_option("--generator", opt.generator,
                    "generator name: ray, double_ray, k_spider, ladder, "
                    "broken_ladder, binary_tree, comb");
    cmd->add_option("--k", opt.k, "spider arm count / comb pendant length");
  };

  const auto make_cmd = [&](const std::string& name, const std::string& desc,
                            void (*fn)(const Options&)) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    add_common(cmd);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };

  CLI::App* dim = make_cmd("dim", "weak metric dimension of a finite graph", run_dim);
  dim->add_option("--input", opt.input)->required();
  dim->add_option("--mode", opt.mode, "weak or strong");

  CLI::App* sdim = make_cmd("sdim", "strong metric dimension of a finite graph",
                            [](const Options& o) {
                              Options copy = o;
                              copy.mode = "strong";
                              run_dim(copy);
                            });
  sdim->add_option("--input", opt.input)->required();

  CLI::App* treedim = make_cmd("treedim", "tree dimension by formula", run_treedim);
  treedim->add_option("--input", opt.input)->required();
  treedim->add_option("--mode", opt.mode, "weak or strong");

  CLI::App* classify = make_cmd("classify", "finiteness classification", run_classify);
  add_source(classify);

  CLI::App* construct = make_cmd("construct", "build and verify a resolving set",
                                 run_construct);
  add_source(construct);
  construct->add_option("--mode", opt.mode, "weak or strong");
  construct->add_option("--radius", opt.verify_radii, "verification radii");

  CLI::App* partition = make_cmd("partition", "residual components after removing "
                                 "cycle and branch vertices", run_partition);
  add_source(partition);

  CLI::App* ball = make_cmd("ball", "certified BFS truncation", run_ball);
  add_source(ball);
  ball->add_option("--radius", opt.radius, "ball radius")->required();

  const auto add_orient_options = [&](CLI::App* cmd) {
    add_source(cmd);
    cmd->add_option("--radius", opt.radius)->required();
    cmd->add_option("--horizon", opt.horizon)->required();
    cmd->add_option("--set", opt.set_csv, "comma-separated vertex labels");
  };
  add_orient_options(make_cmd("orient", "geodesic orientation of a ball", run_orient));
  add_orient_options(make_cmd("badpairs", "mutually unreachable pairs in the "
                              "geodesic orientation", run_badpairs));

  CLI::App* explore = make_cmd("explore", "bad pairs vs strong resolution over a "
                               "family of candidate sets", run_explore);
  add_source(explore);
  explore->add_option("--radius", opt.radius)->required();
  explore->add_option("--horizon", opt.horizon)->required();
  explore->add_option("--subset-pool", opt.subset_pool,
                      "take subsets of the first N ball vertices (BFS order)");
  explore->add_option("--subset-max", opt.subset_max, "max subset size");

  CLI::App* wstrong = make_cmd("witness-strong", "pair no member of W strongly "
                               "resolves (needs two or more ends)", run_witness_strong);
  add_source(wstrong);
  wstrong->add_option("--set", opt.set_csv, "comma-separated W");

  CLI::App* wweak = make_cmd("witness-weak", "pair no member of W weakly resolves "
                             "(comb generators)", run_witness_weak);
  add_source(wweak);
  wweak->add_option("--set", opt.set_csv, "comma-separated W");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action(opt);
  } catch (const md::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const md::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const md::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
