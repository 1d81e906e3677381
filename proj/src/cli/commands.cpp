#include "dalli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dalli/alliance.hpp"
#include "dalli/dimacs.hpp"
#include "dalli/errors.hpp"
#include "dalli/fpt.hpp"
#include "dalli/generate.hpp"
#include "dalli/ilp.hpp"
#include "dalli/lowdeg.hpp"
#include "dalli/paths.hpp"
#include "dalli/reduction.hpp"
#include "dalli/structure.hpp"

namespace dalli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

Graph load_graph(const std::string& path) { return parse_dimacs(read_file(path)); }

// Inline "5,6,7" or a file of 1-indexed ids separated by commas/whitespace.
std::vector<Vertex> parse_id_list(const std::string& arg, const Graph& g) {
  std::error_code ec;
  const std::string text = fs::is_regular_file(arg, ec) ? read_file(arg) : arg;
  std::vector<Vertex> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    long long x = 0;
    auto [ptr, err] = std::from_chars(token.data(), token.data() + token.size(), x);
    if (err != std::errc{} || ptr != token.data() + token.size()) {
      throw InputError("bad vertex id '" + token + "'");
    }
    if (x < 1 || x > static_cast<long long>(g.vertex_count())) {
      throw InputError("vertex id " + token + " out of range");
    }
    out.push_back(static_cast<Vertex>(x - 1));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else token += c;
  }
  flush();
  return out;
}

json one_indexed(std::span<const Vertex> ids) {
  json a = json::array();
  for (Vertex v : ids) a.push_back(v + 1);
  return a;
}

std::string instance_id(const std::string& path) { return fs::path(path).stem().string(); }

struct Settings {
  std::size_t brute_guard = 24;
  std::size_t dtc_threshold = 5;
  std::size_t tc_threshold = 5;
};

struct Outcome {
  json params = json::object();
  std::optional<AllianceSolution> solution;
};

AllianceSolution checked(AllianceSolution s) {
  if (!s.valid && !s.members.empty()) {
    throw VerificationFailure("solver returned a set that is not a defensive alliance");
  }
  return s;
}

std::optional<AllianceSolution> solve_by_ilp(const Graph& g) {
  const IlpSolution sol = solve_ilp(encode_min_alliance_ilp(g));
  if (sol.status != IlpStatus::Optimal) return std::nullopt;
  std::vector<Vertex> members;
  for (std::size_t v = 0; v < sol.assignment.size(); ++v)
    if (sol.assignment[v] != 0) members.push_back(static_cast<Vertex>(v));
  AllianceSolution s = verify_alliance(g, members);
  if (!s.valid) throw VerificationFailure("ILP optimum is not a defensive alliance");
  return s;
}

Outcome solve_with(const Graph& g, const std::string& algo, const Settings& settings) {
  Outcome o;
  o.params["max_degree"] = g.max_degree();
  if (algo == "brute") {
    BruteForceOptions opt;
    opt.max_vertices = settings.brute_guard;
    o.solution = brute_force_min_alliance(g, opt);
  } else if (algo == "lowdeg") {
    o.solution = solve_min_alliance_lowdeg(g);
  } else if (algo == "ilp") {
    o.solution = solve_by_ilp(g);
  } else if (algo == "dtc") {
    auto D = distance_to_clique_set(g, settings.dtc_threshold);
    if (!D) throw InputError("distance to clique exceeds " + std::to_string(settings.dtc_threshold));
    o.params["distance_to_clique"] = D->size();
    o.solution = solve_dtc(g, *D);
  } else if (algo == "twincover") {
    auto T = twin_cover_set(g, settings.tc_threshold);
    if (!T) throw InputError("twin cover exceeds " + std::to_string(settings.tc_threshold));
    o.params["twin_cover"] = T->size();
    o.params["z"] = partition_clique_sets(g, *T).max_clique_size;
    o.solution = solve_twincover(g, *T);
  } else if (algo == "auto") {
    std::string chosen;
    if (g.max_degree() <= kLowDegreeLimit && !g.has_forbidden()) {
      chosen = "lowdeg";
    } else if (!g.has_forbidden() && distance_to_clique_set(g, settings.dtc_threshold)) {
      chosen = "dtc";
    } else if (!g.has_forbidden() && twin_cover_set(g, settings.tc_threshold)) {
      chosen = "twincover";
    } else if (g.vertex_count() <= settings.brute_guard) {
      chosen = "brute";
    } else {
      chosen = "ilp";
    }
    o = solve_with(g, chosen, settings);
    o.params["dispatch"] = chosen;
  } else {
    throw InputError("unknown algorithm '" + algo + "'");
  }
  if (o.solution) o.solution = checked(*o.solution);
  return o;
}

struct Record {
  json body;
  bool mismatch = false;
};

Record solve_record(const Graph& g, const std::string& id, const std::string& algo,
                    const Settings& settings, bool with_oracle) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = solve_with(g, algo, settings);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Record r;
  json& j = r.body;
  j["algorithm"] = algo;
  j["instance"] = id;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["params"] = o.params;
  if (o.solution) {
    j["size"] = o.solution->size;
    j["witness"] = one_indexed(o.solution->members);
    j["valid"] = o.solution->valid;
  } else {
    j["size"] = nullptr;
    j["witness"] = json::array();
    j["valid"] = false;
  }
  j["wall_time_ms"] = ms;
  if (with_oracle) {
    std::optional<AllianceSolution> reference;
    if (g.vertex_count() <= settings.brute_guard) {
      BruteForceOptions opt;
      opt.max_vertices = settings.brute_guard;
      reference = brute_force_min_alliance(g, opt);
      j["oracle"] = "brute";
    } else {
      reference = solve_by_ilp(g);
      j["oracle"] = "ilp";
    }
    const std::optional<std::size_t> got = o.solution ? std::optional(o.solution->size) : std::nullopt;
    const std::optional<std::size_t> want = reference ? std::optional(reference->size) : std::nullopt;
    j["oracle_size"] = want ? json(*want) : json(nullptr);
    j["oracle_witness"] = reference ? one_indexed(reference->members) : json::array();
    j["match"] = got == want;
    r.mismatch = got != want;
  }
  return r;
}

void write_counterexample(const fs::path& dir, const Graph& g, const json& record) {
  fs::create_directories(dir);
  json c;
  c["instance"] = record["instance"];
  c["algorithm"] = record["algorithm"];
  c["dimacs"] = write_dimacs(g);
  c["size"] = record["size"];
  c["witness"] = record["witness"];
  c["oracle_size"] = record["oracle_size"];
  c["oracle_witness"] = record["oracle_witness"];
  const std::string stem = record["instance"].get<std::string>() + "-" + record["algorithm"].get<std::string>();
  write_file(dir / (stem + ".json"), c.dump(2) + "\n");
  write_file(dir / (stem + ".dimacs"), write_dimacs(g));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json reduction_json(const ReductionInstance& inst) {
  json j;
  j["source_n"] = inst.source.vertex_count();
  j["k"] = inst.k;
  j["k_prime"] = inst.k_prime;
  j["target_n"] = inst.target.vertex_count();
  j["target_m"] = inst.target.edge_count();
  j["forbidden_count"] = inst.forbidden_count;
  j["max_degree"] = inst.target.max_degree();
  json map = json::array();
  for (const CopyIds& c : inst.vertex_map) {
    json entry;
    entry["v"] = one_indexed(c.v);
    entry["u"] = one_indexed(c.u);
    entry["w"] = one_indexed(c.w);
    entry["s"] = c.s + 1;
    map.push_back(std::move(entry));
  }
  j["vertex_map"] = std::move(map);
  j["source_dimacs"] = write_dimacs(inst.source);
  return j;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("DALLI_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t seed = 0;
  const std::string_view s(env);
  auto [ptr, err] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (err != std::errc{} || ptr != s.data() + s.size()) throw InputError("DALLI_SEED is not an unsigned integer");
  return seed;
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for minimum defensive alliance"};
  app.name("dalli");
  app.require_subcommand(1);

  Settings settings;
  std::string graph_path;
  std::string set_arg;
  std::string algo = "auto";
  bool with_oracle = false;
  std::size_t kmax = 8;
  std::size_t k = 0;
  std::string emit_path;
  std::string instance_path;
  std::string gen_spec;
  std::optional<std::uint64_t> seed;
  std::string gen_out;
  std::string bench_dir;
  std::string algo_list = "auto";
  std::string counterexample_dir = "counterexamples";

  auto add_thresholds = [&](CLI::App* cmd) {
    cmd->add_option("--brute-guard", settings.brute_guard, "largest n for brute force")->capture_default_str();
    cmd->add_option("--dtc-threshold", settings.dtc_threshold, "largest distance to clique for dtc")->capture_default_str();
    cmd->add_option("--tc-threshold", settings.tc_threshold, "largest twin cover for twincover")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "check whether a vertex set is a defensive alliance");
  verify->add_option("graph", graph_path, "DIMACS graph file")->required();
  verify->add_option("set", set_arg, "1-indexed ids, comma separated, or a file")->required();

  auto* solve = app.add_subcommand("solve", "compute a minimum defensive alliance");
  solve->add_option("graph", graph_path, "DIMACS graph file")->required();
  solve->add_option("--algo", algo, "brute, lowdeg, ilp, dtc, twincover or auto")
      ->check(CLI::IsMember({"brute", "lowdeg", "ilp", "dtc", "twincover", "auto"}))
      ->capture_default_str();
  solve->add_flag("--oracle", with_oracle, "cross-check against an exact oracle");
  add_thresholds(solve);

  auto* params = app.add_subcommand("params", "structural parameters of a graph");
  params->add_option("graph", graph_path, "DIMACS graph file")->required();
  params->add_option("--kmax", kmax, "search limit for modulators")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "build the alliance instance of a cubic dominating-set instance");
  reduce->add_option("graph", graph_path, "cubic DIMACS graph file")->required();
  reduce->add_option("--k", k, "dominating set budget")->required();
  reduce->add_option("--emit", emit_path, "write the target graph as DIMACS");

  auto* extract = app.add_subcommand("extract", "recover a dominating set from a target alliance");
  extract->add_option("instance", instance_path, "JSON written by reduce")->required();
  extract->add_option("alliance", set_arg, "1-indexed target ids, comma separated, or a file")->required();

  auto* gen = app.add_subcommand("gen", "generate a random graph");
  gen->add_option("spec", gen_spec, "e.g. cubic:n=8 or degcap:n=12,dmax=5")->required();
  gen->add_option("--seed", seed, "defaults to $DALLI_SEED, else 0");
  gen->add_option("--out", gen_out, "write DIMACS here and print a summary");

  auto* bench = app.add_subcommand("bench", "solve every .dimacs file in a directory");
  bench->add_option("dir", bench_dir, "corpus directory")->required();
  bench->add_option("--algo", algo_list, "comma separated algorithms")->capture_default_str();
  bench->add_flag("--oracle", with_oracle, "cross-check against an exact oracle");
  bench->add_option("--counterexample-dir", counterexample_dir, "where mismatches are written")->capture_default_str();
  add_thresholds(bench);

  std::vector<std::string> argv_store{"dalli"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*verify) {
      const Graph g = load_graph(graph_path);
      const AllianceSolution s = verify_alliance(g, parse_id_list(set_arg, g));
      json j;
      j["instance"] = instance_id(graph_path);
      j["n"] = g.vertex_count();
      j["m"] = g.edge_count();
      j["size"] = s.size;
      j["members"] = one_indexed(s.members);
      j["valid"] = s.valid;
      json violations = json::array();
      for (const auto& v : s.violations) {
        violations.push_back({{"vertex", v.vertex + 1}, {"inside", v.inside}, {"required", v.required}});
      }
      j["violations"] = std::move(violations);
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    if (*solve) {
      const Graph g = load_graph(graph_path);
      const Record r = solve_record(g, instance_id(graph_path), algo, settings, with_oracle);
      out << r.body.dump(2) << '\n';
      return r.mismatch ? kExitVerification : kExitOk;
    }
    if (*params) {
      const Graph g = load_graph(graph_path);
      json j;
      j["instance"] = instance_id(graph_path);
      j["n"] = g.vertex_count();
      j["m"] = g.edge_count();
      j["max_degree"] = g.max_degree();
      j["connected"] = g.is_connected();
      j["forbidden"] = one_indexed(g.forbidden());
      const auto gi = girth(g);
      j["girth"] = gi ? json(*gi) : json(nullptr);
      const auto D = distance_to_clique_set(g, kmax);
      j["distance_to_clique"] = D ? json{{"size", D->size()}, {"set", one_indexed(*D)}} : json(nullptr);
      const auto T = twin_cover_set(g, kmax);
      if (T) {
        const TwinPartition p = partition_clique_sets(g, *T);
        j["twin_cover"] = {{"size", T->size()}, {"set", one_indexed(*T)},
                           {"clique_sets", p.classes.size()}, {"z", p.max_clique_size}};
      } else {
        j["twin_cover"] = nullptr;
      }
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    if (*reduce) {
      const ReductionInstance inst = build_reduction(load_graph(graph_path), k);
      if (!emit_path.empty()) write_file(emit_path, write_dimacs(inst.target));
      out << reduction_json(inst).dump(2) << '\n';
      return kExitOk;
    }
    if (*extract) {
      json spec;
      try {
        spec = json::parse(read_file(instance_path));
        spec.at("source_dimacs").get<std::string>();
        spec.at("k").get<std::size_t>();
      } catch (const json::exception& e) {
        throw InputError(std::string("bad instance file: ") + e.what());
      }
      const ReductionInstance inst =
          build_reduction(parse_dimacs(spec["source_dimacs"].get<std::string>()), spec["k"].get<std::size_t>());
      const VertexSet ds = extract_dominating_set(inst, parse_id_list(set_arg, inst.target));
      json j;
      j["k"] = inst.k;
      j["k_prime"] = inst.k_prime;
      j["dominating_set"] = one_indexed(ds);
      j["size"] = ds.size();
      j["dominates"] = is_dominating_set(inst.source, ds);
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    if (*gen) {
      const GeneratorSpec spec = parse_generator_spec(gen_spec);
      const std::uint64_t s = seed ? *seed : default_seed();
      const Graph g = generate(spec, s);
      if (gen_out.empty()) {
        out << write_dimacs(g);
      } else {
        write_file(gen_out, write_dimacs(g));
        json j;
        j["spec"] = to_string(spec);
        j["seed"] = s;
        j["path"] = gen_out;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        out << j.dump(2) << '\n';
      }
      return kExitOk;
    }
    if (*bench) {
      std::vector<fs::path> files;
      std::error_code ec;
      if (!fs::is_directory(bench_dir, ec)) throw InputError("not a directory: " + bench_dir);
      for (const auto& entry : fs::directory_iterator(bench_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".dimacs") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      const auto algos = split_list(algo_list);
      if (algos.empty()) throw InputError("no algorithms given");

      json records = json::array();
      int status = kExitOk;
      for (const auto& file : files) {
        const Graph g = load_graph(file.string());
        const std::string id = file.stem().string();
        for (const auto& a : algos) {
          try {
            const Record r = solve_record(g, id, a, settings, with_oracle);
            if (r.mismatch) {
              write_counterexample(counterexample_dir, g, r.body);
              status = kExitVerification;
            }
            records.push_back(r.body);
          } catch (const VerificationFailure& e) {
            records.push_back({{"algorithm", a}, {"instance", id}, {"error", e.what()}});
            status = kExitVerification;
          } catch (const std::exception& e) {
            records.push_back({{"algorithm", a}, {"instance", id}, {"error", e.what()}});
          }
        }
      }
      out << records.dump(2) << '\n';
      return status;
    }
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace dalli
