#pragma once

#include <CLI11.hpp>
#include <atomic>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "fangood/bounds.hpp"
#include "fangood/json_io.hpp"
#include "fangood/oracle.hpp"
#include "fangood/solvers.hpp"
#include "fangood/sparse.hpp"

namespace fangood::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kDefect = 3 };

struct RunConfig {
  std::string subcommand;
  std::string graph, coloring, output, family, witness, solver = "auto", mode = "strict", c = "96";
  std::size_t k = 1, t = 1, n = 0, q = 3, s = 2, nmax = 8, N = 0, trials = 100;
  std::size_t ceiling = kOracleDefaultCeiling;
  std::size_t threads = 0;  // 0: FANGOOD_THREADS or hardware
  std::uint64_t seed = 1;
  double p_red = 0.5;
};

// Theorem order for the instance: 2n-1 for one fan, 2n+t-2 otherwise.
inline std::size_t theorem_order(std::size_t n, std::size_t t) {
  return t == 1 ? 2 * n - 1 : 2 * n + t - 2;
}

inline SolveReport dispatch(const std::string& solver, const TwoColoring& c, const Graph& g,
                            std::size_t k, std::size_t t, SolveMode mode) {
  const bool star = detail::is_star(g);
  if (solver == "weak") return solve_weak(c, g, k, mode);
  if (solver == "fan") return solve_fan(c, g, k, mode);
  if (solver == "star") {
    if (!star) throw HypothesisError("the star solver needs a star pattern");
    return solve_star_vs_tfan(c, g.order(), k, t, mode);
  }
  if (solver == "tfan") return solve_tfan(c, g, k, t, mode);
  if (t == 1) return solve_fan(c, g, k, mode);
  if (star) return solve_star_vs_tfan(c, g.order(), k, t, mode);
  return solve_tfan(c, g, k, t, mode);
}

inline int exit_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::Certified: return kOk;
    case SolveStatus::Defect: return kDefect;
    default: return kNegative;
  }
}

// "tree:N", "unicyclic:N", "sparse:N:EXTRA", "star:N", "path:N", "cycle:N".
// Random families redraw G per trial.
struct FamilySpec {
  std::string name;
  std::size_t n = 0;
  long long extra = -1;
  bool random = false;

  static FamilySpec parse(const std::string& text) {
    FamilySpec f;
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
      if (i == text.size() || text[i] == ':') {
        parts.push_back(text.substr(start, i - start));
        start = i + 1;
      }
    auto num = [&](const std::string& s) {
      std::size_t pos = 0;
      const long long v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("bad number " + s);
      return v;
    };
    f.name = parts[0];
    const bool sparse = f.name == "sparse";
    if (parts.size() != (sparse ? 3u : 2u)) throw std::invalid_argument("bad family " + text);
    const long long n = num(parts[1]);
    if (n < 1) throw std::invalid_argument("family order must be positive");
    f.n = static_cast<std::size_t>(n);
    if (f.name == "tree") {
      f.random = true;
    } else if (f.name == "unicyclic") {
      f.random = true;
      f.extra = 0;
    } else if (sparse) {
      f.random = true;
      f.extra = num(parts[2]);
    } else if (f.name != "star" && f.name != "path" && f.name != "cycle") {
      throw std::invalid_argument("unknown family " + f.name);
    }
    return f;
  }

  Graph draw(std::uint64_t seed) const {
    if (random) return random_sparse_connected(n, extra, seed);
    if (name == "star") return star_graph(n);
    if (name == "path") return path_graph(n);
    return cycle_graph(n);
  }
};

inline bool looks_like_family(const std::string& s) { return s.find(':') != std::string::npos; }

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t pos = 0;
    if (slash == std::string::npos) {
      const long long p = std::stoll(s, &pos);
      if (pos == s.size()) return Rational(p);
    } else {
      const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
      std::size_t pa = 0, pb = 0;
      const long long p = std::stoll(a, &pa), q = std::stoll(b, &pb);
      if (pa == a.size() && pb == b.size() && q != 0) return Rational(p, q);
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("not a rational: " + s);
}

struct Fuzzed {
  SolveStatus status = SolveStatus::Exhausted;
  bool reverified = false;
  std::string detail;
};

inline int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = parse_graph6(cfg.graph);
  Json j;
  j["graph6"] = write_graph6(g);
  j["profile"] = to_json(SparseProfile::of(g));
  j["connected"] = is_connected(g);
  const PeelResult peel = peel_degree_one(g);
  j["core_order"] = peel.core_vertices.size();
  j["longest_suspended_path"] = longest_suspended_path(g);
  j["max_end_edge_matching"] = max_end_edge_matching(g).size();
  j["degree_one_vertices"] = count_degree_one(g);
  j["q"] = cfg.q;
  j["s"] = cfg.s;
  try {
    j["trichotomy"] = to_json(trichotomy(g, {cfg.q, cfg.s}));
  } catch (const HypothesisError& e) {
    err << "trichotomy not applicable: " << e.what() << "\n";
    j["trichotomy"] = nullptr;
    out << j.dump() << "\n";
    return kNegative;
  }
  out << j.dump() << "\n";
  return kOk;
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = parse_graph6(cfg.graph);
  const TwoColoring c = load_coloring(cfg.coloring);
  const SolveMode mode = cfg.mode == "strict" ? SolveMode::Strict : SolveMode::Opportunistic;
  const SolveReport rep = dispatch(cfg.solver, c, g, cfg.k, cfg.t, mode);
  Json j;
  j["status"] = to_string(rep.status);
  j["detail"] = rep.detail;
  j["trace"] = rep.trace;
  j["certificate"] =
      rep.certificate ? certificate_json(*rep.certificate, g, c, cfg.k, cfg.t) : Json(nullptr);
  if (!rep.detail.empty()) err << to_string(rep.status) << ": " << rep.detail << "\n";
  const std::string text = j.dump() + "\n";
  if (!cfg.output.empty()) write_text_file(cfg.output, text);
  else out << text;
  return exit_for(rep.status);
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = parse_graph6(cfg.graph);
  const FanSpec spec(cfg.k, cfg.t);
  const std::size_t threads = cfg.threads ? cfg.threads : default_threads();
  Json j;
  std::optional<TwoColoring> witness;
  int code = kOk;
  if (cfg.N) {
    ArrowResult r = arrows(cfg.N, g, spec, cfg.ceiling, threads);
    j["N"] = cfg.N;
    j["arrows"] = r.arrows;
    j["stats"] = to_json(r.stats);
    witness = r.stats.witness;
    if (!r.arrows) code = kNegative;
  } else {
    RamseyResult r = ramsey_exact(g, spec, cfg.nmax, cfg.ceiling, threads);
    j["ramsey"] = r.value ? Json(*r.value) : Json(nullptr);
    j["stats"] = to_json(r.stats);
    witness = r.stats.witness;
    if (!r.value) {
      err << "no forcing order up to " << cfg.nmax << "\n";
      code = kNegative;
    }
  }
  j["witness_path"] = nullptr;
  if (witness && !cfg.witness.empty()) {
    save_coloring(cfg.witness, *witness);
    j["witness_path"] = cfg.witness;
  }
  out << j.dump() << "\n";
  return code;
}

inline int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const TwoColoring c = build_extremal_coloring(cfg.n, cfg.k, cfg.t);
  save_coloring(cfg.output, c);
  Json j{{"order", c.order()}, {"path", cfg.output}, {"n", cfg.n}, {"k", cfg.k}, {"t", cfg.t}};
  out << j.dump() << "\n";
  return kOk;
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Graph g = parse_graph6(cfg.graph);
  const BoundsReport r = applicability(g, static_cast<long long>(cfg.k),
                                       static_cast<long long>(cfg.t), parse_rational(cfg.c));
  out << to_json(r).dump() << "\n";
  return kOk;
}

inline int cmd_fuzz(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<FamilySpec> family;
  std::optional<Graph> fixed;
  if (looks_like_family(cfg.family)) family = FamilySpec::parse(cfg.family);
  else fixed = parse_graph6(cfg.family);
  const SolveMode mode = cfg.mode == "strict" ? SolveMode::Strict : SolveMode::Opportunistic;
  std::vector<Fuzzed> results(cfg.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cfg.trials;) {
      const std::uint64_t s = derive_seed(cfg.seed, i);
      const Graph g = fixed ? *fixed : family->draw(splitmix64(s));
      Rng rng(s);
      const TwoColoring c = random_coloring(theorem_order(g.order(), cfg.t), rng, cfg.p_red);
      Fuzzed& f = results[i];
      try {
        const SolveReport rep = dispatch(cfg.solver, c, g, cfg.k, cfg.t, mode);
        f.status = rep.status;
        f.detail = rep.detail;
        // Round-trip through JSON so the check sees only what a consumer would.
        if (rep.certificate) {
          const Certificate back = certificate_from_json(to_json(*rep.certificate));
          f.reverified = static_cast<bool>(verify_certificate(c, g, cfg.k, cfg.t, back));
        }
      } catch (const Error& e) {
        f.status = SolveStatus::Refused;
        f.detail = e.what();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, cfg.threads ? cfg.threads : default_threads());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::min(threads, cfg.trials); ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t certified = 0, defects = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Fuzzed& f = results[i];
    if (f.status == SolveStatus::Certified && f.reverified) {
      ++certified;
      continue;
    }
    if (f.status == SolveStatus::Defect ||
        (f.status == SolveStatus::Certified && !f.reverified))
      ++defects;
    err << "trial " << i << ": " << to_string(f.status) << " " << f.detail << "\n";
  }
  const std::size_t failures = cfg.trials - certified;
  Json j{{"trials", cfg.trials}, {"certified", certified}, {"failures", failures}};
  out << j.dump() << "\n";
  if (defects) return kDefect;
  return failures ? kNegative : kOk;
}

// Parses argv and runs one subcommand. JSON goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey goodness of sparse graphs versus fans"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads (default FANGOOD_THREADS)");
  };
  auto kt = [&](CLI::App* sub, bool required) {
    auto* k = sub->add_option("-k", cfg.k, "triangles per fan")->check(CLI::PositiveNumber);
    auto* t = sub->add_option("-t", cfg.t, "number of fans")->check(CLI::PositiveNumber);
    if (required) {
      k->required();
      t->required();
    }
  };
  const auto modes = CLI::IsMember({"strict", "opportunistic"});
  const auto solvers = CLI::IsMember({"auto", "weak", "fan", "star", "tfan"});

  auto* analyze = app.add_subcommand("analyze", "sparse structure of a graph6 graph");
  analyze->add_option("graph", cfg.graph, "graph6")->required();
  analyze->add_option("--q", cfg.q, "suspended path length");
  analyze->add_option("--s", cfg.s, "end-edge matching size");

  auto* solve = app.add_subcommand("solve", "find a red G or blue tF_k in a coloring");
  solve->add_option("graph", cfg.graph, "graph6")->required();
  solve->add_option("coloring", cfg.coloring, "RBC1 file")->required()->check(CLI::ExistingFile);
  kt(solve, true);
  solve->add_option("--mode", cfg.mode)->check(modes);
  solve->add_option("--solver", cfg.solver)->check(solvers);
  solve->add_option("-o,--output", cfg.output, "write the JSON report here");

  auto* oracle = app.add_subcommand("oracle", "exhaustive Ramsey search on small orders");
  oracle->add_option("graph", cfg.graph, "graph6")->required();
  kt(oracle, true);
  oracle->add_option("--nmax", cfg.nmax, "largest order searched");
  oracle->add_option("-N", cfg.N, "decide arrowing at this order only");
  oracle->add_option("--ceiling", cfg.ceiling);
  oracle->add_option("--witness", cfg.witness, "RBC1 path for a good coloring");
  threads(oracle);

  auto* construct = app.add_subcommand("construct", "extremal coloring of K_{2n+t-3}");
  construct->add_option("-n", cfg.n)->required()->check(CLI::Range(2, 1 << 20));
  kt(construct, true);
  construct->add_option("-o,--output", cfg.output, "RBC1 path")->required();

  auto* bounds = app.add_subcommand("bounds", "bounds and theorem applicability");
  bounds->add_option("graph", cfg.graph, "graph6")->required();
  kt(bounds, true);
  bounds->add_option("-c", cfg.c, "constant for the parameterized thresholds");

  auto* fuzz = app.add_subcommand("fuzz", "random colorings through a solver and the verifier");
  fuzz->add_option("graph", cfg.family, "graph6 or tree:N, unicyclic:N, sparse:N:E, star:N")
      ->required();
  kt(fuzz, true);
  fuzz->add_option("--trials", cfg.trials)->required();
  fuzz->add_option("--seed", cfg.seed)->required();
  fuzz->add_option("--mode", cfg.mode)->check(modes);
  fuzz->add_option("--solver", cfg.solver)->check(solvers);
  fuzz->add_option("--p-red", cfg.p_red)->check(CLI::Range(0.0, 1.0));
  threads(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, out, err);
    if (*solve) return cmd_solve(cfg, out, err);
    if (*oracle) return cmd_oracle(cfg, out, err);
    if (*construct) return cmd_construct(cfg, out, err);
    if (*bounds) return cmd_bounds(cfg, out, err);
    return cmd_fuzz(cfg, out, err);
  } catch (const EngineDefect& e) {
    err << "defect: " << e.what() << "\n";
    return kDefect;
  } catch (const HypothesisError& e) {
    err << "refused: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace fangood::cli
