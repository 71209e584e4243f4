#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "satwalk/cnf.hpp"
#include "satwalk/config.hpp"
#include "satwalk/hybrid.hpp"
#include "satwalk/markov.hpp"
#include "satwalk/rates.hpp"
#include "satwalk/rng.hpp"
#include "satwalk/version.hpp"
#include "satwalk/walk.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace satwalk;

// Everything a command needs. A JSON config file fills it first, flags
// overwrite individual fields afterwards, so flags win on conflict.
struct RunConfig {
  std::string input, output;
  std::string scheme = "classical";
  std::vector<std::string> schemes;
  std::string experiment;
  bool planted = false;
  bool random_instance = false;
  bool unique = false;
  bool calibrated = false;
  bool fixed_tape = false;
  int n = 0;
  int clauses = 0;
  int grid = 256;
  int formulas = 10;
  int h_max = 6;
  int walk_m = 0;
  int enum_limit = 0;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint64_t instance_seed = 0;
  bool instance_seed_given = false;
  std::uint64_t samples = 10000;
  std::uint64_t walks = 10000;
  double epsilon = 0.1;
  double walk_mu = 3.0;
  double kappa = NAN, nu = NAN, mu = NAN, z = NAN;
  double kappa_c = NAN, kappa_q = NAN, chi = NAN;
};

std::string lower(std::string s) {
  for (char &c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const RunConfig &cfg, const std::string &text) {
  if (cfg.output.empty())
    std::cout << text;
  else
    write_file(cfg.output, text);
}

// shortest digit string that round-trips a double, stable across reruns
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int round_half_up_int(double x) { return int(std::floor(x + 0.5)); }

std::string csv_header(const RunConfig &cfg) {
  return std::string("# satwalk ") + version +
         " seed=" + std::to_string(cfg.seed) + "\n";
}

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn &&fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_lock;
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> hold(error_lock);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t degree = std::min<std::size_t>(jobs, count);
  for (std::size_t j = 0; j < degree; ++j) pool.emplace_back(worker);
  for (std::thread &t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

void apply_config(RunConfig &cfg, const std::string &path) {
  const json doc = json::parse(read_file(path));
  if (!doc.is_object())
    throw std::runtime_error("config file must hold a JSON object");
  for (const auto &[key, value] : doc.items()) {
    if (key == "input") cfg.input = value.get<std::string>();
    else if (key == "output") cfg.output = value.get<std::string>();
    else if (key == "scheme") cfg.scheme = value.get<std::string>();
    else if (key == "schemes")
      cfg.schemes = value.get<std::vector<std::string>>();
    else if (key == "experiment") cfg.experiment = value.get<std::string>();
    else if (key == "planted") cfg.planted = value.get<bool>();
    else if (key == "random") cfg.random_instance = value.get<bool>();
    else if (key == "unique") cfg.unique = value.get<bool>();
    else if (key == "calibrated") cfg.calibrated = value.get<bool>();
    else if (key == "fixed-tape") cfg.fixed_tape = value.get<bool>();
    else if (key == "n") cfg.n = value.get<int>();
    else if (key == "clauses") cfg.clauses = value.get<int>();
    else if (key == "grid") cfg.grid = value.get<int>();
    else if (key == "formulas") cfg.formulas = value.get<int>();
    else if (key == "h-max") cfg.h_max = value.get<int>();
    else if (key == "m") cfg.walk_m = value.get<int>();
    else if (key == "enum-limit") cfg.enum_limit = value.get<int>();
    else if (key == "jobs") cfg.jobs = value.get<unsigned>();
    else if (key == "seed") {
      cfg.seed = value.get<std::uint64_t>();
      cfg.seed_given = true;
    } else if (key == "instance-seed") {
      cfg.instance_seed = value.get<std::uint64_t>();
      cfg.instance_seed_given = true;
    } else if (key == "samples") cfg.samples = value.get<std::uint64_t>();
    else if (key == "walks") cfg.walks = value.get<std::uint64_t>();
    else if (key == "epsilon") cfg.epsilon = value.get<double>();
    else if (key == "walk-mu") cfg.walk_mu = value.get<double>();
    else if (key == "kappa") cfg.kappa = value.get<double>();
    else if (key == "nu") cfg.nu = value.get<double>();
    else if (key == "mu") cfg.mu = value.get<double>();
    else if (key == "z") cfg.z = value.get<double>();
    else if (key == "kappa-c") cfg.kappa_c = value.get<double>();
    else if (key == "kappa-q") cfg.kappa_q = value.get<double>();
    else if (key == "chi") cfg.chi = value.get<double>();
    else throw std::runtime_error("unknown config key: " + key);
  }
}

Knobs knobs_from(const RunConfig &cfg) {
  Knobs k;
  k.kappa = cfg.kappa;
  k.nu = cfg.nu;
  k.mu = cfg.mu;
  k.z = cfg.z;
  k.kappa_c = cfg.kappa_c;
  k.kappa_q = cfg.kappa_q;
  k.chi = cfg.chi;
  return k;
}

int default_clauses(const RunConfig &cfg, int n) {
  return cfg.clauses > 0 ? cfg.clauses
                         : round_half_up_int(default_clause_ratio * n);
}

std::uint64_t instance_seed(const RunConfig &cfg) {
  return cfg.instance_seed_given ? cfg.instance_seed : cfg.seed;
}

struct Instance {
  Formula f;
  std::optional<Assignment> planted;
  json meta;
};

Instance load_instance(const RunConfig &cfg, const char *cmd) {
  if (cfg.planted && cfg.random_instance)
    throw std::invalid_argument("--planted and --random are exclusive");
  Instance inst;
  if (!cfg.input.empty()) {
    inst.f = parse_dimacs(read_file(cfg.input));
    inst.meta = json{{"source", cfg.input},
                     {"n", inst.f.n},
                     {"clauses", inst.f.clauses.size()}};
    return inst;
  }
  if (!cfg.planted && !cfg.random_instance)
    throw std::invalid_argument(std::string(cmd) +
                                " needs --input or --planted/--random");
  if (cfg.n < 3) throw std::invalid_argument("generators need -n >= 3");
  const int L = default_clauses(cfg, cfg.n);
  const std::uint64_t iseed = instance_seed(cfg);
  if (cfg.planted) {
    auto [f, x] = generate_planted(cfg.n, L, iseed, cfg.unique);
    inst.f = std::move(f);
    inst.planted = std::move(x);
  } else {
    inst.f = generate_random(cfg.n, L, iseed);
  }
  inst.meta = json{{"generator", cfg.planted ? "planted" : "random"},
                   {"n", cfg.n},
                   {"clauses", L},
                   {"unique", cfg.unique},
                   {"instance_seed", iseed}};
  return inst;
}

json params_json(const SchemeParams &p) {
  json out{{"scheme", scheme_name(p.scheme)},
           {"epsilon", p.epsilon},
           {"n", p.n},
           {"m", p.m}};
  const auto put = [&](const char *name, double v) {
    if (std::isfinite(v)) out[name] = v;
  };
  put("kappa", p.kappa);
  put("mu", p.mu);
  put("nu", p.nu);
  put("z", p.z);
  put("kappa_c", p.kappa_c);
  put("kappa_q", p.kappa_q);
  put("mu_c", p.mu_c);
  put("mu_q", p.mu_q);
  put("nu_c", p.nu_c);
  put("nu_q", p.nu_q);
  out["bits_c"] = p.bits_c;
  out["bits_q"] = p.bits_q;
  out["m_c"] = p.m_c;
  out["m_q"] = p.m_q;
  out["N1"] = p.N1;
  out["N2"] = p.N2;
  out["N1_c"] = p.N1_c;
  out["N1_q"] = p.N1_q;
  out["N2_c"] = p.N2_c;
  out["N2_q"] = p.N2_q;
  out["N_c"] = p.N_c;
  out["N_q"] = p.N_q;
  out["grover_schedule"] = p.grover_schedule;
  out["optimal_schedule"] = p.optimal_schedule;
  out["repeats"] = p.repeats;
  return out;
}

json ledger_json(const CostLedger &l) {
  json counts = json::object();
  for (const auto &[name, value] : l.outer_loop_counts) counts[name] = value;
  return json{{"classical_queries", l.classical_queries},
              {"grover_iterations_total", l.grover_iterations_total},
              {"coherent_stretch_max", l.coherent_stretch_max},
              {"outer_loop_counts", counts}};
}

int cmd_solve(const RunConfig &cfg) {
  if (!cfg.seed_given) throw std::invalid_argument("solve needs --seed");
  const Instance inst = load_instance(cfg, "solve");
  const Scheme scheme = scheme_from_name(lower(cfg.scheme));
  SchemeParams params =
      derive_params(scheme, inst.f, cfg.epsilon, knobs_from(cfg));
  if (cfg.calibrated) params.optimal_schedule = false;
  const SchemeRun run = run_scheme(inst.f, params, cfg.seed);

  json report{{"tool", "satwalk"},
              {"version", version},
              {"command", "solve"},
              {"seed", cfg.seed},
              {"instance", inst.meta},
              {"status", run.result ? "sat" : "unknown"}};
  if (run.result) report["model"] = to_bitstring(*run.result);
  report["params"] = params_json(run.params);
  report["ledger"] = ledger_json(run.ledger);
  emit(cfg, report.dump(2) + "\n");
  return run.result ? 10 : 20;
}

int cmd_count(const RunConfig &cfg) {
  if (cfg.input.empty()) throw std::invalid_argument("count needs --input");
  const Formula f = parse_dimacs(read_file(cfg.input));
  emit(cfg, std::to_string(count_solutions(f)) + "\n");
  return 0;
}

int cmd_gen(const RunConfig &cfg) {
  if (!cfg.seed_given) throw std::invalid_argument("gen needs --seed");
  if (cfg.output.empty()) throw std::invalid_argument("gen needs --output");
  if (cfg.n < 3) throw std::invalid_argument("gen needs -n >= 3");
  if (cfg.random_instance && cfg.unique)
    throw std::invalid_argument("--unique applies to --planted only");
  const int L = default_clauses(cfg, cfg.n);

  json sidecar{{"tool", "satwalk"},
               {"version", version},
               {"seed", cfg.seed},
               {"generator", cfg.random_instance ? "random" : "planted"},
               {"n", cfg.n},
               {"clauses", L},
               {"unique", cfg.unique}};
  Formula f;
  if (cfg.random_instance) {
    f = generate_random(cfg.n, L, cfg.seed);
  } else {
    auto [g, x] = generate_planted(cfg.n, L, cfg.seed, cfg.unique);
    f = std::move(g);
    sidecar["planted"] = to_bitstring(x);
  }
  write_file(cfg.output, serialize_dimacs(f));
  write_file(cfg.output + ".json", sidecar.dump(2) + "\n");
  return 0;
}

int cmd_rates(const RunConfig &cfg) {
  if (cfg.grid < 2)
    throw std::invalid_argument("--grid needs at least two points");
  const std::vector<std::string> names =
      cfg.schemes.empty()
          ? std::vector<std::string>{"gi", "gw", "fgi", "fgw", "efg"}
          : cfg.schemes;

  std::ostringstream out;
  out << csv_header(cfg) << "scheme,knob,chi,gamma\n";
  const auto row = [&](const std::string &s, const std::string &knob,
                       double chi, double gamma) {
    out << s << "," << knob << "," << fmt(chi) << "," << fmt(gamma) << "\n";
  };
  const auto sweep = [&](const std::string &name, double lo, double hi,
                         auto eval) {
    for (int i = 0; i < cfg.grid; ++i) {
      const double knob = lo + (hi - lo) * double(i) / double(cfg.grid - 1);
      const RatePoint p = eval(knob);
      row(name, fmt(knob), p.chi, p.gamma);
    }
  };

  for (const std::string &raw : names) {
    const std::string name = lower(raw);
    switch (scheme_from_name(name)) {
      case Scheme::classical:
        row("classical", fmt(1.0 / 3), 0.0, gamma_classical);
        break;
      case Scheme::gi:
        sweep("gi", 0.02, 0.5, [](double k) { return rate_gi(k); });
        break;
      case Scheme::gw:
        sweep("gw", 0.02, 0.5, [](double k) { return rate_gw(k); });
        break;
      case Scheme::fgi:
        sweep("fgi", 0.0, 1.0,
              [](double z) { return rate_fgi(z, 1.0 / 3, 1.0 / 5); });
        break;
      case Scheme::fgw:
        sweep("fgw", 0.0, gamma_classical / 2,
              [](double chi) { return rate_fgw(chi); });
        break;
      case Scheme::efg:
        sweep("efg", 0.0, 1.0, [](double z) { return rate_efg(z); });
        break;
      default:
        throw std::invalid_argument("no rate curve for scheme " + name);
    }
  }
  row("anchor", "", 0.0, gamma_classical);
  row("anchor", "", gamma_classical / 2, gamma_classical / 2);
  emit(cfg, out.str());
  return 0;
}

int experiment_sphere(const RunConfig &cfg) {
  const int n = cfg.n > 0 ? cfg.n : 40;
  const int L = default_clauses(cfg, n);
  auto [f, x_star] = generate_planted(n, L, instance_seed(cfg), cfg.unique);
  const auto rows =
      sphere_experiment(f, x_star, std::uint32_t(cfg.h_max), cfg.samples,
                        cfg.walk_mu, cfg.seed, cfg.fixed_tape);
  std::ostringstream out;
  out << csv_header(cfg) << "h,estimate,stderr,theory\n";
  for (const SphereRow &r : rows)
    out << r.h << "," << fmt(r.estimate) << "," << fmt(r.std_err) << ","
        << fmt(r.theory) << "\n";
  emit(cfg, out.str());
  return 0;
}

// random satisfiable formulas, one shared tape each: exact hit behavior
// of every start, grouped downstream by the exact solution count
int experiment_conditional(const RunConfig &cfg) {
  const int n = cfg.n > 0 ? cfg.n : 20;
  const int L = default_clauses(cfg, n);
  const std::size_t m = std::size_t(round_half_up_int(cfg.walk_mu * n));

  struct Row {
    std::uint64_t seed = 0;
    std::uint64_t t0 = 0;
    double rate = 0;
    double hit_fraction = 0;
  };
  std::vector<Row> rows(std::size_t(cfg.formulas));
  const Rng root(cfg.seed);
  parallel_for(rows.size(), cfg.jobs, [&](std::size_t i) {
    const Rng slot = root.split(i);
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt == 10000)
        throw std::runtime_error("no satisfiable formula found");
      Rng seeder = slot.split(attempt).split(0);
      const std::uint64_t fseed = seeder.u64();
      const Formula f = generate_random(n, L, fseed);
      const std::uint64_t t0 = count_solutions(f);
      if (t0 == 0) continue;
      Assignment model;
      for (std::uint32_t v = 0;; ++v) {
        model = unpack_assignment(v, std::uint32_t(n));
        if (evaluate(f, model)) break;
      }
      Rng tapes = slot.split(attempt).split(1);
      const WalkTape w = random_tape(m, tapes);
      const ConditionalRates cr = derandomized_conditional_rate(f, model, w);
      rows[i] = {fseed, t0, cr.aggregate_rate, cr.hit_fraction};
      return;
    }
  });

  std::ostringstream out;
  out << csv_header(cfg) << "index,seed,t0,rate,hit_fraction\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    out << i << "," << rows[i].seed << "," << rows[i].t0 << ","
        << fmt(rows[i].rate) << "," << fmt(rows[i].hit_fraction) << "\n";
  emit(cfg, out.str());
  return 0;
}

// planted instances: empirical walk success frequency against the
// closed-form absorbing-chain bound
int experiment_markov(const RunConfig &cfg) {
  const int n = cfg.n > 0 ? cfg.n : 12;
  const std::size_t m = cfg.walk_m > 0 ? std::size_t(cfg.walk_m)
                                       : std::size_t(n);
  const int L = default_clauses(cfg, n);
  if (cfg.walks == 0) throw std::invalid_argument("--walks must be positive");
  const double bound = z_walk_success(std::uint32_t(n), m);

  struct Row {
    std::uint64_t seed = 0;
    double empirical = 0;
    double std_err = 0;
  };
  std::vector<Row> rows(std::size_t(cfg.formulas));
  const Rng root(cfg.seed);
  parallel_for(rows.size(), cfg.jobs, [&](std::size_t i) {
    Rng seeder = root.split(i).split(0);
    const std::uint64_t iseed = seeder.u64();
    const auto [f, x_star] = generate_planted(n, L, iseed, cfg.unique);
    WalkEngine engine(f);
    Rng draws = root.split(i).split(1);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < cfg.walks; ++t) {
      const Assignment x = random_assignment(std::uint32_t(n), draws);
      const WalkTape w = random_tape(m, draws);
      if (engine.run(x, w)) ++hits;
    }
    const double emp = double(hits) / double(cfg.walks);
    rows[i] = {iseed, emp, std::sqrt(emp * (1 - emp) / double(cfg.walks))};
  });

  std::ostringstream out;
  out << csv_header(cfg) << "index,seed,empirical,stderr,bound\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    out << i << "," << rows[i].seed << "," << fmt(rows[i].empirical) << ","
        << fmt(rows[i].std_err) << "," << fmt(bound) << "\n";
  emit(cfg, out.str());
  return 0;
}

int cmd_experiment(const RunConfig &cfg) {
  if (!cfg.seed_given) throw std::invalid_argument("experiment needs --seed");
  const std::string which = lower(cfg.experiment);
  if (which == "fig7") return experiment_sphere(cfg);
  if (which == "fig6") return experiment_conditional(cfg);
  if (which == "markov-vs-empirical") return experiment_markov(cfg);
  throw std::invalid_argument("unknown experiment: " + cfg.experiment);
}

void set_enum_limit(int vars) {
  if (vars < 1) throw std::invalid_argument("enumeration limit must be >= 1");
  limits().enum_vars = vars;
  limits().enum_points = vars >= 62 ? ~std::uint64_t(0)
                                    : std::uint64_t(1) << vars;
}

} // namespace

int main(int argc, char **argv) {
  RunConfig cfg;

  // config file first, so every explicit flag overrides it below
  try {
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (arg == "--config" && i + 1 < argc) {
        apply_config(cfg, argv[i + 1]);
        break;
      }
      if (arg.rfind("--config=", 0) == 0) {
        apply_config(cfg, arg.substr(9));
        break;
      }
    }
  } catch (const std::exception &e) {
    const json err{{"tool", "satwalk"}, {"version", version},
                   {"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }

  CLI::App app{"random-walk 3-SAT solver and runtime/coherence toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version);
  std::string config_path; // consumed by the pre-scan above

  std::vector<CLI::Option *> seed_opts, iseed_opts;
  const auto common = [&](CLI::App *cmd, bool stochastic) {
    cmd->add_option("--config", config_path,
                    "JSON config file; flags win on conflict");
    cmd->add_option("--output,-o", cfg.output,
                    "write here instead of stdout");
    cmd->add_option("--enum-limit", cfg.enum_limit,
                    "max variables for exhaustive enumeration");
    if (stochastic)
      seed_opts.push_back(cmd->add_option("--seed", cfg.seed, "run seed"));
    else
      cmd->add_option("--seed", cfg.seed, "seed recorded in the header");
  };
  const auto generator_opts = [&](CLI::App *cmd) {
    cmd->add_flag("--planted", cfg.planted, "plant a hidden solution");
    cmd->add_flag("--random", cfg.random_instance, "uniform random clauses");
    cmd->add_flag("--unique", cfg.unique,
                  "resample until the planted solution is unique");
    cmd->add_option("--vars,-n", cfg.n, "variable count");
    cmd->add_option("--clauses,-L", cfg.clauses,
                    "clause count (default: 4.55 per variable)");
  };

  CLI::App *solve = app.add_subcommand("solve", "run one scheme on one instance");
  common(solve, true);
  solve->add_option("--input,-i", cfg.input, "DIMACS CNF path");
  generator_opts(solve);
  iseed_opts.push_back(solve->add_option(
      "--instance-seed", cfg.instance_seed, "generator seed (default: --seed)"));
  solve->add_option("--scheme", cfg.scheme,
                    "classical|gi|gw|fgi|fgw|efg|hfgi");
  solve->add_option("--epsilon", cfg.epsilon, "overall failure budget");
  solve->add_option("--kappa", cfg.kappa, "sphere radius fraction");
  solve->add_option("--nu", cfg.nu, "descending step fraction");
  solve->add_option("--mu", cfg.mu, "walk length per variable");
  solve->add_option("--z", cfg.z, "quantum share of the split register");
  solve->add_option("--kappa-c", cfg.kappa_c, "classical-part sphere fraction");
  solve->add_option("--kappa-q", cfg.kappa_q, "quantum-part sphere fraction");
  solve->add_option("--chi", cfg.chi, "coherence budget of the split-walk scheme");
  solve->add_flag("--calibrated", cfg.calibrated,
                  "fixed sqrt-size round schedule instead of exact-count rounds");

  CLI::App *rates = app.add_subcommand("rates", "trade-off curves as CSV");
  common(rates, false);
  rates->add_option("--scheme", cfg.schemes, "schemes to sweep (repeatable)");
  rates->add_option("--grid", cfg.grid, "points per scheme");

  CLI::App *experiment =
      app.add_subcommand("experiment", "reproducible experiment drivers");
  common(experiment, true);
  experiment->add_option("name", cfg.experiment,
                         "fig6|fig7|markov-vs-empirical")
      ->required();
  generator_opts(experiment);
  iseed_opts.push_back(experiment->add_option(
      "--instance-seed", cfg.instance_seed, "generator seed (default: --seed)"));
  experiment->add_option("--formulas", cfg.formulas, "instances per table");
  experiment->add_option("--h-max", cfg.h_max, "largest sphere distance");
  experiment->add_option("--samples", cfg.samples, "sphere samples per distance");
  experiment->add_option("--walks", cfg.walks, "walk trials per instance");
  experiment->add_option("--walk-mu", cfg.walk_mu, "walk length per variable");
  experiment->add_option("--walk-length,-m", cfg.walk_m,
                         "tape length override");
  experiment->add_flag("--fixed-tape", cfg.fixed_tape,
                       "one shared tape for all sphere samples");
  experiment->add_option("--jobs,-j", cfg.jobs, "worker threads");

  CLI::App *gen =
      app.add_subcommand("gen", "write a DIMACS instance plus sidecar metadata");
  common(gen, true);
  generator_opts(gen);

  CLI::App *count =
      app.add_subcommand("count", "exact model count by enumeration");
  common(count, false);
  count->add_option("--input,-i", cfg.input, "DIMACS CNF path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }
  for (const CLI::Option *o : seed_opts)
    if (o->count() > 0) cfg.seed_given = true;
  for (const CLI::Option *o : iseed_opts)
    if (o->count() > 0) cfg.instance_seed_given = true;

  try {
    if (const char *env = std::getenv("SATWALK_ENUM_LIMIT"))
      set_enum_limit(std::stoi(env));
    if (cfg.enum_limit > 0) set_enum_limit(cfg.enum_limit);

    if (solve->parsed()) return cmd_solve(cfg);
    if (rates->parsed()) return cmd_rates(cfg);
    if (experiment->parsed()) return cmd_experiment(cfg);
    if (gen->parsed()) return cmd_gen(cfg);
    if (count->parsed()) return cmd_count(cfg);
  } catch (const std::exception &e) {
    const json err{{"tool", "satwalk"}, {"version", version},
                   {"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 1;
}
