// Command-line front end: generate instances, compute bound reports, build and
// verify schemes, run exact solves, and drive the verification sweeps.
//
// Exit codes: 0 success, 2 invalid input, 3 budget exceeded, 4 verification
// failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "picod/json_io.hpp"

using namespace picod;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerification = 4;

struct GlobalConfig {
  int q = 2;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string json_path;
  Budgets budgets;

  GlobalConfig() {
    // generous exact-nesting budgets for interactive use; the library defaults
    // stay tight for programmatic callers
    budgets.eta_exact_max_n = 64;
    budgets.eta_exact_max_m = 16;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

void emit(const std::string& path, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text(path, text);
}

PicodInstance load_instance_file(const std::string& path) {
  std::vector<std::string> warnings;
  auto inst = parse_instance(read_file(path), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return inst;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string collection_repr(const NestedCollection& nc) {
  std::string out;
  for (size_t i = 0; i < nc.levels.size(); ++i) {
    if (i) out += " | ";
    out += join_ints(nc.levels[i]);
  }
  return out;
}

// ---------------------------------------------------------------- gen ------

struct GenConfig {
  std::string kind;
  std::string out;
  int m = 4;
  int n = 5;
  std::vector<int> sigma;
  std::string levels;
};

std::vector<std::vector<MsgSet>> parse_levels(const std::string& text, int m) {
  std::vector<std::vector<MsgSet>> levels;
  std::stringstream level_stream(text);
  std::string level_text;
  while (std::getline(level_stream, level_text, '|')) {
    std::vector<MsgSet> blocks;
    std::stringstream block_stream(level_text);
    std::string block_text;
    while (std::getline(block_stream, block_text, ';')) {
      MsgSet block = 0;
      std::stringstream elem_stream(block_text);
      std::string elem;
      while (std::getline(elem_stream, elem, ',')) {
        const size_t a = elem.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        const int v = std::stoi(elem);
        if (v < 1 || v > m) throw std::invalid_argument("partition block element out of range: " + elem);
        block |= msg_bit(v);
      }
      if (block != 0) blocks.push_back(block);
    }
    if (!blocks.empty()) levels.push_back(std::move(blocks));
  }
  return levels;
}

int run_gen(const GlobalConfig& g, const GenConfig& cfg) {
  PicodInstance inst;
  if (cfg.kind == "complete-sigma") {
    inst = complete_sigma(cfg.m, cfg.sigma);
  } else if (cfg.kind == "random") {
    inst = random_instance(cfg.m, cfg.n, g.seed);
  } else if (cfg.kind == "partition") {
    inst = partition_class_instance(cfg.m, parse_levels(cfg.levels, cfg.m));
  } else {
    inst = builtin_instance(cfg.kind);
  }
  emit(cfg.out, to_json(inst));
  return kExitOk;
}

// ------------------------------------------------------------- analyze -----

struct AnalyzeConfig {
  std::string instance_path;
  bool all = false;
  bool eta_exact = false;
  bool no_tau = false;
  bool no_absent = false;
  bool no_structural = false;
  bool no_sigma = false;
  bool exact = false;
  std::vector<int> fields;
};

void print_bound_row(const char* name, const std::optional<int>& value, const std::string& detail = "") {
  if (value)
    std::printf("  %-16s %6d  %s\n", name, *value, detail.c_str());
  else
    std::printf("  %-16s %6s  %s\n", name, "-", detail.c_str());
}

int run_analyze(const GlobalConfig& g, const AnalyzeConfig& cfg) {
  const auto inst = load_instance_file(cfg.instance_path);

  BoundOptions opt;
  opt.budgets = g.budgets;
  opt.jobs = g.jobs;
  opt.with_eta_exact = cfg.all || cfg.eta_exact;
  opt.with_tau = !cfg.no_tau;
  opt.with_absent_chain = !cfg.no_absent;
  opt.with_structural = !cfg.no_structural;
  opt.with_sigma = !cfg.no_sigma;

  const auto rep = bound_report(inst, opt);

  std::printf("instance: m=%d, n=%d\n", inst.m, inst.n());
  print_bound_row("eta_lb", rep.eta_lb ? std::optional<int>(rep.eta_lb->value) : std::nullopt,
                  rep.eta_lb ? "root " + std::to_string(rep.eta_lb->root) + ", levels " +
                                   collection_repr(rep.eta_lb->witness)
                             : "");
  print_bound_row("eta_exact", rep.eta_exact);
  print_bound_row("tau1", rep.tau1 ? std::optional<int>(rep.tau1->value) : std::nullopt);
  print_bound_row("tau2", rep.tau2 ? std::optional<int>(rep.tau2->value) : std::nullopt);
  print_bound_row("absent_chain", rep.absent_chain ? std::optional<int>(rep.absent_chain->bound) : std::nullopt,
                  rep.absent_chain ? "chain length " + std::to_string(rep.absent_chain->chain_length) : "");
  print_bound_row("absent_union", rep.absent_union);
  print_bound_row("absent_nesting", rep.absent_nesting);
  print_bound_row("sigma", rep.sigma);
  std::printf("  %-16s %6d  (%s)\n", "best_lower", rep.best_lower, rep.best_name.c_str());

  json out;
  out["instance"] = to_json(inst);
  out["bounds"] = to_json(rep);

  if (cfg.exact) {
    std::vector<int> fields = cfg.fields.empty() ? std::vector<int>{g.q} : cfg.fields;
    int min_beta = -1;
    json field_results = json::object();
    LinearScheme best_witness;
    for (int q : fields) {
      const auto found = exact_linear_beta(inst, q, 0, g.budgets);
      field_results[std::to_string(q)] = found->beta_lin;
      std::printf("  %-16s %6d\n", ("beta_lin[q=" + std::to_string(q) + "]").c_str(), found->beta_lin);
      if (min_beta < 0 || found->beta_lin < min_beta) {
        min_beta = found->beta_lin;
        best_witness = found->witness;
      }
    }
    const bool certified = min_beta == rep.best_lower;
    if (certified)
      std::printf("  %-16s %6d  certified via %s\n", "beta", min_beta, rep.best_name.c_str());
    else
      std::printf("  %-16s        in [%d, %d], fields tested {%s}, not certified\n", "beta", rep.best_lower,
                  min_beta, join_ints(fields).c_str());
    out["exact"] = json{{"beta_lin", field_results},
                        {"fields_tested", fields},
                        {"beta_lin_min", min_beta},
                        {"witness", to_json(best_witness)},
                        {"certified", certified},
                        {"lower_used", rep.best_name},
                        {"best_lower", rep.best_lower}};
  }

  if (!g.json_path.empty()) emit(g.json_path, out);
  return kExitOk;
}

// -------------------------------------------------------------- verify -----

int run_verify(const GlobalConfig& g, const std::string& instance_path, const std::string& scheme_path) {
  const auto inst = load_instance_file(instance_path);
  const auto scheme = parse_scheme(read_file(scheme_path));
  const auto rep = validate_scheme(inst, scheme);
  const auto steps = newly_satisfied_per_row(inst, scheme);

  std::printf("scheme: q=%d, length=%d on instance m=%d, n=%d\n", scheme.q(), scheme.length(), inst.m, inst.n());
  for (size_t k = 0; k < steps.size(); ++k)
    std::printf("  transmission %-3zu newly satisfies: %s\n", k + 1,
                steps[k].empty() ? "(none)" : join_ints(steps[k]).c_str());
  std::printf("  %-16s %d/%d\n", "satisfied", rep.satisfied, inst.n());
  for (int i = 1; i <= inst.n(); ++i) {
    const auto& w = rep.witness[static_cast<size_t>(i - 1)];
    const std::string status = w ? "decodes " + std::to_string(*w) : "unsatisfied";
    std::printf("  client %-3d %-14s %s\n", i, set_repr(inst.side_info(i)).c_str(), status.c_str());
  }

  if (!g.json_path.empty()) {
    json clients = json::array();
    for (int i = 1; i <= inst.n(); ++i) {
      const auto& w = rep.witness[static_cast<size_t>(i - 1)];
      clients.push_back(json{{"client", i}, {"satisfied", w.has_value()}, {"decodes", w ? json(*w) : json()}});
    }
    json steps_json = json::array();
    for (const auto& s : steps) steps_json.push_back(s);
    emit(g.json_path, json{{"satisfied", rep.satisfied},
                           {"n", inst.n()},
                           {"all_satisfied", rep.all_satisfied},
                           {"clients", clients},
                           {"newly_satisfied_per_row", steps_json}});
  }
  return rep.all_satisfied ? kExitOk : kExitVerification;
}

// -------------------------------------------------------------- scheme -----

int run_scheme(const GlobalConfig& g, const std::string& instance_path, const std::string& out) {
  const auto inst = load_instance_file(instance_path);
  const auto s = greedy_scheme(inst, g.q, g.budgets);
  std::fprintf(stderr, "greedy scheme of length %d over F_%d\n", s.length(), g.q);
  emit(out, to_json(s));
  return kExitOk;
}

// --------------------------------------------------------------- sweep -----

struct SweepConfig {
  std::string kind;
  int m_max = 3;
  int m = 3;
  int n_max = 3;
  int random = 0;
};

int run_sweep(const GlobalConfig& g, const SweepConfig& cfg) {
  json out;
  int failures = 0;

  if (cfg.kind == "lemma7") {
    int checked = 0;
    json violations = json::array();
    for (int m = 1; m <= cfg.m_max; ++m)
      for (int n = 1; n <= 2 && static_cast<std::uint64_t>(n) <= full_set(m); ++n)
        for_each_instance(m, n, [&](const PicodInstance& inst) {
          ++checked;
          const int eta = eta_exact(inst, g.budgets);
          const int t1 = tau1(inst, g.budgets).value;
          const int t2 = tau2(inst, g.budgets).value;
          const int b2 = exact_linear_beta(inst, 2, 0, g.budgets)->beta_lin;
          if (eta != 1 || t1 != 1 || t2 != 1 || b2 != 1) {
            ++failures;
            violations.push_back(to_json(inst));
          }
        });
    out = json{{"kind", "lemma7"}, {"m_max", cfg.m_max}, {"instances_checked", checked}, {"violations", violations}};
    std::printf("lemma7 sweep: %d instances, %d violations\n", checked, failures);
  } else if (cfg.kind == "lemma8") {
    const auto report = crosscheck_small(cfg.m_max, g.budgets);
    failures = report.mismatches;
    out = to_json(report);
    std::printf("lemma8 sweep: %d instances, %d mismatches\n", report.instances_checked, report.mismatches);
  } else if (cfg.kind == "sandwich") {
    int checked = 0;
    json violations = json::array();
    const auto check_one = [&](const PicodInstance& inst) {
      ++checked;
      const int eta = eta_exact(inst, g.budgets);
      const int t1 = tau1(inst, g.budgets).value;
      const int t2 = tau2(inst, g.budgets).value;
      const int b2 = exact_linear_beta(inst, 2, 0, g.budgets)->beta_lin;
      if (!(eta <= t1 && t1 <= t2 && t2 <= b2)) {
        ++failures;
        violations.push_back(json{{"instance", to_json(inst)}, {"eta", eta}, {"tau1", t1}, {"tau2", t2}, {"beta2", b2}});
      }
    };
    if (cfg.random > 0) {
      for (int k = 0; k < cfg.random; ++k)
        check_one(random_instance(cfg.m, 1 + k % cfg.n_max, g.seed + static_cast<std::uint64_t>(k)));
    } else {
      for (int n = 1; n <= cfg.n_max && static_cast<std::uint64_t>(n) <= full_set(cfg.m); ++n)
        for_each_instance(cfg.m, n, check_one);
    }
    out = json{{"kind", "sandwich"}, {"m", cfg.m}, {"instances_checked", checked}, {"violations", violations}};
    std::printf("sandwich sweep: %d instances, %d violations\n", checked, failures);
  } else if (cfg.kind == "sigma") {
    int checked = 0;
    json entries = json::array();
    for (int m = 1; m <= cfg.m_max; ++m) {
      for (MsgSet pick = 1; pick < (MsgSet{1} << m); ++pick) {
        std::vector<int> sigma;
        for (int s = 0; s < m; ++s)
          if ((pick >> s) & 1) sigma.push_back(s);
        const auto inst = complete_sigma(m, sigma);
        const auto nc = size_level_collection(inst, sigma);
        const bool valid = validate_nested_collection(inst, nc);
        const int eta = eta_exact(inst, g.budgets);
        const bool ok = valid && nc.length() == static_cast<int>(sigma.size()) &&
                        eta >= static_cast<int>(sigma.size());
        ++checked;
        if (!ok) ++failures;
        entries.push_back(json{{"m", m},
                               {"sigma", sigma},
                               {"collection_valid", valid},
                               {"collection_length", nc.length()},
                               {"eta_exact", eta},
                               {"ok", ok}});
      }
    }
    out = json{{"kind", "sigma"}, {"m_max", cfg.m_max}, {"cases_checked", checked}, {"entries", entries},
               {"violations", failures}};
    std::printf("sigma sweep: %d cases, %d violations\n", checked, failures);
  } else {
    throw std::invalid_argument("unknown sweep kind: " + cfg.kind);
  }

  if (!g.json_path.empty()) emit(g.json_path, out);
  return failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pliable index coding: bounds, schemes, exact solves"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalConfig g;
  app.add_option("--q", g.q, "prime field (2, 3, or 5)");
  app.add_option("--jobs", g.jobs, "worker threads for the root/demand sweeps");
  app.add_option("--seed", g.seed, "seed for random generation");
  app.add_option("--json", g.json_path, "write the machine-readable report here");
  app.add_option("--budget-m", g.budgets.max_m_exponential, "max m for 2^m searches");
  app.add_option("--budget-demands", g.budgets.max_demand_functions, "max demand functions for the chain bounds");
  app.add_option("--budget-subspaces", g.budgets.max_subspaces, "max subspaces per exact-search level");
  app.add_option("--budget-eta-n", g.budgets.eta_exact_max_n, "max clients for the exact nesting number");
  app.add_option("--budget-eta-m", g.budgets.eta_exact_max_m, "max messages for the exact nesting number");

  GenConfig gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("kind", gen.kind, "complete-sigma | random | partition | example2 | lemma1-demo | singletons-3")
      ->required();
  gen_cmd->add_option("-o,--out", gen.out, "output path (default: stdout)");
  gen_cmd->add_option("--m", gen.m, "message count");
  gen_cmd->add_option("--n", gen.n, "client count (random)");
  gen_cmd->add_option("--sigma", gen.sigma, "sizes, e.g. --sigma 0,2")->delimiter(',');
  gen_cmd->add_option("--levels", gen.levels, "partition chain, e.g. \"1,2,3,4|1,2;3,4\"");

  AnalyzeConfig an;
  auto* an_cmd = app.add_subcommand("analyze", "compute lower bounds (and optionally the exact optimum)");
  an_cmd->add_option("instance", an.instance_path, "instance file")->required();
  an_cmd->add_flag("--all", an.all, "every bound including the exact nesting number");
  an_cmd->add_flag("--eta-exact", an.eta_exact, "include the exact nesting number");
  an_cmd->add_flag("--no-tau", an.no_tau, "skip the decoding-chain bounds");
  an_cmd->add_flag("--no-absent", an.no_absent, "skip the absent-chain bound");
  an_cmd->add_flag("--no-structural", an.no_structural, "skip the structural m-1 bounds");
  an_cmd->add_flag("--no-sigma", an.no_sigma, "skip complete-sigma detection");
  an_cmd->add_flag("--exact", an.exact, "run the exhaustive subspace search");
  an_cmd->add_option("--fields", an.fields, "fields for the exact search, e.g. --fields 2,3")->delimiter(',');

  std::string verify_instance, verify_scheme;
  auto* verify_cmd = app.add_subcommand("verify", "check a scheme file against an instance file");
  verify_cmd->add_option("instance", verify_instance, "instance file")->required();
  verify_cmd->add_option("scheme", verify_scheme, "scheme file")->required();

  std::string scheme_instance, scheme_out;
  auto* scheme_cmd = app.add_subcommand("scheme", "build a greedy scheme for an instance");
  scheme_cmd->add_option("instance", scheme_instance, "instance file")->required();
  scheme_cmd->add_option("-o,--out", scheme_out, "output path (default: stdout)");

  SweepConfig sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a verification sweep");
  sweep_cmd->add_option("kind", sweep.kind, "lemma7 | lemma8 | sandwich | sigma")->required();
  sweep_cmd->add_option("--m-max", sweep.m_max, "largest message count (lemma7/lemma8/sigma)");
  sweep_cmd->add_option("--m", sweep.m, "message count (sandwich)");
  sweep_cmd->add_option("--n-max", sweep.n_max, "largest client count (sandwich)");
  sweep_cmd->add_option("--random", sweep.random, "random instances instead of the exhaustive sweep (sandwich)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (app.got_subcommand(gen_cmd)) return run_gen(g, gen);
    if (app.got_subcommand(an_cmd)) return run_analyze(g, an);
    if (app.got_subcommand(verify_cmd)) return run_verify(g, verify_instance, verify_scheme);
    if (app.got_subcommand(scheme_cmd)) return run_scheme(g, scheme_instance, scheme_out);
    if (app.got_subcommand(sweep_cmd)) return run_sweep(g, sweep);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
