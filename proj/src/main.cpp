// qstripe: resource counts, thresholds, explicit circuits, and fault
// simulation for concatenated [7,1,3] encoding on nearest-neighbor stripes.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qstripe/circuit.hpp"
#include "qstripe/cost_model.hpp"
#include "qstripe/expander.hpp"
#include "qstripe/fault_sim.hpp"
#include "qstripe/layout.hpp"
#include "qstripe/threshold.hpp"

namespace {

using nlohmann::ordered_json;
using qstripe::cost_model::BlockVariant;
using qstripe::cost_model::CommModel;
using qstripe::fault_sim::Scenario;

CommModel parse_model(const std::string& s) {
  if (s == "free") return CommModel::FREE;
  if (s == "recnot") return CommModel::REMOTE_CNOT;
  return CommModel::SWAP;
}

BlockVariant parse_prep(const std::string& s) {
  return s == "inline" ? BlockVariant::WITH_PREP_46 : BlockVariant::MINIMAL_27;
}

Scenario parse_scenario(const std::string& s) {
  return s == "cnot-ec" ? Scenario::CNOT_EC : Scenario::EC_ONLY;
}

std::string fmt_angle(double deg) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", deg);
  return buf;
}

std::string fmt_ref(double deg) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2g", deg);
  return buf;
}

void emit_json(const ordered_json& j) {
  std::fputs((j.dump(2) + "\n").c_str(), stdout);
}

void add_format(CLI::App* sub, std::string& fmt) {
  sub->add_option("--format", fmt, "Output format: text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

// ---- table ----------------------------------------------------------------

int run_table(const std::string& fmt) {
  namespace th = qstripe::threshold;
  using qstripe::cost_model::to_string;
  const auto rows = th::table_report();
  const auto notes = th::table_notes();

  if (fmt == "json") {
    ordered_json j;
    j["schema"] = "qstripe.table.v1";
    j["rows"] = ordered_json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      ordered_json row;
      row["model"] = to_string(r.model);
      row["prep"] = to_string(r.variant);
      row["ec_ops"] = r.ec_count;
      row["unitary_ops"] = r.unitary_count;
      row["n_total"] = r.n_total;
      row["p_th"] = th::format_prob(r.p_th);
      row["p_th_2sig"] = th::format_2sig(r.p_th);
      row["phi_th_deg"] = fmt_angle(r.phi_th_deg);
      row["published_p_th"] = th::published_p_th_2sig[i];
      row["published_phi_deg"] = fmt_ref(th::published_phi_deg[i]);
      j["rows"].push_back(row);
    }
    j["notes"] = ordered_json::array();
    for (const auto& n : notes) {
      ordered_json jn;
      jn["row"] = n.row;
      jn["computed_phi_deg"] = fmt_angle(n.computed_phi_deg);
      jn["published_phi_deg"] = fmt_ref(n.published_phi_deg);
      jn["text"] = n.text;
      j["notes"].push_back(jn);
    }
    emit_json(j);
    return 0;
  }
  if (fmt == "csv") {
    std::printf(
        "model,prep,ec_ops,unitary_ops,n_total,p_th,p_th_2sig,phi_th_deg,"
        "published_p_th,published_phi_deg\n");
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      std::printf("%s,%s,%ld,%ld,%ld,%s,%s,%s,%s,%s\n", to_string(r.model),
                  to_string(r.variant), r.ec_count, r.unitary_count,
                  r.n_total, th::format_prob(r.p_th).c_str(),
                  th::format_2sig(r.p_th).c_str(),
                  fmt_angle(r.phi_th_deg).c_str(), th::published_p_th_2sig[i],
                  fmt_ref(th::published_phi_deg[i]).c_str());
    }
    return 0;
  }
  std::printf("%-8s %-14s %6s %8s %6s  %-9s %12s %9s\n", "model", "prep",
              "EC", "unitary", "N", "P_th", "phi_th[deg]", "ref[deg]");
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::printf("%-8s %-14s %6ld %8ld %6ld  %-9s %12s %9s\n",
                to_string(r.model), to_string(r.variant), r.ec_count,
                r.unitary_count, r.n_total, th::format_2sig(r.p_th).c_str(),
                fmt_angle(r.phi_th_deg).c_str(),
                fmt_ref(th::published_phi_deg[i]).c_str());
  }
  for (const auto& n : notes) std::printf("note: %s\n", n.text.c_str());
  return 0;
}

// ---- counts ---------------------------------------------------------------

int run_counts(CommModel model, BlockVariant variant, const std::string& fmt) {
  namespace cm = qstripe::cost_model;
  const cm::CountSplit u = cm::unitary_count(model, variant);
  const cm::EcCount e = cm::ec_count(model, variant);
  const long n_total = u.total() + e.total();

  if (fmt == "json") {
    ordered_json j;
    j["schema"] = "qstripe.counts.v1";
    j["model"] = cm::to_string(model);
    j["prep"] = cm::to_string(variant);
    j["n_u"] = u.computational;
    j["n_uc"] = u.communication;
    j["n_e"] = e.computational;
    j["n_ec"] = e.communication;
    j["unitary_total"] = u.total();
    j["ec_total"] = e.total();
    j["n_total"] = n_total;
    j["terms"] = ordered_json::array();
    for (const auto& [label, count] : e.terms) {
      ordered_json t;
      t["label"] = label;
      t["count"] = count;
      j["terms"].push_back(t);
    }
    emit_json(j);
    return 0;
  }
  if (fmt == "csv") {
    std::printf("section,label,count\n");
    std::printf("summary,n_u,%ld\n", u.computational);
    std::printf("summary,n_uc,%ld\n", u.communication);
    std::printf("summary,n_e,%ld\n", e.computational);
    std::printf("summary,n_ec,%ld\n", e.communication);
    std::printf("summary,n_total,%ld\n", n_total);
    for (const auto& [label, count] : e.terms)
      std::printf("ec_term,%s,%ld\n", label.c_str(), count);
    return 0;
  }
  std::printf("model %s, prep %s\n", cm::to_string(model),
              cm::to_string(variant));
  std::printf("  N_U  = %ld\n  N_Uc = %ld\n  N_E  = %ld\n  N_Ec = %ld\n",
              u.computational, u.communication, e.computational,
              e.communication);
  std::printf("  N    = %ld\n", n_total);
  std::printf("error-correction terms:\n");
  for (const auto& [label, count] : e.terms)
    std::printf("  %-44s %6ld\n", label.c_str(), count);
  return 0;
}

// ---- threshold ------------------------------------------------------------

int run_threshold(CommModel model, BlockVariant variant,
                  const std::string& fmt) {
  namespace cm = qstripe::cost_model;
  namespace th = qstripe::threshold;
  const long n = cm::level_cost(model, variant);
  const double pth = th::p_threshold(n);
  const double phi = th::accuracy_threshold_deg(pth);

  if (fmt == "json") {
    ordered_json j;
    j["schema"] = "qstripe.threshold.v1";
    j["model"] = cm::to_string(model);
    j["prep"] = cm::to_string(variant);
    j["n_total"] = n;
    j["p_th"] = th::format_prob(pth);
    j["p_th_2sig"] = th::format_2sig(pth);
    j["phi_th_deg"] = fmt_angle(phi);
    emit_json(j);
    return 0;
  }
  if (fmt == "csv") {
    std::printf("model,prep,n_total,p_th,p_th_2sig,phi_th_deg\n");
    std::printf("%s,%s,%ld,%s,%s,%s\n", cm::to_string(model),
                cm::to_string(variant), n, th::format_prob(pth).c_str(),
                th::format_2sig(pth).c_str(), fmt_angle(phi).c_str());
    return 0;
  }
  std::printf("model %s, prep %s: N = %ld\n", cm::to_string(model),
              cm::to_string(variant), n);
  std::printf("P_th   = %s  (2 s.f. %s)\n", th::format_prob(pth).c_str(),
              th::format_2sig(pth).c_str());
  std::printf("phi_th = %s deg\n", fmt_angle(phi).c_str());
  return 0;
}

// ---- logical-error --------------------------------------------------------

int run_logical_error(double epsilon, int levels, CommModel model,
                      BlockVariant variant, const std::string& fmt) {
  namespace cm = qstripe::cost_model;
  namespace th = qstripe::threshold;
  const long n = cm::level_cost(model, variant);
  const double pth = th::p_threshold(n);
  const double pl = th::logical_error(epsilon, levels, pth);

  if (fmt == "json") {
    ordered_json j;
    j["schema"] = "qstripe.logical-error.v1";
    j["model"] = cm::to_string(model);
    j["prep"] = cm::to_string(variant);
    j["epsilon"] = th::format_prob(epsilon);
    j["levels"] = levels;
    j["p_th"] = th::format_prob(pth);
    j["p_l"] = th::format_prob(pl);
    emit_json(j);
    return 0;
  }
  if (fmt == "csv") {
    std::printf("model,prep,epsilon,levels,p_th,p_l\n");
    std::printf("%s,%s,%s,%d,%s,%s\n", cm::to_string(model),
                cm::to_string(variant), th::format_prob(epsilon).c_str(),
                levels, th::format_prob(pth).c_str(),
                th::format_prob(pl).c_str());
    return 0;
  }
  std::printf("model %s, prep %s: P_th = %s\n", cm::to_string(model),
              cm::to_string(variant), th::format_prob(pth).c_str());
  std::printf("P_L(epsilon=%s, L=%d) = %s\n", th::format_prob(epsilon).c_str(),
              levels, th::format_prob(pl).c_str());
  return 0;
}

// ---- depth ----------------------------------------------------------------

int run_depth(double length, double epsilon, double pth,
              const std::string& fmt) {
  namespace th = qstripe::threshold;
  std::string note;
  const int level = th::sufficient_level(length, epsilon, pth, &note);

  if (fmt == "json") {
    ordered_json j;
    j["schema"] = "qstripe.depth.v1";
    j["length"] = th::format_prob(length);
    j["epsilon"] = th::format_prob(epsilon);
    j["p_th"] = th::format_prob(pth);
    j["level"] = level;
    if (!note.empty()) j["note"] = note;
    emit_json(j);
    return 0;
  }
  if (fmt == "csv") {
    std::printf("length,epsilon,p_th,level\n");
    std::printf("%s,%s,%s,%d\n", th::format_prob(length).c_str(),
                th::format_prob(epsilon).c_str(), th::format_prob(pth).c_str(),
                level);
    return 0;
  }
  std::printf("sufficient level: %d\n", level);
  if (!note.empty()) std::printf("note: %s\n", note.c_str());
  return 0;
}

// ---- resources ------------------------------------------------------------

int run_resources(int levels, BlockVariant variant, const std::string& fmt) {
  namespace cm = qstripe::cost_model;
  namespace ly = qstripe::layout;
  const std::string qubits = ly::physical_qubits(levels, variant).str();
  const int width = ly::stripe_width(levels);
  const std::string g_free =
      cm::physical_gate_count(levels, CommModel::FREE, variant).str();
  const std::string g_rc =
      cm::physical_gate_count(levels, CommModel::REMOTE_CNOT, variant).str();
  const std::string g_swap =
      cm::physical_gate_count(levels, CommModel::SWAP, variant).str();

  if (fmt == "json") {
    ordered_json j;
    j["schema"] = "qstripe.resources.v1";
    j["levels"] = levels;
    j["prep"] = cm::to_string(variant);
    j["physical_qubits"] = qubits;
    j["stripe_width"] = width;
    j["gates"] = {{"free", g_free},
                  {"remote-cnot", g_rc},
                  {"swap", g_swap}};
    emit_json(j);
    return 0;
  }
  if (fmt == "csv") {
    std::printf("quantity,value\n");
    std::printf("physical_qubits,%s\n", qubits.c_str());
    std::printf("stripe_width,%d\n", width);
    std::printf("gates_free,%s\n", g_free.c_str());
    std::printf("gates_remote-cnot,%s\n", g_rc.c_str());
    std::printf("gates_swap,%s\n", g_swap.c_str());
    return 0;
  }
  std::printf("levels %d, prep %s\n", levels, cm::to_string(variant));
  std::printf("physical qubits   : %s\n", qubits.c_str());
  std::printf("stripe width      : %d\n", width);
  std::printf("gates free        : %s\n", g_free.c_str());
  std::printf("gates remote-cnot : %s\n", g_rc.c_str());
  std::printf("gates swap        : %s\n", g_swap.c_str());
  return 0;
}

// ---- expand ---------------------------------------------------------------

int run_expand(const std::string& block, BlockVariant variant) {
  namespace ex = qstripe::expander;
  qstripe::Circuit c;
  if (block == "swap") {
    c = ex::expand_logical_swap().bundle.circuit;
  } else if (block == "zero-prep") {
    c = ex::expand_zero_prep().circuit;
  } else if (block == "ec") {
    c = ex::expand_ec_block(variant).circuit;
  } else if (block == "remote-cnot") {
    c = ex::expand_remote_cnot_gadget().circuit;
  } else {
    c = ex::expand_logical_cnot_rows(variant).bundle.circuit;
  }
  std::fputs(qstripe::serialize(c).c_str(), stdout);
  return 0;
}

// ---- validate -------------------------------------------------------------

int run_validate(const std::string& path, const std::string& fmt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "error: cannot open \"%s\"\n", path.c_str());
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const qstripe::Circuit c = qstripe::parse(buf.str());
  const auto violations = qstripe::validate_nearest_neighbor(c);
  const long gates = qstripe::counted_operations(c);

  if (fmt == "json") {
    ordered_json j;
    j["schema"] = "qstripe.validate.v1";
    j["file"] = path;
    j["counted_operations"] = gates;
    j["valid"] = violations.empty();
    j["violations"] = ordered_json::array();
    for (const auto& v : violations) {
      ordered_json jv;
      jv["timestep"] = v.timestep;
      jv["kind"] = qstripe::to_string(v.gate.kind);
      jv["sites"] = ordered_json::array();
      for (const auto& s : v.gate.targets)
        jv["sites"].push_back({{"row", s.row}, {"column", s.column}});
      j["violations"].push_back(jv);
    }
    emit_json(j);
  } else if (fmt == "csv") {
    std::printf("timestep,kind,row0,col0,row1,col1\n");
    for (const auto& v : violations)
      std::printf("%d,%s,%d,%d,%d,%d\n", v.timestep,
                  qstripe::to_string(v.gate.kind), v.gate.targets[0].row,
                  v.gate.targets[0].column, v.gate.targets[1].row,
                  v.gate.targets[1].column);
  } else if (violations.empty()) {
    std::printf("OK: %ld counted operations, nearest-neighbor valid\n", gates);
  } else {
    for (const auto& v : violations)
      std::printf("violation at timestep %d: %s (%d,%d)-(%d,%d)\n",
                  v.timestep, qstripe::to_string(v.gate.kind),
                  v.gate.targets[0].row, v.gate.targets[0].column,
                  v.gate.targets[1].row, v.gate.targets[1].column);
  }
  return violations.empty() ? 0 : 1;
}

// ---- simulate -------------------------------------------------------------

int run_simulate(Scenario scenario, double epsilon, long trials,
                 uint64_t seed, const std::string& fmt) {
  namespace fs = qstripe::fault_sim;
  namespace th = qstripe::threshold;
  const fs::ScenarioCircuit sc = fs::build_scenario(scenario);
  const fs::MonteCarloResult r =
      fs::monte_carlo_p1(sc, epsilon, trials, seed);

  if (fmt == "json") {
    ordered_json j;
    j["schema"] = "qstripe.simulate.v1";
    j["scenario"] = fs::to_string(scenario);
    j["epsilon"] = th::format_prob(r.epsilon);
    j["trials"] = r.trials;
    j["seed"] = seed;
    j["locations"] = r.locations;
    j["failures"] = r.failures;
    j["p_fail"] = th::format_prob(r.p_fail);
    j["ci_low"] = th::format_prob(r.ci_low);
    j["ci_high"] = th::format_prob(r.ci_high);
    emit_json(j);
    return 0;
  }
  if (fmt == "csv") {
    std::printf(
        "scenario,epsilon,trials,seed,locations,failures,p_fail,ci_low,"
        "ci_high\n");
    std::printf("%s,%s,%ld,%llu,%ld,%ld,%s,%s,%s\n", fs::to_string(scenario),
                th::format_prob(r.epsilon).c_str(), r.trials,
                static_cast<unsigned long long>(seed), r.locations,
                r.failures, th::format_prob(r.p_fail).c_str(),
                th::format_prob(r.ci_low).c_str(),
                th::format_prob(r.ci_high).c_str());
    return 0;
  }
  std::printf("scenario %s: epsilon %s, trials %ld, seed %llu\n",
              fs::to_string(scenario), th::format_prob(r.epsilon).c_str(),
              r.trials, static_cast<unsigned long long>(seed));
  std::printf("locations %ld, failures %ld\n", r.locations, r.failures);
  std::printf("p_fail %s, CI95 [%s, %s]\n", th::format_prob(r.p_fail).c_str(),
              th::format_prob(r.ci_low).c_str(),
              th::format_prob(r.ci_high).c_str());
  return 0;
}

// ---- fault-scan -----------------------------------------------------------

int run_fault_scan(Scenario scenario, const std::string& fmt) {
  namespace fs = qstripe::fault_sim;
  const fs::ScenarioCircuit sc = fs::build_scenario(scenario);
  const fs::ExhaustiveResult r = fs::exhaustive_single_fault(sc);

  if (fmt == "json") {
    ordered_json j;
    j["schema"] = "qstripe.fault-scan.v1";
    j["scenario"] = fs::to_string(scenario);
    j["cases"] = r.cases;
    j["failure_count"] = static_cast<long>(r.failures.size());
    j["failures"] = ordered_json::array();
    for (const auto& f : r.failures)
      j["failures"].push_back({{"timestep", f.timestep},
                               {"gate_index", f.gate_index},
                               {"pauli", int(f.pauli)}});
    emit_json(j);
    return 0;
  }
  if (fmt == "csv") {
    std::printf("timestep,gate_index,pauli\n");
    for (const auto& f : r.failures)
      std::printf("%d,%d,%d\n", f.timestep, f.gate_index, int(f.pauli));
    return 0;
  }
  std::printf("scenario %s: %ld cases, %zu failures\n",
              fs::to_string(scenario), r.cases, r.failures.size());
  for (const auto& f : r.failures)
    std::printf("failure: timestep %d gate %d pauli %d\n", f.timestep,
                f.gate_index, int(f.pauli));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource counts, thresholds, and fault simulation for "
               "concatenated [7,1,3] encoding on nearest-neighbor stripes"};
  app.require_subcommand(1);

  const auto models = CLI::IsMember({"free", "recnot", "swap"});
  const auto preps = CLI::IsMember({"none", "inline"});
  const auto scenarios = CLI::IsMember({"ec-only", "cnot-ec"});

  auto* c_table = app.add_subcommand("table", "Six-row threshold table");
  std::string table_fmt = "text";
  add_format(c_table, table_fmt);

  auto* c_counts = app.add_subcommand("counts", "Per-level operation counts");
  std::string counts_model, counts_prep, counts_fmt = "text";
  c_counts->add_option("--model", counts_model, "Communication model")
      ->required()
      ->check(models);
  c_counts->add_option("--prep", counts_prep, "Zero preparation: none|inline")
      ->required()
      ->check(preps);
  add_format(c_counts, counts_fmt);

  auto* c_thresh = app.add_subcommand("threshold", "P_th and phi_th");
  std::string th_model, th_prep, th_fmt = "text";
  c_thresh->add_option("--model", th_model, "Communication model")
      ->required()
      ->check(models);
  c_thresh->add_option("--prep", th_prep, "Zero preparation: none|inline")
      ->required()
      ->check(preps);
  add_format(c_thresh, th_fmt);

  auto* c_logerr =
      app.add_subcommand("logical-error", "Logical error rate at a level");
  double le_eps = 0.0;
  int le_levels = 0;
  std::string le_model, le_prep, le_fmt = "text";
  c_logerr->add_option("--epsilon", le_eps, "Physical error probability")
      ->required();
  c_logerr->add_option("--levels", le_levels, "Concatenation level")
      ->required();
  c_logerr->add_option("--model", le_model, "Communication model")
      ->required()
      ->check(models);
  c_logerr->add_option("--prep", le_prep, "Zero preparation: none|inline")
      ->required()
      ->check(preps);
  add_format(c_logerr, le_fmt);

  auto* c_depth =
      app.add_subcommand("depth", "Smallest level reaching a target length");
  double d_length = 0.0, d_eps = 0.0, d_pth = 0.0;
  std::string d_model, d_prep, d_fmt = "text";
  c_depth->add_option("--length", d_length, "Target computation length")
      ->required();
  c_depth->add_option("--epsilon", d_eps, "Physical error probability")
      ->required();
  auto* d_pth_opt =
      c_depth->add_option("--pth", d_pth, "Threshold probability");
  auto* d_model_opt = c_depth->add_option("--model", d_model,
                                          "Communication model")
                          ->check(models);
  auto* d_prep_opt =
      c_depth->add_option("--prep", d_prep, "Zero preparation: none|inline")
          ->check(preps);
  d_pth_opt->excludes(d_model_opt);
  d_pth_opt->excludes(d_prep_opt);
  add_format(c_depth, d_fmt);

  auto* c_res = app.add_subcommand("resources", "Physical resources at a level");
  int r_levels = 0;
  std::string r_prep, r_fmt = "text";
  c_res->add_option("--levels", r_levels, "Concatenation level")->required();
  c_res->add_option("--prep", r_prep, "Zero preparation: none|inline")
      ->required()
      ->check(preps);
  add_format(c_res, r_fmt);

  auto* c_expand =
      app.add_subcommand("expand", "Emit an explicit circuit as JSON");
  std::string e_block, e_prep = "none";
  c_expand->add_option("--block", e_block, "Building block to expand")
      ->required()
      ->check(CLI::IsMember(
          {"swap", "zero-prep", "ec", "remote-cnot", "cnot-rows"}));
  c_expand->add_option("--prep", e_prep, "Zero preparation: none|inline")
      ->check(preps);

  auto* c_val =
      app.add_subcommand("validate", "Nearest-neighbor check of a circuit file");
  std::string v_file, v_fmt = "text";
  c_val->add_option("file", v_file, "Circuit JSON file")->required();
  add_format(c_val, v_fmt);

  auto* c_sim = app.add_subcommand("simulate", "Monte Carlo failure sampling");
  std::string s_scenario, s_fmt = "text";
  double s_eps = 0.0;
  long s_trials = 0;
  uint64_t s_seed = 0;
  c_sim->add_option("--scenario", s_scenario, "ec-only or cnot-ec")
      ->required()
      ->check(scenarios);
  c_sim->add_option("--epsilon", s_eps, "Per-gate fault probability")
      ->required();
  c_sim->add_option("--trials", s_trials, "Trial count")->required();
  c_sim->add_option("--seed", s_seed, "Random seed")->required();
  add_format(c_sim, s_fmt);

  auto* c_scan =
      app.add_subcommand("fault-scan", "Exhaustive single-fault enumeration");
  std::string fs_scenario, fs_fmt = "text";
  c_scan->add_option("--scenario", fs_scenario, "ec-only or cnot-ec")
      ->required()
      ->check(scenarios);
  add_format(c_scan, fs_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*c_table) return run_table(table_fmt);
    if (*c_counts)
      return run_counts(parse_model(counts_model), parse_prep(counts_prep),
                        counts_fmt);
    if (*c_thresh)
      return run_threshold(parse_model(th_model), parse_prep(th_prep), th_fmt);
    if (*c_logerr)
      return run_logical_error(le_eps, le_levels, parse_model(le_model),
                               parse_prep(le_prep), le_fmt);
    if (*c_depth) {
      double pth = d_pth;
      if (d_pth_opt->count() == 0) {
        if (d_model_opt->count() == 0 || d_prep_opt->count() == 0) {
          std::fprintf(
              stderr,
              "error: depth needs --pth or both --model and --prep\n");
          return 2;
        }
        pth = qstripe::threshold::p_threshold(qstripe::cost_model::level_cost(
            parse_model(d_model), parse_prep(d_prep)));
      }
      return run_depth(d_length, d_eps, pth, d_fmt);
    }
    if (*c_res) return run_resources(r_levels, parse_prep(r_prep), r_fmt);
    if (*c_expand) return run_expand(e_block, parse_prep(e_prep));
    if (*c_val) return run_validate(v_file, v_fmt);
    if (*c_sim)
      return run_simulate(parse_scenario(s_scenario), s_eps, s_trials, s_seed,
                          s_fmt);
    if (*c_scan) return run_fault_scan(parse_scenario(fs_scenario), fs_fmt);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
