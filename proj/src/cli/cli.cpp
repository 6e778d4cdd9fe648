#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/csv_input.hpp"
#include "cli/report_json.hpp"
#include "lasd/bootstrap.hpp"
#include "lasd/criterion.hpp"
#include "lasd/error.hpp"
#include "lasd/makarov.hpp"
#include "lasd/parallel.hpp"
#include "lasd/simulate.hpp"

namespace lasd::cli {

namespace {

using nlohmann::json;

struct Options {
  // inputs
  std::string input_a, input_b, input_0, input;
  std::string data, column = "value", group_column = "group";
  std::string label_a = "A", label_b = "B", label_0 = "Control";
  // inference
  double alpha = 0.05;
  std::size_t reps = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> stats;
  double an_mult = 1.0, bn_mult = 1.0, cn_mult = 1.0, dn_mult = 1.0;
  std::size_t grid = kDefaultXPoints;
  int threads = 0;
  // outputs
  std::string out_json, out_trace, out_csv;
  // svf
  std::string function = "cube", table;
  bool no_check = false;
  // simulate
  std::string spec;
  std::size_t reps_mc = 0;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw InputError("failed writing '" + path + "'");
}

void emit_json(const Options& o, const json& doc, std::ostream& out) {
  const auto text = doc.dump(2) + "\n";
  if (o.out_json.empty()) {
    out << text;
  } else {
    write_file(o.out_json, text);
  }
}

/// Samples by role, from per-group files or one grouped file.
std::vector<Sample> load_samples(const Options& o, bool with_control) {
  std::vector<std::pair<Label, std::string>> roles{{Label::A, o.label_a}, {Label::B, o.label_b}};
  if (with_control) roles.insert(roles.begin(), {Label::Control, o.label_0});
  std::vector<Sample> out;
  if (!o.data.empty()) {
    if (!o.input_a.empty() || !o.input_b.empty() || !o.input_0.empty()) {
      throw ConfigError("use either --data or per-group --input-* files, not both");
    }
    const auto groups = read_groups(read_csv(o.data), o.column, o.group_column);
    for (const auto& [label, name] : roles) {
      const auto it = groups.find(name);
      if (it == groups.end()) throw InputError("group '" + name + "' not found in '" + o.data + "'");
      out.emplace_back(it->second, label);
    }
    return out;
  }
  for (const auto& [label, name] : roles) {
    const std::string& path = label == Label::A ? o.input_a : (label == Label::B ? o.input_b : o.input_0);
    if (path.empty()) {
      const char* flag = label == Label::A ? "--input-a" : (label == Label::B ? "--input-b" : "--input-0");
      throw InputError(std::string("missing input for group ") + std::string(to_string(label)) + " (" + flag + ")");
    }
    out.emplace_back(read_column(read_csv(path), o.column), label);
  }
  return out;
}

std::vector<StatisticKind> select_kinds(const std::vector<std::string>& requested,
                                        const std::vector<std::pair<std::string, StatisticKind>>& allowed) {
  std::vector<StatisticKind> out;
  const auto add = [&](StatisticKind k) {
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  };
  if (requested.empty()) {
    for (const auto& [name, kind] : allowed) add(kind);
    return out;
  }
  for (const auto& r : requested) {
    if (r == "all") {
      for (const auto& [name, kind] : allowed) add(kind);
      continue;
    }
    bool found = false;
    const auto parsed = parse_statistic_kind(r);
    for (const auto& [name, kind] : allowed) {
      if (name == r || (parsed && *parsed == kind)) {
        add(kind);
        found = true;
      }
    }
    if (!found) {
      std::string names;
      for (const auto& [name, kind] : allowed) names += (names.empty() ? "" : ", ") + name;
      throw ConfigError("statistic '" + r + "' is not available here; choose from " + names + ", all");
    }
  }
  return out;
}

BootstrapConfig boot_config(const Options& o) {
  BootstrapConfig c;
  c.alpha = o.alpha;
  c.reps = o.reps;
  c.seed = o.seed;
  c.multipliers = {o.an_mult, o.bn_mult, o.cn_mult, o.dn_mult};
  c.x_points = o.grid;
  return c;
}

json reports_doc(const std::string& command, const std::vector<TestReport>& reports) {
  json list = json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"reports", std::move(list)}};
}

void cmd_test_point(const Options& o, std::ostream& out) {
  const auto kinds = select_kinds(o.stats, {{"v1", StatisticKind::V1},
                                            {"v2", StatisticKind::V2},
                                            {"w1", StatisticKind::W1},
                                            {"w2", StatisticKind::W2}});
  const auto samples = load_samples(o, false);
  const auto reports = run_point_tests(samples[0], samples[1], kinds, boot_config(o));
  const auto grid = build_evaluation_set(std::span<const Sample>(samples));
  const auto crit = evaluate_criterion(build_ecdf(samples[0]), build_ecdf(samples[1]), grid);
  auto doc = reports_doc("test-point", reports);
  doc["diagnostics"] = {{"grid_size", grid.size()}, {"x_max", grid.x_max}, {"eps", grid.eps}};
  emit_json(o, doc, out);
  if (!o.out_trace.empty()) {
    std::string text = "x,t1,m1,m2\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      text += fmt(grid.points[i]) + "," + fmt(crit.t1.values[i]) + "," + fmt(crit.m1.values[i]) + "," +
              fmt(crit.m2.values[i]) + "\n";
    }
    write_file(o.out_trace, text);
  }
}

void cmd_test_partial(const Options& o, std::ostream& out) {
  const auto kinds = select_kinds(o.stats, {{"v3", StatisticKind::V3}, {"w3", StatisticKind::W3}});
  const auto samples = load_samples(o, true);
  const auto reports = run_partial_tests(samples[0], samples[1], samples[2], kinds, boot_config(o));
  const auto grid = build_grid2d(samples[0], samples[1], samples[2], o.grid);
  const auto g0 = build_ecdf(samples[0]);
  const auto ga = build_ecdf(samples[1]);
  const auto gb = build_ecdf(samples[2]);
  const auto crit = evaluate_partial_criterion(g0, ga, gb, grid);
  auto doc = reports_doc("test-partial", reports);
  doc["diagnostics"] = {{"grid_size", grid.x_points.size()},
                        {"x_max", grid.x_points.back()},
                        {"max_t3", crit.t3.max_value()},
                        {"sufficient_bound_condition", sufficient_bound_condition(g0, ga, gb, grid.x_points)}};
  emit_json(o, doc, out);
  if (!o.out_trace.empty()) {
    std::string text = "x,L_A_neg,L_A_pos,U_B_neg,U_B_pos,t3\n";
    for (std::size_t i = 0; i < crit.x_points.size(); ++i) {
      text += fmt(crit.x_points[i]) + "," + fmt(crit.lower_a_neg[i]) + "," + fmt(crit.lower_a_pos[i]) + "," +
              fmt(crit.upper_b_neg[i]) + "," + fmt(crit.upper_b_pos[i]) + "," + fmt(crit.t3.values[i]) + "\n";
    }
    write_file(o.out_trace, text);
  }
}

void cmd_fosd(const Options& o, std::ostream& out) {
  const auto kinds = select_kinds(o.stats, {{"ks", StatisticKind::FosdKs}, {"cvm", StatisticKind::FosdCvm}});
  const auto samples = load_samples(o, false);
  const auto reports = run_point_tests(samples[0], samples[1], kinds, boot_config(o));
  emit_json(o, reports_doc("fosd", reports), out);
  if (!o.out_trace.empty()) {
    const auto levels = build_support_grid(std::span<const Sample>(samples));
    const auto diff = fosd_process(build_ecdf(samples[0]), build_ecdf(samples[1]), levels);
    std::string text = "x,diff\n";
    for (std::size_t i = 0; i < levels.size(); ++i) text += fmt(levels[i]) + "," + fmt(diff.values[i]) + "\n";
    write_file(o.out_trace, text);
  }
}

void cmd_svf(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw InputError("svf needs --input");
  ValueFunction v;
  if (o.function == "cube") {
    v = cube_value_function();
  } else if (o.function == "signed_cbrt") {
    v = signed_cbrt_value_function();
  } else if (o.function == "linear") {
    v = linear_value_function();
  } else if (o.function == "table") {
    if (o.table.empty()) throw ConfigError("--function table needs --table <csv with columns x,v>");
    const auto t = read_csv(o.table);
    v = table_value_function(read_column(t, "x"), read_column(t, "v"));
  } else {
    throw ConfigError("unknown value function '" + o.function + "'; choose cube, signed_cbrt, linear or table");
  }
  const Sample sample(read_column(read_csv(o.input), o.column), Label::A);
  const auto dist = DiscreteDistribution::from_sample(sample);
  const double w = evaluate_svf(dist, v, !o.no_check);
  emit_json(o,
            {{"schema_version", kSchemaVersion},
             {"command", "svf"},
             {"function", o.function},
             {"n", sample.size()},
             {"W_value", w}},
            out);
}

void cmd_simulate(const Options& o, std::ostream& out) {
  if (o.spec.empty()) throw ConfigError("simulate needs --spec <scenario.json>");
  std::ifstream f(o.spec);
  if (!f) throw InputError("cannot open scenario file '" + o.spec + "'");
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError("scenario file '" + o.spec + "' is not valid JSON: " + e.what());
  }
  auto spec = scenario_from_json(doc);
  if (o.reps_mc > 0) spec.reps_mc = o.reps_mc;
  if (o.reps > 0) spec.bootstrap.reps = o.reps;
  const auto csv = run_scenario(spec).to_csv();
  if (o.out_csv.empty()) {
    out << csv;
  } else {
    write_file(o.out_csv, csv);
  }
}

void add_inference(CLI::App* sub, Options& o, bool partial) {
  sub->add_option("--alpha", o.alpha, "Nominal size in (0, 1)")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sub->add_option("--reps", o.reps, "Bootstrap repetitions (default by sample size: 499, 999 or 1999)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "Root seed")->capture_default_str();
  sub->add_option("--stat", o.stats, "Statistics to compute (comma separated, or all)")->delimiter(',');
  sub->add_option("--an-mult", o.an_mult, "Multiplier on the default a_n")->check(CLI::PositiveNumber);
  sub->add_option("--bn-mult", o.bn_mult, "Multiplier on the default b_n")->check(CLI::PositiveNumber);
  sub->add_option("--cn-mult", o.cn_mult, "Multiplier on the default c_n")->check(CLI::PositiveNumber);
  sub->add_option("--dn-mult", o.dn_mult, "Multiplier on the default d_n")->check(CLI::PositiveNumber);
  if (partial) {
    sub->add_option("--grid", o.grid, "Number of x points")->check(CLI::Range(2, 1 << 20))->capture_default_str();
  }
  sub->add_option("--out-json", o.out_json, "Write the JSON report here instead of stdout");
  sub->add_option("--out-trace", o.out_trace, "Write the criterion trace CSV here");
}

void add_inputs(CLI::App* sub, Options& o, bool control) {
  sub->add_option("--input-a", o.input_a, "CSV file for group A");
  sub->add_option("--input-b", o.input_b, "CSV file for group B");
  if (control) sub->add_option("--input-0", o.input_0, "CSV file for the control group");
  sub->add_option("--data", o.data, "One CSV holding all groups, split by --group-column");
  sub->add_option("--column", o.column, "Value column, by header name or 0-based index")->capture_default_str();
  sub->add_option("--group-column", o.group_column, "Group column for --data")->capture_default_str();
  sub->add_option("--label-a", o.label_a, "Group value for A in --data")->capture_default_str();
  sub->add_option("--label-b", o.label_b, "Group value for B in --data")->capture_default_str();
  if (control) sub->add_option("--label-0", o.label_0, "Group value for the control in --data")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Loss aversion-sensitive dominance tests"};
  app.name("lasd");
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "Worker threads (falls back to LASD_THREADS)")->check(CLI::PositiveNumber);

  auto* point = app.add_subcommand("test-point", "Test A over B from two samples of gains and losses");
  add_inputs(point, o, false);
  add_inference(point, o, false);

  auto* partial = app.add_subcommand("test-partial", "Test A over B from control, A and B samples of levels");
  add_inputs(partial, o, true);
  add_inference(partial, o, true);

  auto* fosd = app.add_subcommand("fosd", "First-order dominance test on levels");
  add_inputs(fosd, o, false);
  add_inference(fosd, o, false);

  auto* svf = app.add_subcommand("svf", "Social value of an empirical distribution of changes");
  svf->add_option("--input", o.input, "CSV file of changes")->required();
  svf->add_option("--column", o.column, "Value column")->capture_default_str();
  svf->add_option("--function", o.function, "cube, signed_cbrt, linear or table")->capture_default_str();
  svf->add_option("--table", o.table, "CSV with columns x,v for --function table");
  svf->add_flag("--no-check", o.no_check, "Skip the value-function property checks");
  svf->add_option("--out-json", o.out_json, "Write JSON here instead of stdout");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo rejection rates for a scenario file");
  sim->add_option("--spec", o.spec, "Scenario JSON file")->required();
  sim->add_option("--reps-mc", o.reps_mc, "Override the scenario's Monte Carlo repetitions")
      ->check(CLI::PositiveNumber);
  sim->add_option("--reps", o.reps, "Override the bootstrap repetitions")->check(CLI::PositiveNumber);
  sim->add_option("--out-csv", o.out_csv, "Write the rejection table here instead of stdout");
  for (auto* sub : {point, partial, fosd, svf, sim}) {
    sub->add_option("--threads", o.threads, "Worker threads (falls back to LASD_THREADS)")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConfigError;
  }

  try {
    set_threads(resolve_threads(o.threads));
    if (point->parsed()) {
      cmd_test_point(o, out);
    } else if (partial->parsed()) {
      cmd_test_partial(o, out);
    } else if (fosd->parsed()) {
      cmd_fosd(o, out);
    } else if (svf->parsed()) {
      cmd_svf(o, out);
    } else if (sim->parsed()) {
      cmd_simulate(o, out);
    }
  } catch (const InputError& e) {
    err << "lasd: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PropertyViolation& e) {
    err << "lasd: value function fails property '" << e.property() << "': " << e.what() << "\n";
    return kInputError;
  } catch (const ConfigError& e) {
    err << "lasd: config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "lasd: error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}

}  // namespace lasd::cli
