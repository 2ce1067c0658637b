#include "rkhs/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "rkhs/blaschke.hpp"
#include "rkhs/closed_forms.hpp"
#include "rkhs/evolution.hpp"
#include "rkhs/io.hpp"
#include "rkhs/verify.hpp"

namespace rkhs {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::config, msg); }

double as_double(const json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    std::size_t used = 0;
    try {
      const double d = std::stod(s, &used);
      if (used == s.size()) return d;
    } catch (const std::exception&) {
    }
  }
  config_error("'" + key + "' must be a number");
}

long long as_integer(const json& v, const std::string& key) {
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    std::size_t used = 0;
    try {
      const long long i = std::stoll(s, &used);
      if (used == s.size()) return i;
    } catch (const std::exception&) {
    }
  }
  config_error("'" + key + "' must be an integer");
}

std::string as_string(const json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (key == "kernel" && v.is_object()) return v.dump();
  config_error("'" + key + "' must be a string");
}

using Setter = std::function<void(RunConfig&, const json&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"command", [](RunConfig& c, const json& v, const std::string& k) { c.command = as_string(v, k); }},
      {"family", [](RunConfig& c, const json& v, const std::string& k) { c.family = as_string(v, k); }},
      {"n", [](RunConfig& c, const json& v, const std::string& k) { c.n = static_cast<int>(as_integer(v, k)); }},
      {"a", [](RunConfig& c, const json& v, const std::string& k) { c.a = as_double(v, k); }},
      {"lambda", [](RunConfig& c, const json& v, const std::string& k) { c.lambda = as_double(v, k); }},
      {"q", [](RunConfig& c, const json& v, const std::string& k) { c.q = as_double(v, k); }},
      {"p", [](RunConfig& c, const json& v, const std::string& k) { c.p = static_cast<int>(as_integer(v, k)); }},
      {"gamma", [](RunConfig& c, const json& v, const std::string& k) { c.gamma = as_double(v, k); }},
      {"kernel", [](RunConfig& c, const json& v, const std::string& k) { c.kernel = as_string(v, k); }},
      {"k", [](RunConfig& c, const json& v, const std::string& k) { c.k = static_cast<int>(as_integer(v, k)); }},
      {"t", [](RunConfig& c, const json& v, const std::string& k) { c.t = as_double(v, k); }},
      {"xmin", [](RunConfig& c, const json& v, const std::string& k) { c.xmin = as_double(v, k); }},
      {"xmax", [](RunConfig& c, const json& v, const std::string& k) { c.xmax = as_double(v, k); }},
      {"points", [](RunConfig& c, const json& v, const std::string& k) { c.points = static_cast<int>(as_integer(v, k)); }},
      {"in", [](RunConfig& c, const json& v, const std::string& k) { c.in = as_string(v, k); }},
      {"out", [](RunConfig& c, const json& v, const std::string& k) { c.out = as_string(v, k); }},
      {"format", [](RunConfig& c, const json& v, const std::string& k) { c.format = as_string(v, k); }},
      {"script", [](RunConfig& c, const json& v, const std::string& k) { c.script = as_string(v, k); }},
      {"which", [](RunConfig& c, const json& v, const std::string& k) { c.which = as_string(v, k); }},
      {"precision", [](RunConfig& c, const json& v, const std::string& k) { c.precision = as_string(v, k); }},
      {"seed", [](RunConfig& c, const json& v, const std::string& k) {
         const long long s = as_integer(v, k);
         if (s < 0) config_error("'seed' must be nonnegative");
         c.seed = static_cast<std::uint64_t>(s);
       }},
  };
  return table;
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_text_file(c.out, text);
  }
}

void emit_table(const RunConfig& c, std::ostream& out, const CsvTable& t) {
  std::ostringstream os;
  write_csv(os, t);
  emit(c, out, os.str());
}

std::string fmt(double v) { return format_double(v); }

// --- gen-data -------------------------------------------------------------

struct GeneratedData {
  ComplexVector inputs;
  ComplexVector outputs;
  KernelSpec kernel;
};

SuperFamily super_family(const RunConfig& c) {
  if (c.family == "fock") return SuperFamily::fock();
  if (c.family == "rbf-first") return SuperFamily::rbf_first();
  if (c.family == "rbf-second") return SuperFamily::rbf_second();
  if (c.family == "ml") return SuperFamily::mittag_leffler(c.q);
  if (c.family == "touchard") return SuperFamily::touchard(c.p);
  fail(ErrorKind::input, "unknown family '" + c.family + "'");
}

GeneratedData generate_data(const RunConfig& c) {
  const std::string family = c.family.empty() ? "fock-classical" : c.family;
  if (family == "blaschke") {
    std::mt19937_64 rng(c.seed);
    const BlaschkeProduct b = random_blaschke(rng, static_cast<std::size_t>(std::max(c.n, 0)));
    return {b.roots(), blaschke_oracle_outputs(b, c.lambda), KernelSpec::szego()};
  }
  const SuperoscParams params = classical_params(c.n, c.a);
  if (family == "fock-classical")
    return {params.centers(), fock_outputs_classical(c.n, c.a, c.lambda), KernelSpec::fock()};
  const SuperFamily f = super_family(c);
  return {params.centers(), oracle_outputs(f, params, c.lambda), f.kernel()};
}

void cmd_gen_data(const RunConfig& c, std::ostream& out) {
  GeneratedData d = generate_data(c);
  const LabeledDataset data(d.inputs, d.outputs, c.lambda);
  if (c.format == "json") {
    json j = to_json(data, d.kernel);
    j["family"] = c.family.empty() ? "fock-classical" : c.family;
    j["n"] = c.n;
    j["a"] = c.a;
    emit(c, out, j.dump(2) + "\n");
    return;
  }
  CsvTable t = to_table(data, d.kernel);
  t.metadata.insert(t.metadata.begin() + 1, {{"family", c.family.empty() ? "fock-classical" : c.family}, {"n", std::to_string(c.n)}, {"a", fmt(c.a)}});
  emit_table(c, out, t);
}

// --- fit ------------------------------------------------------------------

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void cmd_fit(const RunConfig& c, std::ostream& out) {
  if (c.in.empty()) fail(ErrorKind::input, "fit needs --in");
  KernelSpec kernel;
  std::optional<LabeledDataset> data;
  if (ends_with(c.in, ".json")) {
    std::ifstream f(c.in);
    if (!f) fail(ErrorKind::io, "cannot open '" + c.in + "'");
    json j;
    try {
      j = json::parse(f);
    } catch (const json::exception& e) {
      fail(ErrorKind::io, std::string("bad JSON input: ") + e.what());
    }
    data.emplace(dataset_from_json(j));
    if (j.contains("kernel")) kernel = kernel_from_json(j["kernel"]);
  } else {
    const CsvTable t = read_csv_file(c.in);
    data.emplace(dataset_from_table(t));
    for (const auto& [key, value] : t.metadata)
      if (key == "kernel") {
        try {
          kernel = kernel_from_json(json::parse(value));
        } catch (const json::exception& e) {
          fail(ErrorKind::io, std::string("bad kernel metadata: ") + e.what());
        }
      }
  }
  if (!c.kernel.empty()) {
    try {
      kernel = kernel_from_json(json::parse(c.kernel));
    } catch (const json::exception& e) {
      config_error(std::string("bad --kernel JSON: ") + e.what());
    }
  }
  const FitResult r = fit(*data, kernel);
  if (c.format == "json") {
    json j = to_json(r.expansion);
    j["pivot_ratio"] = r.pivot_ratio;
    j["warnings"] = r.warnings;
    emit(c, out, j.dump(2) + "\n");
    return;
  }
  CsvTable t = to_table(r.expansion);
  t.metadata.emplace_back("lambda", fmt(data->lambda()));
  t.metadata.emplace_back("pivot_ratio", fmt(r.pivot_ratio));
  t.metadata.emplace_back("warnings", std::to_string(r.warnings.size()));
  emit_table(c, out, t);
}

// --- verify ---------------------------------------------------------------

void cmd_verify(const RunConfig& c, std::ostream& out) {
  VerifyConfig v;
  v.family = c.family.empty() ? "all" : c.family;
  v.n = c.n;
  v.a = c.a;
  v.lambda = c.lambda;
  v.q = c.q;
  v.p = c.p;
  v.seed = c.seed;
  v.precision = c.precision;
  json reports = json::array();
  for (const auto& r : run_verification(v)) reports.push_back(to_json(r));
  emit(c, out, json{{"reports", reports}}.dump(2) + "\n");
}

// --- evolve ---------------------------------------------------------------

Grid grid_of(const RunConfig& c) {
  if (c.points <= 0) fail(ErrorKind::input, "points must be positive");
  Grid g{c.xmin, c.xmax, static_cast<std::size_t>(c.points)};
  g.validate();
  return g;
}

CsvTable evolution_table(const RunConfig& c) {
  const Grid g = grid_of(c);
  const SuperoscParams params = classical_params(c.n, c.a);
  const int k = c.k;
  const EvolutionField initial = sample_field(g, 0.0, [&](double x) { return initial_datum(x, k, params); });
  const EvolutionField prop = fourier_propagate(initial, c.t);
  const EvolutionField closed = sample_field(g, c.t, [&](double x) {
    return k == 0 ? psi_free(x, c.t, params) : phi_free(x, c.t, k, params);
  });
  CsvTable t;
  t.metadata = {{"kind", "evolution"}, {"n", std::to_string(c.n)}, {"a", fmt(c.a)},
                {"k", std::to_string(k)}, {"t", fmt(c.t)}, {"xmin", fmt(g.x_min)},
                {"xmax", fmt(g.x_max)}, {"points", std::to_string(g.points)},
                {"l2_rel_gap", fmt(rel_l2_err(closed.values(), prop.values()))}};
  t.columns = {"x", "re_psi", "im_psi", "abs_psi", "re_prop", "im_prop", "abs_prop"};
  for (std::size_t j = 0; j < g.points; ++j) {
    const Complex a = closed.values()[j], b = prop.values()[j];
    t.rows.push_back({g.x(j), a.real(), a.imag(), std::abs(a), b.real(), b.imag(), std::abs(b)});
  }
  return t;
}

void cmd_evolve(const RunConfig& c, std::ostream& out) { emit_table(c, out, evolution_table(c)); }

// --- figure ---------------------------------------------------------------

CsvTable outputs_table(const std::string& which, const RunConfig& c, const ComplexVector& z,
                       const std::vector<std::pair<std::string, ComplexVector>> series) {
  CsvTable t;
  t.metadata = {{"figure", which}, {"n", std::to_string(c.n)}, {"a", fmt(c.a)}, {"lambda", fmt(c.lambda)}};
  t.columns = {"k", "re_z", "im_z"};
  for (const auto& [name, _] : series) {
    t.columns.push_back("re_" + name);
    t.columns.push_back("im_" + name);
    t.columns.push_back("abs_" + name);
  }
  for (std::size_t k = 0; k < z.size(); ++k) {
    std::vector<double> row = {static_cast<double>(k), z[k].real(), z[k].imag()};
    for (const auto& [_, w] : series) {
      row.push_back(w[k].real());
      row.push_back(w[k].imag());
      row.push_back(std::abs(w[k]));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

ComplexVector figure_roots(int n, bool imaginary) {
  ComplexVector roots(n);
  for (int k = 0; k < n; ++k) {
    const double r = 0.9 * (k + 1) / (n + 1) * (k % 2 ? -1.0 : 1.0);
    roots[k] = imaginary ? Complex(0.0, r) : Complex(r, 0.0);
  }
  return roots;
}

struct Figure {
  CsvTable table;
  std::string script;
};

std::string script_for(const std::string& which, const std::string& data_path, const std::string& x,
                       const std::vector<std::string>& ys) {
  std::ostringstream s;
  s << "set datafile separator ','\nset key autotitle columnhead\nset title '" << which << "'\n";
  s << "plot";
  for (std::size_t i = 0; i < ys.size(); ++i)
    s << (i ? "," : "") << " '" << data_path << "' using '" << x << "':'" << ys[i]
      << "' with linespoints";
  s << "\n";
  return s.str();
}

Figure make_figure(const RunConfig& c) {
  const std::string& w = c.which;
  const std::string data_path = c.out.empty() ? "figure.csv" : c.out;
  if (w == "ex1") {
    const SuperoscParams params = classical_params(c.n, c.a);
    CsvTable t = outputs_table(w, c, params.centers(), {{"w", fock_outputs_classical(c.n, c.a, c.lambda)}});
    return {t, script_for(w, data_path, "k", {"re_w", "abs_w"})};
  }
  if (w == "rbf") {
    const SuperoscParams params = classical_params(c.n, c.a);
    CsvTable t = outputs_table(w, c, params.centers(),
                               {{"w_first", rbf_outputs_classical_first_resolved(c.n, c.a, c.lambda)},
                                {"w_second", rbf_outputs_classical_second_resolved(c.n, c.a, c.lambda)}});
    return {t, script_for(w, data_path, "k", {"re_w_first", "re_w_second"})};
  }
  if (w == "blaschke-real" || w == "blaschke-imag") {
    const BlaschkeProduct b(figure_roots(c.n, w == "blaschke-imag"));
    CsvTable t = outputs_table(w, c, b.roots(), {{"w", blaschke_outputs(b, c.lambda)}});
    return {t, script_for(w, data_path, "k", {"re_w", "im_w"})};
  }
  if (w == "touchard") {
    const SuperoscParams params = classical_params(c.n, c.a);
    CsvTable t = outputs_table(w, c, params.centers(),
                               {{"w", touchard_outputs_p1_closed_resolved(c.n, c.a, c.lambda)}});
    return {t, script_for(w, data_path, "k", {"re_w", "abs_w"})};
  }
  if (w == "superosc") {
    const SuperoscParams params = classical_params(c.n, c.a);
    const Grid g = grid_of(c);
    ComplexVector xs(g.points);
    for (std::size_t j = 0; j < g.points; ++j) xs[j] = g.x(j);
    const ComplexVector f = generate(SuperFamily::fock(), params, xs, Precision::extended);
    CsvTable t;
    t.metadata = {{"figure", w}, {"n", std::to_string(c.n)}, {"a", fmt(c.a)}};
    t.columns = {"x", "re_f", "im_f", "abs_f", "re_limit", "im_limit"};
    for (std::size_t j = 0; j < g.points; ++j) {
      const Complex lim = supershift_limit(SuperFamily::fock(), c.a, xs[j]);
      t.rows.push_back({xs[j].real(), f[j].real(), f[j].imag(), std::abs(f[j]), lim.real(), lim.imag()});
    }
    return {t, script_for(w, data_path, "x", {"re_f", "re_limit"})};
  }
  if (w == "evolution") {
    return {evolution_table(c), script_for(w, data_path, "x", {"abs_psi", "abs_prop"})};
  }
  fail(ErrorKind::input, "unknown figure '" + w + "'");
}

void cmd_figure(const RunConfig& c, std::ostream& out) {
  const Figure f = make_figure(c);
  emit_table(c, out, f.table);
  if (!c.script.empty()) write_text_file(c.script, f.script);
}

void report_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << std::endl;
}

}  // namespace

RunConfig merge_config(const json& j, RunConfig base) {
  if (!j.is_object()) config_error("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    const auto it = setters().find(key);
    if (it == setters().end()) config_error("unknown config key '" + key + "'");
    it->second(base, value, key);
  }
  return base;
}

void run(const RunConfig& c, std::ostream& out) {
  if (c.format != "csv" && c.format != "json") config_error("format must be csv or json");
  if (c.command == "gen-data") return cmd_gen_data(c, out);
  if (c.command == "fit") return cmd_fit(c, out);
  if (c.command == "verify") return cmd_verify(c, out);
  if (c.command == "evolve") return cmd_evolve(c, out);
  if (c.command == "figure") return cmd_figure(c, out);
  config_error("unknown command '" + c.command + "'");
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Complex kernel ridge regression, reverse learning and superoscillation tools", "rkhs"};
  app.require_subcommand(1);

  std::string config_path;
  std::map<std::string, std::string> flags;
  const std::vector<std::pair<std::string, std::string>> options = {
      {"family", "family: fock-classical|fock|rbf-first|rbf-second|ml|touchard|blaschke, or a verify family / all"},
      {"n", "superoscillation order n (or number of Blaschke roots)"},
      {"a", "superoscillation parameter a"},
      {"lambda", "ridge parameter"},
      {"q", "Mittag-Leffler parameter"},
      {"p", "Touchard parameter"},
      {"gamma", "RBF width"},
      {"kernel", "kernel spec as JSON, e.g. {\"family\":\"rbf\",\"gamma\":1.5}"},
      {"k", "Hermite order for evolve"},
      {"t", "time"},
      {"xmin", "grid left end"},
      {"xmax", "grid right end"},
      {"points", "grid size (power of two)"},
      {"in", "input file"},
      {"out", "output file (stdout when omitted)"},
      {"format", "csv or json"},
      {"script", "write a gnuplot script here (figure)"},
      {"which", "figure: ex1|rbf|blaschke-real|blaschke-imag|touchard|superosc|evolution"},
      {"precision", "auto|binary64|extended (verify)"},
      {"seed", "random seed"},
  };
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gen-data", "reverse learning: write the dataset a kernel expansion minimizes"},
      {"fit", "fit a kernel ridge regression to a dataset"},
      {"verify", "compare closed-form output formulas with the matrix oracle"},
      {"evolve", "free Schroedinger evolution: closed form vs Fourier propagator"},
      {"figure", "write figure data and an optional gnuplot script"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON config file; flags override it");
    for (const auto& [opt, ohelp] : options) sub->add_option("--" + opt, flags[opt], ohelp);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    RunConfig config;
    for (const auto* sub : app.get_subcommands()) config.command = sub->get_name();
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) config_error("cannot open config '" + config_path + "'");
      json j;
      try {
        j = json::parse(f);
      } catch (const json::exception& e) {
        config_error(std::string("bad config JSON: ") + e.what());
      }
      j.erase("command");
      config = merge_config(j, config);
    }
    json overrides = json::object();
    for (const auto* sub : app.get_subcommands())
      for (const auto& [opt, _] : options)
        if (sub->get_option("--" + opt)->count() > 0) overrides[opt] = flags[opt];
    config = merge_config(overrides, config);
    run(config, std::cout);
    std::cout.flush();
    return 0;
  } catch (const Error& e) {
    report_error(std::string(to_string(e.kind())), e.what());
    return e.kind() == ErrorKind::config ? 2 : 1;
  } catch (const std::exception& e) {
    report_error("internal", e.what());
    return 1;
  }
}

}  // namespace rkhs
