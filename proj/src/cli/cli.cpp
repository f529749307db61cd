#include "swapgate/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "cli/output.hpp"
#include "swapgate/fitting.hpp"

namespace swapgate {

namespace {

using nlohmann::json;
using cli::CsvWriter;
using cli::num;

constexpr const char* kVersion = "swapgate 0.1.0";

struct Options {
  double vab = 0.0;
  double v0 = 0.0;
  double v = 1.0;
  bool json_out = false;
  std::string sweep;
  std::string out;

  std::size_t grid = 2001;
  double emin = -3.0;
  double emax = 3.0;
  double eta = kDefaultEta;

  double tmax = 0.0;
  double dt = 0.01;
  std::string method = "analytic";
  std::size_t nsites = kDefaultChainSites;
  bool loglog = false;

  std::string vab_grid = "0:2.5:251";
  std::string v0_grid = "0.01:0.99:99";

  std::string input;
  std::string kind;
  std::string window;
  std::string column = "p_aa";
};

// Destination for data: the --out file or `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      os_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "' for writing");
      os_ = file_.get();
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

json pole_json(const Pole& p) {
  return {{"re", p.energy.real()},
          {"im", p.energy.imag()},
          {"sheet", to_string(p.sheet)},
          {"kind", std::string(to_string(p.kind))},
          {"residual", p.residual}};
}

json boundaries_json(const Boundaries& b) { return {{"b1", b.b1}, {"b2", b.b2}, {"b3", b.b3}, {"b4", b.b4}}; }

std::string region_name(Region r) { return std::string(to_string(r)); }

int cmd_poles(const Options& o, const json& config, std::ostream& out) {
  Sink sink(o.out, out);
  std::ostream& os = sink.stream();
  if (!o.sweep.empty()) {
    const cli::Range r = cli::parse_range(o.sweep);
    const Boundaries b = regime_boundaries(o.v0, o.v);
    CsvWriter csv(os, "poles", config);
    csv.comment("boundaries", boundaries_json(b).dump());
    csv.header({"vab", "re1", "im1", "re2", "im2", "kind1", "kind2", "region", "boundary"});
    auto emit = [&](double vab, const std::string& marker) {
      const RegimeParams p = validate_regime({vab, o.v0, o.v});
      const PoleSet ps = find_poles(p);
      const Pole &a = ps.physical(0), &c = ps.physical(1);
      csv.row({num(vab), num(a.energy.real()), num(a.energy.imag()), num(c.energy.real()), num(c.energy.imag()),
               std::string(to_string(a.kind)), std::string(to_string(c.kind)), region_name(classify(p).region),
               marker});
    };
    const auto values = r.values();
    const auto marks = b.as_array();
    std::size_t next_mark = 0;
    for (double vab : values) {
      while (next_mark < 4 && marks[next_mark] <= vab) {
        if (marks[next_mark] >= r.lo) emit(marks[next_mark], "b" + std::to_string(next_mark + 1));
        ++next_mark;
      }
      emit(vab, "");
    }
    return kExitOk;
  }

  const RegimeParams p = validate_regime({o.vab, o.v0, o.v});
  const PoleSet ps = find_poles(p);
  const Regime reg = classify(p);
  if (o.json_out) {
    json j;
    j["config"] = config;
    j["poles"] = json::array();
    for (const Pole& q : ps.poles) j["poles"].push_back(pole_json(q));
    j["physical_pair"] = {ps.physical_pair[0], ps.physical_pair[1]};
    j["region"] = region_name(reg.region);
    j["on_boundary"] = reg.on_boundary;
    j["boundaries"] = boundaries_json(reg.boundaries);
    j["omega_tilde"] = ps.omega_tilde;
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  os << "region " << region_name(reg.region) << (reg.on_boundary ? " (on boundary)" : "") << '\n';
  os << "omega_tilde " << num(ps.omega_tilde) << '\n';
  os << "boundaries b1=" << num(reg.boundaries.b1) << " b2=" << num(reg.boundaries.b2)
     << " b3=" << num(reg.boundaries.b3) << " b4=" << num(reg.boundaries.b4) << '\n';
  for (std::size_t i = 0; i < 4; ++i) {
    const Pole& q = ps.poles[i];
    const bool phys = i == ps.physical_pair[0] || i == ps.physical_pair[1];
    os << (phys ? "* " : "  ") << num(q.energy.real()) << ' ' << (q.energy.imag() < 0 ? "- " : "+ ")
       << num(std::abs(q.energy.imag())) << "i  " << to_string(q.sheet) << ' ' << to_string(q.kind)
       << "  residual " << num(q.residual) << '\n';
  }
  return kExitOk;
}

int cmd_ldos(const Options& o, const json& config, std::ostream& out) {
  if (o.grid < 2) throw Error(ErrorCode::InvalidArgument, "--grid needs at least 2 points");
  if (!(o.emin < o.emax)) throw Error(ErrorCode::InvalidArgument, "--emin must be below --emax");
  const RegimeParams p = validate_regime({o.vab, o.v0, o.v});
  const std::vector<double> grid = cli::Range{o.emin, o.emax, o.grid}.values();
  const SpectrumSeries direct = ldos_direct(p, grid, o.eta);
  const SpectrumSeries fact = ldos_factorized(p, grid);
  const LorentzianParams lp = lorentzian_params(p);

  json side;
  side["config"] = config;
  side["region"] = region_name(*fact.region);
  side["band_weight"] = fact.band_weight;
  side["residues"] = json::array();
  for (const LocalizedState& s : fact.localized) side["residues"].push_back({{"energy", s.energy}, {"weight", s.weight}});
  side["eta"] = o.eta;
  side["non_lorentzian"] = fact.non_lorentzian;
  side["factors"] = {{"center", {lp.center[0], lp.center[1]}},
                     {"gamma_sq", {lp.gamma_sq[0], lp.gamma_sq[1]}},
                     {"numerator", {lp.numerator[0], lp.numerator[1]}}};

  Sink sink(o.out, out);
  CsvWriter csv(sink.stream(), "ldos", config);
  if (o.out.empty()) {
    csv.comment("sidecar", side.dump());
  } else {
    std::ofstream js(o.out + ".json");
    if (!js) throw Error(ErrorCode::InvalidArgument, "cannot open '" + o.out + ".json' for writing");
    js << side.dump(2) << '\n';
  }
  csv.header({"eps", "n_a", "n_1", "l1", "l2"});
  for (std::size_t i = 0; i < grid.size(); ++i)
    csv.row({num(grid[i]), num(direct.n_a[i]), num(direct.n_1[i]), num(fact.l1[i]), num(fact.l2[i])});
  return kExitOk;
}

int cmd_dynamics(const Options& o, const json& config, std::ostream& out) {
  if (o.method != "analytic" && o.method != "ed" && o.method != "both")
    throw Error(ErrorCode::InvalidArgument, "--method must be analytic, ed or both");
  const std::vector<double> t = default_time_grid(o.tmax, o.dt);
  const bool want_a = o.method != "ed";
  const bool want_e = o.method != "analytic";

  std::optional<TimeSeries> a, e;
  if (want_a) a = survival_analytic(validate_regime({o.vab, o.v0, o.v}), t);
  if (want_e) e = survival_ed(validate({o.vab, o.v0, o.v}), t, make_chain(o.nsites, o.v));

  Sink sink(o.out, out);
  CsvWriter csv(sink.stream(), "dynamics", config);
  if (want_e) csv.comment("echo_guard", num(make_chain(o.nsites, o.v).echo_guard));
  std::vector<std::string> cols;
  const std::string pre = o.loglog ? "log10_" : "";
  cols.push_back(pre + "t");
  if (want_a) cols.push_back(pre + "p_aa");
  if (want_e) cols.push_back(pre + (want_a ? "p_aa_ed" : "p_aa"));
  if (want_a && want_e) cols.push_back("delta");
  csv.header(cols);

  auto cell = [&](double x) { return num(o.loglog ? std::log10(x) : x); };
  double max_delta = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (want_a && want_e) max_delta = std::max(max_delta, std::abs(a->p_aa[i] - e->p_aa[i]));
    if (o.loglog && t[i] <= 0.0) continue;
    std::vector<std::string> row{cell(t[i])};
    if (want_a) row.push_back(cell(a->p_aa[i]));
    if (want_e) row.push_back(cell(e->p_aa[i]));
    if (want_a && want_e) row.push_back(num(a->p_aa[i] - e->p_aa[i]));
    csv.row(row);
  }
  if (want_a && want_e) csv.comment("max_delta", num(max_delta));
  return kExitOk;
}

int cmd_phase_diagram(const Options& o, const json& config, std::ostream& out) {
  const auto vab = cli::parse_range(o.vab_grid).values();
  const auto v0 = cli::parse_range(o.v0_grid).values();
  if (!(o.v > 0.0)) throw Error(ErrorCode::NonPositiveV, "v must be > 0");
  const PhaseDiagram pd = phase_diagram(vab, v0, o.v);

  Sink sink(o.out, out);
  {
    CsvWriter csv(sink.stream(), "phase-diagram", config);
    csv.header({"v0", "vab", "region", "on_boundary"});
    for (std::size_t i = 0; i < v0.size(); ++i) {
      for (std::size_t j = 0; j < vab.size(); ++j) {
        const auto& c = pd.at(i, j);
        csv.row({num(v0[i]), num(vab[j]), c ? region_name(c->region) : "", c ? (c->on_boundary ? "1" : "0") : ""});
      }
    }
  }

  std::unique_ptr<std::ofstream> bfile;
  std::ostream* bos = &out;
  if (!o.out.empty()) {
    std::string stem = o.out;
    if (const auto dot = stem.rfind('.'); dot != std::string::npos && stem.find('/', dot) == std::string::npos)
      stem.erase(dot);
    bfile = std::make_unique<std::ofstream>(stem + "_boundaries.csv");
    if (!*bfile) throw Error(ErrorCode::InvalidArgument, "cannot open '" + stem + "_boundaries.csv'");
    bos = bfile.get();
  }
  CsvWriter csv(*bos, "phase-diagram boundaries", config);
  csv.header({"v0", "b1", "b2", "b3", "b4"});
  for (std::size_t i = 0; i < v0.size(); ++i) {
    if (!pd.curves[i]) continue;
    const Boundaries& b = *pd.curves[i];
    csv.row({num(v0[i]), num(b.b1), num(b.b2), num(b.b3), num(b.b4)});
  }
  return kExitOk;
}

int cmd_fit(const Options& o, const json& config, std::ostream& out) {
  std::ifstream in(o.input);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + o.input + "'");
  const cli::Table table = cli::read_csv(in);
  const std::size_t ct = table.column("t");
  const std::size_t cp = table.column(o.column);
  TimeSeries s;
  for (const auto& row : table.rows) {
    s.t_grid.push_back(row[ct]);
    s.p_aa.push_back(row[cp]);
  }
  if (s.t_grid.empty()) throw Error(ErrorCode::WindowTooShort, "input has no rows");

  std::optional<Window> w;
  if (!o.window.empty()) {
    const auto [a, b] = cli::parse_window(o.window);
    w = Window{a, b};
  }
  const Window full{s.t_grid.front(), s.t_grid.back()};
  FitReport r;
  if (o.kind == "tail") {
    r = fit_tail(s, w.value_or(full));
  } else if (o.kind == "frequency") {
    r = fit_frequency(s, w.value_or(full));
  } else if (o.kind == "collapse") {
    r = survival_collapse(s, w);
  } else {
    throw Error(ErrorCode::InvalidArgument, "--kind must be tail, frequency or collapse");
  }

  json j;
  j["config"] = config;
  j["kind"] = std::string(to_string(r.kind));
  j["window"] = {r.window.t_min, r.window.t_max};
  j["value"] = r.value;
  j["stderr"] = r.std_error;
  j["r2"] = r.r2;
  j["points"] = r.points;
  if (r.exp_rate) j["exp_rate"] = *r.exp_rate;
  if (r.exp_intercept) j["exp_intercept"] = *r.exp_intercept;
  if (r.power_exponent) j["power_exponent"] = *r.power_exponent;
  if (r.breakpoint) j["breakpoint"] = *r.breakpoint;
  Sink sink(o.out, out);
  sink.stream() << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-site swap gate coupled to a semi-infinite chain"};
  app.name("swapgate");
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "Print the version to stderr");

  Options o;
  auto params = [&](CLI::App* sub, bool need_vab) {
    auto* f = sub->add_option("--vab", o.vab, "A-B hopping");
    if (need_vab) f->required();
    sub->add_option("--v0", o.v0, "B-chain hopping")->required();
    sub->add_option("--v", o.v, "Chain hopping")->capture_default_str();
    sub->add_option("--out", o.out, "Output file (default stdout)");
  };

  auto* poles = app.add_subcommand("poles", "Poles, sheets and regime");
  params(poles, false);
  poles->add_flag("--json", o.json_out, "JSON report");
  poles->add_option("--sweep", o.sweep, "v_ab sweep a:b:n as CSV");

  auto* ldos = app.add_subcommand("ldos", "Local density of states at site A");
  params(ldos, true);
  ldos->add_option("--grid", o.grid, "Energy points")->capture_default_str();
  ldos->add_option("--emin", o.emin, "Lowest energy")->capture_default_str();
  ldos->add_option("--emax", o.emax, "Highest energy")->capture_default_str();
  ldos->add_option("--eta", o.eta, "Broadening of the direct route")->capture_default_str();

  auto* dyn = app.add_subcommand("dynamics", "Survival probability P_AA(t)");
  params(dyn, true);
  dyn->add_option("--tmax", o.tmax, "Final time")->required();
  dyn->add_option("--dt", o.dt, "Time step")->capture_default_str();
  dyn->add_option("--method", o.method, "analytic, ed or both")->capture_default_str();
  dyn->add_option("--nsites", o.nsites, "Chain sites for ed")->capture_default_str();
  dyn->add_flag("--loglog", o.loglog, "Emit log10 columns");

  auto* pd = app.add_subcommand("phase-diagram", "Regions on a (v0, v_ab) grid");
  pd->add_option("--vab-grid", o.vab_grid, "a:b:n")->capture_default_str();
  pd->add_option("--v0-grid", o.v0_grid, "a:b:n")->capture_default_str();
  pd->add_option("--v", o.v, "Chain hopping")->capture_default_str();
  pd->add_option("--out", o.out, "Output file; boundaries go to <stem>_boundaries.csv");

  auto* fit = app.add_subcommand("fit", "Fit a dynamics CSV");
  fit->add_option("--input", o.input, "CSV written by dynamics")->required();
  fit->add_option("--kind", o.kind, "tail, frequency or collapse")->required();
  fit->add_option("--window", o.window, "t_min:t_max");
  fit->add_option("--column", o.column, "Probability column")->capture_default_str();
  fit->add_option("--out", o.out, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
  }
  if (verbose) err << kVersion << '\n';

  CLI::App* sub = app.get_subcommands().front();
  json config;
  config["subcommand"] = sub->get_name();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->get_lnames().empty()) continue;
    const std::string key = opt->get_lnames().front();
    if (key == "out") continue;
    if (opt->get_type_size() == 0) {
      config[key] = opt->count() > 0;
    } else if (opt->count() > 0) {
      config[key] = opt->as<std::string>();
    } else {
      config[key] = opt->get_default_str();
    }
  }

  try {
    const std::string name = sub->get_name();
    if (name == "poles") {
      if (o.sweep.empty() && poles->count("--vab") == 0)
        throw Error(ErrorCode::InvalidArgument, "poles needs --vab or --sweep");
      return cmd_poles(o, config, out);
    }
    if (name == "ldos") return cmd_ldos(o, config, out);
    if (name == "dynamics") return cmd_dynamics(o, config, out);
    if (name == "phase-diagram") return cmd_phase_diagram(o, config, out);
    return cmd_fit(o, config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_validation_error(e.code()) ? kExitValidation : kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace swapgate
