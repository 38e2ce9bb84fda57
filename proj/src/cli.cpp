#include "hypdrum/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "hypdrum/explore.hpp"
#include "hypdrum/geometry.hpp"
#include "hypdrum/output.hpp"

namespace hypdrum {
namespace {

constexpr double kPi = std::numbers::pi;

struct GridSpec {
  Range range;
  int steps = 0;
};

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw std::invalid_argument("cannot parse " + what + ": '" + text + "'");
  return value;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw std::invalid_argument("cannot parse " + what + ": '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

// LO:HI:STEPS, inclusive endpoints.
GridSpec parse_grid(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw std::invalid_argument(what + " must have the form LO:HI:STEPS");
  return {{parse_double(parts[0], what), parse_double(parts[1], what)}, parse_int(parts[2], what)};
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  file << text;
}

std::string render(const OutputRecord& record, const std::string& format) {
  if (format == "json") return to_json(record);
  std::vector<std::string> header;
  std::vector<Value> row;
  for (const Fields* group : {&record.inputs, &record.results}) {
    for (const auto& [key, value] : *group) {
      header.push_back(key);
      row.push_back(value);
    }
  }
  return to_csv(header, {row});
}

Fields base_meta() { return {{"version", std::string(kToolVersion)}}; }

struct Common {
  int n = 0;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format = "json") {
  c.format = default_format;
  sub->add_option("--n", c.n, "Rotational symmetry order (n >= 3)")->required();
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "Write the result to PATH instead of stdout");
}

OutputRecord volume_record(const Common& c, double d, double theta, bool breakdown) {
  const DrumParams p = DrumParams::make(c.n, d, theta);
  const VolumeBreakdown v = drum_volume(p);
  OutputRecord r;
  r.command = "volume";
  r.inputs = {{"n", static_cast<long long>(c.n)}, {"d", d}, {"theta", theta}};
  r.results = {{"vol_drum", v.vol_drum}};
  if (breakdown) {
    r.results.insert(r.results.end(), {{"vol_tau1", v.vol_tau1},
                                       {"vol_tau2", v.vol_tau2},
                                       {"vol_tau3", v.vol_tau3},
                                       {"vol_suspension_drum", v.vol_suspension_drum},
                                       {"vol_suspension_head", v.vol_suspension_head},
                                       {"vol_pyramid", v.vol_pyramid},
                                       {"theta_reduced", p.theta},
                                       {"theta_canonical", p.canonical().theta}});
  }
  r.meta = base_meta();
  r.meta.emplace_back("degeneracy_tol", kDegeneracyTol);
  return r;
}

OutputRecord maximize_record(const MaxResult& m, const MaximizeOptions& opts) {
  OutputRecord r;
  r.command = "maximize";
  r.inputs = {{"n", static_cast<long long>(m.n)}};
  r.results = {{"vol_star", m.vol_star},
               {"d_star", m.d_star},
               {"theta_star", m.theta_star},
               {"halfclick_gap", m.halfclick_gap()},
               {"iterations", static_cast<long long>(m.iterations)},
               {"evaluations", static_cast<long long>(m.evaluations)},
               {"converged", m.converged}};
  r.meta = base_meta();
  r.meta.emplace_back("param_tol", opts.param_tol);
  r.meta.emplace_back("grid_offset", opts.grid_offset);
  r.meta.emplace_back("max_evaluations", static_cast<long long>(opts.max_evaluations));
  return r;
}

std::string scan_text(const ScanResult& s, const std::string& format) {
  if (format == "csv") {
    std::vector<std::vector<Value>> rows;
    rows.reserve(s.volumes.size());
    for (std::size_t i = 0; i < s.d_values.size(); ++i) {
      for (std::size_t j = 0; j < s.theta_values.size(); ++j) {
        rows.push_back({static_cast<long long>(s.n), s.d_values[i], s.theta_values[j], s.at(i, j)});
      }
    }
    return to_csv({"n", "d", "theta", "volume"}, rows);
  }
  OutputRecord r;
  r.command = "scan";
  r.inputs = {{"n", static_cast<long long>(s.n)},
              {"d_steps", static_cast<long long>(s.d_values.size())},
              {"theta_steps", static_cast<long long>(s.theta_values.size())}};
  r.results = {{"d_values", s.d_values},
               {"theta_values", s.theta_values},
               {"volumes", s.volumes},
               {"argmax_i", static_cast<long long>(s.argmax.i)},
               {"argmax_j", static_cast<long long>(s.argmax.j)},
               {"max_volume", s.max_volume()}};
  r.meta = base_meta();
  r.meta.emplace_back("order", std::string("row-major, d outer"));
  return to_json(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic volumes of ideal n-drums and n-prisms", "hypdrum"};
  app.require_subcommand(1);

  // volume
  Common vol_c;
  double vol_d = 0.0;
  double vol_theta = 0.0;
  double vol_theta_frac = 0.0;
  bool vol_breakdown = false;
  auto* vol = app.add_subcommand("volume", "Volume of the n-drum D_n(d, theta)");
  add_common(vol, vol_c);
  vol->add_option("--d", vol_d, "Translation length d > 0")->required();
  auto* theta_opt = vol->add_option("--theta", vol_theta, "Rotation angle in radians");
  auto* frac_opt = vol->add_option("--theta-frac", vol_theta_frac, "Set theta = pi / (n K)");
  theta_opt->excludes(frac_opt);
  vol->add_flag("--breakdown", vol_breakdown, "Report per-tetrahedron and suspension volumes");

  // prism
  Common prism_c;
  double prism_alpha_in = 0.0;
  double prism_d = 0.0;
  auto* prism = app.add_subcommand("prism", "Milnor's volume of the ideal n-prism");
  add_common(prism, prism_c);
  auto* alpha_opt = prism->add_option("--alpha", prism_alpha_in, "Rim dihedral angle in (pi/n, pi/2)");
  auto* pd_opt = prism->add_option("--d", prism_d, "Prism height (translation length)");
  alpha_opt->excludes(pd_opt);

  // scan
  Common scan_c;
  std::string scan_d;
  std::string scan_theta;
  int scan_jobs = 1;
  auto* scan_cmd = app.add_subcommand("scan", "Volume on an inclusive (d, theta) grid");
  add_common(scan_cmd, scan_c);
  scan_cmd->add_option("--d", scan_d, "d grid LO:HI:STEPS")->required();
  scan_cmd->add_option("--theta", scan_theta, "theta grid LO:HI:STEPS")->required();
  scan_cmd->add_option("--jobs", scan_jobs, "Worker threads")->check(CLI::PositiveNumber);

  // maximize
  Common max_c;
  MaximizeOptions max_opts;
  auto* max_cmd = app.add_subcommand("maximize", "Maximal drum volume for fixed n");
  add_common(max_cmd, max_c);
  max_cmd->add_option("--tol", max_opts.param_tol, "Parameter tolerance")->capture_default_str();
  max_cmd->add_option("--offset", max_opts.grid_offset, "Coarse grid offset in [0, 1)");

  // classify
  Common cls_c;
  double cls_d = 0.0;
  double cls_step = 0.0;
  double cls_tol = kCurvatureTol;
  auto* cls = app.add_subcommand("classify", "Classify theta = pi/n as local min or max in theta");
  add_common(cls, cls_c);
  cls->add_option("--d", cls_d, "Translation length d > 0")->required();
  auto* step_opt = cls->add_option("--step", cls_step, "Second-difference step in theta");
  cls->add_option("--tol-curv", cls_tol, "Curvature tolerance")->capture_default_str();

  // threshold
  Common thr_c;
  double thr_tol = 1e-6;
  auto* thr = app.add_subcommand("threshold", "d where theta = pi/n turns from min to max");
  add_common(thr, thr_c);
  thr->add_option("--tol", thr_tol, "Bisection tolerance in d")->capture_default_str();

  // limit
  Common lim_c;
  auto* lim = app.add_subcommand("limit", "Volume limit as d -> infinity");
  add_common(lim, lim_c);

  // table
  std::string table_list = "3,4,5,6,100,10000";
  std::string table_format = "csv";
  std::string table_out;
  auto* table = app.add_subcommand("table", "Maximal volumes for a list of n");
  table->add_option("--n-list", table_list, "Comma-separated n values")->capture_default_str();
  table->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  table->add_option("--out", table_out, "Write the result to PATH instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }

  try {
    if (vol->parsed()) {
      double theta = vol_theta;
      if (frac_opt->count() > 0) {
        if (!(vol_theta_frac > 0.0)) throw std::invalid_argument("--theta-frac must be positive");
        if (vol_c.n < 3) throw std::invalid_argument("n must be at least 3");
        theta = kPi / (vol_c.n * vol_theta_frac);
      } else if (theta_opt->count() == 0) {
        throw std::invalid_argument("one of --theta or --theta-frac is required");
      }
      emit(render(volume_record(vol_c, vol_d, theta, vol_breakdown), vol_c.format), vol_c.out_path, out);
    } else if (prism->parsed()) {
      OutputRecord r;
      r.command = "prism";
      r.inputs = {{"n", static_cast<long long>(prism_c.n)}};
      double alpha = prism_alpha_in;
      if (pd_opt->count() > 0) {
        alpha = prism_alpha(prism_d, prism_c.n);
        r.inputs.emplace_back("d", prism_d);
      } else if (alpha_opt->count() > 0) {
        r.inputs.emplace_back("alpha", alpha);
      } else {
        throw std::invalid_argument("one of --alpha or --d is required");
      }
      const PrismParams p = PrismParams::make(prism_c.n, alpha);
      r.results = {{"volume", prism_volume_milnor(p)}, {"alpha", p.alpha}, {"beta", p.beta}};
      if (pd_opt->count() > 0) r.results.emplace_back("drum_volume_theta0", drum_volume(prism_c.n, prism_d, 0.0));
      r.meta = base_meta();
      emit(render(r, prism_c.format), prism_c.out_path, out);
    } else if (scan_cmd->parsed()) {
      const GridSpec dg = parse_grid(scan_d, "--d");
      const GridSpec tg = parse_grid(scan_theta, "--theta");
      const ScanResult s = scan(scan_c.n, dg.range, tg.range, dg.steps, tg.steps, scan_jobs);
      emit(scan_text(s, scan_c.format), scan_c.out_path, out);
    } else if (max_cmd->parsed()) {
      const MaxResult m = maximize(max_c.n, max_opts);
      emit(render(maximize_record(m, max_opts), max_c.format), max_c.out_path, out);
      if (!m.converged) {
        err << "maximize: did not converge within " << max_opts.max_evaluations << " evaluations\n";
        return kExitNotConverged;
      }
    } else if (cls->parsed()) {
      std::optional<double> step;
      if (step_opt->count() > 0) step = cls_step;
      const CriticalClassification c = classify_halfclick(cls_c.n, cls_d, step, cls_tol);
      OutputRecord r;
      r.command = "classify";
      r.inputs = {{"n", static_cast<long long>(c.n)}, {"d", c.d}};
      r.results = {{"kind", std::string(to_string(c.kind))},
                   {"second_difference", c.second_difference},
                   {"step", c.step}};
      r.meta = base_meta();
      r.meta.emplace_back("tol_curv", cls_tol);
      emit(render(r, cls_c.format), cls_c.out_path, out);
    } else if (thr->parsed()) {
      OutputRecord r;
      r.command = "threshold";
      r.inputs = {{"n", static_cast<long long>(thr_c.n)}};
      r.results = {{"critical_d", critical_d(thr_c.n, thr_tol)}};
      r.meta = base_meta();
      r.meta.emplace_back("tol", thr_tol);
      r.meta.emplace_back("step", default_halfclick_step(thr_c.n));
      emit(render(r, thr_c.format), thr_c.out_path, out);
    } else if (lim->parsed()) {
      const double v = drum_limit_volume(lim_c.n);
      OutputRecord r;
      r.command = "limit";
      r.inputs = {{"n", static_cast<long long>(lim_c.n)}};
      r.results = {{"limit_volume", v}, {"limit_volume_per_n", v / lim_c.n}};
      r.meta = base_meta();
      emit(render(r, lim_c.format), lim_c.out_path, out);
    } else if (table->parsed()) {
      std::vector<int> ns;
      for (const auto& item : split(table_list, ',')) ns.push_back(parse_int(item, "--n-list"));
      if (ns.empty()) throw std::invalid_argument("--n-list is empty");
      for (int n : ns) {
        if (n < 3) throw std::invalid_argument("--n-list entries must be at least 3");
      }
      std::vector<MaxResult> results;
      for (int n : ns) results.push_back(maximize(n));

      bool all_converged = true;
      if (table_format == "csv") {
        std::vector<std::vector<Value>> rows;
        for (const auto& m : results) {
          all_converged = all_converged && m.converged;
          rows.push_back({static_cast<long long>(m.n), m.vol_star, m.d_star, m.theta_star,
                          m.halfclick_gap(), m.vol_star / m.n, m.converged});
        }
        emit(to_csv({"n", "max_vol", "d", "theta", "halfclick_gap", "vol_per_n", "converged"}, rows),
             table_out, out);
      } else {
        std::string text = "[\n";
        for (std::size_t k = 0; k < results.size(); ++k) {
          all_converged = all_converged && results[k].converged;
          text += to_json(maximize_record(results[k], MaximizeOptions{}));
          if (k + 1 < results.size()) text += ",\n";
        }
        emit(text + "]\n", table_out, out);
      }
      if (!all_converged) {
        err << "table: at least one maximization did not converge\n";
        return kExitNotConverged;
      }
    }
  } catch (const NotConverged& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace hypdrum
