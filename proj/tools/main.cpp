// qlidar: figure data and oracle regression for the MZI LiDAR model.
#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qlidar/qlidar.h"
#include "table.hpp"

using qlidar::cli::Cell;
using qlidar::cli::Table;

namespace {

constexpr int kExitSpec = 1;
constexpr int kExitOracle = 2;
constexpr int kExitIo = 3;

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  qlidar_status status;
  ApiError(qlidar_status s, const std::string& what)
      : std::runtime_error(what), status(s) {}
};

void check(qlidar_status s, const char* what) {
  if (s != QLIDAR_OK)
    throw ApiError(s, std::string(what) + ": " + qlidar_status_string(s) + " (" +
                          qlidar_last_error() + ")");
}

struct StateDeleter {
  void operator()(qlidar_state s) const { qlidar_state_destroy(s); }
};
using State = std::unique_ptr<qlidar_state_t, StateDeleter>;

struct Spec {
  std::vector<std::string> states_a{"cs"};
  double alpha2 = 2.0;
  std::optional<double> mean_a;
  std::optional<double> alpha_re, alpha_im;
  std::string state_b = "vacuum";
  double zeta2 = 0.0;
  std::string scheme = "parity";
  double phi_min = -std::numbers::pi;
  double phi_max = std::numbers::pi;
  int phi_steps = 1001;
  double loss_r = 0.0;
  std::string snl_energy = "mean";
  std::string out = "-";
  std::string format = "csv";
  unsigned threads = 0;

  // fwhm / loss sweeps
  std::string sweep = "alpha2";
  std::vector<double> grid;
  std::string metric = "ratio";
  double phi = 0.02;

  // signal: optional foldness report on stderr
  std::vector<double> peak_window;
  std::string peak_side = "both";

  // wigner
  std::optional<double> range;
  int resolution = 201;
  bool reduced = false;
  bool summary = false;

  // oracle-check axes; empty falls back to the standard grid
  std::vector<std::string> kinds;
  std::vector<double> grid_alpha2, grid_zeta2, grid_phi, grid_loss_r;
  double oracle_tol = 1e-8;
  double closed_form_tol = 1e-10;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  return s;
}

qlidar_state_kind parse_kind(const std::string& name, const char* field) {
  qlidar_state_kind k;
  if (qlidar_parse_state_kind(name.c_str(), &k) != QLIDAR_OK)
    throw SpecError(std::string(field) + ": unknown state '" + name + "'");
  return k;
}

qlidar_scheme parse_scheme(const std::string& s) {
  auto l = lower(s);
  if (l == "parity") return QLIDAR_PARITY;
  if (l == "z") return QLIDAR_Z;
  throw SpecError("scheme: expected parity or z, got '" + s + "'");
}

qlidar_peak_side parse_side(const std::string& s) {
  auto l = lower(s);
  if (l == "upper") return QLIDAR_PEAKS_UPPER;
  if (l == "lower") return QLIDAR_PEAKS_LOWER;
  if (l == "both") return QLIDAR_PEAKS_BOTH;
  if (l == "principal") return QLIDAR_PEAKS_PRINCIPAL;
  throw SpecError("peak-side: expected upper, lower, both or principal, got '" + s + "'");
}

qlidar_snl_energy parse_energy(const std::string& s) {
  auto l = lower(s);
  if (l == "mean") return QLIDAR_SNL_MEAN_PHOTON;
  if (l == "amplitude") return QLIDAR_SNL_AMPLITUDE;
  throw SpecError("snl-energy: expected mean or amplitude, got '" + s + "'");
}

void require_increasing(const std::vector<double>& g, const char* field) {
  if (g.empty()) throw SpecError(std::string(field) + ": grid is empty");
  for (double v : g)
    if (!std::isfinite(v)) throw SpecError(std::string(field) + ": non-finite value");
  for (std::size_t i = 1; i < g.size(); ++i)
    if (!(g[i] > g[i - 1]))
      throw SpecError(std::string(field) + ": grid must increase strictly");
}

void validate_common(const Spec& s) {
  if (s.states_a.empty()) throw SpecError("state-a: no state given");
  if (s.phi_steps < 2) throw SpecError("phi-steps: need at least 2 samples");
  if (!std::isfinite(s.phi_min) || !std::isfinite(s.phi_max) || !(s.phi_max > s.phi_min))
    throw SpecError("phi-min/phi-max: need finite phi-min < phi-max");
  if (!(s.loss_r >= 0 && s.loss_r < 1)) throw SpecError("loss-r: must lie in [0, 1)");
  if (!(s.alpha2 >= 0) || !std::isfinite(s.alpha2)) throw SpecError("alpha2: must be >= 0");
  if (!(s.zeta2 >= 0) || !std::isfinite(s.zeta2)) throw SpecError("zeta2: must be >= 0");
  if (s.mean_a && !(*s.mean_a >= 0)) throw SpecError("mean-a: must be >= 0");
  if (lower(s.state_b) == "vacuum" && s.zeta2 != 0)
    throw SpecError("zeta2: state-b is vacuum");
}

std::string column_name(const std::string& state) { return lower(state); }

State make_a(const Spec& s, const std::string& name, std::optional<double> a2 = {},
             std::optional<double> mean = {}) {
  auto kind = parse_kind(name, "state-a");
  qlidar_state h = nullptr;
  if (!mean && !a2) mean = s.mean_a;
  if (mean) {
    check(qlidar_state_with_mean_photon(kind, *mean, &h), "state-a");
  } else if (!a2 && (s.alpha_re || s.alpha_im)) {
    check(qlidar_state_create(kind, s.alpha_re.value_or(0), s.alpha_im.value_or(0), &h),
          "state-a");
  } else {
    check(qlidar_state_create(kind, std::sqrt(a2.value_or(s.alpha2)), 0, &h), "state-a");
  }
  return State(h);
}

State make_b(const Spec& s, std::optional<double> z2 = {}) {
  qlidar_state h = nullptr;
  if (lower(s.state_b) == "vacuum") {
    check(qlidar_state_vacuum(&h), "state-b");
  } else {
    auto kind = parse_kind(s.state_b, "state-b");
    check(qlidar_state_create(kind, std::sqrt(z2.value_or(s.zeta2)), 0, &h), "state-b");
  }
  return State(h);
}

Table cmd_signal(const Spec& s) {
  validate_common(s);
  auto scheme = parse_scheme(s.scheme);
  auto b = make_b(s);
  std::optional<qlidar_peak_side> side;
  if (!s.peak_window.empty()) {
    if (s.peak_window.size() != 2 || !(s.peak_window[1] > s.peak_window[0]))
      throw SpecError("peak-window: expected LO,HI with LO < HI");
    side = parse_side(s.peak_side);
  }
  Table t;
  t.columns.push_back("phi");
  std::vector<double> phis(s.phi_steps);
  std::vector<std::vector<double>> cols;
  for (auto& name : s.states_a) {
    auto a = make_a(s, name);
    std::vector<double> v(s.phi_steps);
    check(qlidar_signal_curve(a.get(), b.get(), s.loss_r, scheme, s.phi_min, s.phi_max,
                              s.phi_steps, phis.data(), v.data()),
          "signal");
    if (side) {
      int n = 0;
      check(qlidar_peak_count(a.get(), b.get(), s.loss_r, scheme, s.peak_window[0],
                              s.peak_window[1], 8192, *side, &n),
            "peak-window");
      std::cerr << "peaks " << column_name(name) << " " << lower(s.peak_side) << " ("
                << s.peak_window[0] << ", " << s.peak_window[1] << "]: " << n << "\n";
    }
    t.columns.push_back(s.states_a.size() == 1 ? "value" : "value_" + column_name(name));
    cols.push_back(std::move(v));
  }
  for (int i = 0; i < s.phi_steps; ++i) {
    std::vector<Cell> row{phis[i]};
    for (auto& c : cols) row.push_back(c[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_sensitivity(const Spec& s) {
  validate_common(s);
  auto scheme = parse_scheme(s.scheme);
  auto energy = parse_energy(s.snl_energy);
  auto b = make_b(s);
  Table t;
  t.columns.push_back("phi");
  std::vector<std::vector<qlidar_sensitivity>> cols;
  bool single = s.states_a.size() == 1;
  for (auto& name : s.states_a) {
    auto a = make_a(s, name);
    std::vector<qlidar_sensitivity> v(s.phi_steps);
    check(qlidar_sensitivity_curve(a.get(), b.get(), s.loss_r, scheme, energy, s.phi_min,
                                   s.phi_max, s.phi_steps, v.data()),
          "sensitivity");
    std::string suffix = single ? "" : "_" + column_name(name);
    for (auto c : {"delta_phi", "snl", "ratio"}) t.columns.push_back(c + suffix);
    cols.push_back(std::move(v));
  }
  for (int i = 0; i < s.phi_steps; ++i) {
    std::vector<Cell> row{cols[0][i].phi};
    for (auto& c : cols) {
      row.push_back(c[i].delta_phi);
      row.push_back(c[i].snl);
      row.push_back(c[i].ratio);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

double fwhm_or_nan(qlidar_state a, qlidar_state b, double loss_r, qlidar_scheme scheme,
                   const Spec& s, const std::string& where) {
  double w;
  auto st = qlidar_fwhm(a, b, loss_r, scheme, s.phi_min, s.phi_max, s.phi_steps, &w);
  if (st == QLIDAR_NO_PEAK) {
    std::cerr << "warning: no peak for " << where << "\n";
    return std::nan("");
  }
  check(st, "fwhm");
  return w;
}

Table cmd_fwhm(const Spec& s, bool states_given) {
  validate_common(s);
  auto scheme = parse_scheme(s.scheme);
  std::vector<std::string> names = states_given
      ? s.states_a
      : std::vector<std::string>{"CS", "ECSS", "MPS0", "MPS1", "MPS2", "MPS3"};
  auto sweep = lower(s.sweep);
  if (sweep != "alpha2" && sweep != "mean" && sweep != "zeta2" && sweep != "loss_r")
    throw SpecError("sweep: expected alpha2, mean, zeta2 or loss_r");
  std::vector<double> grid = s.grid;
  if (grid.empty()) {
    if (sweep == "loss_r") grid = {0.0, 0.2, 0.4, 0.6, 0.8};
    else if (sweep == "zeta2") grid = {0.0, 2.0, 8.0};
    else grid = {0.5, 1.0, 2.0, 4.0, 8.0};
  }
  require_increasing(grid, "grid");
  if (sweep == "loss_r")
    for (double r : grid)
      if (!(r >= 0 && r < 1)) throw SpecError("grid: loss_r values must lie in [0, 1)");
  if (sweep == "zeta2" && lower(s.state_b) == "vacuum")
    throw SpecError("sweep: zeta2 needs a non-vacuum state-b");

  Table t;
  t.columns.push_back("x");
  for (auto& n : names) t.columns.push_back("fwhm_" + column_name(n));
  for (double x : grid) {
    std::vector<Cell> row{x};
    for (auto& n : names) {
      State a = sweep == "alpha2" ? make_a(s, n, x)
              : sweep == "mean"   ? make_a(s, n, {}, x)
                                  : make_a(s, n);
      State b = sweep == "zeta2" ? make_b(s, x) : make_b(s);
      double r = sweep == "loss_r" ? x : s.loss_r;
      row.push_back(fwhm_or_nan(a.get(), b.get(), r, scheme, s,
                                n + " at x=" + qlidar::cli::format_number(x)));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_loss(const Spec& s) {
  validate_common(s);
  qlidar_loss_spec ls{};
  ls.scheme = parse_scheme(s.scheme);
  auto m = lower(s.metric);
  if (m == "ratio") ls.metric = QLIDAR_METRIC_RATIO;
  else if (m == "fwhm") ls.metric = QLIDAR_METRIC_FWHM;
  else throw SpecError("metric: expected ratio or fwhm");
  if (!std::isfinite(s.phi)) throw SpecError("phi: must be finite");
  ls.phi = s.phi;
  ls.window_lo = s.phi_min;
  ls.window_hi = s.phi_max;
  ls.steps = s.phi_steps;
  ls.energy = parse_energy(s.snl_energy);
  std::vector<double> grid = s.grid;
  if (grid.empty()) grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  require_increasing(grid, "grid");
  for (double r : grid)
    if (!(r >= 0 && r < 1)) throw SpecError("grid: loss_r values must lie in [0, 1)");

  auto b = make_b(s);
  Table t;
  t.columns.push_back("loss_r");
  std::vector<std::vector<double>> cols;
  for (auto& name : s.states_a) {
    auto a = make_a(s, name);
    std::vector<double> v(grid.size());
    check(qlidar_loss_sweep(a.get(), b.get(), &ls, grid.data(), grid.size(), v.data()),
          "loss");
    t.columns.push_back(s.states_a.size() == 1 ? "value" : "value_" + column_name(name));
    cols.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<Cell> row{grid[i]};
    for (auto& c : cols) row.push_back(c[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_wigner(const Spec& s) {
  validate_common(s);
  if (s.states_a.size() != 1) throw SpecError("state-a: wigner takes a single state");
  if (s.resolution < 2) throw SpecError("resolution: need at least 2 points per axis");
  if (s.range && !(*s.range > 0)) throw SpecError("range: must be positive");
  auto a = make_a(s, s.states_a[0]);
  double lo, hi;
  if (s.range) {
    lo = -*s.range;
    hi = *s.range;
  } else {
    check(qlidar_wigner_default_range(a.get(), &lo, &hi), "wigner");
  }

  Table t;
  t.columns = {"y1", "y2", "w"};
  if (!s.reduced) {
    qlidar_wigner_grid g = nullptr;
    check(qlidar_wigner_grid_create(a.get(), lo, hi, lo, hi, s.resolution, &g), "wigner");
    std::unique_ptr<qlidar_wigner_grid_t, void (*)(qlidar_wigner_grid)> guard(
        g, qlidar_wigner_grid_destroy);
    size_t n1, n2;
    const double *y1, *y2, *w;
    check(qlidar_wigner_grid_data(g, &n1, &n2, &y1, &y2, &w), "wigner");
    for (size_t j = 0; j < n2; ++j)
      for (size_t i = 0; i < n1; ++i) t.rows.push_back({y1[i], y2[j], w[j * n1 + i]});
    if (s.summary) {
      qlidar_negativity neg;
      check(qlidar_wigner_grid_summary(g, &neg), "wigner");
      std::cerr << "integral " << qlidar::cli::format_number(neg.integral) << " min "
                << qlidar::cli::format_number(neg.min_value) << " at ("
                << qlidar::cli::format_number(neg.min_y1) << ", "
                << qlidar::cli::format_number(neg.min_y2) << ") negative volume "
                << qlidar::cli::format_number(neg.negative_volume) << "\n";
    }
    return t;
  }
  auto b = make_b(s);
  qlidar_config cfg;
  check(qlidar_config_make(s.phi, s.loss_r, &cfg), "wigner");
  double h = (hi - lo) / (s.resolution - 1);
  for (int j = 0; j < s.resolution; ++j)
    for (int i = 0; i < s.resolution; ++i) {
      double y1 = i + 1 == s.resolution ? hi : lo + i * h;
      double y2 = j + 1 == s.resolution ? hi : lo + j * h;
      double w;
      check(qlidar_wigner_reduced_point(a.get(), b.get(), &cfg, y1, y2, &w), "wigner");
      t.rows.push_back({y1, y2, w});
    }
  return t;
}

int cmd_oracle_check(const Spec& s, Table& t) {
  std::vector<qlidar_state_kind> kinds;
  for (auto& k : s.kinds) kinds.push_back(parse_kind(k, "kinds"));
  for (auto* g : {&s.grid_alpha2, &s.grid_zeta2, &s.grid_phi, &s.grid_loss_r})
    if (!g->empty()) require_increasing(*g, "oracle grid");
  qlidar_grid_spec spec{kinds.data(),          kinds.size(),
                        s.grid_alpha2.data(),  s.grid_alpha2.size(),
                        s.grid_zeta2.data(),   s.grid_zeta2.size(),
                        s.grid_phi.data(),     s.grid_phi.size(),
                        s.grid_loss_r.data(),  s.grid_loss_r.size()};
  qlidar_oracle_report rep = nullptr;
  check(qlidar_oracle_check(&spec, &rep), "oracle-check");
  std::unique_ptr<qlidar_oracle_report_t, void (*)(qlidar_oracle_report)> guard(
      rep, qlidar_oracle_report_destroy);
  size_t n;
  check(qlidar_oracle_report_size(rep, &n), "oracle-check");

  t.columns = {"state", "alpha2", "zeta2", "phi", "loss_r", "cutoff",
               "max_dp", "d_parity", "d_z", "d_closed_form"};
  if (!(s.oracle_tol >= 0) || !(s.closed_form_tol >= 0))
    throw SpecError("oracle-tol/closed-form-tol: must be >= 0");
  const double kOracleTol = s.oracle_tol, kClosedTol = s.closed_form_tol;
  double worst = -1;
  qlidar_oracle_point worst_p{};
  int bad = 0;
  for (size_t i = 0; i < n; ++i) {
    qlidar_oracle_point p;
    check(qlidar_oracle_report_point(rep, i, &p), "oracle-check");
    t.rows.push_back({std::string(qlidar_state_kind_name(p.kind)), p.alpha2, p.zeta2, p.phi,
                      p.loss_r, double(p.cutoff), p.max_dp, p.d_parity, p.d_z,
                      p.d_closed_form});
    double o = std::max({p.max_dp, p.d_parity, p.d_z});
    // NaN counts as a failure
    bool ok = o <= kOracleTol && p.d_closed_form <= kClosedTol;
    bad += !ok;
    auto rel = [](double d, double tol) { return tol > 0 ? d / tol : (d > 0 ? INFINITY : 0); };
    double score = std::max(rel(o, kOracleTol), rel(p.d_closed_form, kClosedTol));
    if (std::isnan(score)) score = INFINITY;
    if (score > worst) {
      worst = score;
      worst_p = p;
    }
  }
  std::cerr << "oracle-check: " << n << " points, " << bad << " over tolerance; worst "
            << qlidar_state_kind_name(worst_p.kind) << " |alpha|^2="
            << qlidar::cli::format_number(worst_p.alpha2)
            << " |zeta|^2=" << qlidar::cli::format_number(worst_p.zeta2)
            << " phi=" << qlidar::cli::format_number(worst_p.phi)
            << " loss_r=" << qlidar::cli::format_number(worst_p.loss_r) << " oracle "
            << qlidar::cli::format_number(std::max({worst_p.max_dp, worst_p.d_parity, worst_p.d_z}))
            << " closed form " << qlidar::cli::format_number(worst_p.d_closed_form) << "\n";
  return bad ? kExitOracle : 0;
}

void emit(const Spec& s, const Table& t) {
  auto fmt = lower(s.format) == "json" ? qlidar::cli::Format::Json : qlidar::cli::Format::Csv;
  if (s.out == "-") {
    qlidar::cli::write(std::cout, t, fmt);
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ostringstream buf;
  qlidar::cli::write(buf, t, fmt);
  std::ofstream f(s.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + s.out + "' for writing");
  f << buf.str();
  f.close();
  if (!f) throw IoError("failed writing '" + s.out + "'");
}

}  // namespace

int main(int argc, char** argv) {
  Spec s;
  CLI::App app{"Quantum LiDAR interferometer simulator"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  app.add_option("--state-a", s.states_a, "input state(s) in port a: cs, ecss, mps0..mps3")
      ->delimiter(',');
  app.add_option("--alpha2", s.alpha2, "|alpha|^2 of the port-a state");
  app.add_option("--mean-a", s.mean_a, "choose alpha so the port-a mean photon number is this");
  app.add_option("--alpha-re", s.alpha_re, "complex alpha, real part");
  app.add_option("--alpha-im", s.alpha_im, "complex alpha, imaginary part");
  app.add_option("--state-b", s.state_b, "port-b state: vacuum or a state kind");
  app.add_option("--zeta2", s.zeta2, "|zeta|^2 of the port-b state");
  app.add_option("--scheme", s.scheme, "parity or z");
  app.add_option("--phi-min", s.phi_min);
  app.add_option("--phi-max", s.phi_max);
  app.add_option("--phi-steps", s.phi_steps, "samples over [phi-min, phi-max]");
  app.add_option("--loss-r", s.loss_r, "loss reflectivity in each arm");
  app.add_option("--snl-energy", s.snl_energy, "mean (photon number) or amplitude (|alpha|^2)");
  app.add_option("--out", s.out, "output path, - for stdout");
  app.add_option("--format", s.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}, CLI::ignore_case));
  app.add_option("--threads", s.threads, "worker threads, 0 for all cores");
  app.add_option("--sweep", s.sweep, "fwhm sweep variable: alpha2, mean, zeta2, loss_r");
  app.add_option("--grid", s.grid, "sweep values")->delimiter(',');
  app.add_option("--metric", s.metric, "loss metric: ratio or fwhm");
  app.add_option("--phi", s.phi, "fixed phase for loss ratio and reduced wigner");
  app.add_option("--peak-window", s.peak_window, "signal: count extrema with phi in (LO, HI]")
      ->delimiter(',');
  app.add_option("--peak-side", s.peak_side, "upper, lower, both or principal");
  app.add_option("--range", s.range, "wigner half-width");
  app.add_option("--resolution", s.resolution, "wigner points per axis");
  app.add_flag("--reduced", s.reduced, "wigner of port a after the interferometer");
  app.add_flag("--summary", s.summary, "print wigner integral and negativity to stderr");
  app.add_option("--kinds", s.kinds, "oracle-check states")->delimiter(',');
  app.add_option("--grid-alpha2", s.grid_alpha2)->delimiter(',');
  app.add_option("--grid-zeta2", s.grid_zeta2)->delimiter(',');
  app.add_option("--grid-phi", s.grid_phi)->delimiter(',');
  app.add_option("--grid-loss-r", s.grid_loss_r)->delimiter(',');
  app.add_option("--oracle-tol", s.oracle_tol, "allowed engine vs oracle gap");
  app.add_option("--closed-form-tol", s.closed_form_tol, "allowed engine vs closed-form gap");

  const char* names[] = {"signal", "sensitivity", "fwhm", "wigner", "loss", "oracle-check"};
  const char* help[] = {"observable vs phi", "phase sensitivity and shot-noise ratio vs phi",
                        "FWHM of the principal fringe per state over a sweep",
                        "Wigner function on a grid", "figure of merit vs loss",
                        "engine vs Fock oracle and closed forms"};
  for (int i = 0; i < 6; ++i) app.add_subcommand(names[i], help[i])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitSpec;
  }

  try {
    qlidar_set_threads(s.threads);
    std::string cmd = app.get_subcommands().front()->get_name();
    Table t;
    int code = 0;
    if (cmd == "signal") t = cmd_signal(s);
    else if (cmd == "sensitivity") t = cmd_sensitivity(s);
    else if (cmd == "fwhm") t = cmd_fwhm(s, app.count("--state-a") > 0);
    else if (cmd == "wigner") t = cmd_wigner(s);
    else if (cmd == "loss") t = cmd_loss(s);
    else code = cmd_oracle_check(s, t);
    emit(s, t);
    return code;
  } catch (const SpecError& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return kExitSpec;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  }
}
