#include "metrology.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "error.hpp"
#include "parallel.hpp"

namespace qlidar {

namespace {

constexpr double kNoiseThreshold = 1e-9;
constexpr double kStationary = 1e-14;
constexpr double kCrossingTol = 1e-12;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double input_energy(const SuperposedState& s, SnlEnergy e) {
  if (e == SnlEnergy::MeanPhoton) return mean_photon_number(s);
  double m = 0.0;
  for (auto& t : s.terms()) m = std::max(m, std::norm(t.amplitude));
  return m;
}

void check_curve(const SignalCurve& c, std::size_t min_size) {
  if (c.phis.size() != c.values.size())
    fail(ErrorCode::InvalidArgument, "curve phis and values differ in length");
  if (c.phis.size() < min_size)
    fail(ErrorCode::InvalidArgument, "curve has too few samples");
  for (std::size_t i = 1; i < c.phis.size(); ++i)
    if (!(c.phis[i] > c.phis[i - 1]))
      fail(ErrorCode::InvalidArgument, "curve phis must increase strictly");
}

bool is_max(const std::vector<double>& v, std::size_t i) {
  return v[i] > v[i - 1] && v[i] >= v[i + 1];
}

bool is_min(const std::vector<double>& v, std::size_t i) {
  return v[i] < v[i - 1] && v[i] <= v[i + 1];
}

// Locates the extremum of f on [a, b] (Brent: golden section with parabolic
// steps). Returns (phi, value).
std::pair<double, double> refine_extremum(const Observable& f, double a,
                                          double b, bool maximum) {
  const double sgn = maximum ? -1.0 : 1.0;
  auto g = [&](double x) { return sgn * f(x); };
  auto [x, gx] = boost::math::tools::brent_find_minima(
      g, a, b, std::numeric_limits<double>::digits / 2);
  return {x, sgn * gx};
}

// Crossing of level between samples i and i + 1
double crossing(const SignalCurve& c, std::size_t i, double level,
                const Observable* refine) {
  const double x0 = c.phis[i], x1 = c.phis[i + 1];
  const double v0 = c.values[i] - level, v1 = c.values[i + 1] - level;
  if (v0 == 0.0) return x0;
  if (v1 == 0.0) return x1;
  if (!refine) return x0 + (x1 - x0) * v0 / (v0 - v1);
  auto h = [&](double x) { return (*refine)(x) - level; };
  auto done = [](double a, double b) { return std::abs(b - a) < kCrossingTol; };
  auto [a, b] = boost::math::tools::bisect(h, x0, x1, done);
  return 0.5 * (a + b);
}

}  // namespace

double scheme_midline(Scheme s) { return s == Scheme::Parity ? 0.0 : 0.5; }

Observable make_observable(const SuperposedState& a, const SuperposedState& b,
                           double loss_r, Scheme scheme) {
  MziConfig::with_loss(0.0, loss_r);  // validates loss_r
  return [a, b, loss_r, scheme](double phi) {
    return expectation(propagate(a, b, MziConfig::with_loss(phi, loss_r)),
                       scheme);
  };
}

SignalCurve sample_curve(const Observable& f, Scheme scheme, double phi_min,
                         double phi_max, int steps, unsigned threads) {
  if (steps < 2) fail(ErrorCode::InvalidArgument, "need at least 2 samples");
  if (!(phi_max > phi_min))
    fail(ErrorCode::InvalidArgument, "phi_max must exceed phi_min");
  SignalCurve c;
  c.scheme = scheme;
  c.midline = scheme_midline(scheme);
  c.phis.resize(static_cast<std::size_t>(steps));
  const double h = (phi_max - phi_min) / (steps - 1);
  for (int k = 0; k < steps; ++k) c.phis[k] = phi_min + k * h;
  c.phis.back() = phi_max;
  c.values = parallel_map(
      c.phis.size(), [&](std::size_t k) { return f(c.phis[k]); }, threads);
  return c;
}

SignalCurve rescaled(const SignalCurve& c, double scale, double shift) {
  SignalCurve out = c;
  for (auto& v : out.values) v = scale * v + shift;
  out.zero_level = scale * c.zero_level + shift;
  out.midline = scale * c.midline + shift;
  return out;
}

double snl(const SuperposedState& a, const SuperposedState& b,
           SnlEnergy energy) {
  double n = input_energy(a, energy) + input_energy(b, energy);
  if (!(n >= 1e-12)) fail(ErrorCode::ZeroEnergy, "inputs carry no photons");
  return 1.0 / std::sqrt(n);
}

bool SensitivityPoint::defined() const { return std::isfinite(delta_phi); }

SensitivityPoint phase_sensitivity(const SuperposedState& a,
                                   const SuperposedState& b,
                                   const MziConfig& config, Scheme scheme,
                                   SnlEnergy energy) {
  SensitivityPoint p;
  p.phi = config.phi;
  p.snl = snl(a, b, energy);
  double v = expectation(propagate(a, b, config), scheme);
  double d = expectation_derivative(a, b, config, scheme);
  double var = scheme == Scheme::Parity ? 1.0 - v * v : v - v * v;
  if (std::abs(d) < kStationary) {
    p.delta_phi = std::numeric_limits<double>::infinity();
  } else {
    p.delta_phi = std::sqrt(std::max(var, 0.0)) / std::abs(d);
  }
  p.ratio = p.delta_phi / p.snl;
  return p;
}

double fwhm(const SignalCurve& curve, const Observable* refine) {
  check_curve(curve, 3);
  const auto& v = curve.values;
  const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  const double base_up = std::max(*lo_it, curve.zero_level);
  const double base_down = std::min(*hi_it, curve.zero_level);
  const double centre = 0.5 * (curve.phis.front() + curve.phis.back());
  const double scale = std::max(1.0, *hi_it - *lo_it);

  std::size_t best = 0;
  double best_height = 0.0;
  bool best_max = true;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    bool mx = is_max(v, i);
    if (!mx && !is_min(v, i)) continue;
    double height = mx ? v[i] - base_up : base_down - v[i];
    if (height <= 1e-12 * scale) continue;
    bool better = height > best_height + 1e-9 * scale;
    bool tie = !better && height > best_height - 1e-9 * scale &&
               std::abs(curve.phis[i] - centre) <
                   std::abs(curve.phis[best] - centre);
    if (best == 0 || better || tie) {
      best = i;
      best_height = height;
      best_max = mx;
    }
  }
  if (best == 0) fail(ErrorCode::NoPeak, "curve has no interior extremum");

  double peak = v[best];
  if (refine)
    peak = refine_extremum(*refine, curve.phis[best - 1], curve.phis[best + 1],
                           best_max).second;
  const double base = best_max ? base_up : base_down;
  const double half = 0.5 * (peak + base);
  // above(x) is true on the peak side of the half level
  auto above = [&](double x) { return best_max ? x > half : x < half; };

  std::size_t l = best;
  while (l > 0 && above(v[l - 1])) --l;
  std::size_t r = best;
  while (r + 1 < v.size() && above(v[r + 1])) ++r;
  if (l == 0 || r + 1 == v.size())
    fail(ErrorCode::NoPeak, "half level not reached inside the curve");
  return crossing(curve, r, half, refine) - crossing(curve, l - 1, half, refine);
}

std::vector<Extremum> find_peaks(const SignalCurve& curve, double lo,
                                 double hi, PeakSide side,
                                 const Observable* refine) {
  check_curve(curve, 3);
  const double span = curve.phis.back() - curve.phis.front();
  if ((curve.phis.size() - 1) / span * kTwoPi < 1000.0)
    fail(ErrorCode::InvalidArgument,
         "peak counting needs at least 1000 samples per 2 pi");

  const auto& v = curve.values;
  std::vector<Extremum> all;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    bool upper = is_max(v, i) && v[i] > curve.midline + kNoiseThreshold;
    bool lower = is_min(v, i) && v[i] < curve.midline - kNoiseThreshold;
    if (!upper && !lower) continue;
    Extremum e{curve.phis[i], v[i], upper};
    if (refine)
      std::tie(e.phi, e.value) = refine_extremum(
          *refine, curve.phis[i - 1], curve.phis[i + 1], upper);
    if (e.phi > lo && e.phi <= hi) all.push_back(e);
  }

  if (side == PeakSide::Principal) {
    double best = -1.0;
    side = PeakSide::Upper;
    for (auto& e : all) {
      double d = std::abs(e.value - curve.midline);
      if (d > best) {
        best = d;
        side = e.maximum ? PeakSide::Upper : PeakSide::Lower;
      }
    }
  }
  std::vector<Extremum> out;
  for (auto& e : all)
    if (side == PeakSide::Both || (side == PeakSide::Upper) == e.maximum)
      out.push_back(e);
  return out;
}

int peak_count(const SignalCurve& curve, double lo, double hi, PeakSide side,
               const Observable* refine) {
  return static_cast<int>(find_peaks(curve, lo, hi, side, refine).size());
}

SignalCurve sample_window(const Observable& f, Scheme scheme, double lo,
                          double hi, int per_2pi, unsigned threads) {
  if (!(hi > lo)) fail(ErrorCode::InvalidArgument, "empty window");
  if (per_2pi < 1000)
    fail(ErrorCode::InvalidArgument, "need at least 1000 samples per 2 pi");
  const double h = kTwoPi / per_2pi;
  const int margin = 4;
  const int inner = static_cast<int>(std::ceil((hi - lo) / h - 1e-9));
  const int n = inner + 2 * margin + 1;
  SignalCurve c;
  c.scheme = scheme;
  c.midline = scheme_midline(scheme);
  c.phis.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c.phis[k] = lo + (k - margin) * h;
  c.values = parallel_map(
      c.phis.size(), [&](std::size_t k) { return f(c.phis[k]); }, threads);
  return c;
}

std::vector<LossRow> loss_sweep(const SuperposedState& a,
                                const SuperposedState& b,
                                const LossSweepSpec& spec,
                                const std::vector<double>& r_grid,
                                unsigned threads) {
  for (double r : r_grid)
    if (!(r >= 0.0 && r < 1.0))
      fail(ErrorCode::InvalidArgument, "loss_r grid values must lie in [0, 1)");
  return parallel_map(
      r_grid.size(),
      [&](std::size_t i) {
        const double r = r_grid[i];
        if (spec.metric == LossMetric::SensitivityRatio) {
          auto p = phase_sensitivity(a, b, MziConfig::with_loss(spec.phi, r),
                                     spec.scheme, spec.energy);
          return LossRow{r, p.ratio};
        }
        Observable f = make_observable(a, b, r, spec.scheme);
        auto curve = sample_curve(f, spec.scheme, spec.window_lo,
                                  spec.window_hi, spec.steps);
        return LossRow{r, fwhm(curve, &f)};
      },
      threads);
}

double range_from_phase(double phi, double wavelength) {
  if (!(wavelength > 0.0))
    fail(ErrorCode::InvalidArgument, "wavelength must be positive");
  return phi * wavelength / (4.0 * std::numbers::pi);
}

}  // namespace qlidar
