#pragma once

#include <functional>
#include <string>
#include <vector>

#include "detection.hpp"

namespace qlidar {

using Observable = std::function<double(double)>;

struct SignalCurve {
  std::vector<double> phis;
  std::vector<double> values;
  Scheme scheme = Scheme::Parity;
  // Level the signal shows without fringe contrast. FWHM baselines are
  // clamped to it.
  double zero_level = 0.0;
  // Centre of the observable's range; splits upper and lower peaks.
  double midline = 0.0;
  std::string provenance;
};

double scheme_midline(Scheme s);

// phi -> <X>(phi) with loss_t = sqrt(1 - loss_r^2)
Observable make_observable(const SuperposedState& a, const SuperposedState& b,
                           double loss_r, Scheme scheme);

// steps samples on [phi_min, phi_max] inclusive
SignalCurve sample_curve(const Observable& f, Scheme scheme, double phi_min,
                         double phi_max, int steps, unsigned threads = 1);

// affine map of the values; zero level and midline follow
SignalCurve rescaled(const SignalCurve& c, double scale, double shift);

enum class SnlEnergy { MeanPhoton, AmplitudeSquared };

// 1/sqrt(total input energy); ZeroEnergy below 1e-12
double snl(const SuperposedState& a, const SuperposedState& b,
           SnlEnergy energy = SnlEnergy::MeanPhoton);

struct SensitivityPoint {
  double phi = 0;
  double delta_phi = 0;  // +inf at stationary points
  double snl = 0;
  double ratio = 0;
  bool defined() const;
};

SensitivityPoint phase_sensitivity(const SuperposedState& a,
                                   const SuperposedState& b,
                                   const MziConfig& config, Scheme scheme,
                                   SnlEnergy energy = SnlEnergy::MeanPhoton);

// Width of the principal peak. refine, when given, is the continuous
// observable behind the curve; crossings are then bisected on it rather than
// interpolated.
double fwhm(const SignalCurve& curve, const Observable* refine = nullptr);

enum class PeakSide { Upper, Lower, Both, Principal };

struct Extremum {
  double phi;
  double value;
  bool maximum;
};

// Strict local maxima above midline + 1e-9 (upper side) and minima below
// midline - 1e-9 (lower side) with phi in (lo, hi].
std::vector<Extremum> find_peaks(const SignalCurve& curve, double lo,
                                 double hi, PeakSide side,
                                 const Observable* refine = nullptr);

int peak_count(const SignalCurve& curve, double lo, double hi,
               PeakSide side = PeakSide::Both,
               const Observable* refine = nullptr);

// Samples (lo, hi] at per_2pi points per 2 pi with a margin on both sides so
// extrema at the window edges are interior to the sampled curve.
SignalCurve sample_window(const Observable& f, Scheme scheme, double lo,
                          double hi, int per_2pi = 4096, unsigned threads = 1);

enum class LossMetric { SensitivityRatio, Fwhm };

struct LossSweepSpec {
  Scheme scheme = Scheme::Parity;
  LossMetric metric = LossMetric::SensitivityRatio;
  double phi = 0.02;                 // used by SensitivityRatio
  double window_lo = -3.141592653589793;  // used by Fwhm
  double window_hi = 3.141592653589793;
  int steps = 4097;
  SnlEnergy energy = SnlEnergy::MeanPhoton;
};

struct LossRow {
  double loss_r;
  double value;
};

std::vector<LossRow> loss_sweep(const SuperposedState& a,
                                const SuperposedState& b,
                                const LossSweepSpec& spec,
                                const std::vector<double>& r_grid,
                                unsigned threads = 1);

// f = phi lambda / (4 pi)
double range_from_phase(double phi, double wavelength);

}  // namespace qlidar
