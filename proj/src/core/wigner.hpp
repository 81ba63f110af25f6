#pragma once

#include <vector>

#include "interferometer.hpp"

namespace qlidar {

struct PhasePoint {
  double y1 = 0, y2 = 0;
  complex lambda() const { return {y1, y2}; }
};

// rho = sum_ij coeff(i, j) |amps[i]><amps[j]|, trace one
struct CoherentDyadState {
  std::vector<complex> amps;
  std::vector<complex> coeffs;  // row-major, amps.size()^2

  complex coeff(std::size_t i, std::size_t j) const {
    return coeffs[i * amps.size() + j];
  }
};

CoherentDyadState as_dyads(const SuperposedState& s);

// Port-a marginal of a propagated state: the other three modes are traced
// out, which folds their overlaps into the dyad coefficients.
CoherentDyadState reduced_port_a(const FourModeOutput& out);

double wigner_point(const CoherentDyadState& rho, PhasePoint at);
double wigner_point(const SuperposedState& s, PhasePoint at);

struct WignerGrid {
  std::vector<double> y1_axis, y2_axis;
  std::vector<double> values;  // values[i2 * y1_axis.size() + i1]
  double cell_area = 0;
  double integral = 0;

  double at(std::size_t i1, std::size_t i2) const {
    return values[i2 * y1_axis.size() + i1];
  }
};

struct AxisRange {
  double lo, hi;
};

WignerGrid wigner_grid(const CoherentDyadState& rho, AxisRange y1,
                       AxisRange y2, int resolution, unsigned threads = 1);

// +-(max|alpha_i| + 5) on both axes
AxisRange default_range(const SuperposedState& s);

struct NegativitySummary {
  double min_value = 0;
  PhasePoint min_location;
  double negative_volume = 0;
};

NegativitySummary negativity_summary(const WignerGrid& grid);

// 2/pi, the largest |W| any state can reach in this convention
inline constexpr double kWignerBound = 0.6366197723675814;

}  // namespace qlidar
