#include "wigner.hpp"

#include <cmath>
#include <numbers>

#include "error.hpp"
#include "hermitian.hpp"
#include "parallel.hpp"

namespace qlidar {

CoherentDyadState as_dyads(const SuperposedState& s) {
  CoherentDyadState rho;
  for (auto& t : s.terms()) rho.amps.push_back(t.amplitude);
  for (auto& ti : s.terms())
    for (auto& tj : s.terms()) rho.coeffs.push_back(ti.weight * std::conj(tj.weight));
  return rho;
}

CoherentDyadState reduced_port_a(const FourModeOutput& out) {
  CoherentDyadState rho;
  for (auto& t : out.terms) rho.amps.push_back(t.amps[PortA]);
  for (auto& ti : out.terms)
    for (auto& tj : out.terms) {
      // Tr_rest |rest_i><rest_j| = <rest_j|rest_i>
      complex e = 0.0;
      for (int k = PortB; k < 4; ++k) e += log_overlap(tj.amps[k], ti.amps[k]);
      rho.coeffs.push_back(ti.weight * std::conj(tj.weight) * std::exp(e));
    }
  return rho;
}

double wigner_point(const CoherentDyadState& rho, PhasePoint at) {
  // W of |a><b| is (2/pi) <b|a> exp(-2 (lambda - a)(conj(lambda) - conj(b)))
  const complex lam = at.lambda();
  const std::size_t n = rho.amps.size();
  detail::HermitianSum s;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      complex a = rho.amps[i], b = rho.amps[j];
      complex e = log_overlap(b, a) - 2.0 * (lam - a) * (std::conj(lam) - std::conj(b));
      s.add(rho.coeff(i, j) * std::exp(e));
    }
  double w = 2.0 / std::numbers::pi * s.real("wigner_point");
  if (std::abs(w) > kWignerBound + 1e-9)
    fail(ErrorCode::InvalidArgument, "Wigner value outside +-2/pi; state not normalized?");
  return w;
}

double wigner_point(const SuperposedState& s, PhasePoint at) {
  return wigner_point(as_dyads(s), at);
}

WignerGrid wigner_grid(const CoherentDyadState& rho, AxisRange y1,
                       AxisRange y2, int resolution, unsigned threads) {
  if (resolution < 2)
    fail(ErrorCode::InvalidArgument, "resolution must be at least 2");
  if (!(y1.hi > y1.lo) || !(y2.hi > y2.lo))
    fail(ErrorCode::InvalidArgument, "empty grid range");
  WignerGrid g;
  const auto n = static_cast<std::size_t>(resolution);
  const double h1 = (y1.hi - y1.lo) / (resolution - 1);
  const double h2 = (y2.hi - y2.lo) / (resolution - 1);
  for (std::size_t k = 0; k < n; ++k) {
    g.y1_axis.push_back(y1.lo + k * h1);
    g.y2_axis.push_back(y2.lo + k * h2);
  }
  g.cell_area = h1 * h2;
  g.values = parallel_map(
      n * n,
      [&](std::size_t idx) {
        return wigner_point(rho, {g.y1_axis[idx % n], g.y2_axis[idx / n]});
      },
      threads);
  double sum = 0.0;
  for (double v : g.values) sum += v;
  g.integral = sum * g.cell_area;
  return g;
}

AxisRange default_range(const SuperposedState& s) {
  double m = 0.0;
  for (auto& t : s.terms()) m = std::max(m, std::abs(t.amplitude));
  return {-(m + 5.0), m + 5.0};
}

NegativitySummary negativity_summary(const WignerGrid& grid) {
  if (grid.values.empty()) fail(ErrorCode::InvalidArgument, "empty grid");
  NegativitySummary s;
  s.min_value = grid.values[0];
  const std::size_t n1 = grid.y1_axis.size();
  for (std::size_t k = 0; k < grid.values.size(); ++k) {
    double v = grid.values[k];
    if (v < s.min_value || k == 0) {
      s.min_value = v;
      s.min_location = {grid.y1_axis[k % n1], grid.y2_axis[k / n1]};
    }
    if (v < 0.0) s.negative_volume += -v * grid.cell_area;
  }
  return s;
}

}  // namespace qlidar
