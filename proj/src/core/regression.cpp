#include "regression.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "error.hpp"
#include "fock_oracle.hpp"
#include "parallel.hpp"

namespace qlidar {

namespace {

template <class P>
Report<P> collect(std::vector<P> pts) {
  Report<P> r;
  r.points = std::move(pts);
  for (std::size_t i = 0; i < r.points.size(); ++i)
    if (r.points[i].worst() > r.worst || i == 0) {
      r.worst = r.points[i].worst();
      r.worst_index = i;
    }
  return r;
}

}  // namespace

std::string GridPoint::describe() const {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%s |alpha|^2=%g |zeta|^2=%g phi=%g loss_r=%g",
                std::string(to_string(kind)).c_str(), alpha2, zeta2, phi,
                loss_r);
  return buf;
}

RegressionGrid RegressionGrid::standard() {
  return {{StateKind::CS, StateKind::ECSS, StateKind::MPS0, StateKind::MPS1,
           StateKind::MPS2, StateKind::MPS3},
          {0.5, 2.0, 8.0},
          {0.0, 2.0, 25.0},
          {0.3, 1.1, 2.7},
          {0.0, 0.2, 0.5}};
}

std::vector<GridPoint> RegressionGrid::points() const {
  std::vector<GridPoint> out;
  for (auto k : kinds)
    for (double a : alpha2)
      for (double z : zeta2)
        for (double p : phi)
          for (double r : loss_r) out.push_back({k, a, z, p, r});
  return out;
}

SuperposedState state_for(const GridPoint& p) {
  return make_state(p.kind, std::sqrt(p.alpha2));
}

SuperposedState port_b_for(const GridPoint& p) {
  return make_state(StateKind::CS, std::sqrt(p.zeta2));
}

double OraclePoint::worst() const { return std::max({max_dp, d_parity, d_z}); }

double ClosedFormPoint::worst() const {
  return std::max({d_parity, d_z, d_parity_derivative, d_z_derivative});
}

OraclePoint oracle_compare(const GridPoint& p) {
  auto a = state_for(p);
  auto b = port_b_for(p);
  auto cfg = MziConfig::with_loss(p.phi, p.loss_r);
  OraclePoint r{p};
  r.cutoff = fock::recommended_cutoff(a, b);
  auto oracle = fock::simulate(a, b, cfg, r.cutoff);
  auto out = propagate(a, b, cfg);
  for (int n = 0; n <= r.cutoff; ++n)
    r.max_dp = std::max(r.max_dp, std::abs(photon_probability(out, n) - oracle.port_a[n]));
  r.d_parity = std::abs(parity_expectation(out) - oracle.parity);
  r.d_z = std::abs(z_expectation(out) - oracle.z);
  return r;
}

Report<OraclePoint> oracle_check(const RegressionGrid& grid, unsigned threads) {
  auto pts = grid.points();
  return collect(parallel_map(
      pts.size(), [&](std::size_t i) { return oracle_compare(pts[i]); },
      threads));
}

ClosedFormPoint closed_form_compare(const GridPoint& p,
                                    closed_form::Variant v) {
  namespace cf = closed_form;
  auto a = state_for(p);
  auto b = port_b_for(p);
  auto cfg = MziConfig::with_loss(p.phi, p.loss_r);
  auto out = propagate(a, b, cfg);
  auto c = cf::Coefficients::for_kind(p.kind);
  const bool vac = p.zeta2 == 0.0;

  double par, z, dpar, dz;
  try {
    auto k = cf::make_context(c, p.alpha2, p.zeta2, cfg, v);
    par = vac ? cf::parity_vacuum(c, k, v) : cf::parity_coherent(c, k, v);
    z = vac ? cf::z_vacuum(c, k, v) : cf::z_coherent(c, k, v);
    dpar = vac ? cf::parity_vacuum_derivative(c, k, v)
               : cf::parity_coherent_derivative(c, k, v);
    dz = vac ? cf::z_vacuum_derivative(c, k, v)
             : cf::z_coherent_derivative(c, k, v);
  } catch (const Error&) {
    // e.g. a transcription whose normalization goes negative
    par = z = dpar = dz = std::numeric_limits<double>::infinity();
  }

  ClosedFormPoint r{p};
  r.d_parity = std::abs(par - parity_expectation(out));
  r.d_z = std::abs(z - z_expectation(out));
  r.d_parity_derivative =
      std::abs(dpar - expectation_derivative(a, b, cfg, Scheme::Parity));
  r.d_z_derivative = std::abs(dz - expectation_derivative(a, b, cfg, Scheme::Z));
  return r;
}

Report<ClosedFormPoint> closed_form_check(const RegressionGrid& grid,
                                          closed_form::Variant v,
                                          unsigned threads) {
  auto pts = grid.points();
  return collect(parallel_map(
      pts.size(), [&](std::size_t i) { return closed_form_compare(pts[i], v); },
      threads));
}

}  // namespace qlidar
