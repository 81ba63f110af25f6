#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/detection.hpp"
#include "core/error.hpp"
#include "core/wigner.hpp"

using namespace qlidar;
using std::numbers::pi;

namespace {

const StateKind kAll[] = {StateKind::CS,   StateKind::ECSS, StateKind::MPS0,
                          StateKind::MPS1, StateKind::MPS2, StateKind::MPS3};

WignerGrid grid_for(const SuperposedState& s, int res = 201) {
  auto r = default_range(s);
  return wigner_grid(as_dyads(s), r, r, res, 0);
}

}  // namespace

TEST_CASE("coherent and vacuum peaks") {
  complex a(0.8, -1.1);
  CHECK(wigner_point(make_state(StateKind::CS, a), {a.real(), a.imag()}) ==
        doctest::Approx(2 / pi).epsilon(1e-14));
  CHECK(wigner_point(vacuum(), {0, 0}) == doctest::Approx(2 / pi).epsilon(1e-14));
  // Gaussian of width 1/2 per quadrature
  CHECK(wigner_point(vacuum(), {0.5, 0}) == doctest::Approx(2 / pi * std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("grids integrate to one and respect the bound") {
  for (auto k : kAll) {
    auto g = grid_for(make_state(k, complex(1, 1)));
    CHECK(g.y1_axis.size() == 201);
    CHECK(std::abs(g.integral - 1) < 1e-3);
    for (double v : g.values) CHECK(std::abs(v) <= kWignerBound + 1e-9);
  }
}

TEST_CASE("negativity") {
  auto cs = negativity_summary(grid_for(make_state(StateKind::CS, complex(1, 1))));
  CHECK(cs.min_value >= -1e-12);
  CHECK(cs.negative_volume < 1e-12);

  auto m0 = negativity_summary(grid_for(make_state(StateKind::MPS0, complex(1, 1))));
  auto m1 = negativity_summary(grid_for(make_state(StateKind::MPS1, complex(1, 1))));
  auto m3 = negativity_summary(grid_for(make_state(StateKind::MPS3, complex(1, 1))));
  CHECK(m0.min_value < 0);
  CHECK(m1.min_value < 0);
  CHECK(m3.min_value < 0);
  CHECK(std::abs(m1.min_value) > std::abs(m0.min_value));
  CHECK(m1.negative_volume > 0);
}

TEST_CASE("grid layout") {
  auto g = wigner_grid(as_dyads(vacuum()), {-1, 1}, {-2, 2}, 5);
  CHECK(g.y1_axis.front() == -1.0);
  CHECK(g.y2_axis.back() == 2.0);
  CHECK(g.cell_area == doctest::Approx(0.5 * 1.0));
  CHECK(g.at(2, 2) == doctest::Approx(2 / pi));
  CHECK(g.at(3, 2) == doctest::Approx(wigner_point(vacuum(), {0.5, 0})));
  CHECK(g.at(2, 3) == doctest::Approx(wigner_point(vacuum(), {0, 1})));
  CHECK_THROWS_AS(wigner_grid(as_dyads(vacuum()), {-1, 1}, {-1, 1}, 1), Error);
  CHECK_THROWS_AS(wigner_grid(as_dyads(vacuum()), {1, -1}, {-1, 1}, 5), Error);
}

TEST_CASE("default range covers every lobe") {
  auto r = default_range(make_state(StateKind::MPS1, complex(3, 4)));
  CHECK(r.lo == doctest::Approx(-10));
  CHECK(r.hi == doctest::Approx(10));
}

TEST_CASE("reduced port-a state") {
  auto a = make_state(StateKind::MPS1, complex(1.3, 0.2));
  auto b = make_state(StateKind::CS, complex(0.4, 0.9));
  auto cfg = MziConfig::with_loss(1.7, 0.4);
  auto out = propagate(a, b, cfg);
  auto rho = reduced_port_a(out);
  complex tr = 0;
  for (std::size_t i = 0; i < rho.amps.size(); ++i) tr += rho.coeff(i, i);
  // trace of sum c_ij |a_i><a_j| is sum c_ij <a_j|a_i>
  complex full = 0;
  for (std::size_t i = 0; i < rho.amps.size(); ++i)
    for (std::size_t j = 0; j < rho.amps.size(); ++j)
      full += rho.coeff(i, j) * overlap(rho.amps[j], rho.amps[i]);
  CHECK(std::abs(full - 1.0) < 1e-12);
  CHECK(std::abs(pi / 2 * wigner_point(rho, {0, 0}) - parity_expectation(out)) < 1e-10);
  // Hermitian coefficients give a real Wigner function
  for (std::size_t i = 0; i < rho.amps.size(); ++i)
    for (std::size_t j = 0; j < rho.amps.size(); ++j)
      CHECK(std::abs(rho.coeff(i, j) - std::conj(rho.coeff(j, i))) < 1e-14);
}
