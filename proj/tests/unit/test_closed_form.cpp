#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/closed_form.hpp"
#include "core/detection.hpp"
#include "core/regression.hpp"
#include "core/wigner.hpp"

using namespace qlidar;
using namespace qlidar::closed_form;
using std::numbers::pi;

namespace {

const StateKind kMps[] = {StateKind::MPS0, StateKind::MPS1, StateKind::MPS2, StateKind::MPS3};

}  // namespace

TEST_CASE("corrected closed forms track the engine on the regression grid") {
  auto report = closed_form_check(RegressionGrid::standard(), Variant::Corrected, 0);
  CHECK(report.points.size() == 486);
  CHECK(report.worst < 1e-10);
}

TEST_CASE("the printed forms disagree with the engine") {
  // each misprint is isolated at a point where it is the only difference
  auto at = [](StateKind k, double a2, double z2, double phi, double r) {
    return closed_form_compare({k, a2, z2, phi, r}, Variant::Original);
  };
  // normalization: e^{-|alpha|^2} in the cross term
  CHECK(at(StateKind::MPS0, 2.0, 0, 1.1, 0).d_parity > 1e-3);
  // slopes: sin^2(phi) in p' and x'
  CHECK(at(StateKind::CS, 2.0, 0, 1.1, 0).d_parity < 1e-12);
  CHECK(at(StateKind::CS, 2.0, 0, 1.1, 0).d_parity_derivative > 1e-3);
  // O' = -t^2 cos(phi) enters through the cross terms only
  auto c = Coefficients::for_kind(StateKind::ECSS);
  auto cfg = MziConfig::lossless(1.1);
  auto ko = make_context(c, 2.0, 2.0, cfg, Variant::Original);
  auto kc = make_context(c, 2.0, 2.0, cfg, Variant::Corrected);
  CHECK(ko.O_prime == doctest::Approx(-std::cos(1.1)));
  CHECK(kc.O_prime == doctest::Approx(-std::sin(1.1)));
  CHECK(at(StateKind::ECSS, 2.0, 2.0, 1.1, 0).d_z_derivative > 1e-3);
}

TEST_CASE("photon-number distribution with vacuum in port b") {
  // the complex exponent q~ = -|alpha|^2 x + i j pi reproduces the engine
  for (auto kind : kMps)
    for (double r : {0.0, 0.4}) {
      auto c = Coefficients::for_kind(kind);
      double a2 = 2.0;
      auto cfg = MziConfig::with_loss(1.1, r);
      auto k = make_context(c, a2, 0, cfg, Variant::Corrected);
      auto out = propagate(make_state(kind, std::sqrt(a2)), vacuum(), cfg);
      for (int n = 0; n < 15; ++n)
        CHECK(std::abs(photon_probability_vacuum(c, k, n, Variant::Corrected) -
                       photon_probability(out, n)) < 1e-12);
    }
}

TEST_CASE("mean photon number prefactor") {
  for (auto kind : kMps) {
    auto c = Coefficients::for_kind(kind);
    double engine = mean_photon_number(make_state(kind, std::sqrt(2.0)));
    CHECK(mean_photon(c, 2.0, Variant::Corrected) == doctest::Approx(engine).epsilon(1e-12));
    CHECK(std::abs(mean_photon(c, 2.0, Variant::Original) - engine) > 1e-3);
  }
}

TEST_CASE("Wigner closed form") {
  complex alpha(1, 1);
  for (auto kind : kMps) {
    auto c = Coefficients::for_kind(kind);
    auto s = make_state(kind, alpha);
    for (complex lam : {complex(0, 0), complex(0.4, -1.3), complex(1.2, 0.9), complex(-2, 0.5)}) {
      double engine = wigner_point(s, {lam.real(), lam.imag()});
      CHECK(std::abs(wigner(c, alpha, lam, Variant::Corrected) - engine) < 1e-10);
    }
    // the printed prefactor and cross term miss the engine somewhere
    double worst = 0;
    for (complex lam : {complex(0, 0), complex(0.4, -1.3), complex(1.2, 0.9)})
      worst = std::max(worst, std::abs(wigner(c, alpha, lam, Variant::Original) -
                                       wigner_point(s, {lam.real(), lam.imag()})));
    CHECK(worst > 1e-3);
  }
}

TEST_CASE("context intermediates") {
  auto c = Coefficients::for_kind(StateKind::MPS1);
  auto cfg = MziConfig::with_loss(0.8, 0.3);
  auto k = make_context(c, 2.0, 3.0, cfg, Variant::Corrected);
  double t2 = cfg.loss_t * cfg.loss_t;
  CHECK(k.x == doctest::Approx(t2 * std::pow(std::cos(0.4), 2) + 0.09));
  CHECK(k.G == doctest::Approx(2.0 * t2 * std::pow(std::sin(0.4), 2) +
                               3.0 * t2 * std::pow(std::cos(0.4), 2)));
  CHECK(k.q_tilde.imag() == doctest::Approx(pi));

  // primes are phi-derivatives of their partners
  double h = 1e-6;
  auto up = make_context(c, 2.0, 3.0, MziConfig::with_loss(0.8 + h, 0.3), Variant::Corrected);
  auto dn = make_context(c, 2.0, 3.0, MziConfig::with_loss(0.8 - h, 0.3), Variant::Corrected);
  auto d = [&](double Context::*m) { return (up.*m - dn.*m) / (2 * h); };
  CHECK(k.p_prime == doctest::Approx(d(&Context::p)).epsilon(1e-7));
  CHECK(k.x_prime == doctest::Approx(d(&Context::x)).epsilon(1e-7));
  CHECK(k.G_prime == doctest::Approx(d(&Context::G)).epsilon(1e-7));
  CHECK(k.W_prime == doctest::Approx(d(&Context::W)).epsilon(1e-7));
  CHECK(k.U_prime == doctest::Approx(d(&Context::U)).epsilon(1e-7));
  CHECK(k.O_prime == doctest::Approx(d(&Context::O)).epsilon(1e-7));
  CHECK(k.T1_prime == doctest::Approx(d(&Context::T1)).epsilon(1e-7));
  CHECK(k.S2_prime == doctest::Approx(d(&Context::S2)).epsilon(1e-7));
}

TEST_CASE("custom states have no closed form") {
  CHECK_THROWS(Coefficients::for_kind(StateKind::Custom));
}
