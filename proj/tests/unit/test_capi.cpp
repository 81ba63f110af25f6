#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "qlidar/qlidar.h"

using std::numbers::pi;

namespace {

struct Handle {
  qlidar_state s = nullptr;
  ~Handle() { qlidar_state_destroy(s); }
};

}  // namespace

TEST_CASE("status strings and kind names") {
  CHECK(std::strcmp(qlidar_status_string(QLIDAR_OK), "ok") == 0);
  CHECK(std::strcmp(qlidar_state_kind_name(QLIDAR_MPS2), "MPS2") == 0);
  qlidar_state_kind k;
  CHECK(qlidar_parse_state_kind("ecss", &k) == QLIDAR_OK);
  CHECK(k == QLIDAR_ECSS);
  CHECK(qlidar_parse_state_kind("custom", &k) == QLIDAR_INVALID_ARGUMENT);
  CHECK(qlidar_parse_state_kind("nope", &k) == QLIDAR_INVALID_ARGUMENT);
  CHECK(std::strlen(qlidar_last_error()) > 0);
  CHECK(qlidar_parse_state_kind(nullptr, &k) == QLIDAR_INVALID_ARGUMENT);
}

TEST_CASE("state lifecycle and errors") {
  Handle h;
  CHECK(qlidar_state_create(QLIDAR_MPS1, 1.0, 0.5, &h.s) == QLIDAR_OK);
  size_t n = 0;
  CHECK(qlidar_state_terms(h.s, &n) == QLIDAR_OK);
  CHECK(n == 4);
  double a2 = 0;
  CHECK(qlidar_state_max_alpha2(h.s, &a2) == QLIDAR_OK);
  CHECK(a2 == doctest::Approx(1.25));

  qlidar_state bad = nullptr;
  CHECK(qlidar_state_create(QLIDAR_MPS3, 1e-5, 0, &bad) == QLIDAR_DEGENERATE_STATE);
  CHECK(bad == nullptr);
  CHECK(qlidar_state_create(QLIDAR_CS, NAN, 0, &bad) == QLIDAR_INVALID_ARGUMENT);
  CHECK(qlidar_state_create(qlidar_state_kind(42), 1, 0, &bad) == QLIDAR_INVALID_ARGUMENT);
  CHECK(qlidar_state_create(QLIDAR_CS, 1, 0, nullptr) == QLIDAR_INVALID_ARGUMENT);
  double m;
  CHECK(qlidar_state_mean_photon(nullptr, &m) == QLIDAR_INVALID_ARGUMENT);
  qlidar_state_destroy(nullptr);
}

TEST_CASE("custom states") {
  double wr[] = {1, 1}, wi[] = {0, 0}, ar[] = {0, 0}, ai[] = {1, -1};
  Handle custom, ecss;
  REQUIRE(qlidar_state_create_custom(wr, wi, ar, ai, 2, &custom.s) == QLIDAR_OK);
  REQUIRE(qlidar_state_create(QLIDAR_ECSS, 1, 0, &ecss.s) == QLIDAR_OK);
  double m1, m2;
  qlidar_state_mean_photon(custom.s, &m1);
  qlidar_state_mean_photon(ecss.s, &m2);
  CHECK(m1 == doctest::Approx(m2).epsilon(1e-14));
  double cancel_w[] = {1, -1};
  double same_a[] = {0.5, 0.5};
  qlidar_state bad = nullptr;
  CHECK(qlidar_state_create_custom(cancel_w, wi, same_a, wi, 2, &bad) == QLIDAR_DEGENERATE_STATE);
  CHECK(qlidar_state_create_custom(wr, wi, ar, ai, 0, &bad) == QLIDAR_INVALID_ARGUMENT);
}

TEST_CASE("state with a target mean photon number") {
  Handle h;
  REQUIRE(qlidar_state_with_mean_photon(QLIDAR_MPS0, 3.0, &h.s) == QLIDAR_OK);
  double m;
  qlidar_state_mean_photon(h.s, &m);
  CHECK(m == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("observables through the C interface") {
  Handle a, b;
  qlidar_state_create(QLIDAR_CS, std::sqrt(2.0), 0, &a.s);
  qlidar_state_vacuum(&b.s);
  qlidar_config cfg;
  REQUIRE(qlidar_config_make(1.0, 0.0, &cfg) == QLIDAR_OK);
  double p = 2 * std::pow(std::sin(0.5), 2);
  double v;
  CHECK(qlidar_expectation(a.s, b.s, &cfg, QLIDAR_PARITY, &v) == QLIDAR_OK);
  CHECK(v == doctest::Approx(std::exp(-2 * p)));
  CHECK(qlidar_expectation(a.s, b.s, &cfg, QLIDAR_Z, &v) == QLIDAR_OK);
  CHECK(v == doctest::Approx(std::exp(-p)));
  CHECK(qlidar_photon_probability(a.s, b.s, &cfg, 1, &v) == QLIDAR_OK);
  CHECK(v == doctest::Approx(p * std::exp(-p)));
  double pp, pm;
  CHECK(qlidar_binary_probabilities(a.s, b.s, &cfg, &pp, &pm) == QLIDAR_OK);
  CHECK(pp + pm == doctest::Approx(1.0));
  CHECK(qlidar_expectation_derivative(a.s, b.s, &cfg, QLIDAR_PARITY, &v) == QLIDAR_OK);
  CHECK(v == doctest::Approx(-2 * std::sin(1.0) * std::exp(-2 * p)));

  qlidar_sensitivity s;
  CHECK(qlidar_phase_sensitivity(a.s, b.s, &cfg, QLIDAR_PARITY, QLIDAR_SNL_MEAN_PHOTON, &s) ==
        QLIDAR_OK);
  CHECK(s.defined == 1);
  CHECK(s.snl == doctest::Approx(1 / std::sqrt(2.0)));
  qlidar_config zero;
  qlidar_config_make(0.0, 0.0, &zero);
  CHECK(qlidar_phase_sensitivity(a.s, b.s, &zero, QLIDAR_PARITY, QLIDAR_SNL_MEAN_PHOTON, &s) ==
        QLIDAR_OK);
  CHECK(s.defined == 0);
  CHECK(std::isinf(s.delta_phi));

  qlidar_config bad{0.3, 0.9, 0.9};
  CHECK(qlidar_expectation(a.s, b.s, &bad, QLIDAR_PARITY, &v) == QLIDAR_INVALID_ARGUMENT);
  CHECK(qlidar_config_make(0.3, 1.0, &cfg) == QLIDAR_INVALID_ARGUMENT);
  CHECK(qlidar_expectation(a.s, b.s, &cfg, qlidar_scheme(7), &v) == QLIDAR_INVALID_ARGUMENT);

  Handle vac;
  qlidar_state_vacuum(&vac.s);
  CHECK(qlidar_snl(vac.s, b.s, QLIDAR_SNL_MEAN_PHOTON, &v) == QLIDAR_ZERO_ENERGY);
}

TEST_CASE("sweeps") {
  Handle a, b;
  qlidar_state_create(QLIDAR_ECSS, std::sqrt(2.0), 0, &a.s);
  qlidar_state_vacuum(&b.s);
  std::vector<double> phis(5), vals(5);
  CHECK(qlidar_signal_curve(a.s, b.s, 0.0, QLIDAR_PARITY, -pi, pi, 5, phis.data(), vals.data()) ==
        QLIDAR_OK);
  CHECK(phis[2] == 0.0);
  CHECK(vals[2] == doctest::Approx(1.0));
  CHECK(qlidar_signal_curve(a.s, b.s, 0.0, QLIDAR_PARITY, pi, -pi, 5, phis.data(), vals.data()) ==
        QLIDAR_INVALID_ARGUMENT);

  std::vector<qlidar_sensitivity> sens(3);
  CHECK(qlidar_sensitivity_curve(a.s, b.s, 0.0, QLIDAR_Z, QLIDAR_SNL_MEAN_PHOTON, 0.0, 1.0, 3,
                                 sens.data()) == QLIDAR_OK);
  CHECK(sens[0].defined == 0);
  CHECK(sens[2].phi == 1.0);

  double w;
  CHECK(qlidar_fwhm(a.s, b.s, 0.0, QLIDAR_PARITY, -pi, pi, 2001, &w) == QLIDAR_OK);
  CHECK(w > 0);
  int peaks = 0;
  CHECK(qlidar_peak_count(a.s, b.s, 0.0, QLIDAR_PARITY, -pi, pi, 4096, QLIDAR_PEAKS_BOTH, &peaks) ==
        QLIDAR_OK);
  CHECK(peaks == 2);
  CHECK(qlidar_peak_count(a.s, b.s, 0.0, QLIDAR_PARITY, -pi, pi, 100, QLIDAR_PEAKS_BOTH, &peaks) ==
        QLIDAR_INVALID_ARGUMENT);

  qlidar_loss_spec spec{QLIDAR_PARITY, QLIDAR_METRIC_RATIO, 0.02, -pi, pi, 2001,
                        QLIDAR_SNL_MEAN_PHOTON};
  double grid[] = {0.0, 0.5};
  double out[2];
  CHECK(qlidar_loss_sweep(a.s, b.s, &spec, grid, 2, out) == QLIDAR_OK);
  CHECK(out[1] > out[0]);
  double bad_grid[] = {1.5};
  CHECK(qlidar_loss_sweep(a.s, b.s, &spec, bad_grid, 1, out) == QLIDAR_INVALID_ARGUMENT);

  double f;
  CHECK(qlidar_range_from_phase(4 * pi, 1.0, &f) == QLIDAR_OK);
  CHECK(f == doctest::Approx(1.0));
}

TEST_CASE("wigner grid handle") {
  Handle a;
  qlidar_state_create(QLIDAR_MPS1, 1, 1, &a.s);
  double lo, hi;
  REQUIRE(qlidar_wigner_default_range(a.s, &lo, &hi) == QLIDAR_OK);
  qlidar_wigner_grid g = nullptr;
  REQUIRE(qlidar_wigner_grid_create(a.s, lo, hi, lo, hi, 101, &g) == QLIDAR_OK);
  size_t n1, n2;
  const double *y1, *y2, *w;
  CHECK(qlidar_wigner_grid_data(g, &n1, &n2, &y1, &y2, &w) == QLIDAR_OK);
  CHECK(n1 == 101);
  CHECK(n2 == 101);
  CHECK(y1[0] == lo);
  qlidar_negativity neg;
  CHECK(qlidar_wigner_grid_summary(g, &neg) == QLIDAR_OK);
  CHECK(neg.min_value < 0);
  CHECK(std::abs(neg.integral - 1) < 1e-3);
  qlidar_wigner_grid_destroy(g);
  CHECK(qlidar_wigner_grid_create(a.s, lo, hi, lo, hi, 1, &g) == QLIDAR_INVALID_ARGUMENT);
}

TEST_CASE("oracle entry points") {
  Handle a, b;
  qlidar_state_create(QLIDAR_MPS2, 1.2, 0, &a.s);
  qlidar_state_create(QLIDAR_CS, 0.8, 0, &b.s);
  qlidar_config cfg;
  qlidar_config_make(1.1, 0.3, &cfg);
  size_t count = 0;
  double parity, z, tail;
  CHECK(qlidar_oracle_simulate(a.s, b.s, &cfg, 0, nullptr, 0, &count, &parity, &z, &tail) ==
        QLIDAR_OK);
  CHECK(count > 10);
  std::vector<double> probs(count);
  CHECK(qlidar_oracle_simulate(a.s, b.s, &cfg, 0, probs.data(), count - 1, &count, nullptr,
                               nullptr, nullptr) == QLIDAR_BUFFER_TOO_SMALL);
  CHECK(qlidar_oracle_simulate(a.s, b.s, &cfg, 0, probs.data(), count, &count, nullptr, nullptr,
                               nullptr) == QLIDAR_OK);
  double engine;
  qlidar_expectation(a.s, b.s, &cfg, QLIDAR_PARITY, &engine);
  CHECK(std::abs(parity - engine) < 1e-10);
  CHECK(probs[0] == doctest::Approx(z).epsilon(1e-14));
  CHECK(qlidar_oracle_simulate(a.s, b.s, &cfg, 3, nullptr, 0, &count, &parity, &z, &tail) ==
        QLIDAR_CUTOFF_TOO_SMALL);

  qlidar_state_kind kinds[] = {QLIDAR_MPS1};
  double a2[] = {2.0}, z2[] = {0.0, 2.0}, phi[] = {0.7}, r[] = {0.0, 0.2};
  qlidar_grid_spec spec{kinds, 1, a2, 1, z2, 2, phi, 1, r, 2};
  qlidar_oracle_report rep = nullptr;
  REQUIRE(qlidar_oracle_check(&spec, &rep) == QLIDAR_OK);
  size_t n;
  CHECK(qlidar_oracle_report_size(rep, &n) == QLIDAR_OK);
  CHECK(n == 4);
  qlidar_oracle_point p;
  for (size_t i = 0; i < n; ++i) {
    REQUIRE(qlidar_oracle_report_point(rep, i, &p) == QLIDAR_OK);
    CHECK(p.kind == QLIDAR_MPS1);
    CHECK(p.max_dp < 1e-8);
    CHECK(p.d_closed_form < 1e-10);
  }
  CHECK(qlidar_oracle_report_point(rep, n, &p) == QLIDAR_INVALID_ARGUMENT);
  qlidar_oracle_report_destroy(rep);
}
