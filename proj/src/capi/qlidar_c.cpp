#include "qlidar/qlidar.h"

#include <atomic>
#include <cmath>
#include <new>
#include <stdexcept>
#include <string>

#include "core/error.hpp"
#include "core/fock_oracle.hpp"
#include "core/metrology.hpp"
#include "core/parallel.hpp"
#include "core/regression.hpp"
#include "core/wigner.hpp"

struct qlidar_state_t {
  qlidar::SuperposedState state;
};

struct qlidar_wigner_grid_t {
  qlidar::WignerGrid grid;
};

struct qlidar_oracle_report_t {
  std::vector<qlidar_oracle_point> points;
};

namespace {

thread_local std::string last_error;
std::atomic<unsigned> worker_threads{0};

qlidar_status to_status(qlidar::ErrorCode c) {
  using qlidar::ErrorCode;
  switch (c) {
    case ErrorCode::InvalidArgument: return QLIDAR_INVALID_ARGUMENT;
    case ErrorCode::DegenerateState: return QLIDAR_DEGENERATE_STATE;
    case ErrorCode::NegativeProbability: return QLIDAR_NEGATIVE_PROBABILITY;
    case ErrorCode::ZeroEnergy: return QLIDAR_ZERO_ENERGY;
    case ErrorCode::NoPeak: return QLIDAR_NO_PEAK;
    case ErrorCode::CutoffTooSmall: return QLIDAR_CUTOFF_TOO_SMALL;
    case ErrorCode::ImaginaryResidue: return QLIDAR_NUMERICAL_ERROR;
  }
  return QLIDAR_INTERNAL_ERROR;
}

struct BufferTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
qlidar_status try_(F&& f) {
  try {
    f();
    last_error.clear();
    return QLIDAR_OK;
  } catch (const qlidar::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const BufferTooSmall& e) {
    last_error = e.what();
    return QLIDAR_BUFFER_TOO_SMALL;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QLIDAR_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QLIDAR_NUMERICAL_ERROR;
  } catch (...) {
    last_error = "unknown failure";
    return QLIDAR_INTERNAL_ERROR;
  }
}

template <class T>
T& deref(T* p, const char* what) {
  if (!p) qlidar::fail(qlidar::ErrorCode::InvalidArgument, std::string(what) + " is null");
  return *p;
}

const qlidar::SuperposedState& st(qlidar_state s, const char* what = "state") {
  return deref(s, what).state;
}

qlidar::MziConfig cfg(const qlidar_config* c) {
  auto& r = deref(c, "config");
  qlidar::MziConfig m{r.phi, r.loss_t, r.loss_r};
  m.validate();
  return m;
}

qlidar::StateKind kind_of(qlidar_state_kind k) {
  switch (k) {
    case QLIDAR_CS: return qlidar::StateKind::CS;
    case QLIDAR_ECSS: return qlidar::StateKind::ECSS;
    case QLIDAR_MPS0: return qlidar::StateKind::MPS0;
    case QLIDAR_MPS1: return qlidar::StateKind::MPS1;
    case QLIDAR_MPS2: return qlidar::StateKind::MPS2;
    case QLIDAR_MPS3: return qlidar::StateKind::MPS3;
  }
  qlidar::fail(qlidar::ErrorCode::InvalidArgument, "unknown state kind");
}

qlidar_state_kind c_kind(qlidar::StateKind k) {
  switch (k) {
    case qlidar::StateKind::ECSS: return QLIDAR_ECSS;
    case qlidar::StateKind::MPS0: return QLIDAR_MPS0;
    case qlidar::StateKind::MPS1: return QLIDAR_MPS1;
    case qlidar::StateKind::MPS2: return QLIDAR_MPS2;
    case qlidar::StateKind::MPS3: return QLIDAR_MPS3;
    default: return QLIDAR_CS;
  }
}

qlidar::Scheme scheme_of(qlidar_scheme s) {
  if (s == QLIDAR_PARITY) return qlidar::Scheme::Parity;
  if (s == QLIDAR_Z) return qlidar::Scheme::Z;
  qlidar::fail(qlidar::ErrorCode::InvalidArgument, "unknown scheme");
}

qlidar::SnlEnergy energy_of(qlidar_snl_energy e) {
  if (e == QLIDAR_SNL_MEAN_PHOTON) return qlidar::SnlEnergy::MeanPhoton;
  if (e == QLIDAR_SNL_AMPLITUDE) return qlidar::SnlEnergy::AmplitudeSquared;
  qlidar::fail(qlidar::ErrorCode::InvalidArgument, "unknown SNL energy");
}

qlidar_sensitivity c_point(const qlidar::SensitivityPoint& p) {
  return {p.phi, p.delta_phi, p.snl, p.ratio, p.defined() ? 1 : 0};
}

qlidar_state wrap(qlidar::SuperposedState s) {
  return new qlidar_state_t{std::move(s)};
}

template <class T>
std::vector<T> axis(const T* data, std::size_t n, std::vector<T> fallback) {
  if (n == 0) return fallback;
  if (!data) qlidar::fail(qlidar::ErrorCode::InvalidArgument, "grid axis is null");
  return std::vector<T>(data, data + n);
}

}  // namespace

extern "C" {

const char* qlidar_status_string(qlidar_status s) {
  switch (s) {
    case QLIDAR_OK: return "ok";
    case QLIDAR_INVALID_ARGUMENT: return "invalid argument";
    case QLIDAR_DEGENERATE_STATE: return "degenerate state";
    case QLIDAR_NEGATIVE_PROBABILITY: return "negative probability";
    case QLIDAR_ZERO_ENERGY: return "zero energy";
    case QLIDAR_NO_PEAK: return "no peak";
    case QLIDAR_CUTOFF_TOO_SMALL: return "cutoff too small";
    case QLIDAR_NUMERICAL_ERROR: return "numerical error";
    case QLIDAR_BUFFER_TOO_SMALL: return "buffer too small";
    case QLIDAR_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* qlidar_last_error(void) { return last_error.c_str(); }

const char* qlidar_state_kind_name(qlidar_state_kind kind) {
  switch (kind) {
    case QLIDAR_CS: return "CS";
    case QLIDAR_ECSS: return "ECSS";
    case QLIDAR_MPS0: return "MPS0";
    case QLIDAR_MPS1: return "MPS1";
    case QLIDAR_MPS2: return "MPS2";
    case QLIDAR_MPS3: return "MPS3";
  }
  return "?";
}

qlidar_status qlidar_parse_state_kind(const char* name, qlidar_state_kind* out) {
  return try_([&] {
    auto k = qlidar::parse_state_kind(deref(name, "name") ? name : "");
    if (!k) qlidar::fail(qlidar::ErrorCode::InvalidArgument,
                         std::string("unknown state '") + name + "'");
    deref(out, "out") = c_kind(*k);
  });
}

void qlidar_set_threads(unsigned threads) { worker_threads = threads; }

qlidar_status qlidar_state_create(qlidar_state_kind kind, double alpha_re,
                                  double alpha_im, qlidar_state* out) {
  return try_([&] {
    auto& o = deref(out, "out");
    o = wrap(qlidar::make_state(kind_of(kind), {alpha_re, alpha_im}));
  });
}

qlidar_status qlidar_state_create_custom(const double* weight_re,
                                         const double* weight_im,
                                         const double* amp_re,
                                         const double* amp_im, size_t n,
                                         qlidar_state* out) {
  return try_([&] {
    auto& o = deref(out, "out");
    if (n == 0 || !weight_re || !weight_im || !amp_re || !amp_im)
      qlidar::fail(qlidar::ErrorCode::InvalidArgument, "empty or null term arrays");
    std::vector<qlidar::CoherentTerm> terms;
    for (size_t i = 0; i < n; ++i)
      terms.push_back({{weight_re[i], weight_im[i]}, {amp_re[i], amp_im[i]}});
    o = wrap(qlidar::SuperposedState::from_terms(std::move(terms)));
  });
}

qlidar_status qlidar_state_with_mean_photon(qlidar_state_kind kind, double mean,
                                            qlidar_state* out) {
  return try_([&] {
    auto& o = deref(out, "out");
    auto k = kind_of(kind);
    double a2 = qlidar::alpha2_for_mean_photon(k, mean);
    o = wrap(qlidar::make_state(k, std::sqrt(a2)));
  });
}

qlidar_status qlidar_state_vacuum(qlidar_state* out) {
  return try_([&] { deref(out, "out") = wrap(qlidar::vacuum()); });
}

void qlidar_state_destroy(qlidar_state state) { delete state; }

qlidar_status qlidar_state_mean_photon(qlidar_state state, double* out) {
  return try_([&] {
    double v = qlidar::mean_photon_number(st(state));
    deref(out, "out") = v;
  });
}

qlidar_status qlidar_state_max_alpha2(qlidar_state state, double* out) {
  return try_([&] {
    double m = 0.0;
    for (auto& t : st(state).terms()) m = std::max(m, std::norm(t.amplitude));
    deref(out, "out") = m;
  });
}

qlidar_status qlidar_state_terms(qlidar_state state, size_t* out) {
  return try_([&] {
    auto n = st(state).size();
    deref(out, "out") = n;
  });
}

qlidar_status qlidar_config_make(double phi, double loss_r, qlidar_config* out) {
  return try_([&] {
    auto m = qlidar::MziConfig::with_loss(phi, loss_r);
    m.validate();
    deref(out, "out") = {m.phi, m.loss_t, m.loss_r};
  });
}

qlidar_status qlidar_expectation(qlidar_state a, qlidar_state b,
                                 const qlidar_config* config,
                                 qlidar_scheme scheme, double* out) {
  return try_([&] {
    double v = qlidar::expectation(qlidar::propagate(st(a), st(b), cfg(config)),
                                   scheme_of(scheme));
    deref(out, "out") = v;
  });
}

qlidar_status qlidar_expectation_derivative(qlidar_state a, qlidar_state b,
                                            const qlidar_config* config,
                                            qlidar_scheme scheme, double* out) {
  return try_([&] {
    double v = qlidar::expectation_derivative(st(a), st(b), cfg(config),
                                              scheme_of(scheme));
    deref(out, "out") = v;
  });
}

qlidar_status qlidar_photon_probability(qlidar_state a, qlidar_state b,
                                        const qlidar_config* config, int n,
                                        double* out) {
  return try_([&] {
    double v = qlidar::photon_probability(
        qlidar::propagate(st(a), st(b), cfg(config)), n);
    deref(out, "out") = v;
  });
}

qlidar_status qlidar_binary_probabilities(qlidar_state a, qlidar_state b,
                                          const qlidar_config* config,
                                          double* p_plus, double* p_minus) {
  return try_([&] {
    auto [p, m] = qlidar::binary_probabilities(
        qlidar::propagate(st(a), st(b), cfg(config)));
    deref(p_plus, "p_plus") = p;
    deref(p_minus, "p_minus") = m;
  });
}

qlidar_status qlidar_phase_sensitivity(qlidar_state a, qlidar_state b,
                                       const qlidar_config* config,
                                       qlidar_scheme scheme,
                                       qlidar_snl_energy energy,
                                       qlidar_sensitivity* out) {
  return try_([&] {
    auto p = qlidar::phase_sensitivity(st(a), st(b), cfg(config),
                                       scheme_of(scheme), energy_of(energy));
    deref(out, "out") = c_point(p);
  });
}

qlidar_status qlidar_snl(qlidar_state a, qlidar_state b,
                         qlidar_snl_energy energy, double* out) {
  return try_([&] {
    double v = qlidar::snl(st(a), st(b), energy_of(energy));
    deref(out, "out") = v;
  });
}

qlidar_status qlidar_signal_curve(qlidar_state a, qlidar_state b, double loss_r,
                                  qlidar_scheme scheme, double phi_min,
                                  double phi_max, size_t steps, double* phis,
                                  double* values) {
  return try_([&] {
    if (!phis || !values)
      qlidar::fail(qlidar::ErrorCode::InvalidArgument, "output buffers are null");
    auto s = scheme_of(scheme);
    auto f = qlidar::make_observable(st(a), st(b), loss_r, s);
    auto c = qlidar::sample_curve(f, s, phi_min, phi_max, static_cast<int>(steps),
                                  worker_threads);
    std::copy(c.phis.begin(), c.phis.end(), phis);
    std::copy(c.values.begin(), c.values.end(), values);
  });
}

qlidar_status qlidar_sensitivity_curve(qlidar_state a, qlidar_state b,
                                       double loss_r, qlidar_scheme scheme,
                                       qlidar_snl_energy energy, double phi_min,
                                       double phi_max, size_t steps,
                                       qlidar_sensitivity* out) {
  return try_([&] {
    if (!out) qlidar::fail(qlidar::ErrorCode::InvalidArgument, "output buffer is null");
    if (steps < 2 || !(phi_max > phi_min))
      qlidar::fail(qlidar::ErrorCode::InvalidArgument, "need >= 2 steps over a non-empty range");
    auto& sa = st(a);
    auto& sb = st(b);
    auto s = scheme_of(scheme);
    auto e = energy_of(energy);
    qlidar::MziConfig::with_loss(0.0, loss_r);
    const double h = (phi_max - phi_min) / double(steps - 1);
    auto pts = qlidar::parallel_map(
        steps,
        [&](std::size_t k) {
          double phi = k + 1 == steps ? phi_max : phi_min + double(k) * h;
          return qlidar::phase_sensitivity(
              sa, sb, qlidar::MziConfig::with_loss(phi, loss_r), s, e);
        },
        worker_threads);
    for (size_t k = 0; k < steps; ++k) out[k] = c_point(pts[k]);
  });
}

qlidar_status qlidar_fwhm(qlidar_state a, qlidar_state b, double loss_r,
                          qlidar_scheme scheme, double phi_min, double phi_max,
                          size_t steps, double* out) {
  return try_([&] {
    auto s = scheme_of(scheme);
    auto f = qlidar::make_observable(st(a), st(b), loss_r, s);
    auto c = qlidar::sample_curve(f, s, phi_min, phi_max, static_cast<int>(steps),
                                  worker_threads);
    double w = qlidar::fwhm(c, &f);
    deref(out, "out") = w;
  });
}

qlidar_status qlidar_peak_count(qlidar_state a, qlidar_state b, double loss_r,
                                qlidar_scheme scheme, double lo, double hi,
                                int samples_per_2pi, qlidar_peak_side side,
                                int* out) {
  return try_([&] {
    auto s = scheme_of(scheme);
    qlidar::PeakSide ps;
    switch (side) {
      case QLIDAR_PEAKS_UPPER: ps = qlidar::PeakSide::Upper; break;
      case QLIDAR_PEAKS_LOWER: ps = qlidar::PeakSide::Lower; break;
      case QLIDAR_PEAKS_BOTH: ps = qlidar::PeakSide::Both; break;
      case QLIDAR_PEAKS_PRINCIPAL: ps = qlidar::PeakSide::Principal; break;
      default: qlidar::fail(qlidar::ErrorCode::InvalidArgument, "unknown peak side");
    }
    auto f = qlidar::make_observable(st(a), st(b), loss_r, s);
    auto c = qlidar::sample_window(f, s, lo, hi, samples_per_2pi, worker_threads);
    int n = qlidar::peak_count(c, lo, hi, ps, &f);
    deref(out, "out") = n;
  });
}

qlidar_status qlidar_loss_sweep(qlidar_state a, qlidar_state b,
                                const qlidar_loss_spec* spec,
                                const double* r_grid, size_t n,
                                double* values) {
  return try_([&] {
    auto& sp = deref(spec, "spec");
    if (n > 0 && (!r_grid || !values))
      qlidar::fail(qlidar::ErrorCode::InvalidArgument, "grid or output buffer is null");
    qlidar::LossSweepSpec s;
    s.scheme = scheme_of(sp.scheme);
    if (sp.metric != QLIDAR_METRIC_RATIO && sp.metric != QLIDAR_METRIC_FWHM)
      qlidar::fail(qlidar::ErrorCode::InvalidArgument, "unknown loss metric");
    s.metric = sp.metric == QLIDAR_METRIC_RATIO ? qlidar::LossMetric::SensitivityRatio
                                                 : qlidar::LossMetric::Fwhm;
    s.phi = sp.phi;
    s.window_lo = sp.window_lo;
    s.window_hi = sp.window_hi;
    s.steps = static_cast<int>(sp.steps);
    s.energy = energy_of(sp.energy);
    auto rows = qlidar::loss_sweep(st(a), st(b), s,
                                   std::vector<double>(r_grid, r_grid + n),
                                   worker_threads);
    for (size_t i = 0; i < n; ++i) values[i] = rows[i].value;
  });
}

qlidar_status qlidar_range_from_phase(double phi, double wavelength, double* out) {
  return try_([&] {
    double f = qlidar::range_from_phase(phi, wavelength);
    deref(out, "out") = f;
  });
}

qlidar_status qlidar_wigner_point(qlidar_state state, double y1, double y2,
                                  double* out) {
  return try_([&] {
    double w = qlidar::wigner_point(st(state), {y1, y2});
    deref(out, "out") = w;
  });
}

qlidar_status qlidar_wigner_reduced_point(qlidar_state a, qlidar_state b,
                                          const qlidar_config* config,
                                          double y1, double y2, double* out) {
  return try_([&] {
    auto rho = qlidar::reduced_port_a(qlidar::propagate(st(a), st(b), cfg(config)));
    double w = qlidar::wigner_point(rho, {y1, y2});
    deref(out, "out") = w;
  });
}

qlidar_status qlidar_wigner_default_range(qlidar_state state, double* lo,
                                          double* hi) {
  return try_([&] {
    auto r = qlidar::default_range(st(state));
    deref(lo, "lo") = r.lo;
    deref(hi, "hi") = r.hi;
  });
}

qlidar_status qlidar_wigner_grid_create(qlidar_state state, double y1_lo,
                                        double y1_hi, double y2_lo,
                                        double y2_hi, int resolution,
                                        qlidar_wigner_grid* out) {
  return try_([&] {
    auto& o = deref(out, "out");
    auto g = qlidar::wigner_grid(qlidar::as_dyads(st(state)), {y1_lo, y1_hi},
                                 {y2_lo, y2_hi}, resolution, worker_threads);
    o = new qlidar_wigner_grid_t{std::move(g)};
  });
}

void qlidar_wigner_grid_destroy(qlidar_wigner_grid grid) { delete grid; }

qlidar_status qlidar_wigner_grid_data(qlidar_wigner_grid grid, size_t* n1,
                                      size_t* n2, const double** y1_axis,
                                      const double** y2_axis,
                                      const double** values) {
  return try_([&] {
    auto& g = deref(grid, "grid").grid;
    deref(n1, "n1") = g.y1_axis.size();
    deref(n2, "n2") = g.y2_axis.size();
    if (y1_axis) *y1_axis = g.y1_axis.data();
    if (y2_axis) *y2_axis = g.y2_axis.data();
    if (values) *values = g.values.data();
  });
}

qlidar_status qlidar_wigner_grid_summary(qlidar_wigner_grid grid,
                                         qlidar_negativity* out) {
  return try_([&] {
    auto& g = deref(grid, "grid").grid;
    auto s = qlidar::negativity_summary(g);
    deref(out, "out") = {g.integral, s.min_value, s.min_location.y1,
                         s.min_location.y2, s.negative_volume};
  });
}

qlidar_status qlidar_oracle_simulate(qlidar_state a, qlidar_state b,
                                     const qlidar_config* config, int cutoff,
                                     double* probs, size_t capacity,
                                     size_t* count, double* parity, double* z,
                                     double* tail_bound) {
  return try_([&] {
    auto& sa = st(a);
    auto& sb = st(b);
    auto c = cutoff > 0 ? cutoff : qlidar::fock::recommended_cutoff(sa, sb);
    auto r = qlidar::fock::simulate(sa, sb, cfg(config), c);
    deref(count, "count") = r.port_a.size();
    if (probs && capacity < r.port_a.size())
      throw BufferTooSmall("probability buffer holds " + std::to_string(capacity) +
                           ", need " + std::to_string(r.port_a.size()));
    if (probs) std::copy(r.port_a.begin(), r.port_a.end(), probs);
    if (parity) *parity = r.parity;
    if (z) *z = r.z;
    if (tail_bound) *tail_bound = r.tail_bound;
  });
}

qlidar_status qlidar_oracle_check(const qlidar_grid_spec* spec,
                                  qlidar_oracle_report* out) {
  return try_([&] {
    auto& o = deref(out, "out");
    auto grid = qlidar::RegressionGrid::standard();
    if (spec) {
      std::vector<qlidar::StateKind> kinds;
      if (spec->n_kinds > 0) {
        if (!spec->kinds) qlidar::fail(qlidar::ErrorCode::InvalidArgument, "grid axis is null");
        for (size_t i = 0; i < spec->n_kinds; ++i) kinds.push_back(kind_of(spec->kinds[i]));
        grid.kinds = kinds;
      }
      grid.alpha2 = axis(spec->alpha2, spec->n_alpha2, grid.alpha2);
      grid.zeta2 = axis(spec->zeta2, spec->n_zeta2, grid.zeta2);
      grid.phi = axis(spec->phi, spec->n_phi, grid.phi);
      grid.loss_r = axis(spec->loss_r, spec->n_loss_r, grid.loss_r);
    }
    auto pts = grid.points();
    auto rows = qlidar::parallel_map(
        pts.size(),
        [&](std::size_t i) {
          auto op = qlidar::oracle_compare(pts[i]);
          auto cp = qlidar::closed_form_compare(
              pts[i], qlidar::closed_form::Variant::Corrected);
          auto& p = pts[i];
          return qlidar_oracle_point{c_kind(p.kind), p.alpha2, p.zeta2, p.phi,
                                     p.loss_r, op.cutoff, op.max_dp,
                                     op.d_parity, op.d_z, cp.worst()};
        },
        worker_threads);
    o = new qlidar_oracle_report_t{std::move(rows)};
  });
}

void qlidar_oracle_report_destroy(qlidar_oracle_report report) { delete report; }

qlidar_status qlidar_oracle_report_size(qlidar_oracle_report report, size_t* out) {
  return try_([&] {
    auto n = deref(report, "report").points.size();
    deref(out, "out") = n;
  });
}

qlidar_status qlidar_oracle_report_point(qlidar_oracle_report report,
                                         size_t index, qlidar_oracle_point* out) {
  return try_([&] {
    auto& pts = deref(report, "report").points;
    if (index >= pts.size())
      qlidar::fail(qlidar::ErrorCode::InvalidArgument, "report index out of range");
    deref(out, "out") = pts[index];
  });
}

}  // extern "C"
