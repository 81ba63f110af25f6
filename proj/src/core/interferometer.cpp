#include "interferometer.hpp"

#include <cmath>

#include "hermitian.hpp"

namespace qlidar {

namespace {

const complex I(0.0, 1.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Balanced splitter: (x, y) -> ((x + i y), (i x + y)) / sqrt 2
std::array<std::array<complex, 2>, 2> splitter() {
  return {{{kInvSqrt2, I * kInvSqrt2}, {I * kInvSqrt2, kInvSqrt2}}};
}

// Builds the map with the arm-1 phase factor replaced by phase1. Passing
// i e^{i phi} and zeroing the arm-2 factor yields the phi derivative, since
// only arm 1 carries phi.
ModeMatrix compose(const MziConfig& c, complex phase1, complex phase2) {
  auto bs = splitter();
  ModeMatrix m{};
  for (int in = 0; in < 2; ++in) {
    complex arm1 = bs[0][in];
    complex arm2 = bs[1][in];
    complex t1 = c.loss_t * phase1 * arm1;
    complex t2 = c.loss_t * phase2 * arm2;
    m[PortA][in] = bs[0][0] * t1 + bs[0][1] * t2;
    m[PortB][in] = bs[1][0] * t1 + bs[1][1] * t2;
    m[EnvA][in] = I * c.loss_r * phase1 * arm1;
    m[EnvB][in] = I * c.loss_r * phase2 * arm2;
  }
  return m;
}

}  // namespace

ModeMatrix mode_transform(const MziConfig& config) {
  config.validate();
  return compose(config, std::polar(1.0, config.phi), 1.0);
}

ModeMatrix mode_transform_derivative(const MziConfig& config) {
  config.validate();
  return compose(config, I * std::polar(1.0, config.phi), 0.0);
}

ModeAmps apply(const ModeMatrix& m, complex in_a, complex in_b) {
  ModeAmps out;
  for (int k = 0; k < 4; ++k) out[k] = m[k][0] * in_a + m[k][1] * in_b;
  return out;
}

FourModeOutput propagate(const SuperposedState& a, const SuperposedState& b,
                         const MziConfig& config) {
  ModeMatrix m = mode_transform(config);
  FourModeOutput out{{}, config};
  out.terms.reserve(a.size() * b.size());
  for (auto& ta : a.terms())
    for (auto& tb : b.terms())
      out.terms.push_back(
          {ta.weight * tb.weight, apply(m, ta.amplitude, tb.amplitude)});
  return out;
}

std::vector<ModeAmps> propagate_tangent(const SuperposedState& a,
                                        const SuperposedState& b,
                                        const MziConfig& config) {
  ModeMatrix d = mode_transform_derivative(config);
  std::vector<ModeAmps> out;
  out.reserve(a.size() * b.size());
  for (auto& ta : a.terms())
    for (auto& tb : b.terms()) out.push_back(apply(d, ta.amplitude, tb.amplitude));
  return out;
}

namespace {

complex product_overlap(const ModeAmps& x, const ModeAmps& y) {
  complex e = 0.0;
  for (int k = 0; k < 4; ++k) e += log_overlap(x[k], y[k]);
  return std::exp(e);
}

}  // namespace

double gram_sum(const FourModeOutput& out) {
  detail::HermitianSum s;
  for (auto& ti : out.terms)
    for (auto& tj : out.terms)
      s.add(std::conj(ti.weight) * tj.weight * product_overlap(ti.amps, tj.amps));
  return s.real("output gram_sum");
}

std::array<double, 4> mode_mean_photons(const FourModeOutput& out) {
  std::array<double, 4> n{};
  for (int k = 0; k < 4; ++k) {
    detail::HermitianSum s;
    for (auto& ti : out.terms)
      for (auto& tj : out.terms)
        s.add(std::conj(ti.weight) * tj.weight * std::conj(ti.amps[k]) *
              tj.amps[k] * product_overlap(ti.amps, tj.amps));
    n[k] = s.real("mode_mean_photons");
  }
  return n;
}

}  // namespace qlidar
