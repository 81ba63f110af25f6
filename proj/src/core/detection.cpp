#include "detection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"
#include "hermitian.hpp"

namespace qlidar {

namespace {

constexpr double kNegativeFloor = -1e-10;

// Exponent of prod_m <x_m|y_m> over the modes in [first, 4).
complex log_product_overlap(const ModeAmps& x, const ModeAmps& y, int first) {
  complex e = 0.0;
  for (int k = first; k < 4; ++k) e += log_overlap(x[k], y[k]);
  return e;
}

// d/dphi of log_overlap(x, y) given dx, dy
complex d_log_overlap(complex x, complex dx, complex y, complex dy) {
  return -std::real(std::conj(x) * dx) - std::real(std::conj(y) * dy) +
         std::conj(dx) * y + std::conj(x) * dy;
}

double checked_probability(double p, const char* what) {
  if (p < kNegativeFloor)
    fail(ErrorCode::NegativeProbability,
         std::string(what) + " = " + std::to_string(p));
  return std::clamp(p, 0.0, 1.0);
}

// Exponent of the port-a Poisson-like factor
// e^{-(|a_i|^2 + |a_j|^2)/2} (conj(a_i) a_j)^n / n!.
complex log_port_factor(complex ai, complex aj, int n) {
  complex e = -0.5 * (std::norm(ai) + std::norm(aj));
  if (n == 0) return e;
  complex z = std::conj(ai) * aj;
  return e + double(n) * std::log(z) - std::lgamma(n + 1.0);
}

}  // namespace

std::string_view to_string(Scheme s) {
  return s == Scheme::Parity ? "parity" : "z";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  if (name == "parity" || name == "Parity") return Scheme::Parity;
  if (name == "z" || name == "Z") return Scheme::Z;
  return std::nullopt;
}

int default_cutoff(const FourModeOutput& out) {
  double worst = 0.0;
  for (auto& t : out.terms) {
    double a2 = std::norm(t.amps[PortA]);
    worst = std::max(worst, std::ceil(a2 + 10.0 * std::sqrt(a2) + 20.0));
  }
  return static_cast<int>(worst);
}

double photon_probability(const FourModeOutput& out, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "photon number must be >= 0");
  detail::HermitianSum s;
  for (auto& ti : out.terms) {
    for (auto& tj : out.terms) {
      complex ai = ti.amps[PortA], aj = tj.amps[PortA];
      if (n > 0 && (ai == 0.0 || aj == 0.0)) continue;
      complex e = log_port_factor(ai, aj, n) +
                  log_product_overlap(ti.amps, tj.amps, PortB);
      s.add(std::conj(ti.weight) * tj.weight * std::exp(e));
    }
  }
  return checked_probability(s.real("photon_probability"), "P(n)");
}

PortDistribution port_distribution(const FourModeOutput& out,
                                   std::optional<int> cutoff) {
  PortDistribution d;
  d.cutoff = cutoff.value_or(default_cutoff(out));
  if (d.cutoff < 0) fail(ErrorCode::InvalidArgument, "cutoff must be >= 0");
  d.probs.reserve(d.cutoff + 1);
  double total = 0.0;
  for (int n = 0; n <= d.cutoff; ++n) {
    d.probs.push_back(photon_probability(out, n));
    total += d.probs.back();
  }
  d.tail_bound = std::max(0.0, 1.0 - total);
  return d;
}

double parity_expectation(const FourModeOutput& out) {
  // sum_n (-1)^n P(n) resums to <a_i|-a_j> on port a
  detail::HermitianSum s;
  for (auto& ti : out.terms)
    for (auto& tj : out.terms) {
      complex e = log_overlap(ti.amps[PortA], -tj.amps[PortA]) +
                  log_product_overlap(ti.amps, tj.amps, PortB);
      s.add(std::conj(ti.weight) * tj.weight * std::exp(e));
    }
  double v = s.real("parity_expectation");
  if (v < -1.0 - 1e-10 || v > 1.0 + 1e-10)
    fail(ErrorCode::NegativeProbability, "parity outside [-1, 1]");
  return std::clamp(v, -1.0, 1.0);
}

double z_expectation(const FourModeOutput& out) {
  return photon_probability(out, 0);
}

double expectation(const FourModeOutput& out, Scheme scheme) {
  return scheme == Scheme::Parity ? parity_expectation(out) : z_expectation(out);
}

std::pair<double, double> binary_probabilities(const FourModeOutput& out) {
  double parity = parity_expectation(out);
  return {0.5 * (1.0 + parity), 0.5 * (1.0 - parity)};
}

double expectation_derivative(const SuperposedState& a,
                              const SuperposedState& b,
                              const MziConfig& config, Scheme scheme) {
  FourModeOutput out = propagate(a, b, config);
  std::vector<ModeAmps> d = propagate_tangent(a, b, config);

  detail::HermitianSum s;
  for (std::size_t i = 0; i < out.terms.size(); ++i) {
    for (std::size_t j = 0; j < out.terms.size(); ++j) {
      const ModeAmps& x = out.terms[i].amps;
      const ModeAmps& y = out.terms[j].amps;
      const ModeAmps& dx = d[i];
      const ModeAmps& dy = d[j];
      complex e = 0.0, de = 0.0;
      for (int k = PortB; k < 4; ++k) {
        e += log_overlap(x[k], y[k]);
        de += d_log_overlap(x[k], dx[k], y[k], dy[k]);
      }
      // port a: <x|-y> for parity; vacuum projection <x|0><0|y> for Z
      complex xa = x[PortA], ya = y[PortA], dxa = dx[PortA], dya = dy[PortA];
      if (scheme == Scheme::Parity) {
        e += log_overlap(xa, -ya);
        de += d_log_overlap(xa, dxa, -ya, -dya);
      } else {
        e += -0.5 * (std::norm(xa) + std::norm(ya));
        de += -std::real(std::conj(xa) * dxa) - std::real(std::conj(ya) * dya);
      }
      s.add(std::conj(out.terms[i].weight) * out.terms[j].weight *
            std::exp(e) * de);
    }
  }
  return s.real("expectation_derivative");
}

}  // namespace qlidar
