#include "states.hpp"

#include <array>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <string>

#include "error.hpp"
#include "hermitian.hpp"

namespace qlidar {

namespace {

constexpr double kDegenerateGram = 1e-12;
constexpr double kMinMpsAlpha2 = 1e-6;

constexpr std::array<std::pair<StateKind, std::string_view>, 7> kNames{{
    {StateKind::CS, "CS"},
    {StateKind::ECSS, "ECSS"},
    {StateKind::MPS0, "MPS0"},
    {StateKind::MPS1, "MPS1"},
    {StateKind::MPS2, "MPS2"},
    {StateKind::MPS3, "MPS3"},
    {StateKind::Custom, "Custom"},
}};

void check_finite(const CoherentTerm& t) {
  if (!std::isfinite(t.weight.real()) || !std::isfinite(t.weight.imag()) ||
      !std::isfinite(t.amplitude.real()) || !std::isfinite(t.amplitude.imag()))
    fail(ErrorCode::InvalidArgument, "coherent term has non-finite entries");
}

int mps_index(StateKind kind) {
  switch (kind) {
    case StateKind::MPS0: return 0;
    case StateKind::MPS1: return 1;
    case StateKind::MPS2: return 2;
    case StateKind::MPS3: return 3;
    default: return -1;
  }
}

}  // namespace

std::string_view to_string(StateKind kind) {
  for (auto& [k, name] : kNames)
    if (k == kind) return name;
  return "?";
}

std::optional<StateKind> parse_state_kind(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(c));
  for (auto& [k, n] : kNames)
    if (k != StateKind::Custom && n == upper) return k;
  return std::nullopt;
}

complex log_overlap(complex a, complex b) {
  return -0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b;
}

complex overlap(complex a, complex b) { return std::exp(log_overlap(a, b)); }

double gram_sum(std::span<const CoherentTerm> terms) {
  detail::HermitianSum s;
  for (auto& ti : terms)
    for (auto& tj : terms)
      s.add(std::conj(ti.weight) * tj.weight *
            overlap(ti.amplitude, tj.amplitude));
  return s.real("gram_sum");
}

double normalization_constant(std::span<const CoherentTerm> terms) {
  if (terms.empty()) fail(ErrorCode::InvalidArgument, "empty term list");
  double g = gram_sum(terms);
  if (!(g >= kDegenerateGram))
    fail(ErrorCode::DegenerateState,
         "Gram sum " + std::to_string(g) + " below degeneracy threshold");
  return 1.0 / std::sqrt(g);
}

SuperposedState SuperposedState::from_terms(std::vector<CoherentTerm> terms,
                                            bool normalize, StateKind kind) {
  if (terms.empty()) fail(ErrorCode::InvalidArgument, "empty term list");
  for (auto& t : terms) check_finite(t);
  if (normalize) {
    double n = normalization_constant(terms);
    for (auto& t : terms) t.weight *= n;
  }
  return SuperposedState(std::move(terms), normalize, kind);
}

SuperposedState SuperposedState::scaled(complex factor) const {
  auto t = terms_;
  for (auto& term : t) term.weight *= factor;
  return SuperposedState(std::move(t), normalized_ && std::abs(std::abs(factor) - 1.0) < 1e-15, kind_);
}

complex mps_weight(int j, int m) {
  // (-i)^(j m)
  static const std::array<complex, 4> powers{
      complex(1, 0), complex(0, -1), complex(-1, 0), complex(0, 1)};
  return powers[static_cast<std::size_t>((j * m) % 4)];
}

SuperposedState make_state(StateKind kind, complex alpha) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    fail(ErrorCode::InvalidArgument, "alpha must be finite");
  const complex i(0, 1);
  std::vector<CoherentTerm> terms;
  switch (kind) {
    case StateKind::CS:
      terms.push_back({1.0, alpha});
      break;
    case StateKind::ECSS:
      terms.push_back({1.0, i * alpha});
      terms.push_back({1.0, -i * alpha});
      break;
    case StateKind::MPS0:
    case StateKind::MPS1:
    case StateKind::MPS2:
    case StateKind::MPS3: {
      int j = mps_index(kind);
      if (j != 0 && std::norm(alpha) < kMinMpsAlpha2)
        fail(ErrorCode::DegenerateState,
             "MPS" + std::to_string(j) + " needs |alpha|^2 >= 1e-6");
      complex amp = alpha;
      for (int m = 0; m < 4; ++m, amp *= i) terms.push_back({mps_weight(j, m), amp});
      break;
    }
    case StateKind::Custom:
      fail(ErrorCode::InvalidArgument, "Custom states are built from terms");
  }
  return SuperposedState::from_terms(std::move(terms), true, kind);
}

SuperposedState vacuum() { return make_state(StateKind::CS, 0.0); }

double mean_photon_number(const SuperposedState& state) {
  detail::HermitianSum num;
  for (auto& ti : state.terms())
    for (auto& tj : state.terms())
      num.add(std::conj(ti.weight) * tj.weight * std::conj(ti.amplitude) *
              tj.amplitude * overlap(ti.amplitude, tj.amplitude));
  double n = num.real("mean_photon_number");
  if (!state.normalized()) n /= gram_sum(state.terms());
  return std::max(n, 0.0);
}

double alpha2_for_mean_photon(StateKind kind, double target) {
  if (kind == StateKind::Custom)
    fail(ErrorCode::InvalidArgument, "Custom states have no amplitude family");
  if (!(target >= 0.0) || !std::isfinite(target))
    fail(ErrorCode::InvalidArgument, "target mean photon number must be >= 0");
  // Below 0.05 the MPS3 Gram sum loses too many digits to cancellation.
  const double lo = mps_index(kind) > 0 ? 0.05 : 0.0;
  auto excess = [&](double x) {
    return mean_photon_number(make_state(kind, std::sqrt(x))) - target;
  };
  if (excess(lo) >= -1e-9) return lo;

  // every kind approaches |alpha|^2 from within a few photons
  double step = 0.05, prev = lo;
  for (double x = lo + step; x <= target + 10.0; prev = x, x += step) {
    if (excess(x) >= 0.0) {
      auto done = [](double a, double b) { return std::abs(b - a) < 1e-13; };
      auto [a, b] = boost::math::tools::bisect(excess, prev, x, done);
      return 0.5 * (a + b);
    }
  }
  fail(ErrorCode::InvalidArgument, "no amplitude reaches the target energy");
}

}  // namespace qlidar
