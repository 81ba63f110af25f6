#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qlidar {

using complex = std::complex<double>;

struct CoherentTerm {
  complex weight;
  complex amplitude;
};

enum class StateKind { CS, ECSS, MPS0, MPS1, MPS2, MPS3, Custom };

std::string_view to_string(StateKind kind);
std::optional<StateKind> parse_state_kind(std::string_view name);

// Finite superposition sum_i w_i |alpha_i>. Immutable once built.
class SuperposedState {
 public:
  // Normalizes through the Gram sum unless normalize is false.
  static SuperposedState from_terms(std::vector<CoherentTerm> terms,
                                    bool normalize = true,
                                    StateKind kind = StateKind::Custom);

  std::span<const CoherentTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool normalized() const { return normalized_; }
  StateKind kind() const { return kind_; }

  // same state with every weight multiplied by factor (not renormalized)
  SuperposedState scaled(complex factor) const;

 private:
  SuperposedState(std::vector<CoherentTerm> t, bool n, StateKind k)
      : terms_(std::move(t)), normalized_(n), kind_(k) {}

  std::vector<CoherentTerm> terms_;
  bool normalized_;
  StateKind kind_;
};

// <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b)
complex overlap(complex a, complex b);

// log of overlap(a, b); products of overlaps are summed in this form
complex log_overlap(complex a, complex b);

// sum_ij conj(w_i) w_j <alpha_i|alpha_j>
double gram_sum(std::span<const CoherentTerm> terms);

// (gram_sum)^(-1/2); throws DegenerateState below 1e-12
double normalization_constant(std::span<const CoherentTerm> terms);

SuperposedState make_state(StateKind kind, complex alpha);
SuperposedState vacuum();

// coefficient of |i^m alpha> before normalization
complex mps_weight(int j, int m);

double mean_photon_number(const SuperposedState& state);

// Smallest |alpha|^2 (alpha real) whose mean photon number reaches target.
// For kinds whose mean photon number never drops to target the lower
// admissible |alpha|^2 is returned.
double alpha2_for_mean_photon(StateKind kind, double target);

}  // namespace qlidar
