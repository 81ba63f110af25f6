#pragma once

// Truncated two-mode Fock simulation of the interferometer. Deliberately
// independent of the coherent-state propagation and detection code: it only
// sees the state weights and amplitudes.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mzi_config.hpp"
#include "states.hpp"

namespace qlidar::fock {

// Basis |n_a, n_b> with n_a + n_b <= cutoff, grouped by total N so each
// photon-number block is contiguous.
inline int block_offset(int total) { return total * (total + 1) / 2; }
inline int index(int na, int nb) { return block_offset(na + nb) + na; }
inline int basis_size(int cutoff) { return block_offset(cutoff + 1); }

struct FockVector {
  int cutoff = 0;
  Eigen::VectorXcd amps;
  double tail_bound = 0;  // probability outside the truncated basis

  complex at(int na, int nb) const { return amps[index(na, nb)]; }
};

// c_n for n = 0..nmax of a single-mode superposition
std::vector<complex> single_mode(const SuperposedState& s, int nmax);

// A + 10 sqrt(A) + 10 with A the largest |alpha_i|^2 + |zeta_k|^2
int recommended_cutoff(const SuperposedState& a, const SuperposedState& b);

// product expansion; CutoffTooSmall when the missed weight exceeds 1e-10
FockVector encode(const SuperposedState& a, const SuperposedState& b,
                  int cutoff);

// Balanced splitter with reflection phase i, one unitary block per total
// photon number.
class BeamSplitter {
 public:
  explicit BeamSplitter(int cutoff);

  int cutoff() const { return static_cast<int>(blocks_.size()) - 1; }
  const Eigen::MatrixXcd& block(int total) const { return blocks_[total]; }

  // in place on a basis vector; blocks above max_total are left alone
  void apply(Eigen::VectorXcd& amps, int max_total) const;
  FockVector apply(const FockVector& v) const;

  Eigen::MatrixXcd dense() const;

 private:
  std::vector<Eigen::MatrixXcd> blocks_;
};

BeamSplitter beam_splitter_unitary(int cutoff);

struct FockDensity {
  int cutoff = 0;
  Eigen::MatrixXcd rho;
  double tail_bound = 0;

  // Hermitian to 1e-12, trace within tail of one, eigenvalues >= -1e-10
  void check() const;
  double trace() const { return rho.trace().real(); }
};

FockDensity density(const FockVector& v);

enum class Arm { A, B };

// Pure loss with transmissivity 1 - loss_r^2 on one mode
FockDensity loss_channel(const FockDensity& rho, Arm arm, double loss_r);

// e^{i phi n_a}
void apply_phase(Eigen::VectorXcd& amps, int cutoff, double phi);
FockDensity apply_phase(const FockDensity& rho, double phi);
FockDensity apply_unitary(const FockDensity& rho, const BeamSplitter& bs);

// diagonal of the reduced state of mode a
std::vector<double> port_a_distribution(const FockDensity& rho);
std::vector<double> port_a_distribution(const FockVector& v);

enum class Method {
  Auto,       // Vector when lossless, Unraveled otherwise
  Vector,     // pure state, lossless only
  Density,    // full density matrix; small cutoffs only
  Unraveled,  // pure branches, one per pair of Kraus outcomes
};

struct Result {
  int cutoff = 0;
  std::vector<double> port_a;  // P(0..cutoff)
  double parity = 0;
  double z = 0;
  double tail_bound = 0;
};

Result simulate(const SuperposedState& a, const SuperposedState& b,
                const MziConfig& config, int cutoff,
                Method method = Method::Auto);

}  // namespace qlidar::fock
