#pragma once

// Kept apart from the interferometer so the Fock oracle can take a config
// without seeing the coherent-state propagation code.

namespace qlidar {

struct MziConfig {
  double phi = 0.0;
  double loss_t = 1.0;
  double loss_r = 0.0;

  static MziConfig lossless(double phi) { return {phi, 1.0, 0.0}; }
  // loss_t = sqrt(1 - loss_r^2)
  static MziConfig with_loss(double phi, double loss_r);

  // throws InvalidArgument on non-finite values or t^2 + r^2 != 1
  void validate() const;
};

}  // namespace qlidar
