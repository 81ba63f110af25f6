#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "error.hpp"

namespace qlidar::detail {

// Accumulates a Hermitian pair sum and hands back its real part. The
// imaginary residue is checked against the summed term magnitudes, which
// bounds the rounding error even when the terms cancel heavily.
class HermitianSum {
 public:
  void add(std::complex<double> term) {
    sum_ += term;
    scale_ += std::abs(term);
  }

  double real(const char* what) const {
    double tol = 1e-12 * std::max({1.0, std::abs(sum_.real()), scale_});
    if (!std::isfinite(sum_.real()) || std::abs(sum_.imag()) > tol)
      fail(ErrorCode::ImaginaryResidue,
           std::string(what) + ": imaginary residue " +
               std::to_string(sum_.imag()));
    return sum_.real();
  }

 private:
  std::complex<double> sum_{0.0, 0.0};
  double scale_ = 0.0;
};

}  // namespace qlidar::detail
