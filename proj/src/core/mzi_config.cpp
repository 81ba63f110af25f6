#include "mzi_config.hpp"

#include <cmath>

#include "error.hpp"

namespace qlidar {

MziConfig MziConfig::with_loss(double phi, double loss_r) {
  if (!(loss_r >= 0.0 && loss_r < 1.0))
    fail(ErrorCode::InvalidArgument, "loss_r must lie in [0, 1)");
  return {phi, std::sqrt(1.0 - loss_r * loss_r), loss_r};
}

void MziConfig::validate() const {
  if (!std::isfinite(phi) || !std::isfinite(loss_t) || !std::isfinite(loss_r))
    fail(ErrorCode::InvalidArgument, "config values must be finite");
  if (loss_t < 0.0 || loss_t > 1.0 || loss_r < 0.0 || loss_r > 1.0)
    fail(ErrorCode::InvalidArgument, "loss_t and loss_r must lie in [0, 1]");
  if (std::abs(loss_t * loss_t + loss_r * loss_r - 1.0) > 1e-12)
    fail(ErrorCode::InvalidArgument, "loss_t^2 + loss_r^2 must equal 1");
}

}  // namespace qlidar
