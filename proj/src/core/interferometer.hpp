#pragma once

#include <array>
#include <vector>

#include "mzi_config.hpp"
#include "states.hpp"

namespace qlidar {

// mode order in every 4-vector
enum Mode : int { PortA = 0, PortB = 1, EnvA = 2, EnvB = 3 };

// rows: port a, port b, E_a, E_b; columns: input a, input b
using ModeMatrix = std::array<std::array<complex, 2>, 4>;

using ModeAmps = std::array<complex, 4>;

struct FourModeTerm {
  complex weight;
  ModeAmps amps;
};

struct FourModeOutput {
  std::vector<FourModeTerm> terms;
  MziConfig config;
};

// BS1, phase on arm 1, loss on both arms, BS2. Reflection picks up i.
ModeMatrix mode_transform(const MziConfig& config);

// d/dphi of mode_transform
ModeMatrix mode_transform_derivative(const MziConfig& config);

ModeAmps apply(const ModeMatrix& m, complex in_a, complex in_b);

FourModeOutput propagate(const SuperposedState& a, const SuperposedState& b,
                         const MziConfig& config);

// d amps / dphi for each term of propagate(a, b, config), same order
std::vector<ModeAmps> propagate_tangent(const SuperposedState& a,
                                        const SuperposedState& b,
                                        const MziConfig& config);

double gram_sum(const FourModeOutput& out);

// <n_m> for each of the four modes
std::array<double, 4> mode_mean_photons(const FourModeOutput& out);

}  // namespace qlidar
