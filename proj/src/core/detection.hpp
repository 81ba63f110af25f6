#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "interferometer.hpp"

namespace qlidar {

enum class Scheme { Parity, Z };

std::string_view to_string(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

struct PortDistribution {
  std::vector<double> probs;  // P(0..cutoff)
  int cutoff = 0;
  double tail_bound = 0.0;    // 1 - sum(probs), never negative
};

// max over terms of ceil(|a|^2 + 10|a| + 20), a the port-a amplitude
int default_cutoff(const FourModeOutput& out);

double photon_probability(const FourModeOutput& out, int n);
PortDistribution port_distribution(const FourModeOutput& out,
                                   std::optional<int> cutoff = std::nullopt);

double parity_expectation(const FourModeOutput& out);
double z_expectation(const FourModeOutput& out);
double expectation(const FourModeOutput& out, Scheme scheme);

// (P(even), P(odd))
std::pair<double, double> binary_probabilities(const FourModeOutput& out);

// d<X>/dphi, differentiating each pair term analytically
double expectation_derivative(const SuperposedState& a,
                              const SuperposedState& b,
                              const MziConfig& config, Scheme scheme);

}  // namespace qlidar
