#pragma once

// Closed-form expressions for the two input classes with real amplitudes:
// superposition (alpha, i alpha, -alpha, -i alpha) in port a with vacuum or a
// coherent state in port b. They are regression oracles for the pair-sum
// engine, not a production path.
//
// Original reproduces the expressions as usually quoted. Several of them carry
// misprints (a missing factor 2 on the Y terms, a linear rather than squared
// normalization, the W coefficient of the diagonal parity terms, the sign
// pattern of the O derivative). Corrected fixes those and agrees with the
// engine and the Fock oracle.

#include <complex>

#include "mzi_config.hpp"
#include "states.hpp"

namespace qlidar::closed_form {

enum class Variant { Original, Corrected };

// |A|..|D| and the phase index j; weights are |c_m| (-i)^(j m)
struct Coefficients {
  double A = 1, B = 0, C = 0, D = 0;
  int j = 0;

  static Coefficients for_kind(StateKind kind);
  double X() const { return A * A + B * B + C * C + D * D; }
  double Y() const { return A * C + B * D; }
  double V() const { return (A + C) * (B + D); }
};

// Scalar intermediates, rebuilt for every (amplitudes, config)
struct Context {
  double alpha2 = 0, zeta2 = 0, t = 1, r = 0, phi = 0;

  // vacuum in port b
  double p = 0, q = 0, x = 0, p_prime = 0, x_prime = 0;
  std::complex<double> q_tilde;  // -|alpha|^2 x + i j pi

  // coherent state in port b
  double G = 0, W = 0, U = 0, O = 0, S1 = 0, S2 = 0, T1 = 0, T2 = 0;
  double G_prime = 0, W_prime = 0, U_prime = 0, O_prime = 0;
  double S1_prime = 0, S2_prime = 0, T1_prime = 0, T2_prime = 0;
};

Context make_context(const Coefficients& c, double alpha2, double zeta2,
                     const MziConfig& config, Variant v);

// |N|^2
double norm2(const Coefficients& c, double alpha2, Variant v);

// The two-line form for the four superpositions; plus_for_first picks which
// of the +- signs goes with j = 0 (resp. j = 1).
double norm2_by_sign(int j, double alpha2, bool plus_for_first);

double mean_photon(const Coefficients& c, double alpha2, Variant v);

// vacuum in port b
double photon_probability_vacuum(const Coefficients& c, const Context& k,
                                 int n, Variant v);
double parity_vacuum(const Coefficients& c, const Context& k, Variant v);
double z_vacuum(const Coefficients& c, const Context& k, Variant v);
double parity_vacuum_derivative(const Coefficients& c, const Context& k,
                                Variant v);
double z_vacuum_derivative(const Coefficients& c, const Context& k, Variant v);

// coherent state in port b
double parity_coherent(const Coefficients& c, const Context& k, Variant v);
double z_coherent(const Coefficients& c, const Context& k, Variant v);
double parity_coherent_derivative(const Coefficients& c, const Context& k,
                                  Variant v);
double z_coherent_derivative(const Coefficients& c, const Context& k,
                             Variant v);

// Wigner function of the superposition at lambda, complex alpha allowed
double wigner(const Coefficients& c, std::complex<double> alpha,
              std::complex<double> lambda, Variant v);

}  // namespace qlidar::closed_form
