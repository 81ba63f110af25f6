#include "closed_form.hpp"

#include <cmath>
#include <numbers>

#include "error.hpp"

namespace qlidar::closed_form {

namespace {

using std::cos;
using std::exp;
using std::sin;
constexpr double pi = std::numbers::pi;

bool fixed(Variant v) { return v == Variant::Corrected; }

// p^n / n! without overflow, p >= 0
double poisson_power(double p, int n) {
  if (n == 0) return 1.0;
  if (p == 0.0) return 0.0;
  return exp(n * std::log(p) - std::lgamma(n + 1.0));
}

}  // namespace

Coefficients Coefficients::for_kind(StateKind kind) {
  switch (kind) {
    case StateKind::CS: return {1, 0, 0, 0, 0};
    case StateKind::ECSS: return {0, 1, 0, 1, 0};
    case StateKind::MPS0: return {1, 1, 1, 1, 0};
    case StateKind::MPS1: return {1, 1, 1, 1, 1};
    case StateKind::MPS2: return {1, 1, 1, 1, 2};
    case StateKind::MPS3: return {1, 1, 1, 1, 3};
    case StateKind::Custom: break;
  }
  fail(ErrorCode::InvalidArgument, "no closed form for custom states");
}

Context make_context(const Coefficients& c, double alpha2, double zeta2,
                     const MziConfig& config, Variant v) {
  config.validate();
  Context k;
  k.alpha2 = alpha2;
  k.zeta2 = zeta2;
  k.t = config.loss_t;
  k.r = config.loss_r;
  k.phi = config.phi;
  const double t2 = k.t * k.t, r2 = k.r * k.r;
  const double s = sin(k.phi / 2), co = cos(k.phi / 2);
  const double a = std::sqrt(alpha2), z = std::sqrt(zeta2);
  // the quoted derivatives carry sin^2(phi) where sin(phi) belongs
  const double dsin = fixed(v) ? sin(k.phi) : std::pow(sin(k.phi), 2);

  k.x = t2 * co * co + r2;
  k.p = alpha2 * t2 * s * s;
  k.q = alpha2 * k.x - c.j * pi / 2;
  k.q_tilde = {-alpha2 * k.x, c.j * pi};
  k.p_prime = 0.5 * alpha2 * t2 * dsin;
  k.x_prime = -0.5 * t2 * dsin;

  k.G = alpha2 * t2 * s * s + zeta2 * t2 * co * co;
  k.W = t2 * a * z * sin(k.phi);
  k.U = -t2 * cos(k.phi) + r2;
  k.O = t2 * cos(k.phi) + r2;
  k.S1 = k.U * zeta2 - k.W;
  k.S2 = k.U * zeta2 + k.W;
  k.T1 = k.O * alpha2 - k.W;
  k.T2 = k.O * alpha2 + k.W;

  k.G_prime = 0.5 * (alpha2 - zeta2) * t2 * sin(k.phi);
  k.W_prime = t2 * a * z * cos(k.phi);
  k.U_prime = t2 * sin(k.phi);
  k.O_prime = fixed(v) ? -t2 * sin(k.phi) : -t2 * cos(k.phi);
  k.S1_prime = k.U_prime * zeta2 - k.W_prime;
  k.S2_prime = k.U_prime * zeta2 + k.W_prime;
  k.T1_prime = k.O_prime * alpha2 - k.W_prime;
  k.T2_prime = k.O_prime * alpha2 + k.W_prime;
  return k;
}

double norm2(const Coefficients& c, double alpha2, Variant v) {
  const double g = exp(-alpha2);
  const double y_decay = fixed(v) ? g * g : g;
  double inv = c.X() + 2 * c.Y() * y_decay * cos(c.j * pi) +
               2 * c.V() * g * cos(alpha2 - c.j * pi / 2);
  if (!(inv > 0.0))
    fail(ErrorCode::DegenerateState, "closed-form normalization vanishes");
  return 1.0 / inv;
}

double norm2_by_sign(int j, double alpha2, bool plus_for_first) {
  const double g = exp(-alpha2);
  const bool first = (j == 0 || j == 1);
  const double sign = (first == plus_for_first) ? 1.0 : -1.0;
  double inv = (j % 2 == 0) ? 4 * (1 + g * g + sign * 2 * g * cos(alpha2))
                            : 4 * (1 - g * g + sign * 2 * g * sin(alpha2));
  return 1.0 / inv;
}

double mean_photon(const Coefficients& c, double alpha2, Variant v) {
  double n2 = norm2(c, alpha2, v);
  double pre = fixed(v) ? n2 : std::sqrt(n2);
  return pre * (c.X() * alpha2 -
                2 * alpha2 * c.Y() * exp(-2 * alpha2) * cos(c.j * pi) +
                2 * alpha2 * c.V() * exp(-alpha2) *
                    cos(alpha2 - c.j * pi / 2 + pi / 2));
}

double photon_probability_vacuum(const Coefficients& c, const Context& k,
                                 int n, Variant v) {
  using cd = std::complex<double>;
  const double a2 = k.alpha2;
  const double pn = poisson_power(k.p, n);
  cd i_pow = std::pow(cd(0, -1), n);                 // (-i)^n
  double sign_pow = (n % 2 == 0) ? 1.0 : -1.0;       // (-1)^n
  double xt = c.X() * exp(-k.p + a2) * pn;
  cd vt = exp(cd(0, -k.q)) * i_pow * pn;
  cd yt = std::exp(k.q_tilde) * sign_pow * pn;
  double sum = xt + c.V() * 2 * vt.real() + c.Y() * 2 * yt.real();
  return norm2(c, a2, v) * exp(-a2) * sum;
}

double parity_vacuum(const Coefficients& c, const Context& k, Variant v) {
  const double a2 = k.alpha2, yf = fixed(v) ? 2.0 : 1.0;
  return norm2(c, a2, v) * exp(-a2) *
         (c.X() * exp(-(2 * k.p - a2)) + 2 * c.V() * cos(k.q - k.p) +
          yf * c.Y() * exp(2 * k.p - a2) * cos(c.j * pi));
}

double parity_vacuum_derivative(const Coefficients& c, const Context& k,
                                Variant v) {
  const double a2 = k.alpha2, yf = fixed(v) ? 2.0 : 1.0;
  const double pp = k.p_prime;
  return norm2(c, a2, v) * exp(-a2) *
         (-2 * pp * c.X() * exp(-(2 * k.p - a2)) +
          4 * c.V() * pp * sin(k.q - k.p) +
          yf * 2 * pp * c.Y() * exp(2 * k.p - a2) * cos(c.j * pi));
}

double z_vacuum(const Coefficients& c, const Context& k, Variant v) {
  const double a2 = k.alpha2, yf = fixed(v) ? 2.0 : 1.0;
  return norm2(c, a2, v) *
         (c.X() * exp(-k.p) + 2 * exp(-a2) * c.V() * cos(k.q) +
          yf * c.Y() * exp(-a2 * (1 + k.x)) * cos(c.j * pi));
}

double z_vacuum_derivative(const Coefficients& c, const Context& k, Variant v) {
  const double a2 = k.alpha2, yf = fixed(v) ? 2.0 : 1.0;
  return norm2(c, a2, v) *
         (-k.p_prime * c.X() * exp(-k.p) +
          2 * k.p_prime * exp(-a2) * c.V() * sin(k.q) -
          yf * c.Y() * a2 * k.x_prime * exp(-a2 * (1 + k.x)) * cos(c.j * pi));
}

double parity_coherent(const Coefficients& c, const Context& k, Variant v) {
  const double jp = c.j * pi;
  // diagonal W coefficient: 2 after correction
  const double wf = fixed(v) ? 2.0 : 1.0;
  double diag = c.A * c.A * exp(-2 * k.G - wf * k.W) +
                (c.B * c.B + c.D * c.D) * exp(-2 * k.G) +
                c.C * c.C * exp(-2 * k.G + wf * k.W);
  double cross =
      2 * (c.A * c.B + c.A * c.D) * exp(k.S1) * cos(k.T1 - jp / 2) +
      2 * (c.B * c.C + c.C * c.D) * exp(k.S2) * cos(k.T2 - jp / 2) +
      2 * c.B * c.D * exp(k.S1 - k.T1) * cos(2 * k.W - jp) +
      2 * c.A * c.C * exp(k.S1 - k.T1) * cos(jp);
  return norm2(c, k.alpha2, v) *
         (diag + exp(-(k.alpha2 + k.zeta2)) * cross);
}

double parity_coherent_derivative(const Coefficients& c, const Context& k,
                                  Variant v) {
  const double jp = c.j * pi;
  const double wf = fixed(v) ? 2.0 : 1.0;
  double diag =
      c.A * c.A * exp(-2 * k.G - wf * k.W) * (-2 * k.G_prime - wf * k.W_prime) +
      (c.B * c.B + c.D * c.D) * exp(-2 * k.G) * (-2 * k.G_prime) +
      c.C * c.C * exp(-2 * k.G + wf * k.W) * (-2 * k.G_prime + wf * k.W_prime);
  double e1 = exp(k.S1), e2 = exp(k.S2), e3 = exp(k.S1 - k.T1);
  double cross =
      2 * (c.A * c.B + c.A * c.D) *
          (e1 * k.S1_prime * cos(k.T1 - jp / 2) -
           e1 * k.T1_prime * sin(k.T1 - jp / 2)) +
      2 * (c.B * c.C + c.C * c.D) *
          (e2 * k.S2_prime * cos(k.T2 - jp / 2) -
           e2 * k.T2_prime * sin(k.T2 - jp / 2)) +
      2 * c.B * c.D *
          (e3 * (k.S1_prime - k.T1_prime) * cos(2 * k.W - jp) -
           2 * k.W_prime * e3 * sin(2 * k.W - jp)) +
      2 * c.A * c.C * e3 * (k.S1_prime - k.T1_prime) * cos(jp);
  return norm2(c, k.alpha2, v) *
         (diag + exp(-(k.alpha2 + k.zeta2)) * cross);
}

double z_coherent(const Coefficients& c, const Context& k, Variant v) {
  const double jp = c.j * pi, a2 = k.alpha2, z2 = k.zeta2;
  double diag = c.A * c.A * exp(-k.G - k.W) +
                (c.B * c.B + c.D * c.D) * exp(-k.G) +
                c.C * c.C * exp(-k.G + k.W);
  double e1 = exp(0.5 * k.S1 + 0.5 * z2);
  double e2 = exp(0.5 * k.S2 + 0.5 * z2);
  double e3 = exp(0.5 * (k.S1 - k.T1) + 0.5 * (z2 - a2));
  double cross =
      (c.A * c.B + c.A * c.D) * e1 * cos(0.5 * (k.T1 + a2) - jp / 2) +
      (c.B * c.C + c.C * c.D) * e2 * cos(0.5 * (k.T2 + a2) - jp / 2) +
      c.B * c.D * e3 * cos(jp - k.W) + c.A * c.C * e3 * cos(jp);
  return norm2(c, a2, v) * (diag + 2 * exp(-(a2 + z2)) * cross);
}

double z_coherent_derivative(const Coefficients& c, const Context& k,
                             Variant v) {
  const double jp = c.j * pi, a2 = k.alpha2, z2 = k.zeta2;
  double diag = c.A * c.A * exp(-k.G - k.W) * (-k.G_prime - k.W_prime) +
                (c.B * c.B + c.D * c.D) * exp(-k.G) * (-k.G_prime) +
                c.C * c.C * exp(-k.G + k.W) * (-k.G_prime + k.W_prime);
  double e1 = exp(0.5 * k.S1 + 0.5 * z2);
  double e2 = exp(0.5 * k.S2 + 0.5 * z2);
  double e3 = exp(0.5 * (k.S1 - k.T1) + 0.5 * (z2 - a2));
  double h1 = 0.5 * (k.T1 + a2) - jp / 2;
  double h2 = 0.5 * (k.T2 + a2) - jp / 2;
  double cross =
      (c.A * c.B + c.A * c.D) *
          (0.5 * k.S1_prime * e1 * cos(h1) - 0.5 * k.T1_prime * e1 * sin(h1)) +
      (c.B * c.C + c.C * c.D) *
          (0.5 * k.S2_prime * e2 * cos(h2) - 0.5 * k.T2_prime * e2 * sin(h2)) +
      c.B * c.D *
          (0.5 * (k.S1_prime - k.T1_prime) * e3 * cos(jp - k.W) +
           k.W_prime * e3 * sin(jp - k.W)) +
      0.5 * (k.S1_prime - k.T1_prime) * c.A * c.C * e3 * cos(jp);
  return norm2(c, a2, v) * (diag + 2 * exp(-(a2 + z2)) * cross);
}

double wigner(const Coefficients& c, std::complex<double> alpha,
              std::complex<double> lambda, Variant v) {
  const double x1 = alpha.real(), x2 = alpha.imag();
  const double y1 = lambda.real(), y2 = lambda.imag();
  const double p1 = x1 * y1 + x2 * y2, q1 = x1 * y2 - x2 * y1;
  const double a2 = std::norm(alpha), l2 = std::norm(lambda);
  const double jp = c.j * pi;
  const double u = 2 * (p1 - q1), w = 2 * (p1 + q1);
  const double vv = -2 * l2 - a2, up = a2 + jp / 2;
  const double s = -2 * (a2 + l2);

  double body = exp(s) * (c.A * c.A * exp(4 * p1) + c.B * c.B * exp(4 * q1) +
                          c.C * c.C * exp(-4 * p1) + c.D * c.D * exp(-4 * q1));
  if (fixed(v))
    body += 2 * (c.A * c.B * exp(w + vv) * cos(up - w) +
                 c.A * c.D * exp(u + vv) * cos(-u + up));
  else
    body += 2 * exp(u + vv) * (c.A * c.B * cos(u + up) + c.A * c.D * cos(-u + up));
  body += 2 * exp(-2 * l2) * (c.A * c.C * cos(4 * q1 - jp) +
                              c.B * c.D * cos(4 * p1 - jp));
  body += 2 * c.C * c.D * exp(u - 4 * p1 + vv) * cos(u - 4 * p1 - up);
  body += 2 * c.B * c.C * exp(-u + vv) * cos(u + up);

  double n2 = norm2(c, a2, v);
  double pre = fixed(v) ? n2 : std::sqrt(n2);
  return 2 * pre / pi * body;
}

}  // namespace qlidar::closed_form
