#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/error.hpp"
#include "core/fock_oracle.hpp"
#include "core/interferometer.hpp"

using namespace qlidar;
using namespace qlidar::fock;
using std::numbers::pi;

namespace {

double poisson(double mean, int n) {
  return std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
}

}  // namespace

TEST_CASE("vacuum encodes to a single basis vector") {
  auto v = encode(vacuum(), vacuum(), 4);
  CHECK(std::abs(v.at(0, 0) - 1.0) < 1e-15);
  CHECK(v.amps.squaredNorm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("coherent encoding is Poissonian") {
  auto c = single_mode(make_state(StateKind::CS, 1.0), 30);
  for (int n = 0; n <= 30; ++n)
    CHECK(std::abs(std::norm(c[n]) - poisson(1.0, n)) < 1e-14);
}

TEST_CASE("MPS2 populates only n = 2 mod 4") {
  auto c = single_mode(make_state(StateKind::MPS2, std::sqrt(2.0)), 40);
  for (int n = 0; n <= 40; ++n)
    if (n % 4 != 2) CHECK(std::abs(c[n]) < 1e-12);
  CHECK(std::norm(c[2]) > 0.1);
}

TEST_CASE("encode rejects a cutoff that truncates the state") {
  CHECK_THROWS_AS(encode(make_state(StateKind::CS, 4.0), vacuum(), 10), Error);
  try {
    encode(make_state(StateKind::CS, 4.0), vacuum(), 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CutoffTooSmall);
  }
}

TEST_CASE("beam splitter splits one photon evenly and is unitary") {
  BeamSplitter bs(12);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis_size(12));
  v[index(1, 0)] = 1.0;
  bs.apply(v, 12);
  CHECK(std::norm(v[index(1, 0)]) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::norm(v[index(0, 1)]) == doctest::Approx(0.5).epsilon(1e-14));
  // reflection picks up i
  CHECK(std::abs(std::arg(v[index(0, 1)] / v[index(1, 0)])) ==
        doctest::Approx(pi / 2).epsilon(1e-12));

  auto u = bs.dense();
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  CHECK((u.adjoint() * u - id).cwiseAbs().maxCoeff() < 1e-12);
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= 12; ++m)
      if (n + m <= 12 && (n + m) != 0)
        for (int k = 0; k <= 12; ++k)
          for (int l = 0; k + l <= 12 && l <= 12; ++l)
            if (k + l != n + m) CHECK(std::abs(u(index(k, l), index(n, m))) == 0.0);
}

TEST_CASE("large-cutoff beam splitter stays unitary") {
  BeamSplitter bs(100);
  double worst = 0;
  for (int n = 0; n <= 100; ++n) {
    auto& b = bs.block(n);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(b.rows(), b.cols());
    worst = std::max(worst, (b.adjoint() * b - id).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("beam splitter on coherent inputs matches the mode map") {
  // BS on |alpha, zeta> is |(alpha + i zeta)/sqrt2, (i alpha + zeta)/sqrt2>
  complex alpha(0.8, -0.3), zeta(-0.4, 1.1);
  int c = 40;
  auto v = encode(make_state(StateKind::CS, alpha), make_state(StateKind::CS, zeta), c);
  auto out = BeamSplitter(c).apply(v);
  complex a1 = (alpha + complex(0, 1) * zeta) / std::sqrt(2.0);
  complex a2 = (complex(0, 1) * alpha + zeta) / std::sqrt(2.0);
  auto expect = encode(make_state(StateKind::CS, a1), make_state(StateKind::CS, a2), c);
  CHECK((out.amps - expect.amps).cwiseAbs().maxCoeff() < 1e-10);

  // the arm amplitudes are the phi-independent columns of the MZI map at
  // phi = 0 undone by the second splitter
  auto m = mode_transform(MziConfig::lossless(0.0));
  auto full = apply(m, alpha, zeta);
  auto back = BeamSplitter(c).apply(out);
  auto expect_full = encode(make_state(StateKind::CS, full[PortA]),
                            make_state(StateKind::CS, full[PortB]), c);
  CHECK((back.amps - expect_full.amps).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("loss channel properties") {
  int c = 30;
  auto rho = density(encode(make_state(StateKind::CS, complex(1.2, 0.5)), vacuum(), c));
  SUBCASE("zero loss is the identity") {
    auto same = loss_channel(rho, Arm::A, 0.0);
    CHECK((same.rho - rho.rho).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("coherent state stays pure and shrinks by t") {
    double r = 0.6, t = std::sqrt(1 - r * r);
    auto out = loss_channel(rho, Arm::A, r);
    auto expect = density(encode(make_state(StateKind::CS, t * complex(1.2, 0.5)), vacuum(), c));
    CHECK((out.rho - expect.rho).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs((out.rho * out.rho).trace().real() - 1.0) < 1e-10);
    CHECK(out.trace() == doctest::Approx(rho.trace()).epsilon(1e-12));
  }
  SUBCASE("mean photon number scales by t^2") {
    auto cat = density(encode(make_state(StateKind::MPS1, 1.3), vacuum(), c));
    double r = 0.4;
    auto out = loss_channel(cat, Arm::A, r);
    auto mean = [&](const FockDensity& d) {
      double s = 0;
      for (int n = 0; n <= c; ++n) s += n * d.rho(index(n, 0), index(n, 0)).real();
      return s;
    };
    CHECK(mean(out) == doctest::Approx((1 - r * r) * mean(cat)).epsilon(1e-10));
    out.check();
  }
}

TEST_CASE("simulate: coherent input gives a Poisson port distribution") {
  double phi = 1.1, a2 = 2.0;
  auto res = simulate(make_state(StateKind::CS, std::sqrt(a2)), vacuum(),
                      MziConfig::lossless(phi), 40);
  double mean = a2 * std::pow(std::sin(phi / 2), 2);
  for (int n = 0; n <= 40; ++n) CHECK(std::abs(res.port_a[n] - poisson(mean, n)) < 1e-10);
  CHECK(res.parity == doctest::Approx(std::exp(-2 * mean)).epsilon(1e-10));
}

TEST_CASE("simulate at phi = 0 leaves port a dark") {
  auto res = simulate(make_state(StateKind::MPS3, 1.4), vacuum(), MziConfig::lossless(0.0), 30);
  CHECK(std::abs(res.z - 1.0) < 1e-12);
}

TEST_CASE("vector, density and unraveled paths agree") {
  auto a = make_state(StateKind::MPS1, 1.2);
  auto b = make_state(StateKind::CS, complex(0.5, 0.7));
  int c = 24;
  auto vec = simulate(a, b, MziConfig::lossless(0.9), c, Method::Vector);
  auto den = simulate(a, b, MziConfig::lossless(0.9), c, Method::Density);
  for (int n = 0; n <= c; ++n) CHECK(std::abs(vec.port_a[n] - den.port_a[n]) < 1e-12);

  auto lossy = MziConfig::with_loss(2.0, 0.3);
  auto d2 = simulate(a, b, lossy, c, Method::Density);
  auto u2 = simulate(a, b, lossy, c, Method::Unraveled);
  for (int n = 0; n <= c; ++n) CHECK(std::abs(d2.port_a[n] - u2.port_a[n]) < 1e-12);
  CHECK(std::abs(d2.parity - u2.parity) < 1e-12);
}

TEST_CASE("vector method refuses lossy configs") {
  CHECK_THROWS_AS(simulate(make_state(StateKind::CS, 1.0), vacuum(),
                           MziConfig::with_loss(1.0, 0.2), 20, Method::Vector),
                  Error);
}
