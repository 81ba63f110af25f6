#include "fock_oracle.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace qlidar::fock {

namespace {

constexpr double kMaxTail = 1e-10;
// branches lighter than this are dropped and counted in the tail
constexpr double kBranchFloor = 1e-18;

const complex I(0.0, 1.0);

// amplitude map of the splitter: output k = sum_j M[k][j] input j
const double kH = 1.0 / std::sqrt(2.0);
const complex M[2][2] = {{kH, I * kH}, {I * kH, kH}};

void check_cutoff(int cutoff) {
  if (cutoff < 0 || cutoff > 400)
    fail(ErrorCode::InvalidArgument, "cutoff must lie in [0, 400]");
}

// Kraus amplitude <n-k|K_k|n> = sqrt(C(n,k)) t^{n-k} (i r)^k
complex kraus(int n, int k, double t, double r) {
  if (k > n) return 0.0;
  if (k == 0) return std::pow(t, n);
  if (r == 0.0) return 0.0;
  if (t == 0.0 && n != k) return 0.0;
  double log_mag = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                          std::lgamma(n - k + 1.0)) +
                   k * std::log(r) + (n - k == 0 ? 0.0 : (n - k) * std::log(t));
  return std::exp(log_mag) * std::pow(I, k);
}

}  // namespace

std::vector<complex> single_mode(const SuperposedState& s, int nmax) {
  std::vector<complex> c(static_cast<std::size_t>(nmax + 1), 0.0);
  for (auto& t : s.terms()) {
    complex term = t.weight * std::exp(-0.5 * std::norm(t.amplitude));
    for (int n = 0; n <= nmax; ++n) {
      if (n > 0) term *= t.amplitude / std::sqrt(double(n));
      c[n] += term;
    }
  }
  return c;
}

int recommended_cutoff(const SuperposedState& a, const SuperposedState& b) {
  double ma = 0.0, mb = 0.0;
  for (auto& t : a.terms()) ma = std::max(ma, std::norm(t.amplitude));
  for (auto& t : b.terms()) mb = std::max(mb, std::norm(t.amplitude));
  double big = ma + mb;
  return static_cast<int>(std::ceil(big + 10.0 * std::sqrt(big) + 10.0));
}

FockVector encode(const SuperposedState& a, const SuperposedState& b,
                  int cutoff) {
  check_cutoff(cutoff);
  auto ca = single_mode(a, cutoff);
  auto cb = single_mode(b, cutoff);
  FockVector v;
  v.cutoff = cutoff;
  v.amps = Eigen::VectorXcd::Zero(basis_size(cutoff));
  for (int na = 0; na <= cutoff; ++na)
    for (int nb = 0; na + nb <= cutoff; ++nb) v.amps[index(na, nb)] = ca[na] * cb[nb];
  v.tail_bound = std::max(0.0, 1.0 - v.amps.squaredNorm());
  if (v.tail_bound > kMaxTail)
    fail(ErrorCode::CutoffTooSmall,
         "cutoff " + std::to_string(cutoff) + " misses weight " +
             std::to_string(v.tail_bound));
  return v;
}

BeamSplitter::BeamSplitter(int cutoff) {
  check_cutoff(cutoff);
  // Column (k, N-k) of block N is the transformed state
  // (M00 a+ + M10 b+)^k (M01 a+ + M11 b+)^{N-k} / sqrt(k! (N-k)!) |0,0>.
  // Raising only one neighbour column amplifies rounding like N^{k/2}, so
  // each column mixes both neighbours of block N-1:
  //   N |k, N-k>' = sqrt(k) a'+ |k-1, N-k>' + sqrt(N-k) b'+ |k, N-k-1>'
  blocks_.reserve(cutoff + 1);
  blocks_.push_back(Eigen::MatrixXcd::Identity(1, 1));
  for (int N = 1; N <= cutoff; ++N) {
    const Eigen::MatrixXcd& prev = blocks_.back();
    Eigen::MatrixXcd cur = Eigen::MatrixXcd::Zero(N + 1, N + 1);
    // adds w * (ca a+ + cb b+) applied to column src of block N-1
    auto raise = [&](int col, int src, complex ca, complex cb, double w) {
      for (int k = 0; k < N; ++k) {
        complex x = w * prev(k, src);
        if (x == 0.0) continue;
        cur(k + 1, col) += ca * std::sqrt(double(k + 1)) * x;
        cur(k, col) += cb * std::sqrt(double(N - k)) * x;
      }
    };
    for (int col = 0; col <= N; ++col) {
      if (col > 0) raise(col, col - 1, M[0][0], M[1][0], std::sqrt(double(col)) / N);
      if (col < N) raise(col, col, M[0][1], M[1][1], std::sqrt(double(N - col)) / N);
    }
    blocks_.push_back(std::move(cur));
  }
}

void BeamSplitter::apply(Eigen::VectorXcd& amps, int max_total) const {
  for (int N = 0; N <= max_total; ++N) {
    auto seg = amps.segment(block_offset(N), N + 1);
    seg = (blocks_[N] * seg).eval();
  }
}

FockVector BeamSplitter::apply(const FockVector& v) const {
  if (v.cutoff > cutoff())
    fail(ErrorCode::InvalidArgument, "vector exceeds splitter cutoff");
  FockVector out = v;
  apply(out.amps, v.cutoff);
  return out;
}

Eigen::MatrixXcd BeamSplitter::dense() const {
  const int c = cutoff();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(basis_size(c), basis_size(c));
  for (int N = 0; N <= c; ++N)
    u.block(block_offset(N), block_offset(N), N + 1, N + 1) = blocks_[N];
  return u;
}

BeamSplitter beam_splitter_unitary(int cutoff) { return BeamSplitter(cutoff); }

void FockDensity::check() const {
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12)
    fail(ErrorCode::InvalidArgument, "density not Hermitian: " + std::to_string(herm));
  if (std::abs(trace() - 1.0) > tail_bound + 1e-12)
    fail(ErrorCode::InvalidArgument, "density trace off by more than the tail");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    fail(ErrorCode::InvalidArgument, "density has a negative eigenvalue");
}

FockDensity density(const FockVector& v) {
  return {v.cutoff, v.amps * v.amps.adjoint(), v.tail_bound};
}

FockDensity loss_channel(const FockDensity& in, Arm arm, double loss_r) {
  if (!(loss_r >= 0.0 && loss_r < 1.0))
    fail(ErrorCode::InvalidArgument, "loss_r must lie in [0, 1)");
  const int c = in.cutoff;
  const double t = std::sqrt(1.0 - loss_r * loss_r);
  const int d = basis_size(c);
  // per basis state: its lossy occupation
  std::vector<int> occ(d), other(d);
  for (int N = 0; N <= c; ++N)
    for (int na = 0; na <= N; ++na) {
      occ[index(na, N - na)] = arm == Arm::A ? na : N - na;
      other[index(na, N - na)] = arm == Arm::A ? N - na : na;
    }
  auto shifted = [&](int x, int k) {
    int n = occ[x] - k, m = other[x];
    return arm == Arm::A ? index(n, m) : index(m, n);
  };

  FockDensity out{c, Eigen::MatrixXcd::Zero(d, d), in.tail_bound};
  for (int k = 0; k <= c; ++k) {
    if (k > 0 && loss_r == 0.0) break;
    for (int x = 0; x < d; ++x) {
      if (occ[x] < k) continue;
      complex fx = kraus(occ[x], k, t, loss_r);
      if (fx == 0.0) continue;
      int xs = shifted(x, k);
      for (int y = 0; y < d; ++y) {
        if (occ[y] < k) continue;
        complex fy = kraus(occ[y], k, t, loss_r);
        out.rho(xs, shifted(y, k)) += fx * in.rho(x, y) * std::conj(fy);
      }
    }
  }
  return out;
}

void apply_phase(Eigen::VectorXcd& amps, int cutoff, double phi) {
  for (int N = 0; N <= cutoff; ++N)
    for (int na = 0; na <= N; ++na) amps[index(na, N - na)] *= std::polar(1.0, phi * na);
}

FockDensity apply_phase(const FockDensity& in, double phi) {
  Eigen::VectorXcd ph = Eigen::VectorXcd::Ones(basis_size(in.cutoff));
  apply_phase(ph, in.cutoff, phi);
  FockDensity out = in;
  out.rho = ph.asDiagonal() * in.rho * ph.conjugate().asDiagonal();
  return out;
}

FockDensity apply_unitary(const FockDensity& in, const BeamSplitter& bs) {
  Eigen::MatrixXcd u = bs.dense().topLeftCorner(basis_size(in.cutoff),
                                                basis_size(in.cutoff));
  FockDensity out = in;
  out.rho = u * in.rho * u.adjoint();
  return out;
}

std::vector<double> port_a_distribution(const FockDensity& rho) {
  std::vector<double> p(static_cast<std::size_t>(rho.cutoff + 1), 0.0);
  for (int na = 0; na <= rho.cutoff; ++na)
    for (int nb = 0; na + nb <= rho.cutoff; ++nb) {
      int x = index(na, nb);
      p[na] += rho.rho(x, x).real();
    }
  return p;
}

std::vector<double> port_a_distribution(const FockVector& v) {
  std::vector<double> p(static_cast<std::size_t>(v.cutoff + 1), 0.0);
  for (int na = 0; na <= v.cutoff; ++na)
    for (int nb = 0; na + nb <= v.cutoff; ++nb) p[na] += std::norm(v.at(na, nb));
  return p;
}

namespace {

Result finish(int cutoff, std::vector<double> p, double tail) {
  Result r;
  r.cutoff = cutoff;
  r.port_a = std::move(p);
  r.tail_bound = tail;
  for (std::size_t n = 0; n < r.port_a.size(); ++n)
    r.parity += (n % 2 == 0 ? 1.0 : -1.0) * r.port_a[n];
  r.z = r.port_a[0];
  return r;
}

Result run_vector(FockVector v, const BeamSplitter& bs, double phi) {
  bs.apply(v.amps, v.cutoff);
  apply_phase(v.amps, v.cutoff, phi);
  bs.apply(v.amps, v.cutoff);
  return finish(v.cutoff, port_a_distribution(v), v.tail_bound);
}

Result run_density(const FockVector& v, const BeamSplitter& bs,
                   const MziConfig& cfg) {
  FockDensity rho = apply_unitary(density(v), bs);
  rho = apply_phase(rho, cfg.phi);
  rho = loss_channel(rho, Arm::A, cfg.loss_r);
  rho = loss_channel(rho, Arm::B, cfg.loss_r);
  rho = apply_unitary(rho, bs);
  return finish(v.cutoff, port_a_distribution(rho), rho.tail_bound);
}

// Each pair (k, l) of photons lost from arms 1 and 2 leaves a pure
// (unnormalized) branch; the output statistics are the sum over branches.
Result run_unraveled(FockVector v, const BeamSplitter& bs,
                     const MziConfig& cfg) {
  const int c = v.cutoff;
  bs.apply(v.amps, c);
  apply_phase(v.amps, c, cfg.phi);

  const double t = cfg.loss_t, r = cfg.loss_r;
  // kraus table f[k][n]
  std::vector<std::vector<complex>> f(c + 1, std::vector<complex>(c + 1, 0.0));
  for (int k = 0; k <= c; ++k)
    for (int n = k; n <= c; ++n) f[k][n] = kraus(n, k, t, r);

  std::vector<double> p(static_cast<std::size_t>(c + 1), 0.0);
  double dropped = 0.0;
  Eigen::VectorXcd branch(basis_size(c));
  const int kmax = r == 0.0 ? 0 : c;
  for (int k = 0; k <= kmax; ++k) {
    for (int l = 0; l <= kmax && k + l <= c; ++l) {
      const int top = c - k - l;
      double weight = 0.0;
      branch.head(basis_size(top)).setZero();
      for (int n1 = k; n1 <= c; ++n1)
        for (int n2 = l; n1 + n2 <= c; ++n2) {
          complex x = v.amps[index(n1, n2)] * f[k][n1] * f[l][n2];
          branch[index(n1 - k, n2 - l)] = x;
          weight += std::norm(x);
        }
      if (weight < kBranchFloor) {
        dropped += weight;
        continue;
      }
      bs.apply(branch, top);
      for (int na = 0; na <= top; ++na)
        for (int nb = 0; na + nb <= top; ++nb)
          p[na] += std::norm(branch[index(na, nb)]);
    }
  }
  return finish(c, std::move(p), v.tail_bound + dropped);
}

}  // namespace

Result simulate(const SuperposedState& a, const SuperposedState& b,
                const MziConfig& config, int cutoff, Method method) {
  config.validate();
  FockVector v = encode(a, b, cutoff);
  BeamSplitter bs(cutoff);
  const bool lossless = config.loss_r == 0.0;
  if (method == Method::Auto) method = lossless ? Method::Vector : Method::Unraveled;
  switch (method) {
    case Method::Vector:
      if (!lossless)
        fail(ErrorCode::InvalidArgument, "vector mode needs a lossless config");
      return run_vector(std::move(v), bs, config.phi);
    case Method::Density:
      return run_density(v, bs, config);
    case Method::Unraveled:
    case Method::Auto:
      break;
  }
  return run_unraveled(std::move(v), bs, config);
}

}  // namespace qlidar::fock
