#include "infophys/relativistic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace infophys::rel {

namespace {

using quantum::Complex;

const Complex kI(0.0, 1.0);

Matrix2c pauli_dot(const Vec3& n) {
  Matrix2c m;
  m << Complex(n.z(), 0), Complex(n.x(), -n.y()),
       Complex(n.x(), n.y()), Complex(-n.z(), 0);
  return m;
}

}  // namespace

Boost::Boost(double rapidity, Vec3 axis) : xi_(rapidity), axis_(std::move(axis)) {
  if (xi_ < 0.0 || !std::isfinite(xi_))
    throw std::invalid_argument("rapidity must be >= 0 and finite");
  double n = axis_.norm();
  if (std::abs(n - 1.0) > 1e-12) {
    if (n <= 0.0) throw std::invalid_argument("zero boost axis");
    axis_ /= n;
  }
}

Boost Boost::from_beta(double beta, Vec3 axis) {
  if (beta < 0.0 || beta >= 1.0)
    throw std::invalid_argument("beta must be in [0, 1)");
  return Boost(std::atanh(beta), std::move(axis));
}

std::pair<double, Vec3> Boost::apply(double energy, const Vec3& p) const {
  double ch = std::cosh(xi_), sh = std::sinh(xi_);
  double pl = p.dot(axis_);
  double e_out = energy * ch + pl * sh;
  Vec3 p_out = p + axis_ * ((ch - 1.0) * pl + energy * sh);
  return {e_out, p_out};
}

double doppler_factor(double beta) {
  if (beta < 0.0 || beta >= 1.0)
    throw std::invalid_argument("beta must be in [0, 1)");
  return std::sqrt((1.0 - beta) / (1.0 + beta));
}

double channel_capacity(double bandwidth_hz, double snr, double alpha) {
  if (bandwidth_hz <= 0.0) throw std::invalid_argument("bandwidth must be > 0");
  if (snr < 0.0) throw std::invalid_argument("snr must be >= 0");
  if (alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");
  return bandwidth_hz * std::log2(1.0 + alpha * snr);
}

double boosted_temperature(double t_kelvin, double beta, double theta_prime) {
  if (t_kelvin <= 0.0) throw std::invalid_argument("temperature must be > 0");
  if (beta < 0.0 || beta >= 1.0)
    throw std::invalid_argument("beta must be in [0, 1)");
  return t_kelvin * std::sqrt(1.0 - beta * beta) /
         (1.0 - beta * std::cos(theta_prime));
}

double unruh_temperature(double acceleration, UnruhUnits units) {
  if (acceleration < 0.0) throw std::invalid_argument("acceleration must be >= 0");
  constexpr double kTwoPi = 2.0 * M_PI;
  if (units == UnruhUnits::Natural) return acceleration / kTwoPi;
  constexpr double hbar = 1.054571817e-34;
  constexpr double c = 299792458.0;
  constexpr double k_b = 1.380649e-23;
  return hbar * acceleration / (kTwoPi * c * k_b);
}

Matrix2c standard_boost_spinor(const Vec3& p, double m) {
  if (m <= 0.0) throw std::invalid_argument("mass must be > 0");
  double pn = p.norm();
  if (pn < 1e-300) return Matrix2c::Identity();
  double e = std::sqrt(m * m + pn * pn);
  double ch2 = std::sqrt((e / m + 1.0) / 2.0);
  double sh2 = std::sqrt((e / m - 1.0) / 2.0);
  return ch2 * Matrix2c::Identity() + sh2 * pauli_dot(p / pn);
}

Matrix2c wigner_rotation(const Vec3& p, double m, const Boost& boost) {
  if (m <= 0.0) throw std::invalid_argument("mass must be > 0");
  double e = std::sqrt(m * m + p.squaredNorm());
  auto [e_out, p_out] = boost.apply(e, p);
  double xi = boost.rapidity();
  Matrix2c lam = std::cosh(xi / 2.0) * Matrix2c::Identity() +
                 std::sinh(xi / 2.0) * pauli_dot(boost.axis());
  Matrix2c l_in = standard_boost_spinor(p, m);
  // inverse of a unit-determinant boost: cosh term minus sinh term
  double pn = p_out.norm();
  Matrix2c l_out_inv;
  if (pn < 1e-300) {
    l_out_inv = Matrix2c::Identity();
  } else {
    double ch2 = std::sqrt((e_out / m + 1.0) / 2.0);
    double sh2 = std::sqrt((e_out / m - 1.0) / 2.0);
    l_out_inv = ch2 * Matrix2c::Identity() - sh2 * pauli_dot(p_out / pn);
  }
  return l_out_inv * lam * l_in;
}

MomentumGrid MomentumGrid::gaussian(double sigma, int points_per_axis,
                                    double extent_sigmas) {
  if (sigma <= 0.0) throw std::invalid_argument("sigma must be > 0");
  if (points_per_axis < 1) throw std::invalid_argument("need >= 1 point per axis");
  MomentumGrid g;
  std::vector<double> axis(points_per_axis);
  for (int i = 0; i < points_per_axis; ++i) {
    axis[i] = points_per_axis == 1
                  ? 0.0
                  : -extent_sigmas * sigma +
                        2.0 * extent_sigmas * sigma * i / (points_per_axis - 1);
  }
  double total = 0.0;
  for (double px : axis)
    for (double py : axis)
      for (double pz : axis) {
        Vec3 p(px, py, pz);
        double w = std::exp(-p.squaredNorm() / (2.0 * sigma * sigma));
        g.points.push_back(p);
        g.weights.push_back(w);
        total += w;
      }
  for (double& w : g.weights) w /= total;
  return g;
}

MomentumGrid MomentumGrid::plane_wave(const Vec3& p) {
  return MomentumGrid{{p}, {1.0}};
}

SpinMomentumState::SpinMomentumState(Eigen::Matrix2Xcd amplitudes,
                                     MomentumGrid grid, double mass)
    : amps_(std::move(amplitudes)), grid_(std::move(grid)), mass_(mass) {
  if (mass_ <= 0.0) throw std::invalid_argument("mass must be > 0");
  if (grid_.points.size() != grid_.weights.size() ||
      static_cast<std::size_t>(amps_.cols()) != grid_.points.size())
    throw std::invalid_argument("grid/amplitude size mismatch");
  double n = amps_.norm();
  if (std::abs(n - 1.0) > 1e-9)
    throw std::invalid_argument("spin-momentum state not normalized");
}

SpinMomentumState SpinMomentumState::product(const Eigen::Vector2cd& spinor,
                                             MomentumGrid grid, double mass) {
  Eigen::Vector2cd chi = spinor / spinor.norm();
  Eigen::Matrix2Xcd amps(2, grid.points.size());
  for (std::size_t j = 0; j < grid.points.size(); ++j)
    amps.col(j) = chi * std::sqrt(grid.weights[j]);
  return SpinMomentumState(std::move(amps), std::move(grid), mass);
}

quantum::DensityMatrix SpinMomentumState::spin_density() const {
  Matrix2c rho = amps_ * amps_.adjoint();
  rho = (rho + rho.adjoint().eval()) / 2.0;
  rho /= rho.trace();
  return quantum::DensityMatrix(rho, {2});
}

SpinMomentumState boost_state(const SpinMomentumState& s, const Boost& boost) {
  const auto& pts = s.grid().points;
  Vec3 lo = Vec3::Constant(0.0), hi = Vec3::Constant(0.0);
  if (!pts.empty()) {
    lo = pts.front(); hi = pts.front();
    for (const Vec3& p : pts) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
  }
  MomentumGrid out_grid;
  out_grid.points.reserve(pts.size());
  out_grid.weights = s.grid().weights;
  Eigen::Matrix2Xcd amps(2, pts.size());
  bool left_grid = false;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    double e = std::sqrt(s.mass() * s.mass() + pts[j].squaredNorm());
    auto [e_out, p_out] = boost.apply(e, pts[j]);
    (void)e_out;
    Matrix2c w = wigner_rotation(pts[j], s.mass(), boost);
    amps.col(j) = w * s.amplitudes().col(j);
    out_grid.points.push_back(p_out);
    if ((p_out.array() < lo.array() - 1e-12).any() ||
        (p_out.array() > hi.array() + 1e-12).any())
      left_grid = true;
  }
  amps /= amps.norm();
  SpinMomentumState out(std::move(amps), std::move(out_grid), s.mass());
  out.grid_warning_ = left_grid && boost.rapidity() > 0.0;
  return out;
}

quantum::DensityMatrix apply_wigner_channel(const quantum::DensityMatrix& rho,
                                            const std::vector<Matrix2c>& kraus,
                                            const std::vector<double>& weights,
                                            int which_qubit) {
  if (rho.dim() != 4 || rho.dims().size() != 2)
    throw std::invalid_argument("need a two-qubit density matrix");
  if (kraus.size() != weights.size())
    throw std::invalid_argument("kraus/weight count mismatch");
  if (which_qubit != 0 && which_qubit != 1)
    throw std::invalid_argument("which_qubit must be 0 or 1");
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  Matrix2c id = Matrix2c::Identity();
  for (std::size_t j = 0; j < kraus.size(); ++j) {
    Eigen::Matrix4cd k = which_qubit == 0 ? quantum::kron(quantum::Matrix(kraus[j]), quantum::Matrix(id))
                                          : quantum::kron(quantum::Matrix(id), quantum::Matrix(kraus[j]));
    out += weights[j] * (k * rho.entries() * k.adjoint());
  }
  out = (out + out.adjoint().eval()) / 2.0;
  out /= out.trace();
  return quantum::DensityMatrix(out, {2, 2});
}

double boosted_pair_concurrence(double sigma_over_m, double xi, int grid_res) {
  const double m = 1.0;
  Boost boost(xi, Vec3::UnitX());
  MomentumGrid grid = MomentumGrid::gaussian(sigma_over_m * m, grid_res);
  std::vector<Matrix2c> kraus;
  kraus.reserve(grid.points.size());
  for (const Vec3& p : grid.points)
    kraus.push_back(wigner_rotation(p, m, boost));
  auto rho = quantum::density_from_state(
      quantum::bell_state(quantum::BellKind::PsiMinus));
  rho = apply_wigner_channel(rho, kraus, grid.weights, 0);
  rho = apply_wigner_channel(rho, kraus, grid.weights, 1);
  return quantum::concurrence(rho);
}

double fig2_concurrence_analytic(double p, double xi) {
  if (p < 0.0 || xi < 0.0) throw std::invalid_argument("need p >= 0, xi >= 0");
  double ch = std::cosh(xi);
  double num = p * p * (ch * ch - 1.0);
  double den = std::sqrt(1.0 + p * p) * ch + 1.0;
  return num / (den * den);
}

double fig2_concurrence_numeric(double p, double xi) {
  if (p < 0.0 || xi < 0.0) throw std::invalid_argument("need p >= 0, xi >= 0");
  const double m = 1.0;
  Boost boost(xi, Vec3::UnitZ());
  using quantum::BellKind;
  Eigen::Vector4cd phi_minus =
      quantum::bell_state(BellKind::PhiMinus).amplitudes();
  Eigen::Vector4cd phi_plus = quantum::bell_state(BellKind::PhiPlus).amplitudes();

  auto branch = [&](const Vec3& p1, const Vec3& p2,
                    const Eigen::Vector4cd& spin) -> Eigen::Vector4cd {
    Eigen::Matrix4cd w = quantum::kron(quantum::Matrix(wigner_rotation(p1, m, boost)),
                                       quantum::Matrix(wigner_rotation(p2, m, boost)));
    return w * spin;
  };
  Eigen::Vector4cd chi_a = branch(p * Vec3::UnitX(), -p * Vec3::UnitX(), phi_plus);
  Eigen::Vector4cd chi_b = branch(p * Vec3::UnitY(), -p * Vec3::UnitY(), phi_minus);

  Eigen::Matrix4cd rho;
  if (p < 1e-14) {
    // degenerate momentum labels: branches interfere coherently
    Eigen::Vector4cd chi = (chi_a + chi_b) / std::sqrt(2.0);
    rho = chi * chi.adjoint();
  } else {
    rho = 0.5 * (chi_a * chi_a.adjoint() + chi_b * chi_b.adjoint());
  }
  rho = (rho + rho.adjoint().eval()) / 2.0;
  rho /= rho.trace();
  return quantum::concurrence(quantum::DensityMatrix(rho, {2, 2}));
}

// ---------------------------------------------------------------------------
// Mutual-information estimation
// ---------------------------------------------------------------------------

namespace {

int bin_count(std::size_t n) {
  int k = static_cast<int>(std::lround(std::pow(static_cast<double>(n), 0.435)));
  return std::clamp(k, 8, 512);
}

std::vector<double> equal_mass_edges(std::vector<double> sorted, int k) {
  std::vector<double> edges;
  edges.reserve(k - 1);
  std::size_t n = sorted.size();
  for (int i = 1; i < k; ++i)
    edges.push_back(sorted[(n * static_cast<std::size_t>(i)) / k]);
  return edges;
}

int bin_of(const std::vector<double>& edges, double v) {
  return static_cast<int>(std::upper_bound(edges.begin(), edges.end(), v) -
                          edges.begin());
}

// Plug-in MI over equal-mass bins with a Miller-Madow correction.
double mi_plugin(const std::vector<double>& x, const std::vector<double>& y) {
  std::size_t n = x.size();
  int k = bin_count(n);
  std::vector<double> sx = x, sy = y;
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  auto ex = equal_mass_edges(std::move(sx), k);
  auto ey = equal_mass_edges(std::move(sy), k);
  std::vector<std::size_t> joint(static_cast<std::size_t>(k) * k, 0);
  std::vector<std::size_t> cx(k, 0), cy(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int bx = bin_of(ex, x[i]), by = bin_of(ey, y[i]);
    ++joint[static_cast<std::size_t>(bx) * k + by];
    ++cx[bx];
    ++cy[by];
  }
  double mi = 0.0;
  std::size_t occupied = 0;
  double dn = static_cast<double>(n);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      std::size_t c = joint[static_cast<std::size_t>(a) * k + b];
      if (c == 0) continue;
      ++occupied;
      double pj = c / dn;
      mi += pj * std::log(pj * dn * dn / (static_cast<double>(cx[a]) * cy[b]));
    }
  double correction =
      (static_cast<double>(occupied) - 2.0 * k + 1.0) / (2.0 * dn);
  return mi - correction;
}

}  // namespace

MiEstimate estimate_mi(const std::vector<double>& x,
                       const std::vector<double>& y, std::uint64_t seed,
                       int bootstrap_rounds) {
  if (x.size() != y.size()) throw std::invalid_argument("sample size mismatch");
  if (x.size() < 100) throw std::invalid_argument("too few samples");
  double value = mi_plugin(x, y);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
  std::vector<double> bx(x.size()), by(y.size()), boots;
  boots.reserve(bootstrap_rounds);
  for (int r = 0; r < bootstrap_rounds; ++r) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::size_t j = pick(rng);
      bx[i] = x[j];
      by[i] = y[j];
    }
    boots.push_back(mi_plugin(bx, by));
  }
  double mean = std::accumulate(boots.begin(), boots.end(), 0.0) / boots.size();
  double var = 0.0;
  for (double v : boots) var += (v - mean) * (v - mean);
  var /= (boots.size() - 1);
  double se = std::sqrt(var);
  return MiEstimate{value, se, se <= 0.02};
}

MiEstimate gas_mutual_info(const GasSpec& g, const Boost& boost) {
  if (g.v_max <= 0.0 || g.v_max >= 1.0)
    throw std::invalid_argument("v_max must be in (0, 1)");
  if (g.samples < 10000)
    throw std::invalid_argument("need >= 1e4 samples for estimator validity");
  std::mt19937_64 rng(g.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, g.v_max / 3.0);
  std::vector<double> vx(g.samples), vy(g.samples);
  for (std::size_t i = 0; i < g.samples; ++i) {
    double ux, uy;
    if (g.kind == GasKind::UniformDisk) {
      double r = g.v_max * std::sqrt(unit(rng));
      double th = 2.0 * M_PI * unit(rng);
      ux = r * std::cos(th);
      uy = r * std::sin(th);
    } else {
      do {
        ux = gauss(rng);
        uy = gauss(rng);
      } while (ux * ux + uy * uy >= g.v_max * g.v_max);
    }
    // relativistic velocity addition, boost along x
    double b = boost.beta();
    double gamma_inv = std::sqrt(1.0 - b * b);
    double denom = 1.0 + b * ux;
    vx[i] = (ux + b) / denom;
    vy[i] = uy * gamma_inv / denom;
  }
  return estimate_mi(vx, vy, g.seed ^ 0x9e3779b97f4a7c15ULL);
}

}  // namespace infophys::rel
