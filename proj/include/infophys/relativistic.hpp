// Special-relativistic information operations: Doppler channel capacity,
// temperature aberration, Unruh temperature, boosted-gas mutual information,
// and Wigner-rotation boosts of spin-momentum states.

#ifndef INFOPHYS_RELATIVISTIC_HPP
#define INFOPHYS_RELATIVISTIC_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "infophys/quantum.hpp"

namespace infophys::rel {

using Vec3 = Eigen::Vector3d;
using Matrix2c = Eigen::Matrix2cd;

/// Lorentz boost parameterized by rapidity xi >= 0 along a unit axis,
/// beta = tanh(xi).
class Boost {
public:
  Boost(double rapidity, Vec3 axis);
  static Boost from_beta(double beta, Vec3 axis);

  double rapidity() const { return xi_; }
  double beta() const { return std::tanh(xi_); }
  const Vec3& axis() const { return axis_; }

  /// Apply to a 4-momentum (E, p); returns (E', p').
  std::pair<double, Vec3> apply(double energy, const Vec3& p) const;

private:
  double xi_;
  Vec3 axis_;
};

/// Doppler factor for pure recession: alpha = sqrt((1-beta)/(1+beta)).
double doppler_factor(double beta);

/// AWGN channel capacity seen by a moving receiver: W log2(1 + alpha*SNR),
/// in bits/s.
double channel_capacity(double bandwidth_hz, double snr, double alpha);

/// Temperature seen by a detector moving at beta, oriented at angle
/// theta_prime to the radiation: T' = T sqrt(1-beta^2) / (1 - beta cos theta').
double boosted_temperature(double t_kelvin, double beta, double theta_prime);

enum class UnruhUnits { Natural, SI };

/// Davies-Unruh temperature: a/(2 pi) in natural units, or
/// hbar*a/(2 pi c k_B) kelvin for a in m/s^2.
double unruh_temperature(double acceleration, UnruhUnits units);

// ---------------------------------------------------------------------------
// Wigner rotations and spin-momentum states
// ---------------------------------------------------------------------------

/// Spinor (SL(2,C)) representation of the standard boost taking the rest
/// momentum of a mass-m particle to p.
Matrix2c standard_boost_spinor(const Vec3& p, double m);

/// Wigner rotation W = L(Lambda p)^{-1} Lambda L(p) in the 2x2 spinor
/// representation; special-unitary for timelike momenta.
Matrix2c wigner_rotation(const Vec3& p, double m, const Boost& boost);

/// Discretized momentum distribution: weighted 3-momentum points, weights
/// normalized to 1. Gaussian construction renormalizes on the grid.
struct MomentumGrid {
  std::vector<Vec3> points;
  std::vector<double> weights;

  /// Cartesian tensor grid, points_per_axis per axis over [-extent, extent],
  /// isotropic Gaussian weights with standard deviation sigma.
  static MomentumGrid gaussian(double sigma, int points_per_axis,
                               double extent_sigmas = 4.0);
  /// Single plane-wave point.
  static MomentumGrid plane_wave(const Vec3& p);
};

/// One spin-1/2 particle over a momentum grid: amplitude a(s, j) for spin s
/// and grid point j.
class SpinMomentumState {
public:
  SpinMomentumState(Eigen::Matrix2Xcd amplitudes, MomentumGrid grid,
                    double mass);

  /// Product state: spinor (x) sqrt of the grid weights.
  static SpinMomentumState product(const Eigen::Vector2cd& spinor,
                                   MomentumGrid grid, double mass);

  const Eigen::Matrix2Xcd& amplitudes() const { return amps_; }
  const MomentumGrid& grid() const { return grid_; }
  double mass() const { return mass_; }
  /// Set when a boost moved support outside the original grid bounding box.
  bool grid_warning() const { return grid_warning_; }

  /// Reduced 2x2 spin density matrix (momentum traced out).
  quantum::DensityMatrix spin_density() const;

private:
  Eigen::Matrix2Xcd amps_;
  MomentumGrid grid_;
  double mass_;
  bool grid_warning_ = false;

  friend SpinMomentumState boost_state(const SpinMomentumState&, const Boost&);
};

/// Boost: momentum points map to Lambda p, spin amplitudes rotate by the
/// per-point Wigner rotation; renormalized so the norm stays 1.
SpinMomentumState boost_state(const SpinMomentumState& s, const Boost& boost);

/// Single-qubit CP map with Kraus operators sqrt(w_j) W(p_j) applied to one
/// qubit of a two-qubit density matrix. This is exactly the momentum trace of
/// a boosted product-momentum pair, without materializing the joint tensor.
quantum::DensityMatrix apply_wigner_channel(const quantum::DensityMatrix& rho,
                                            const std::vector<Matrix2c>& kraus,
                                            const std::vector<double>& weights,
                                            int which_qubit);

/// Spin concurrence of a Bell pair (Psi-) with product Gaussian momenta of
/// spread sigma_over_m (m = 1) after a boost of rapidity xi transverse to
/// the spin quantization axis.
double boosted_pair_concurrence(double sigma_over_m, double xi, int grid_res);

/// Closed form for the two-branch superposition state (m = 1):
/// C = p^2 sinh^2(xi) / (sqrt(1 + p^2) cosh(xi) + 1)^2.
double fig2_concurrence_analytic(double p, double xi);

/// Discrete two-branch construction behind the closed form: momenta +-p
/// along x with spins Phi+, superposed with momenta +-p along y with spins
/// Phi-; boosted along z, momenta traced out.
double fig2_concurrence_numeric(double p, double xi);

// ---------------------------------------------------------------------------
// Boosted-gas mutual information
// ---------------------------------------------------------------------------

enum class GasKind { UniformDisk, Maxwell };

struct GasSpec {
  GasKind kind = GasKind::UniformDisk;
  double v_max = 0.99;         // speed cap, < 1
  std::size_t samples = 100000;  // >= 1e4 for estimator validity
  std::uint64_t seed = 1;
};

struct MiEstimate {
  double value;      // nats
  double std_error;  // bootstrap
  bool converged;    // std_error <= 0.02 nats
};

/// Plug-in mutual information of two continuous samples: equal-mass binning
/// (bins = round(N^0.435), clamped to [8, 512]) with Miller-Madow bias
/// correction; bootstrap standard error.
MiEstimate estimate_mi(const std::vector<double>& x,
                       const std::vector<double>& y, std::uint64_t seed,
                       int bootstrap_rounds = 40);

/// Mutual information between planar velocity components of a gas observed
/// from a frame boosted along x. At beta = 0 for the uniform disk this is
/// log(pi/e) ~ 0.1447 nats.
MiEstimate gas_mutual_info(const GasSpec& g, const Boost& boost);

}  // namespace infophys::rel

#endif
