// Exact-ensemble gas equilibration: a small number of particles on a finite
// cell lattice, evolved by seeded random bijections of the configuration
// space. Joint entropy is conserved exactly while per-particle and
// correlation entropy grow.

#ifndef INFOPHYS_EQUILIBRATION_HPP
#define INFOPHYS_EQUILIBRATION_HPP

#include <cstdint>
#include <vector>

#include "infophys/classical.hpp"

namespace infophys::equil {

using classical::LogBase;

/// Hard cap on configuration-space size (~256 MB of doubles).
inline constexpr std::size_t kMaxConfigs = std::size_t{1} << 24;

/// Dense joint distribution over cell-occupation tuples, one cell index per
/// particle. Configuration index is base-num_cells_total little-endian.
class GasEnsemble {
public:
  GasEnsemble(std::size_t num_particles, std::size_t num_cells_total,
              std::vector<double> joint_probs);

  std::size_t num_particles() const { return n_; }
  std::size_t num_cells() const { return cells_; }
  std::size_t num_configs() const { return probs_.size(); }
  const std::vector<double>& joint_probs() const { return probs_; }

  /// Marginal cell distribution of one particle.
  std::vector<double> marginal(std::size_t particle) const;

private:
  std::size_t n_, cells_;
  std::vector<double> probs_;
};

/// Seeded random bijection on the configuration space. Inverse-checked on
/// construction.
class MixingMap {
public:
  MixingMap(std::size_t num_configs, std::uint64_t seed);

  std::size_t size() const { return perm_.size(); }
  std::size_t apply(std::size_t config) const { return perm_[config]; }
  std::uint64_t seed() const { return seed_; }

private:
  std::uint64_t seed_;
  std::vector<std::size_t> perm_;
};

/// Uniform product distribution: each particle independently uniform over the
/// first `small` of `total` cells.
GasEnsemble init_confined(std::size_t n, std::size_t small, std::size_t total,
                          std::uint64_t seed);

/// Pushforward of the joint distribution through the bijection. Joint entropy
/// is invariant (same multiset of probabilities).
GasEnsemble mix_step(const GasEnsemble& e, const MixingMap& m);

struct EntropyReport {
  double h_joint;
  double h_marginal_sum;
  double h_corr;  // h_marginal_sum - h_joint, >= 0 by subadditivity
};

EntropyReport entropy_report(const GasEnsemble& e, LogBase b);

}  // namespace infophys::equil

#endif
