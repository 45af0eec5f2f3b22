#include "infophys/equilibration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace infophys::equil {

namespace {
std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kMaxConfigs / base)
      throw std::length_error("configuration space exceeds capacity");
    r *= base;
  }
  return r;
}
}  // namespace

GasEnsemble::GasEnsemble(std::size_t num_particles, std::size_t num_cells_total,
                         std::vector<double> joint_probs)
    : n_(num_particles), cells_(num_cells_total), probs_(std::move(joint_probs)) {
  if (n_ == 0) throw std::invalid_argument("need at least one particle");
  if (cells_ == 0) throw std::invalid_argument("need at least one cell");
  std::size_t expect = checked_pow(cells_, n_);
  if (probs_.size() != expect)
    throw std::invalid_argument("joint_probs size mismatch");
  double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("joint_probs not normalized");
}

std::vector<double> GasEnsemble::marginal(std::size_t particle) const {
  if (particle >= n_) throw std::out_of_range("particle index");
  std::size_t stride = 1;
  for (std::size_t i = 0; i < particle; ++i) stride *= cells_;
  std::vector<double> m(cells_, 0.0);
  for (std::size_t c = 0; c < probs_.size(); ++c)
    m[(c / stride) % cells_] += probs_[c];
  return m;
}

MixingMap::MixingMap(std::size_t num_configs, std::uint64_t seed)
    : seed_(seed), perm_(num_configs) {
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(perm_.begin(), perm_.end(), rng);
  // inverse check: every target hit exactly once
  std::vector<bool> hit(num_configs, false);
  for (std::size_t t : perm_) {
    if (t >= num_configs || hit[t])
      throw std::logic_error("mixing map is not a bijection");
    hit[t] = true;
  }
}

GasEnsemble init_confined(std::size_t n, std::size_t small, std::size_t total,
                          std::uint64_t /*seed*/) {
  if (small < 1 || small > total)
    throw std::invalid_argument("need 1 <= small <= total");
  std::size_t nconf = checked_pow(total, n);
  std::vector<double> probs(nconf, 0.0);
  double p = 1.0 / std::pow(static_cast<double>(small), static_cast<double>(n));
  for (std::size_t c = 0; c < nconf; ++c) {
    std::size_t rest = c;
    bool confined = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (rest % total >= small) { confined = false; break; }
      rest /= total;
    }
    if (confined) probs[c] = p;
  }
  return GasEnsemble(n, total, std::move(probs));
}

GasEnsemble mix_step(const GasEnsemble& e, const MixingMap& m) {
  if (m.size() != e.num_configs())
    throw std::invalid_argument("mixing map domain mismatch");
  std::vector<double> out(e.num_configs(), 0.0);
  const auto& in = e.joint_probs();
  for (std::size_t c = 0; c < in.size(); ++c) out[m.apply(c)] = in[c];
  return GasEnsemble(e.num_particles(), e.num_cells(), std::move(out));
}

EntropyReport entropy_report(const GasEnsemble& e, LogBase b) {
  double h_joint = 0.0;
  for (double p : e.joint_probs()) h_joint -= classical::xlogx(p, b);
  double h_sum = 0.0;
  for (std::size_t i = 0; i < e.num_particles(); ++i) {
    double h = 0.0;
    for (double p : e.marginal(i)) h -= classical::xlogx(p, b);
    h_sum += h;
  }
  return EntropyReport{h_joint, h_sum, h_sum - h_joint};
}

}  // namespace infophys::equil
