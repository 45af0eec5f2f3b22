// Discrete classical information theory: entropies, conditioning,
// measurement updates, and the canonical-ensemble special case.

#ifndef INFOPHYS_CLASSICAL_HPP
#define INFOPHYS_CLASSICAL_HPP

#include <string>
#include <vector>

namespace infophys::classical {

/// Logarithm base used for entropy units: 2 (bits), e (nats), 10 (hartleys/10).
enum class LogBase { Two, E, Ten };

/// log_b(x) for the chosen base. x must be > 0.
double log_base(double x, LogBase b);

/// x * log_b(x) with the continuity convention 0 * log 0 = 0.
double xlogx(double x, LogBase b);

/// Normalized probability distribution over a finite labeled outcome set.
class Distribution {
public:
  Distribution(std::vector<std::string> labels, std::vector<double> probs);

  /// Renormalizes probs before validation; for file inputs with rounding.
  static Distribution renormalized(std::vector<std::string> labels,
                                   std::vector<double> probs);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double prob(std::size_t i) const { return probs_[i]; }

  /// Index of a label; throws if absent.
  std::size_t index_of(const std::string& label) const;

private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

/// Joint distribution p_ij over X (rows) and Y (columns).
class JointDistribution {
public:
  JointDistribution(std::vector<std::string> x_labels,
                    std::vector<std::string> y_labels,
                    std::vector<std::vector<double>> probs);

  const std::vector<std::string>& x_labels() const { return x_labels_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }
  std::size_t num_x() const { return x_labels_.size(); }
  std::size_t num_y() const { return y_labels_.size(); }
  double prob(std::size_t i, std::size_t j) const { return probs_[i][j]; }

  /// Marginal over X: p_i = sum_j p_ij.
  Distribution marginal_x() const;
  /// Marginal over Y: q_j = sum_i p_ij.
  Distribution marginal_y() const;

  std::size_t y_index(const std::string& label) const;

private:
  std::vector<std::string> x_labels_, y_labels_;
  std::vector<std::vector<double>> probs_;
};

/// Coarse-grained thermodynamic system with Boltzmann constant = 1.
struct ThermoSystem {
  std::size_t num_states;        // phase-space cells, >= number of levels
  std::vector<double> energies;  // one per occupied level
  double temperature;            // > 0
};

/// H = -sum p_i log_b p_i.
double shannon_entropy(const Distribution& d, LogBase b);

/// log_b(n), the a-priori maximal entropy of an n-state detector.
double max_entropy(std::size_t n, LogBase b);

/// H(X | Y = y_j); requires marginal q_j > 0.
double conditional_entropy_given(std::size_t j, const JointDistribution& jd,
                                 LogBase b);

/// H(X|Y) = sum_j q_j H(X | Y = y_j).
double average_conditional_entropy(const JointDistribution& jd, LogBase b);

/// H(X:Y) = H(X) + H(Y) - H(XY).
double mutual_information(const JointDistribution& jd, LogBase b);

/// I = H_max - H_actual; requires h_max >= h_actual >= 0.
double information_gain(double h_max, double h_actual);

/// Posterior over X after observing Y = y_j.
Distribution measurement_update(const JointDistribution& jd, std::size_t j);

/// Boltzmann distribution p_i = exp(-E_i/T) / Z (exponent shifted for safety).
Distribution canonical_distribution(const ThermoSystem& sys);

/// I = log(num_states) - (log Z + <E>/T), in nats.
double thermo_information(const ThermoSystem& sys);

/// The Peres key example: X = (pocket, other places) joint with the
/// 2-state pocket variable. p(pocket) = 0.9, 100 equiprobable other places.
JointDistribution peres_joint();

}  // namespace infophys::classical

#endif
