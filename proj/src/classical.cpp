#include "infophys/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace infophys::classical {

namespace {
constexpr double kNormTol = 1e-12;

void check_normalized(const std::vector<double>& probs) {
  if (probs.empty()) throw std::invalid_argument("distribution has no outcomes");
  double total = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("negative probability");
    if (!std::isfinite(p)) throw std::invalid_argument("non-finite probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTol)
    throw std::invalid_argument("probabilities do not sum to 1");
}
}  // namespace

double log_base(double x, LogBase b) {
  switch (b) {
    case LogBase::Two: return std::log2(x);
    case LogBase::E: return std::log(x);
    case LogBase::Ten: return std::log10(x);
  }
  throw std::logic_error("bad LogBase");
}

double xlogx(double x, LogBase b) {
  return x > 0.0 ? x * log_base(x, b) : 0.0;
}

Distribution::Distribution(std::vector<std::string> labels,
                           std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.size() != probs_.size())
    throw std::invalid_argument("label/prob count mismatch");
  check_normalized(probs_);
}

Distribution Distribution::renormalized(std::vector<std::string> labels,
                                        std::vector<double> probs) {
  double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (total <= 0.0) throw std::invalid_argument("non-positive total mass");
  for (double& p : probs) p /= total;
  return Distribution(std::move(labels), std::move(probs));
}

std::size_t Distribution::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown label: " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

JointDistribution::JointDistribution(std::vector<std::string> x_labels,
                                     std::vector<std::string> y_labels,
                                     std::vector<std::vector<double>> probs)
    : x_labels_(std::move(x_labels)),
      y_labels_(std::move(y_labels)),
      probs_(std::move(probs)) {
  if (x_labels_.empty() || y_labels_.empty())
    throw std::invalid_argument("empty outcome set");
  if (probs_.size() != x_labels_.size())
    throw std::invalid_argument("row count mismatch");
  double total = 0.0;
  for (const auto& row : probs_) {
    if (row.size() != y_labels_.size())
      throw std::invalid_argument("column count mismatch");
    for (double p : row) {
      if (p < 0.0 || !std::isfinite(p))
        throw std::invalid_argument("invalid joint probability");
      total += p;
    }
  }
  if (std::abs(total - 1.0) > kNormTol)
    throw std::invalid_argument("joint probabilities do not sum to 1");
}

Distribution JointDistribution::marginal_x() const {
  std::vector<double> p(num_x(), 0.0);
  for (std::size_t i = 0; i < num_x(); ++i)
    for (std::size_t j = 0; j < num_y(); ++j) p[i] += probs_[i][j];
  return Distribution::renormalized(x_labels_, std::move(p));
}

Distribution JointDistribution::marginal_y() const {
  std::vector<double> q(num_y(), 0.0);
  for (std::size_t i = 0; i < num_x(); ++i)
    for (std::size_t j = 0; j < num_y(); ++j) q[j] += probs_[i][j];
  return Distribution::renormalized(y_labels_, std::move(q));
}

std::size_t JointDistribution::y_index(const std::string& label) const {
  auto it = std::find(y_labels_.begin(), y_labels_.end(), label);
  if (it == y_labels_.end()) throw std::out_of_range("unknown label: " + label);
  return static_cast<std::size_t>(it - y_labels_.begin());
}

double shannon_entropy(const Distribution& d, LogBase b) {
  double h = 0.0;
  for (double p : d.probs()) h -= xlogx(p, b);
  return h;
}

double max_entropy(std::size_t n, LogBase b) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  return log_base(static_cast<double>(n), b);
}

double conditional_entropy_given(std::size_t j, const JointDistribution& jd,
                                 LogBase b) {
  if (j >= jd.num_y()) throw std::out_of_range("y index out of range");
  double qj = 0.0;
  for (std::size_t i = 0; i < jd.num_x(); ++i) qj += jd.prob(i, j);
  if (qj <= 0.0)
    throw std::domain_error("conditioning on zero-probability outcome");
  double h = 0.0;
  for (std::size_t i = 0; i < jd.num_x(); ++i) h -= xlogx(jd.prob(i, j) / qj, b);
  return h;
}

double average_conditional_entropy(const JointDistribution& jd, LogBase b) {
  Distribution qy = jd.marginal_y();
  double h = 0.0;
  for (std::size_t j = 0; j < jd.num_y(); ++j) {
    double qj = qy.prob(j);
    if (qj > 0.0) h += qj * conditional_entropy_given(j, jd, b);
  }
  return h;
}

double mutual_information(const JointDistribution& jd, LogBase b) {
  double hx = shannon_entropy(jd.marginal_x(), b);
  double hy = shannon_entropy(jd.marginal_y(), b);
  double hxy = 0.0;
  for (std::size_t i = 0; i < jd.num_x(); ++i)
    for (std::size_t j = 0; j < jd.num_y(); ++j) hxy -= xlogx(jd.prob(i, j), b);
  return hx + hy - hxy;
}

double information_gain(double h_max, double h_actual) {
  if (h_actual < 0.0 || h_actual > h_max)
    throw std::invalid_argument("need h_max >= h_actual >= 0");
  return h_max - h_actual;
}

Distribution measurement_update(const JointDistribution& jd, std::size_t j) {
  if (j >= jd.num_y()) throw std::out_of_range("y index out of range");
  double qj = 0.0;
  for (std::size_t i = 0; i < jd.num_x(); ++i) qj += jd.prob(i, j);
  if (qj <= 0.0)
    throw std::domain_error("conditioning on zero-probability outcome");
  std::vector<double> post(jd.num_x());
  for (std::size_t i = 0; i < jd.num_x(); ++i) post[i] = jd.prob(i, j) / qj;
  return Distribution::renormalized(jd.x_labels(), std::move(post));
}

Distribution canonical_distribution(const ThermoSystem& sys) {
  if (sys.temperature <= 0.0) throw std::invalid_argument("temperature must be > 0");
  if (sys.energies.empty()) throw std::invalid_argument("no energy levels");
  if (sys.num_states < 1) throw std::invalid_argument("num_states must be >= 1");
  double emin = *std::min_element(sys.energies.begin(), sys.energies.end());
  std::vector<double> w(sys.energies.size());
  std::vector<std::string> labels(sys.energies.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(sys.energies[i]))
      throw std::invalid_argument("non-finite energy");
    w[i] = std::exp(-(sys.energies[i] - emin) / sys.temperature);
    labels[i] = "E" + std::to_string(i);
  }
  return Distribution::renormalized(std::move(labels), std::move(w));
}

double thermo_information(const ThermoSystem& sys) {
  if (sys.num_states < sys.energies.size())
    throw std::invalid_argument("num_states smaller than number of levels");
  // log Z evaluated with the same energy shift used by canonical_distribution,
  // so log Z + <E>/T is exact: log Z = log Z_shifted + (-emin/T) offset folds in.
  double emin = *std::min_element(sys.energies.begin(), sys.energies.end());
  double z = 0.0;
  for (double e : sys.energies) z += std::exp(-(e - emin) / sys.temperature);
  Distribution canon = canonical_distribution(sys);
  double mean_e = 0.0;
  for (std::size_t i = 0; i < sys.energies.size(); ++i)
    mean_e += canon.prob(i) * sys.energies[i];
  double log_z = std::log(z) - emin / sys.temperature;
  return std::log(static_cast<double>(sys.num_states)) -
         (log_z + mean_e / sys.temperature);
}

JointDistribution peres_joint() {
  // X = 101 outcomes (pocket + 100 places), Y = pocket yes/no.
  const std::size_t places = 100;
  std::vector<std::string> x_labels{"pocket"};
  for (std::size_t i = 1; i <= places; ++i)
    x_labels.push_back("place" + std::to_string(i));
  std::vector<std::string> y_labels{"pocket:yes", "pocket:no"};
  std::vector<std::vector<double>> probs(x_labels.size(),
                                         std::vector<double>(2, 0.0));
  probs[0][0] = 0.9;
  for (std::size_t i = 1; i <= places; ++i) probs[i][1] = 0.1 / places;
  return JointDistribution(std::move(x_labels), std::move(y_labels),
                           std::move(probs));
}

}  // namespace infophys::classical
