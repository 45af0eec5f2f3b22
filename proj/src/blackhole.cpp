#include "infophys/blackhole.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace infophys::bh {

namespace {
constexpr double kFourPi = 4.0 * M_PI;
constexpr std::size_t kMaxBranches = std::size_t{1} << 20;
}  // namespace

double bh_entropy(double mass) {
  if (mass <= 0.0) throw std::invalid_argument("mass must be > 0");
  return kFourPi * mass * mass;
}

double hawking_temperature(double mass) {
  if (mass <= 0.0) throw std::invalid_argument("mass must be > 0");
  return 1.0 / (8.0 * M_PI * mass);
}

Complex detailed_balance_beta(const ModeSpec& mode, double t_hawking) {
  if (t_hawking <= 0.0) throw std::invalid_argument("T_H must be > 0");
  if (mode.omega < 0.0) throw std::invalid_argument("omega must be >= 0");
  return mode.alpha * std::exp(-mode.omega / (2.0 * t_hawking));
}

TripartiteState::TripartiteState() {
  branches_.push_back(Branch{Complex(1.0, 0.0), "", "", ""});
}

TripartiteState TripartiteState::accrete(const ModeSpec& mode,
                                         double t_hawking) const {
  Complex beta = detailed_balance_beta(mode, t_hawking);
  std::size_t factor = mode.keep_elastic ? 3 : 2;
  if (branches_.size() * factor > kMaxBranches)
    throw std::length_error("branch register overflow");
  TripartiteState out;
  out.branches_.clear();
  out.num_modes_ = num_modes_ + 1;
  double norm2 = 0.0;
  for (const Branch& br : branches_) {
    if (mode.keep_elastic) {
      out.branches_.push_back(
          Branch{br.amp, br.m_letters + 'k', br.q_letters + 'e',
                 br.r_letters + '0'});
      norm2 += std::norm(out.branches_.back().amp);
    }
    out.branches_.push_back(Branch{br.amp * mode.alpha, br.m_letters + '0',
                                   br.q_letters + '+', br.r_letters + '0'});
    norm2 += std::norm(out.branches_.back().amp);
    out.branches_.push_back(Branch{br.amp * beta, br.m_letters + 'k',
                                   br.q_letters + '-', br.r_letters + 'k'});
    norm2 += std::norm(out.branches_.back().amp);
  }
  if (norm2 <= 0.0) throw std::invalid_argument("all branch amplitudes vanish");
  double scale = 1.0 / std::sqrt(norm2);
  for (Branch& br : out.branches_) br.amp *= scale;
  return out;
}

std::vector<double> TripartiteState::branch_probs() const {
  std::vector<double> p;
  p.reserve(branches_.size());
  for (const Branch& br : branches_) p.push_back(std::norm(br.amp));
  return p;
}

quantum::DensityMatrix TripartiteState::reduce(bool use_m, bool use_r) const {
  // Q histories are orthonormal and unique per branch, so every reduction
  // over {M, R, MR} is diagonal in the letter basis.
  std::map<std::string, double> groups;
  for (const Branch& br : branches_) {
    std::string key;
    if (use_m) key += br.m_letters;
    key += '|';
    if (use_r) key += br.r_letters;
    groups[key] += std::norm(br.amp);
  }
  std::size_t d = groups.size();
  quantum::Matrix rho = quantum::Matrix::Zero(d, d);
  std::size_t i = 0;
  for (const auto& [key, p] : groups) rho(i, i) = p, ++i;
  return quantum::DensityMatrix(rho, {d});
}

quantum::DensityMatrix TripartiteState::rho_m() const { return reduce(true, false); }
quantum::DensityMatrix TripartiteState::rho_r() const { return reduce(false, true); }
quantum::DensityMatrix TripartiteState::rho_mr() const { return reduce(true, true); }

double TripartiteState::entropy_m(LogBase b) const {
  return quantum::von_neumann_entropy(rho_m(), b);
}
double TripartiteState::entropy_r(LogBase b) const {
  return quantum::von_neumann_entropy(rho_r(), b);
}
double TripartiteState::entropy_mr(LogBase b) const {
  return quantum::von_neumann_entropy(rho_mr(), b);
}

double TripartiteState::entropy_qmr(LogBase b) const {
  // branches are orthonormal QMR basis states: single eigenvalue norm^2
  double n2 = 0.0;
  for (const Branch& br : branches_) n2 += std::norm(br.amp);
  return -classical::xlogx(n2, b);
}

double TripartiteState::norm() const {
  double n2 = 0.0;
  for (const Branch& br : branches_) n2 += std::norm(br.amp);
  return std::sqrt(n2);
}

double mr_information(const TripartiteState& s, LogBase b) {
  return s.entropy_m(b) + s.entropy_r(b) - s.entropy_mr(b);
}

std::vector<LedgerRow> entropy_ledger(const std::vector<LedgerEvent>& events,
                                      double m0) {
  if (m0 <= 0.0) throw std::invalid_argument("initial mass must be > 0");
  std::vector<LedgerRow> rows;
  double m = m0;
  rows.push_back(LedgerRow{"init", m, bh_entropy(m), hawking_temperature(m),
                           0.0, 0.0, 0.0, true});
  for (const LedgerEvent& ev : events) {
    if (ev.omega < 0.0) throw std::invalid_argument("omega must be >= 0");
    double s_before = bh_entropy(m);
    double t_before = hawking_temperature(m);
    double m_next =
        ev.type == LedgerEvent::Type::Absorb ? m + ev.omega : m - ev.omega;
    if (m_next <= 0.0)
      throw std::domain_error("trajectory drives mass non-positive");
    double ds_bh = bh_entropy(m_next) - s_before;
    double ds_rad =
        ev.type == LedgerEvent::Type::Emit ? ev.omega / t_before : 0.0;
    double ds_tot = ds_bh + ds_rad;
    if (ds_tot < -1e-12)
      throw std::logic_error("second-law violation in ledger");
    m = m_next;
    rows.push_back(LedgerRow{
        ev.type == LedgerEvent::Type::Absorb ? "absorb" : "emit", m,
        bh_entropy(m), hawking_temperature(m), ds_bh, ds_rad, ds_tot, true});
  }
  return rows;
}

}  // namespace infophys::bh
