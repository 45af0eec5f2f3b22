// Black-hole information channel at desk scale: Bekenstein entropy, Hawking
// temperature, the stimulated-emission accretion map over a tripartite
// (hole x mode x radiation) register, and second-law ledger accounting.

#ifndef INFOPHYS_BLACKHOLE_HPP
#define INFOPHYS_BLACKHOLE_HPP

#include <complex>
#include <string>
#include <vector>

#include "infophys/quantum.hpp"

namespace infophys::bh {

using classical::LogBase;
using quantum::Complex;

/// Bekenstein entropy 4 pi M^2 (natural units).
double bh_entropy(double mass);

/// Hawking temperature 1/(8 pi M).
double hawking_temperature(double mass);

/// Incoming radiation mode: label, frequency, absorption amplitude.
struct ModeSpec {
  std::string label;
  double omega;   // > 0
  Complex alpha;  // absorption amplitude
  bool keep_elastic = false;  // carry the elastic branch through accretion
};

/// Stimulated-emission amplitude from detailed balance:
/// |beta| = |alpha| exp(-omega/(2 T_H)), phase of alpha preserved, so the
/// emission/absorption probability ratio is the Boltzmann factor.
Complex detailed_balance_beta(const ModeSpec& mode, double t_hawking);

/// Pure state over Q (hole branch ladder) x M (mode registers) x R
/// (stimulated radiation registers), kept as a branch expansion: each branch
/// carries per-mode letters for M and R and the hole's ladder history.
class TripartiteState {
public:
  /// Fresh hole |psi> with no accreted modes.
  TripartiteState();

  std::size_t num_modes() const { return num_modes_; }

  /// Applies the three-branch stimulated-emission map for one incoming mode
  /// (elastic branch dropped unless mode.keep_elastic), then renormalizes.
  TripartiteState accrete(const ModeSpec& mode, double t_hawking) const;

  /// Branch probabilities p_i.
  std::vector<double> branch_probs() const;

  /// Reduced density matrices over the M, R and MR registers (diagonal in the
  /// branch-letter basis since Q histories are orthogonal).
  quantum::DensityMatrix rho_m() const;
  quantum::DensityMatrix rho_r() const;
  quantum::DensityMatrix rho_mr() const;

  double entropy_m(LogBase b) const;
  double entropy_r(LogBase b) const;
  double entropy_mr(LogBase b) const;
  /// Global QMR entropy; 0 for this pure state, computed from the branch
  /// Gram structure as a purity check.
  double entropy_qmr(LogBase b) const;

  /// Norm of the full state (1 after construction/accretion).
  double norm() const;

private:
  struct Branch {
    Complex amp;
    std::string m_letters;  // per mode: '0' or 'k'
    std::string q_letters;  // per mode: 'e', '+', '-'
    std::string r_letters;  // per mode: '0' or 'k'
  };
  std::vector<Branch> branches_;
  std::size_t num_modes_ = 0;

  quantum::DensityMatrix reduce(bool use_m, bool use_r) const;
};

/// I = S(M:R) = S(M) + S(R) - S(MR).
double mr_information(const TripartiteState& s, LogBase b);

struct LedgerEvent {
  enum class Type { Absorb, Emit };
  Type type;
  double omega;
};

struct LedgerRow {
  std::string event;  // "init", "absorb", "emit"
  double mass;        // after the event
  double s_bh;
  double t_hawking;
  double ds_bh;
  double ds_rad;
  double ds_tot;
  bool joint_entropy_constant;  // modeled QMR + radiation purity flag
};

/// Thermodynamic bookkeeping along an absorb/emit trajectory. Emission of
/// omega from mass M: dS_BH = -8 pi M omega + 4 pi omega^2,
/// dS_rad = omega / T_H(M) = 8 pi M omega, so dS_tot = 4 pi omega^2 >= 0.
std::vector<LedgerRow> entropy_ledger(const std::vector<LedgerEvent>& events,
                                      double m0);

}  // namespace infophys::bh

#endif
