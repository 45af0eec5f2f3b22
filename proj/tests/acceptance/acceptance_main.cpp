// Acceptance gate: one line per criterion, exit 0 only if every gating
// check passes. Tolerances are pinned here, not configurable.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "infophys/blackhole.hpp"
#include "infophys/classical.hpp"
#include "infophys/equilibration.hpp"
#include "infophys/quantum.hpp"
#include "infophys/relativistic.hpp"

using namespace infophys;
using classical::LogBase;

namespace {

int failures = 0;

struct Criterion {
  const char* name;
  bool ok = true;
  std::vector<std::string> notes;
  bool gating = true;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void report() {
    std::printf("[%s] %s%s\n", ok ? "PASS" : "FAIL", name,
                gating ? "" : " (non-gating)");
    for (const auto& n : notes) std::printf("       %s\n", n.c_str());
    if (!ok && gating) ++failures;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void criterion_1_peres() {
  Criterion c{"1. key-under-doormat example entropies (nats)"};
  auto t0 = std::chrono::steady_clock::now();
  auto jd = classical::peres_joint();
  double h_p = classical::shannon_entropy(jd.marginal_y(), LogBase::E);
  double h_op = classical::average_conditional_entropy(jd, LogBase::E);
  double h_x = classical::shannon_entropy(jd.marginal_x(), LogBase::E);
  double h_no =
      classical::conditional_entropy_given(jd.y_index("pocket:no"), jd, LogBase::E);
  c.check(std::abs(h_p - 0.325) < 1e-3, "H(P) = " + num(h_p));
  c.check(std::abs(h_op - 0.4605) < 1e-3, "H(O|P) = " + num(h_op));
  c.check(std::abs(h_x - 0.7856) < 1e-3, "H(X) = " + num(h_x));
  c.check(std::abs(h_no - std::log(100.0)) < 1e-9,
          "H(X|P=no) = " + num(h_no));
  c.check(std::abs(h_op - 0.4605) < 1e-3,
          "post-measurement average = " + num(h_op));
  c.check(seconds_since(t0) < 1.0, "runtime over 1 s");
  c.report();
}

void criterion_2_bell() {
  Criterion c{"2. Bell-state entropies and concurrence (bits)"};
  auto t0 = std::chrono::steady_clock::now();
  for (auto kind : {quantum::BellKind::PhiPlus, quantum::BellKind::PhiMinus,
                    quantum::BellKind::PsiPlus, quantum::BellKind::PsiMinus}) {
    auto rho = quantum::density_from_state(quantum::bell_state(kind));
    auto reduced = quantum::partial_trace(rho, {0});
    c.check(std::abs(quantum::von_neumann_entropy(reduced, LogBase::Two) - 1.0) <
                1e-9,
            "S(reduced) != 1");
    c.check(std::abs(quantum::mutual_q_entropy(rho, LogBase::Two) - 2.0) < 1e-9,
            "S(A:B) != 2");
    c.check(
        std::abs(quantum::conditional_q_entropy(rho, LogBase::Two) + 1.0) < 1e-9,
        "S(A|B) != -1");
    c.check(std::abs(quantum::concurrence(rho) - 1.0) < 1e-9,
            "concurrence != 1");
  }
  c.check(seconds_since(t0) < 1.0, "runtime over 1 s");
  c.report();
}

void criterion_3_equilibration() {
  Criterion c{"3. reversible mixing: joint entropy exact, correlations >= 0"};
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 2; n <= 4; ++n) {
    auto e = equil::init_confined(n, 2, n == 4 ? 6 : 8, 17 + n);
    auto ref = e.joint_probs();
    std::sort(ref.begin(), ref.end());
    auto rep0 = equil::entropy_report(e, LogBase::E);
    bool first = true;
    for (int step = 0; step < 100; ++step) {
      equil::MixingMap m(e.num_configs(), 9000 + 100 * n + step);
      e = equil::mix_step(e, m);
      auto probs = e.joint_probs();
      std::sort(probs.begin(), probs.end());
      c.check(probs == ref, "joint distribution multiset changed");
      auto rep = equil::entropy_report(e, LogBase::E);
      c.check(rep.h_corr >= 0.0, "H_corr < 0");
      if (first) {
        c.check(rep.h_marginal_sum >= rep0.h_marginal_sum,
                "marginal sum decreased on first expansion step");
        c.check(rep.h_corr >= rep0.h_corr,
                "H_corr decreased on first expansion step");
        first = false;
      }
      if (!c.ok) break;
    }
    if (!c.ok) break;
  }
  c.check(seconds_since(t0) < 30.0, "runtime over 30 s");
  c.report();
}

void criterion_4_closed_forms() {
  Criterion c{"4. closed forms: capacity, temperature, hole, replica"};
  c.check(std::abs(rel::channel_capacity(1.0, 3.0, 1.0) - 2.0) < 1e-12,
          "capacity at alpha=1");
  c.check(std::abs(rel::channel_capacity(1.0, 3.0, 0.0)) < 1e-12,
          "capacity at alpha=0");
  c.check(std::abs(rel::boosted_temperature(2.0, 0.0, 0.4) - 2.0) < 1e-12,
          "T'(beta=0) != T");
  c.check(std::abs(rel::boosted_temperature(1.0, 0.8, M_PI_2) - 0.6) < 1e-12,
          "transverse T' != T sqrt(1-beta^2)");
  c.check(std::abs(bh::bh_entropy(1.0) - 4.0 * M_PI) < 1e-10, "S_BH(1)");
  c.check(std::abs(bh::hawking_temperature(1.0) - 1.0 / (8.0 * M_PI)) < 1e-10,
          "T_H(1)");
  for (double m : {0.7, 1.0, 2.5}) {
    double h = 1e-5;
    double dsdm = (bh::bh_entropy(m + h) - bh::bh_entropy(m - h)) / (2.0 * h);
    c.check(std::abs(dsdm * bh::hawking_temperature(m) - 1.0) < 1e-8,
            "dS/dM != 1/T_H at M=" + num(m));
  }
  std::mt19937_64 rng(314159);
  std::normal_distribution<double> g(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    quantum::Matrix a(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int col = 0; col < 4; ++col)
        a(r, col) = quantum::Complex(g(rng), g(rng));
    quantum::Matrix rho = a * a.adjoint();
    rho /= rho.trace();
    rho = (rho + quantum::Matrix(rho.adjoint())) / 2.0;
    quantum::DensityMatrix dm(rho, {4});
    worst = std::max(worst,
                     std::abs(quantum::replica_entropy(dm, LogBase::E) -
                              quantum::von_neumann_entropy(dm, LogBase::E)));
  }
  c.check(worst < 1e-9, "replica vs von Neumann worst diff " + num(worst));
  c.report();
}

void criterion_5_gas_mi() {
  Criterion c{"5. boosted-gas mutual information"};
  auto t0 = std::chrono::steady_clock::now();
  rel::GasSpec spec;
  spec.samples = 100000;
  spec.seed = 23;
  double target = std::log(M_PI) - 1.0;
  std::vector<rel::MiEstimate> ests;
  for (double beta : {0.0, 0.3, 0.6, 0.9})
    ests.push_back(
        rel::gas_mutual_info(spec, rel::Boost::from_beta(beta, rel::Vec3::UnitX())));
  c.check(std::abs(ests[0].value - target) < 0.01,
          "beta=0 estimate " + num(ests[0].value) + " vs ln(pi/e) " +
              num(target));
  for (std::size_t i = 1; i < ests.size(); ++i)
    c.check(ests[i].value + ests[i].std_error >=
                ests[i - 1].value - ests[i - 1].std_error,
            "MI not nondecreasing within errors at index " + num(double(i)));
  c.check(seconds_since(t0) < 60.0, "runtime over 60 s");
  c.report();
}

void criterion_6_pair_concurrence() {
  Criterion c{"6. boosted-pair concurrence decay properties (15^3 grid)"};
  auto t0 = std::chrono::steady_clock::now();
  const int res = 15;
  std::vector<double> xis;
  for (double xi = 0.0; xi <= 4.0 + 1e-9; xi += 0.5) xis.push_back(xi);
  std::vector<double> narrow, wide;
  for (double xi : xis) {
    narrow.push_back(rel::boosted_pair_concurrence(1.0, xi, res));
    wide.push_back(rel::boosted_pair_concurrence(4.0, xi, res));
  }
  c.check(std::abs(narrow[0] - 1.0) < 1e-6, "C(xi=0) != 1 at sigma/m=1");
  c.check(std::abs(wide[0] - 1.0) < 1e-6, "C(xi=0) != 1 at sigma/m=4");
  for (std::size_t i = 1; i < xis.size(); ++i) {
    c.check(narrow[i] <= narrow[i - 1] + 1e-3,
            "sigma/m=1 curve increased at xi=" + num(xis[i]));
    c.check(wide[i] <= wide[i - 1] + 1e-3,
            "sigma/m=4 curve increased at xi=" + num(xis[i]));
    c.check(wide[i] <= narrow[i] + 1e-9,
            "sigma/m=4 curve above sigma/m=1 at xi=" + num(xis[i]));
  }
  c.check(wide.back() < 0.2 * narrow.back(),
          "terminal: wide " + num(wide.back()) + " vs narrow " +
              num(narrow.back()));
  c.check(seconds_since(t0) < 300.0, "runtime over 5 min");
  c.report();
}

void criterion_7_two_branch() {
  Criterion gate{"7. two-branch closed-form endpoints"};
  gate.check(rel::fig2_concurrence_analytic(0.8, 0.0) == 0.0, "C(p, 0) != 0");
  for (double p : {0.5, 1.0, 2.0})
    gate.check(std::abs(rel::fig2_concurrence_analytic(p, 20.0) -
                        p * p / (1.0 + p * p)) < 1e-6,
               "large-rapidity limit off at p=" + num(p));
  gate.report();

  Criterion stretch{"7s. two-branch numeric reconstruction vs closed form"};
  stretch.gating = false;
  double worst = 0.0;
  for (double p : {0.5, 1.0, 2.0})
    for (double xi : {0.0, 0.5, 1.0, 2.0, 3.0})
      worst = std::max(worst, std::abs(rel::fig2_concurrence_numeric(p, xi) -
                                       rel::fig2_concurrence_analytic(p, xi)));
  stretch.check(worst < 1e-3, "worst |numeric - analytic| = " + num(worst));
  stretch.notes.push_back("worst |numeric - analytic| = " + num(worst));
  stretch.report();
}

void criterion_8_black_hole() {
  Criterion c{"8. black-hole channel: copies, purity, ledger"};
  auto t0 = std::chrono::steady_clock::now();
  double t_h = bh::hawking_temperature(1.0);
  bh::TripartiteState s;
  for (int k = 0; k < 3; ++k)
    s = s.accrete({"k" + std::to_string(k), 0.0, {1.0, 0.0}, false}, t_h);
  c.check(std::abs(s.entropy_m(LogBase::Two) - 3.0) < 1e-9, "S(M) != 3 bits");
  c.check(std::abs(s.entropy_r(LogBase::Two) - 3.0) < 1e-9, "S(R) != 3 bits");
  c.check(std::abs(s.entropy_mr(LogBase::Two) - 3.0) < 1e-9, "S(MR) != 3 bits");
  c.check(std::abs(bh::mr_information(s, LogBase::Two) - 3.0) < 1e-9,
          "I(M:R) != 3 bits");
  c.check(std::abs(s.entropy_qmr(LogBase::Two)) < 1e-9, "QMR not pure");
  auto rows = bh::entropy_ledger({{bh::LedgerEvent::Type::Emit, 0.25}}, 1.0);
  c.check(std::abs(rows[1].ds_tot - 4.0 * M_PI * 0.0625) < 1e-12,
          "emission dS_tot != 4 pi omega^2");
  c.check(rows[1].ds_tot >= 0.0, "dS_tot < 0");
  c.check(seconds_since(t0) < 5.0, "runtime over 5 s");
  c.report();
}

void criterion_9_wigner_oracle() {
  Criterion c{"9. spinor Wigner rotation vs 4x4 vector representation"};
  std::mt19937_64 rng(271828);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> umag(0.05, 5.0);
  std::uniform_real_distribution<double> uxi(0.05, 3.0);
  const double m = 1.0;
  quantum::Matrix sigma[3];
  sigma[0] = quantum::Matrix(2, 2);
  sigma[0] << 0, 1, 1, 0;
  sigma[1] = quantum::Matrix(2, 2);
  sigma[1] << quantum::Complex(0, 0), quantum::Complex(0, -1),
      quantum::Complex(0, 1), quantum::Complex(0, 0);
  sigma[2] = quantum::Matrix(2, 2);
  sigma[2] << 1, 0, 0, -1;

  auto boost4 = [](double xi, const rel::Vec3& n) {
    Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
    double ch = std::cosh(xi), sh = std::sinh(xi);
    l(0, 0) = ch;
    for (int i = 0; i < 3; ++i) {
      l(0, i + 1) = l(i + 1, 0) = sh * n(i);
      for (int j = 0; j < 3; ++j)
        l(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * n(i) * n(j);
    }
    return l;
  };
  auto standard4 = [](const rel::Vec3& p, double mass) {
    double e = std::sqrt(mass * mass + p.squaredNorm());
    Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
    l(0, 0) = e / mass;
    for (int i = 0; i < 3; ++i) {
      l(0, i + 1) = l(i + 1, 0) = p(i) / mass;
      for (int j = 0; j < 3; ++j)
        l(i + 1, j + 1) =
            (i == j ? 1.0 : 0.0) + p(i) * p(j) / (mass * (e + mass));
    }
    return l;
  };

  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    rel::Vec3 dir(u(rng), u(rng), u(rng));
    if (dir.norm() < 1e-3) dir = rel::Vec3::UnitX();
    rel::Vec3 p = dir.normalized() * umag(rng);
    rel::Vec3 axis(u(rng), u(rng), u(rng));
    if (axis.norm() < 1e-3) axis = rel::Vec3::UnitZ();
    axis.normalize();
    double xi = uxi(rng);

    auto w2 = rel::wigner_rotation(p, m, rel::Boost(xi, axis));
    Eigen::Matrix3d r_spinor;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r_spinor(i, j) =
            0.5 *
            (sigma[i] * w2 * sigma[j] * w2.adjoint()).trace().real();

    double e = std::sqrt(m * m + p.squaredNorm());
    Eigen::Vector4d fourp(e, p.x(), p.y(), p.z());
    Eigen::Vector4d out4 = boost4(xi, axis) * fourp;
    Eigen::Matrix4d w4 = standard4(rel::Vec3(out4.tail<3>()), m).inverse() *
                         boost4(xi, axis) * standard4(p, m);
    worst = std::max(
        worst, (r_spinor - Eigen::Matrix3d(w4.block<3, 3>(1, 1))).norm());
  }
  c.check(worst < 1e-8, "worst rotation mismatch " + num(worst));
  c.report();
}

}  // namespace

int main() {
  criterion_1_peres();
  criterion_2_bell();
  criterion_3_equilibration();
  criterion_4_closed_forms();
  criterion_5_gas_mi();
  criterion_6_pair_concurrence();
  criterion_7_two_branch();
  criterion_8_black_hole();
  criterion_9_wigner_oracle();
  if (failures) {
    std::printf("%d gating criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all gating criteria passed\n");
  return 0;
}
