#include "infophys/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "infophys/blackhole.hpp"
#include "infophys/equilibration.hpp"
#include "infophys/quantum.hpp"
#include "infophys/relativistic.hpp"

namespace infophys::scenarios {

namespace {

using io::Record;
using Point = std::map<std::string, double>;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double get(const Point& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing grid param: " + key);
  return it->second;
}

std::string get_param(const std::map<std::string, std::string>& params,
                      const std::string& key, const std::string& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::string base_name(LogBase b) {
  switch (b) {
    case LogBase::Two: return "2";
    case LogBase::E: return "e";
    case LogBase::Ten: return "10";
  }
  return "?";
}

quantum::DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng,
                                      std::vector<std::size_t> dims = {}) {
  std::normal_distribution<double> g(0.0, 1.0);
  quantum::Matrix a(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      a(r, c) = quantum::Complex(g(rng), g(rng));
  quantum::Matrix rho = a * a.adjoint();
  rho /= rho.trace();
  rho = (rho + rho.adjoint().eval()) / 2.0;
  if (dims.empty()) dims = {dim};
  return quantum::DensityMatrix(std::move(rho), std::move(dims));
}

struct ScenarioContext {
  Point point;
  std::map<std::string, std::string> params;
  std::uint64_t seed;
  LogBase base;
};

void add_point_fields(Record& rec, const ScenarioContext& ctx) {
  for (const auto& [k, v] : ctx.point) rec.add(k, v);
}

// --- scenario implementations ----------------------------------------------

std::vector<Record> run_peres(const ScenarioContext& ctx) {
  using namespace classical;
  auto jd = peres_joint();
  LogBase b = ctx.base;
  double h_p = shannon_entropy(jd.marginal_y(), b);
  double h_o_given_p = average_conditional_entropy(jd, b);
  double h_x = shannon_entropy(jd.marginal_x(), b);
  double h_x_given_no = conditional_entropy_given(jd.y_index("pocket:no"), jd, b);
  Record r;
  r.add("scenario", std::string("peres"));
  r.add("base", base_name(b));
  r.add("h_p", h_p);
  r.add("h_o_given_p", h_o_given_p);
  r.add("h_x", h_x);
  r.add("h_x_given_pocket_no", h_x_given_no);
  r.add("h_post_measurement_avg", h_o_given_p);
  r.add("info_gain", information_gain(h_x, h_o_given_p));
  r.add("seed", ctx.seed);
  return {r};
}

std::vector<Record> run_equilibrate(const ScenarioContext& ctx) {
  auto n = static_cast<std::size_t>(get(ctx.point, "n"));
  auto small = static_cast<std::size_t>(get(ctx.point, "small"));
  auto total = static_cast<std::size_t>(get(ctx.point, "total"));
  auto steps = static_cast<std::size_t>(get(ctx.point, "steps"));
  auto ens = equil::init_confined(n, small, total, ctx.seed);
  std::vector<Record> rows;
  for (std::size_t step = 0; step <= steps; ++step) {
    auto rep = equil::entropy_report(ens, ctx.base);
    Record r;
    r.add("scenario", std::string("equilibrate"));
    add_point_fields(r, ctx);
    r.add("step", static_cast<std::int64_t>(step));
    r.add("h_joint", rep.h_joint);
    r.add("h_marginal_sum", rep.h_marginal_sum);
    r.add("h_corr", rep.h_corr);
    r.add("seed", ctx.seed);
    rows.push_back(std::move(r));
    if (step < steps) {
      equil::MixingMap map(ens.num_configs(), mix_seed(ctx.seed, step));
      ens = equil::mix_step(ens, map);
    }
  }
  return rows;
}

std::vector<Record> run_bell_entropies(const ScenarioContext& ctx) {
  using quantum::BellKind;
  static const std::pair<BellKind, const char*> kinds[] = {
      {BellKind::PhiPlus, "phi+"},
      {BellKind::PhiMinus, "phi-"},
      {BellKind::PsiPlus, "psi+"},
      {BellKind::PsiMinus, "psi-"}};
  std::vector<Record> rows;
  for (auto [kind, name] : kinds) {
    auto rho = quantum::density_from_state(quantum::bell_state(kind));
    auto rho_a = quantum::partial_trace(rho, {0});
    Record r;
    r.add("scenario", std::string("bell-entropies"));
    r.add("kind", std::string(name));
    r.add("s_reduced", quantum::von_neumann_entropy(rho_a, ctx.base));
    r.add("s_conditional", quantum::conditional_q_entropy(rho, ctx.base));
    r.add("s_mutual", quantum::mutual_q_entropy(rho, ctx.base));
    r.add("concurrence", quantum::concurrence(rho));
    r.add("seed", ctx.seed);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Record> run_pointer(const ScenarioContext& ctx) {
  auto dim = static_cast<std::size_t>(get(ctx.point, "dim"));
  // (|0> + |1>)/sqrt(2) into a fresh pointer
  quantum::Vector sys = quantum::Vector::Zero(dim);
  sys(0) = sys(1) = 1.0 / std::sqrt(2.0);
  auto out = quantum::pointer_measurement(quantum::StateVector(sys, {dim}), dim);
  auto rho_pointer =
      quantum::partial_trace(quantum::density_from_state(out), {1});
  // overlap with the merely-correlated target |x+y, x+y>
  quantum::Vector corr = quantum::Vector::Zero(dim * dim);
  for (std::size_t x : {std::size_t{0}, std::size_t{1}})
    for (std::size_t a : {std::size_t{0}, std::size_t{1}})
      corr(x * dim + a) = 0.5;
  double fidelity = std::norm(corr.dot(out.amplitudes()));
  Record r;
  r.add("scenario", std::string("pointer"));
  add_point_fields(r, ctx);
  r.add("s_pointer", quantum::von_neumann_entropy(rho_pointer, ctx.base));
  r.add("fidelity_vs_classical_target", fidelity);
  r.add("norm", out.amplitudes().norm());
  r.add("seed", ctx.seed);
  return {r};
}

std::vector<Record> run_capacity(const ScenarioContext& ctx) {
  double w = get(ctx.point, "bandwidth");
  double snr = get(ctx.point, "snr");
  double alpha = get(ctx.point, "alpha");
  Record r;
  r.add("scenario", std::string("capacity"));
  add_point_fields(r, ctx);
  r.add("capacity_bits_per_s", rel::channel_capacity(w, snr, alpha));
  r.add("seed", ctx.seed);
  return {r};
}

std::vector<Record> run_temperature(const ScenarioContext& ctx) {
  double t = get(ctx.point, "t");
  double beta = get(ctx.point, "beta");
  double theta = get(ctx.point, "theta");
  Record r;
  r.add("scenario", std::string("temperature"));
  add_point_fields(r, ctx);
  r.add("t_prime", rel::boosted_temperature(t, beta, theta));
  r.add("doppler_alpha", rel::doppler_factor(beta));
  r.add("seed", ctx.seed);
  return {r};
}

std::vector<Record> run_gas_mi(const ScenarioContext& ctx) {
  rel::GasSpec spec;
  spec.kind = get_param(ctx.params, "kind", "uniform-disk") == "maxwell"
                  ? rel::GasKind::Maxwell
                  : rel::GasKind::UniformDisk;
  spec.v_max = get(ctx.point, "v_max");
  spec.samples = static_cast<std::size_t>(get(ctx.point, "samples"));
  spec.seed = ctx.seed;
  double beta = get(ctx.point, "beta");
  auto est = rel::gas_mutual_info(
      spec, rel::Boost::from_beta(beta, rel::Vec3::UnitX()));
  Record r;
  r.add("scenario", std::string("gas-mi"));
  r.add("kind", get_param(ctx.params, "kind", "uniform-disk"));
  add_point_fields(r, ctx);
  r.add("mi_nats", est.value);
  r.add("std_error", est.std_error);
  r.add("converged", std::string(est.converged ? "true" : "false"));
  r.add("seed", ctx.seed);
  return {r};
}

std::vector<Record> run_boost_single(const ScenarioContext& ctx) {
  double xi = get(ctx.point, "xi");
  double sigma = get(ctx.point, "sigma_over_m");
  int res = static_cast<int>(get(ctx.point, "grid_res"));
  Eigen::Vector2cd up(1.0, 0.0);
  auto state = rel::SpinMomentumState::product(
      up, rel::MomentumGrid::gaussian(sigma, res), 1.0);
  auto boosted = rel::boost_state(state, rel::Boost(xi, rel::Vec3::UnitX()));
  Record r;
  r.add("scenario", std::string("boost-single"));
  add_point_fields(r, ctx);
  r.add("s_spin", quantum::von_neumann_entropy(boosted.spin_density(), ctx.base));
  r.add("grid_warning", std::string(boosted.grid_warning() ? "true" : "false"));
  r.add("seed", ctx.seed);
  return {r};
}

std::vector<Record> run_boost_pair(const ScenarioContext& ctx) {
  double xi = get(ctx.point, "xi");
  double sigma = get(ctx.point, "sigma_over_m");
  int res = static_cast<int>(get(ctx.point, "grid_res"));
  Record r;
  r.add("scenario", std::string("boost-pair"));
  add_point_fields(r, ctx);
  r.add("concurrence", rel::boosted_pair_concurrence(sigma, xi, res));
  r.add("seed", ctx.seed);
  return {r};
}

std::vector<Record> run_fig2(const ScenarioContext& ctx) {
  double p = get(ctx.point, "p");
  double xi = get(ctx.point, "xi");
  double analytic = rel::fig2_concurrence_analytic(p, xi);
  double numeric = rel::fig2_concurrence_numeric(p, xi);
  Record r;
  r.add("scenario", std::string("fig2"));
  add_point_fields(r, ctx);
  r.add("c_analytic", analytic);
  r.add("c_numeric", numeric);
  r.add("abs_diff", std::abs(analytic - numeric));
  r.add("seed", ctx.seed);
  return {r};
}

std::vector<Record> run_bh_accrete(const ScenarioContext& ctx) {
  auto n_modes = static_cast<std::size_t>(get(ctx.point, "n_modes"));
  double mass = get(ctx.point, "m");
  double omega = get(ctx.point, "omega");
  double t_h = bh::hawking_temperature(mass);
  bh::TripartiteState state;
  for (std::size_t k = 0; k < n_modes; ++k) {
    bh::ModeSpec mode{"k" + std::to_string(k), omega, bh::Complex(1.0, 0.0),
                      false};
    state = state.accrete(mode, t_h);
  }
  Record r;
  r.add("scenario", std::string("bh-accrete"));
  add_point_fields(r, ctx);
  r.add("s_m", state.entropy_m(ctx.base));
  r.add("s_r", state.entropy_r(ctx.base));
  r.add("s_mr", state.entropy_mr(ctx.base));
  r.add("mutual_info", bh::mr_information(state, ctx.base));
  r.add("s_qmr", state.entropy_qmr(ctx.base));
  r.add("norm", state.norm());
  r.add("seed", ctx.seed);
  return {r};
}

std::vector<Record> run_bh_ledger(const ScenarioContext& ctx) {
  nlohmann::json traj = nlohmann::json::parse(get_param(
      ctx.params, "trajectory",
      R"({"M0": 1.0, "events": [{"type": "absorb", "omega": 0.1},)"
      R"({"type": "emit", "omega": 0.05}],)"
      R"("modes": [{"label": "k0", "omega": 0.1, "alpha": 1.0}]})"));
  double m0 = traj.at("M0").get<double>();
  std::vector<bh::LedgerEvent> events;
  for (const auto& ev : traj.value("events", nlohmann::json::array())) {
    auto type = ev.at("type").get<std::string>() == "absorb"
                    ? bh::LedgerEvent::Type::Absorb
                    : bh::LedgerEvent::Type::Emit;
    events.push_back({type, ev.at("omega").get<double>()});
  }
  bh::TripartiteState state;
  double t_h = bh::hawking_temperature(m0);
  for (const auto& m : traj.value("modes", nlohmann::json::array())) {
    bh::ModeSpec mode{m.at("label").get<std::string>(),
                      m.at("omega").get<double>(),
                      bh::Complex(m.at("alpha").get<double>(), 0.0), false};
    state = state.accrete(mode, t_h);
  }
  double s_m = state.entropy_m(ctx.base);
  double s_r = state.entropy_r(ctx.base);
  double s_mr = state.entropy_mr(ctx.base);
  double info = bh::mr_information(state, ctx.base);
  std::vector<Record> rows;
  for (const auto& row : bh::entropy_ledger(events, m0)) {
    Record r;
    r.add("event", row.event);
    r.add("M", row.mass);
    r.add("S_BH", row.s_bh);
    r.add("T_H", row.t_hawking);
    r.add("dS_rad", row.ds_rad);
    r.add("dS_tot", row.ds_tot);
    r.add("S_M", s_m);
    r.add("S_R", s_r);
    r.add("S_MR", s_mr);
    r.add("I", info);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Record> run_replica_check(const ScenarioContext& ctx) {
  auto n = static_cast<std::size_t>(get(ctx.point, "n_matrices"));
  auto dim = static_cast<std::size_t>(get(ctx.point, "dim"));
  std::mt19937_64 rng(ctx.seed);
  double max_diff = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rho = random_density(dim, rng);
    max_diff = std::max(max_diff,
                        std::abs(quantum::replica_entropy(rho, ctx.base) -
                                 quantum::von_neumann_entropy(rho, ctx.base)));
  }
  Record r;
  r.add("scenario", std::string("replica-check"));
  add_point_fields(r, ctx);
  r.add("max_abs_diff", max_diff);
  r.add("seed", ctx.seed);
  return {r};
}

struct ScenarioDef {
  std::function<std::vector<Record>(const ScenarioContext&)> fn;
  std::map<std::string, std::vector<double>> default_grid;
};

const std::map<std::string, ScenarioDef>& registry() {
  static const std::map<std::string, ScenarioDef> reg = {
      {"peres", {run_peres, {}}},
      {"equilibrate",
       {run_equilibrate, {{"n", {2}}, {"small", {2}}, {"total", {8}}, {"steps", {20}}}}},
      {"bell-entropies", {run_bell_entropies, {}}},
      {"pointer", {run_pointer, {{"dim", {4}}}}},
      {"capacity",
       {run_capacity,
        {{"bandwidth", {1.0}}, {"snr", {3.0}}, {"alpha", {0.0, 0.25, 0.5, 0.75, 1.0}}}}},
      {"temperature",
       {run_temperature,
        {{"t", {1.0}}, {"beta", {0.0, 0.3, 0.6, 0.9}}, {"theta", {0.0, M_PI_2, M_PI}}}}},
      {"gas-mi",
       {run_gas_mi,
        {{"beta", {0.0, 0.3, 0.6, 0.9}}, {"v_max", {0.99}}, {"samples", {100000}}}}},
      {"boost-single",
       {run_boost_single,
        {{"xi", {0.0, 1.0, 2.0}}, {"sigma_over_m", {1.0}}, {"grid_res", {9}}}}},
      {"boost-pair",
       {run_boost_pair,
        {{"xi", {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0}},
         {"sigma_over_m", {1.0, 4.0}},
         {"grid_res", {9}}}}},
      {"fig2",
       {run_fig2, {{"p", {1.0}}, {"xi", {0.0, 0.5, 1.0, 1.5, 2.0, 3.0}}}}},
      {"bh-accrete",
       {run_bh_accrete, {{"n_modes", {3}}, {"m", {1.0}}, {"omega", {0.0}}}}},
      {"bh-ledger", {run_bh_ledger, {}}},
      {"replica-check", {run_replica_check, {{"n_matrices", {50}}, {"dim", {4}}}}},
  };
  return reg;
}

std::vector<Point> expand_grid(
    const std::map<std::string, std::vector<double>>& grid) {
  for (const auto& [name, values] : grid)
    if (values.empty())
      throw std::invalid_argument("empty value list for grid param: " + name);
  std::vector<Point> points{{}};
  for (const auto& [name, values] : grid) {
    std::vector<Point> next;
    next.reserve(points.size() * values.size());
    for (const auto& base : points)
      for (double v : values) {
        Point p = base;
        p[name] = v;
        next.push_back(std::move(p));
      }
    points = std::move(next);
  }
  return points;
}

}  // namespace

LogBase parse_base(const std::string& s) {
  if (s == "2") return LogBase::Two;
  if (s == "e") return LogBase::E;
  if (s == "10") return LogBase::Ten;
  throw std::invalid_argument("base must be one of 2, e, 10");
}

ScenarioConfig config_from_json(const nlohmann::json& j) {
  if (j.value("schema", 1) != 1)
    throw std::invalid_argument("unsupported config schema version");
  ScenarioConfig cfg;
  cfg.scenario = j.at("scenario").get<std::string>();
  if (j.contains("grid"))
    cfg.grid = j["grid"].get<std::map<std::string, std::vector<double>>>();
  if (j.contains("params")) {
    for (const auto& [k, v] : j["params"].items())
      cfg.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  cfg.seed = j.value("seed", std::uint64_t{1});
  cfg.base = parse_base(j.value("base", std::string("2")));
  cfg.workers = j.value("workers", 1);
  cfg.timings = j.value("timings", false);
  return cfg;
}

std::vector<std::string> registered_scenarios() {
  std::vector<std::string> names;
  for (const auto& [name, def] : registry()) names.push_back(name);
  return names;
}

std::vector<io::Record> run_scenario(const ScenarioConfig& cfg) {
  auto it = registry().find(cfg.scenario);
  if (it == registry().end())
    throw std::invalid_argument("unknown scenario: " + cfg.scenario);
  const ScenarioDef& def = it->second;

  auto grid = def.default_grid;
  for (const auto& [name, values] : cfg.grid) grid[name] = values;
  auto points = expand_grid(grid);

  std::vector<std::vector<Record>> results(points.size());
  std::vector<std::string> errors(points.size());
  auto run_point = [&](std::size_t i) {
    ScenarioContext ctx{points[i], cfg.params, mix_seed(cfg.seed, i), cfg.base};
    try {
      auto t0 = std::chrono::steady_clock::now();
      results[i] = def.fn(ctx);
      if (cfg.timings) {
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        for (auto& r : results[i]) r.add("wall_time_ms", ms);
      }
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };

  int workers = std::max(1, cfg.workers);
  if (workers == 1 || points.size() <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) run_point(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < points.size();
             i = next.fetch_add(1))
          run_point(i);
      });
    for (auto& t : pool) t.join();
  }

  std::string failures;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!errors[i].empty())
      failures += "grid point " + std::to_string(i) + " [" + cfg.scenario +
                  "]: " + errors[i] + "\n";
  if (!failures.empty()) throw std::runtime_error(failures);

  std::vector<Record> flat;
  for (auto& rs : results)
    for (auto& r : rs) flat.push_back(std::move(r));
  return flat;
}

}  // namespace infophys::scenarios
