#include <cmath>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "infophys/blackhole.hpp"
#include "infophys/classical.hpp"
#include "infophys/equilibration.hpp"
#include "infophys/quantum.hpp"
#include "infophys/relativistic.hpp"

namespace py = pybind11;
using namespace infophys;
using classical::LogBase;

namespace {

LogBase base_from_str(const std::string& s) {
  if (s == "2") return LogBase::Two;
  if (s == "e") return LogBase::E;
  if (s == "10") return LogBase::Ten;
  throw std::invalid_argument("base must be one of '2', 'e', '10'");
}

}  // namespace

PYBIND11_MODULE(_infophys, m) {
  m.doc() = "information measures across classical, quantum, relativistic "
            "and black-hole regimes";

  // classical
  m.def(
      "shannon_entropy",
      [](std::vector<double> probs, const std::string& base) {
        std::vector<std::string> labels(probs.size());
        for (std::size_t i = 0; i < probs.size(); ++i)
          labels[i] = "s" + std::to_string(i);
        return classical::shannon_entropy(
            classical::Distribution::renormalized(std::move(labels), probs),
            base_from_str(base));
      },
      py::arg("probs"), py::arg("base") = "2");
  m.def(
      "mutual_information",
      [](std::vector<std::vector<double>> joint, const std::string& base) {
        std::vector<std::string> xs(joint.size()), ys;
        for (std::size_t i = 0; i < joint.size(); ++i)
          xs[i] = "x" + std::to_string(i);
        if (!joint.empty())
          for (std::size_t j = 0; j < joint[0].size(); ++j)
            ys.push_back("y" + std::to_string(j));
        classical::JointDistribution jd(std::move(xs), std::move(ys),
                                        std::move(joint));
        return classical::mutual_information(jd, base_from_str(base));
      },
      py::arg("joint"), py::arg("base") = "2");
  m.def(
      "thermo_information",
      [](const std::vector<double>& energies, double temperature,
         std::size_t num_states, const std::string& base) {
        classical::ThermoSystem sys{num_states, energies, temperature};
        double nats = classical::thermo_information(sys);
        switch (base_from_str(base)) {
          case LogBase::Two: return nats / std::log(2.0);
          case LogBase::Ten: return nats / std::log(10.0);
          default: return nats;
        }
      },
      py::arg("energies"), py::arg("temperature"), py::arg("num_states"),
      py::arg("base") = "e");

  // quantum
  py::class_<quantum::DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const Eigen::MatrixXcd& entries,
                       const std::vector<std::size_t>& dims) {
             return quantum::DensityMatrix(entries, dims);
           }),
           py::arg("entries"), py::arg("dims"))
      .def_static(
          "from_state",
          [](const Eigen::VectorXcd& amps, const std::vector<std::size_t>& dims) {
            return quantum::density_from_state(quantum::StateVector(amps, dims));
          },
          py::arg("amplitudes"), py::arg("dims"))
      .def_property_readonly("entries",
                             [](const quantum::DensityMatrix& r) {
                               return Eigen::MatrixXcd(r.entries());
                             })
      .def_property_readonly("dims", &quantum::DensityMatrix::dims);
  m.def(
      "partial_trace",
      [](const quantum::DensityMatrix& rho, std::vector<std::size_t> keep) {
        return quantum::partial_trace(rho, keep);
      },
      py::arg("rho"), py::arg("keep"));
  m.def(
      "von_neumann_entropy",
      [](const quantum::DensityMatrix& rho, const std::string& base) {
        return quantum::von_neumann_entropy(rho, base_from_str(base));
      },
      py::arg("rho"), py::arg("base") = "2");
  m.def(
      "conditional_entropy",
      [](const quantum::DensityMatrix& rho, const std::string& base) {
        return quantum::conditional_q_entropy(rho, base_from_str(base));
      },
      py::arg("rho"), py::arg("base") = "2");
  m.def(
      "quantum_mutual_information",
      [](const quantum::DensityMatrix& rho, const std::string& base) {
        return quantum::mutual_q_entropy(rho, base_from_str(base));
      },
      py::arg("rho"), py::arg("base") = "2");
  m.def("concurrence", &quantum::concurrence, py::arg("rho"));
  m.def(
      "replica_entropy",
      [](const quantum::DensityMatrix& rho, const std::string& base) {
        return quantum::replica_entropy(rho, base_from_str(base));
      },
      py::arg("rho"), py::arg("base") = "2");
  m.def(
      "bell_state",
      [](const std::string& kind) {
        quantum::BellKind k;
        if (kind == "phi+") k = quantum::BellKind::PhiPlus;
        else if (kind == "phi-") k = quantum::BellKind::PhiMinus;
        else if (kind == "psi+") k = quantum::BellKind::PsiPlus;
        else if (kind == "psi-") k = quantum::BellKind::PsiMinus;
        else throw std::invalid_argument("kind must be phi+/phi-/psi+/psi-");
        return quantum::density_from_state(quantum::bell_state(k));
      },
      py::arg("kind"));

  // relativistic
  m.def("doppler_factor", &rel::doppler_factor, py::arg("beta"));
  m.def("channel_capacity", &rel::channel_capacity, py::arg("bandwidth_hz"),
        py::arg("snr"), py::arg("alpha"));
  m.def("boosted_temperature", &rel::boosted_temperature, py::arg("t"),
        py::arg("beta"), py::arg("theta_prime"));
  m.def(
      "unruh_temperature",
      [](double a, const std::string& units) {
        return rel::unruh_temperature(a, units == "si"
                                             ? rel::UnruhUnits::SI
                                             : rel::UnruhUnits::Natural);
      },
      py::arg("acceleration"), py::arg("units") = "natural");
  m.def("boosted_pair_concurrence", &rel::boosted_pair_concurrence,
        py::arg("sigma_over_m"), py::arg("xi"), py::arg("grid_res") = 9);
  m.def("fig2_concurrence_analytic", &rel::fig2_concurrence_analytic,
        py::arg("p"), py::arg("xi"));
  m.def("fig2_concurrence_numeric", &rel::fig2_concurrence_numeric,
        py::arg("p"), py::arg("xi"));
  m.def(
      "estimate_mi",
      [](const std::vector<double>& x, const std::vector<double>& y,
         std::uint64_t seed) {
        auto est = rel::estimate_mi(x, y, seed);
        return py::make_tuple(est.value, est.std_error, est.converged);
      },
      py::arg("x"), py::arg("y"), py::arg("seed") = 1);

  // black hole
  m.def("bh_entropy", &bh::bh_entropy, py::arg("mass"));
  m.def("hawking_temperature", &bh::hawking_temperature, py::arg("mass"));
  m.def(
      "bh_accrete_entropies",
      [](std::size_t n_modes, double mass, double omega,
         const std::string& base) {
        LogBase b = base_from_str(base);
        double t_h = bh::hawking_temperature(mass);
        bh::TripartiteState s;
        for (std::size_t k = 0; k < n_modes; ++k)
          s = s.accrete({"k" + std::to_string(k), omega, {1.0, 0.0}, false},
                        t_h);
        py::dict out;
        out["s_m"] = s.entropy_m(b);
        out["s_r"] = s.entropy_r(b);
        out["s_mr"] = s.entropy_mr(b);
        out["s_qmr"] = s.entropy_qmr(b);
        out["mutual_info"] = bh::mr_information(s, b);
        return out;
      },
      py::arg("n_modes"), py::arg("mass") = 1.0, py::arg("omega") = 0.0,
      py::arg("base") = "2");
}
