// JSON/CSV serialization for distributions, quantum states, and experiment
// records.

#ifndef INFOPHYS_IO_HPP
#define INFOPHYS_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "infophys/classical.hpp"
#include "infophys/quantum.hpp"

namespace infophys::io {

using nlohmann::json;

// --- distributions ---------------------------------------------------------

json to_json(const classical::Distribution& d);
/// {"labels": [...], "probs": [...]}; renormalizes within file rounding when
/// `renormalize` is set.
classical::Distribution distribution_from_json(const json& j,
                                               bool renormalize = true);

json to_json(const classical::JointDistribution& jd);
classical::JointDistribution joint_from_json(const json& j);

/// CSV rows "label,prob" with a header line.
void write_distribution_csv(const classical::Distribution& d, std::ostream& os);
classical::Distribution read_distribution_csv(std::istream& is,
                                              bool renormalize = true);

// --- quantum states --------------------------------------------------------

/// {"dims": [...], "amplitudes": [[re, im], ...]} (row-major).
json to_json(const quantum::StateVector& s);
quantum::StateVector state_from_json(const json& j);

/// {"dims": [...], "entries": [[re, im], ...]} (row-major).
json to_json(const quantum::DensityMatrix& rho);
quantum::DensityMatrix density_from_json(const json& j);

// --- experiment records ----------------------------------------------------

/// One row of a parameter sweep: ordered (field, value) pairs with a stable
/// per-scenario schema. Values are preformatted for byte-stable output.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& name, const std::string& v);
  void add(const std::string& name, double v);
  void add(const std::string& name, std::int64_t v);
  void add(const std::string& name, std::uint64_t v);
};

/// Deterministic shortest-roundtrip formatting for doubles.
std::string format_double(double v);

enum class Format { Csv, Json };

/// CSV with RFC-4180 quoting (header from the first record) or a JSON array
/// of objects. Byte-identical for identical records.
void emit(const std::vector<Record>& records, Format format, std::ostream& os);
void emit_to_file(const std::vector<Record>& records, Format format,
                  const std::string& path);

}  // namespace infophys::io

#endif
