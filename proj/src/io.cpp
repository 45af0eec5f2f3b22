#include "infophys/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace infophys::io {

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument(std::string("missing array field: ") + key);
  return j[key].get<std::vector<std::string>>();
}

quantum::Vector complex_vector(const json& arr) {
  quantum::Vector v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("complex entries must be [re, im] pairs");
    v(static_cast<Eigen::Index>(i)) =
        quantum::Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return v;
}

json complex_list(const quantum::Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    arr.push_back({v(i).real(), v(i).imag()});
  return arr;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

json to_json(const classical::Distribution& d) {
  return json{{"labels", d.labels()}, {"probs", d.probs()}};
}

classical::Distribution distribution_from_json(const json& j, bool renormalize) {
  auto labels = string_list(j, "labels");
  auto probs = j.at("probs").get<std::vector<double>>();
  return renormalize
             ? classical::Distribution::renormalized(std::move(labels),
                                                     std::move(probs))
             : classical::Distribution(std::move(labels), std::move(probs));
}

json to_json(const classical::JointDistribution& jd) {
  std::vector<std::vector<double>> probs(jd.num_x(),
                                         std::vector<double>(jd.num_y()));
  for (std::size_t i = 0; i < jd.num_x(); ++i)
    for (std::size_t j2 = 0; j2 < jd.num_y(); ++j2)
      probs[i][j2] = jd.prob(i, j2);
  return json{{"x_labels", jd.x_labels()},
              {"y_labels", jd.y_labels()},
              {"probs", probs}};
}

classical::JointDistribution joint_from_json(const json& j) {
  return classical::JointDistribution(
      string_list(j, "x_labels"), string_list(j, "y_labels"),
      j.at("probs").get<std::vector<std::vector<double>>>());
}

void write_distribution_csv(const classical::Distribution& d, std::ostream& os) {
  os << "label,prob\n";
  for (std::size_t i = 0; i < d.size(); ++i)
    os << csv_quote(d.labels()[i]) << ',' << format_double(d.prob(i)) << '\n';
}

classical::Distribution read_distribution_csv(std::istream& is,
                                              bool renormalize) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty CSV");
  std::vector<std::string> labels;
  std::vector<double> probs;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto comma = line.find_last_of(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("malformed CSV row: " + line);
    std::string label = line.substr(0, comma);
    if (label.size() >= 2 && label.front() == '"' && label.back() == '"') {
      std::string raw = label.substr(1, label.size() - 2);
      label.clear();
      for (std::size_t i = 0; i < raw.size(); ++i) {
        label += raw[i];
        if (raw[i] == '"' && i + 1 < raw.size() && raw[i + 1] == '"') ++i;
      }
    }
    labels.push_back(label);
    probs.push_back(std::stod(line.substr(comma + 1)));
  }
  return renormalize
             ? classical::Distribution::renormalized(std::move(labels),
                                                     std::move(probs))
             : classical::Distribution(std::move(labels), std::move(probs));
}

json to_json(const quantum::StateVector& s) {
  return json{{"dims", s.dims()}, {"amplitudes", complex_list(s.amplitudes())}};
}

quantum::StateVector state_from_json(const json& j) {
  return quantum::StateVector(complex_vector(j.at("amplitudes")),
                              j.at("dims").get<std::vector<std::size_t>>());
}

json to_json(const quantum::DensityMatrix& rho) {
  quantum::Vector flat(rho.dim() * rho.dim());
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c)
      flat(static_cast<Eigen::Index>(r * rho.dim() + c)) = rho.entries()(r, c);
  return json{{"dims", rho.dims()}, {"entries", complex_list(flat)}};
}

quantum::DensityMatrix density_from_json(const json& j) {
  auto dims = j.at("dims").get<std::vector<std::size_t>>();
  quantum::Vector flat = complex_vector(j.at("entries"));
  auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(flat.size()))));
  if (n * n != flat.size())
    throw std::invalid_argument("entries length is not a perfect square");
  quantum::Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = flat(r * n + c);
  return quantum::DensityMatrix(std::move(m), std::move(dims));
}

void Record::add(const std::string& name, const std::string& v) {
  fields.emplace_back(name, v);
}
void Record::add(const std::string& name, double v) {
  fields.emplace_back(name, format_double(v));
}
void Record::add(const std::string& name, std::int64_t v) {
  fields.emplace_back(name, std::to_string(v));
}
void Record::add(const std::string& name, std::uint64_t v) {
  fields.emplace_back(name, std::to_string(v));
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

void emit(const std::vector<Record>& records, Format format, std::ostream& os) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const Record& r : records) {
      json obj = json::object();
      for (const auto& [k, v] : r.fields) obj[k] = v;
      arr.push_back(obj);
    }
    os << arr.dump(2) << '\n';
    return;
  }
  if (records.empty()) return;
  const auto& header = records.front().fields;
  for (std::size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << csv_quote(header[i].first);
  os << '\n';
  for (const Record& r : records) {
    if (r.fields.size() != header.size())
      throw std::invalid_argument("records are not schema-consistent");
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
      if (r.fields[i].first != header[i].first)
        throw std::invalid_argument("records are not schema-consistent");
      os << (i ? "," : "") << csv_quote(r.fields[i].second);
    }
    os << '\n';
  }
}

void emit_to_file(const std::vector<Record>& records, Format format,
                  const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  emit(records, format, os);
  if (!os.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace infophys::io
