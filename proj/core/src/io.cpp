#include "grassdesign/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace grassdesign {

namespace {

using nlohmann::json;

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows, int expected_rows,
                                 const char* what) {
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument(std::string(what) + ": expected a nonempty array");
  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  const auto n_cols = static_cast<Eigen::Index>(rows.front().size());
  Eigen::MatrixXd m(n_rows, n_cols);
  for (Eigen::Index i = 0; i < n_rows; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n_cols)
      throw std::invalid_argument(std::string(what) + ": ragged matrix rows");
    for (Eigen::Index j = 0; j < n_cols; ++j) {
      const json& cell = row[static_cast<std::size_t>(j)];
      if (!cell.is_number())
        throw std::invalid_argument(std::string(what) + ": non-numeric entry");
      m(i, j) = cell.get<double>();
    }
  }
  if (expected_rows > 0 && n_rows != expected_rows)
    throw std::invalid_argument(std::string(what) + ": wrong number of rows");
  return m;
}

Configuration configuration_from_parsed(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("configuration: not a JSON object");
  if (!doc.contains("d") || !doc["d"].is_number_integer())
    throw std::invalid_argument("configuration: missing integer field 'd'");
  const int d = doc["d"].get<int>();
  if (d < 2) throw std::invalid_argument("configuration: d must be >= 2");
  if (!doc.contains("points") || !doc["points"].is_array() || doc["points"].empty())
    throw std::invalid_argument("configuration: 'points' must be a nonempty array");

  Configuration config(d);
  std::size_t index = 0;
  for (const json& entry : doc["points"]) {
    const std::string where = "points[" + std::to_string(index++) + "]";
    if (!entry.is_object())
      throw std::invalid_argument(where + ": expected an object");
    if (!entry.contains("weight") || !entry["weight"].is_number())
      throw std::invalid_argument(where + ": missing numeric 'weight'");
    const double weight = entry["weight"].get<double>();

    if (entry.contains("matrix")) {
      if (!entry.contains("rank") || !entry["rank"].is_number_integer())
        throw std::invalid_argument(where + ": 'matrix' needs integer 'rank'");
      const int rank = entry["rank"].get<int>();
      Eigen::MatrixXd m =
          matrix_from_json(entry["matrix"], d, (where + ".matrix").c_str());
      if (m.cols() != d)
        throw std::invalid_argument(where + ".matrix: expected d x d");
      const auto violations = validate_matrix(d, rank, m, 1e-8);
      if (!violations.empty())
        throw std::invalid_argument(where + ".matrix: " + violations.front());
      config.add(Projector(d, rank, std::move(m)), weight);
    } else if (entry.contains("frame")) {
      Eigen::MatrixXd cols =
          matrix_from_json(entry["frame"], 0, (where + ".frame").c_str());
      // Frame columns are given as vectors, i.e. the outer array indexes
      // columns.
      Eigen::MatrixXd frame = cols.transpose();
      if (frame.rows() != d)
        throw std::invalid_argument(where + ".frame: column length != d");
      if (entry.contains("rank") &&
          entry["rank"].get<int>() != static_cast<int>(frame.cols()))
        throw std::invalid_argument(where + ": 'rank' contradicts frame width");
      config.add(projector_from_frame(d, frame), weight);
    } else {
      throw std::invalid_argument(where + ": needs 'matrix' or 'frame'");
    }
  }
  return config;
}

}  // namespace

std::string configuration_to_json(const Configuration& config) {
  json doc;
  doc["d"] = config.dim();
  doc["points"] = json::array();
  for (std::size_t i = 0; i < config.size(); ++i) {
    json entry;
    entry["rank"] = config.point(i).rank();
    entry["weight"] = config.weight(i);
    entry["matrix"] = matrix_to_json(config.point(i).matrix());
    doc["points"].push_back(std::move(entry));
  }
  doc["meta"] = json::object();
  return doc.dump(2);
}

Configuration configuration_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("configuration: ") + e.what());
  }
  return configuration_from_parsed(doc);
}

Configuration configuration_from_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return configuration_from_json(buffer.str());
}

void write_configuration(const Configuration& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << configuration_to_json(config) << '\n';
}

Configuration read_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return configuration_from_stream(in);
}

std::string report_to_json(const CertificationReport& report) {
  json doc;
  doc["t"] = report.t;
  doc["ffp"] = report.ffp;
  doc["bound"] = report.bound;
  doc["bound_exact"] = report.bound_exact;
  doc["gap"] = report.gap;
  json masses = json::object();
  for (const auto& [k, m] : report.masses) masses[std::to_string(k)] = m;
  doc["masses"] = std::move(masses);
  doc["verdict"] = to_string(report.verdict);
  doc["tol"] = report.tol;
  return doc.dump(2);
}

CertificationReport report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
  CertificationReport report;
  report.t = doc.at("t").get<int>();
  report.ffp = doc.at("ffp").get<double>();
  report.bound = doc.at("bound").get<double>();
  report.bound_exact = doc.at("bound_exact").get<std::string>();
  report.gap = doc.at("gap").get<double>();
  for (const auto& [key, value] : doc.at("masses").items())
    report.masses[std::stoi(key)] = value.get<double>();
  const std::string verdict = doc.at("verdict").get<std::string>();
  report.verdict = verdict == "design"     ? Verdict::design
                   : verdict == "cubature" ? Verdict::cubature
                                           : Verdict::neither;
  report.tol = doc.at("tol").get<double>();
  return report;
}

}  // namespace grassdesign
