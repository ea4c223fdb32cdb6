#include "mgp/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "mgp/errors.hpp"
#include "mgp/simulate.hpp"

namespace mgp::io {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + " must be a number");
  return v.get<double>();
}

Matrix square_matrix(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array of rows");
  const auto n = static_cast<Eigen::Index>(v.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw ParseError(where + " must be square");
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = number(row[static_cast<std::size_t>(j)], where);
  }
  return m;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ModelSpec parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("model document must be an object");

  const json& dj = require(doc, "d");
  const json& rj = require(doc, "r");
  if (!dj.is_number_integer() || !rj.is_number_integer() || dj.get<long long>() < 1 ||
      rj.get<long long>() < 1)
    throw ParseError("d and r must be positive integers");
  const auto d = dj.get<std::size_t>();
  const auto r = rj.get<std::size_t>();

  ModelSpec spec;
  const json& mj = require(doc, "matrix");
  if (!mj.is_array() || mj.size() != d) throw ParseError("matrix must have d rows");
  spec.matrix.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(r));
  for (std::size_t j = 0; j < d; ++j) {
    if (!mj[j].is_array() || mj[j].size() != r) throw ParseError("matrix rows must have r entries");
    for (std::size_t k = 0; k < r; ++k)
      spec.matrix(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          number(mj[j][k], "matrix entry");
  }

  const json& fj = require(doc, "factors");
  if (!fj.is_array() || fj.size() != r) throw ParseError("factors must have r entries");
  for (std::size_t k = 0; k < r; ++k) {
    const json& f = fj[k];
    const std::string where = "factor " + std::to_string(k + 1);
    if (!f.is_object()) throw ParseError(where + " must be an object");
    const json& fam = require(f, "family");
    if (!fam.is_string()) throw ParseError(where + ": family must be a string");
    const auto name = fam.get<std::string>();
    if (name == "logistic") {
      spec.families.emplace_back(Logistic{number(require(f, "alpha"), where + " alpha")});
    } else if (name == "huesler_reiss") {
      spec.families.emplace_back(
          HueslerReiss{square_matrix(require(f, "variogram"), where + " variogram")});
    } else {
      throw ParseError(where + ": unknown family \"" + name + "\"");
    }
  }

  if (doc.contains("masses")) {
    const json& ms = doc.at("masses");
    if (!ms.is_array() || ms.size() != r) throw ParseError("masses must have r entries");
    std::vector<double> masses;
    for (const json& v : ms) masses.push_back(number(v, "mass"));
    spec.masses = std::move(masses);
  }
  if (doc.contains("mvn_tol")) spec.mvn_tol = number(doc.at("mvn_tol"), "mvn_tol");
  return spec;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw ParseError("write failed for " + path.string());
}

ModelSpec read_model_file(const std::filesystem::path& path) {
  return parse_model(read_text(path));
}

MixtureModel build_model(const ModelSpec& spec, ModelOptions options) {
  if (spec.mvn_tol) options.mvn_tol = *spec.mvn_tol;
  return validate(spec.matrix, spec.families, spec.masses, options);
}

std::string model_to_json(const MixtureModel& model) {
  json doc;
  doc["d"] = model.dim();
  doc["r"] = model.factors();
  doc["matrix"] = matrix_json(model.matrix());
  json factors = json::array();
  for (std::size_t k = 0; k < model.factors(); ++k) {
    const FactorFamily& f = model.family(k);
    if (const auto* lg = std::get_if<Logistic>(&f)) {
      factors.push_back({{"family", "logistic"}, {"alpha", lg->alpha}});
    } else {
      factors.push_back({{"family", "huesler_reiss"},
                         {"variogram", matrix_json(std::get<HueslerReiss>(f).variogram)}});
    }
  }
  doc["factors"] = std::move(factors);
  doc["masses"] = model.masses();
  doc["mvn_tol"] = model.options().mvn_tol;
  return doc.dump(2) + "\n";
}

std::string format_double(double v) {
  if (v == -std::numeric_limits<double>::infinity()) return "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError("not a number: \"" + std::string(s) + "\"");
  return v;
}

std::string points_to_csv(const std::vector<MgpPoint>& points, std::size_t d,
                          std::optional<double> transform_scale) {
  std::string out;
  const char prefix = transform_scale ? 'Z' : 'Y';
  for (std::size_t j = 0; j < d; ++j) {
    if (j) out += ',';
    out += prefix;
    out += std::to_string(j + 1);
  }
  out += '\n';
  for (const MgpPoint& p : points) {
    const std::vector<double> row =
        transform_scale ? boxcox_transform(p, d, *transform_scale) : p.to_dense(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (j) out += ',';
      out += format_double(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<double>> parse_points_csv(std::string_view text, std::size_t d) {
  std::vector<std::vector<double>> rows;
  bool header = true;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> row;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      row.push_back(parse_double(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (row.size() != d)
      throw ParseError("line " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                       " fields, expected " + std::to_string(d));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mgp::io
