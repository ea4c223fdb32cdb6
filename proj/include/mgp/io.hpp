#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgp/family.hpp"
#include "mgp/linalg.hpp"
#include "mgp/model.hpp"
#include "mgp/point.hpp"

namespace mgp::io {

/// Unvalidated contents of a model file.
///
/// The file is a JSON object:
///   d, r        integers
///   matrix      d rows of r numbers
///   factors     r objects, {"family": "logistic", "alpha": a} or
///               {"family": "huesler_reiss", "variogram": [[...], ...]} with
///               rows/columns indexed by the sorted signature members
///   masses      optional, r numbers (default 1/r each)
///   mvn_tol     optional positive number
struct ModelSpec {
  Matrix matrix;
  std::vector<FactorFamily> families;
  std::optional<std::vector<double>> masses;
  std::optional<double> mvn_tol;
};

/// Throws ParseError on malformed documents.
ModelSpec parse_model(std::string_view text);
ModelSpec read_model_file(const std::filesystem::path& path);

/// `options.mvn_tol` is replaced by the file's value when one is present.
MixtureModel build_model(const ModelSpec& spec, ModelOptions options = {});

/// Canonical model document; parse_model() of it rebuilds the same model.
std::string model_to_json(const MixtureModel& model);

/// Shortest round-trip decimal; -inf is written as "-inf".
std::string format_double(double v);
/// Accepts "-inf" and anything std::from_chars reads; throws ParseError.
double parse_double(std::string_view s);

/// Header Y1..Yd (or Z1..Zd with a transform scale) and one row per point.
std::string points_to_csv(const std::vector<MgpPoint>& points, std::size_t d,
                          std::optional<double> transform_scale = std::nullopt);

/// Rows of a points CSV with a header line, as dense vectors.
std::vector<std::vector<double>> parse_points_csv(std::string_view text, std::size_t d);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace mgp::io
