#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mgp/model.hpp"
#include "mgp/point.hpp"
#include "mgp/rng.hpp"

namespace mgp {

struct SimulationConfig {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::size_t max_rejections = 1'000'000;
  std::size_t workers = 1;
};

struct SampleBatch {
  std::vector<MgpPoint> points;
  std::size_t proposals = 0;
  std::size_t acceptances = 0;
  std::vector<std::size_t> column_counts;  // samples drawn on each column's face
};

struct SampleResult {
  MgpPoint point;
  std::size_t column;
  std::size_t proposals;
};

/// One exact draw: pick column b with probability w_b, then rejection-sample
/// T on its signature from the tilted proposals and return T - max(T) + E.
/// Throws RejectionBudgetExceeded after `max_rejections` proposals.
SampleResult sample_one(const MixtureModel& model, Rng& rng,
                        std::size_t max_rejections = 1'000'000);

/// n draws; draw i uses Rng::substream(seed, i), so the batch does not depend
/// on the worker count.
SampleBatch sample_batch(const MixtureModel& model, const SimulationConfig& config);

/// scale * (exp(y / scale) - 1) per coordinate; -inf maps to -scale.
std::vector<double> boxcox_transform(const MgpPoint& p, std::size_t d, double scale = 4.0);

/// Draws Q^(j), the vector with density e^{t_j} f_U(t); exp(Q - Q_j) is then
/// distributed as the extremal function exp(Y - Y_j) given Y_j > 0.
MgpPoint sample_extremal_function(const MixtureModel& model, std::size_t j, Rng& rng);

}  // namespace mgp
