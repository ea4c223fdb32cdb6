#include "mgp/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <limits>
#include <sstream>
#include <thread>

#include "mgp/errors.hpp"

namespace mgp {

namespace {

double log_sum_exp(const Vector& v) {
  const double top = v.maxCoeff();
  return top + std::log((v.array() - top).exp().sum());
}

}  // namespace

SampleResult sample_one(const MixtureModel& model, Rng& rng, std::size_t max_rejections) {
  const std::size_t b = rng.categorical(model.face_weights().weights);
  const Column& col = model.column(b);
  for (std::size_t proposals = 1; proposals <= max_rejections; ++proposals) {
    const std::size_t a = rng.categorical(col.tilt_weights);
    const Vector q = col.proposals[a].sample(rng);
    const double log_u0 = std::log(rng.uniform_open());
    const double q_max = q.maxCoeff();
    if (log_u0 <= q_max - log_sum_exp(q)) {
      const double e = rng.standard_exponential();
      std::vector<double> values(static_cast<std::size_t>(q.size()));
      for (Eigen::Index i = 0; i < q.size(); ++i)
        values[static_cast<std::size_t>(i)] = q(i) - q_max + e;
      return {MgpPoint{col.signature, std::move(values)}, b, proposals};
    }
  }
  std::ostringstream msg;
  msg << "no acceptance within " << max_rejections << " proposals on column " << b + 1;
  throw RejectionBudgetExceeded(msg.str());
}

SampleBatch sample_batch(const MixtureModel& model, const SimulationConfig& config) {
  if (config.n < 1) throw PreconditionError("sample count must be positive");
  if (config.max_rejections < 1) throw PreconditionError("rejection budget must be positive");

  std::vector<std::optional<SampleResult>> results(config.n);
  std::vector<std::exception_ptr> failures(config.n);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng = Rng::substream(config.seed, i);
      try {
        results[i] = sample_one(model, rng, config.max_rejections);
      } catch (const RejectionBudgetExceeded& e) {
        std::ostringstream msg;
        msg << "sample " << i << ": " << e.what();
        failures[i] = std::make_exception_ptr(RejectionBudgetExceeded(msg.str()));
        return;
      } catch (...) {
        failures[i] = std::current_exception();
        return;
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(config.workers, 1, config.n);
  if (workers == 1) {
    run(0, config.n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (config.n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(config.n, begin + chunk);
      if (begin < end) pool.emplace_back(run, begin, end);
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  SampleBatch batch;
  batch.points.reserve(config.n);
  batch.column_counts.assign(model.factors(), 0);
  for (auto& r : results) {
    batch.proposals += r->proposals;
    ++batch.column_counts[r->column];
    batch.points.push_back(std::move(r->point));
  }
  batch.acceptances = config.n;
  return batch;
}

std::vector<double> boxcox_transform(const MgpPoint& p, std::size_t d, double scale) {
  if (!(scale > 0.0)) throw PreconditionError("transform scale must be positive");
  std::vector<double> z(d, -scale);
  for (std::size_t i = 0; i < p.support.size(); ++i)
    z[p.support[i]] = scale * std::expm1(p.values[i] / scale);
  return z;
}

MgpPoint sample_extremal_function(const MixtureModel& model, std::size_t j, Rng& rng) {
  if (j >= model.dim()) throw PreconditionError("component index out of range");
  std::vector<double> weights(model.factors());
  for (std::size_t k = 0; k < model.factors(); ++k) weights[k] = model.coefficient(j, k);
  const std::size_t k = rng.categorical(weights);
  const Column& col = model.column(k);
  const Vector q = col.proposals[col.signature.position(j)].sample(rng);
  return {col.signature, std::vector<double>(q.data(), q.data() + q.size())};
}

}  // namespace mgp
