#include "stats.hpp"

#include <map>
#include <string>
#include <utility>

#include "errors.hpp"
#include "random.hpp"
#include "special.hpp"

namespace cpci {

ConfidenceLevel::ConfidenceLevel(double gamma) : gamma_(gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw InputError("confidence level must lie in (0,1), got " + std::to_string(gamma));
}

double regularized_incomplete_beta(double x, double a, double b) {
  return special::incomplete_beta(x, a, b);
}

double beta_quantile(double q, double a, double b) { return special::beta_quantile(q, a, b); }

double point_estimate(std::size_t c, std::size_t m) {
  if (m == 0) throw InputError("ensemble size must be at least 1");
  if (c > m)
    throw InputError("count " + std::to_string(c) + " exceeds ensemble size " + std::to_string(m));
  return static_cast<double>(c) / static_cast<double>(m);
}

IntervalEstimate jeffreys_interval(std::size_t c, std::size_t m, ConfidenceLevel level) {
  IntervalEstimate est;
  est.p_hat = point_estimate(c, m);
  est.c = c;
  est.m = m;
  const double a = 0.5 + static_cast<double>(c);
  const double b = 0.5 + static_cast<double>(m - c);
  const double half_alpha = 0.5 * level.alpha();
  est.p_lower = c == 0 ? 0.0 : special::beta_quantile(half_alpha, a, b);
  est.p_upper = c == m ? 1.0 : special::beta_quantile(1.0 - half_alpha, a, b);
  return est;
}

ProbabilitySummary summarize(const TypeCounts& counts, ConfidenceLevel level) {
  ProbabilitySummary s;
  s.gamma = level.gamma();
  s.by_type[type_slot(CriticalType::Minimum)] = jeffreys_interval(counts.c_min, counts.m, level);
  s.by_type[type_slot(CriticalType::Maximum)] = jeffreys_interval(counts.c_max, counts.m, level);
  s.by_type[type_slot(CriticalType::Saddle)] = jeffreys_interval(counts.c_saddle, counts.m, level);
  return s;
}

std::vector<ProbabilitySummary> summarize(std::span<const TypeCounts> counts, ConfidenceLevel level) {
  // Vertices share m and most share a handful of count values, so intervals
  // are memoized per (c, m).
  std::map<std::pair<std::size_t, std::size_t>, IntervalEstimate> cache;
  auto lookup = [&](std::size_t c, std::size_t m) {
    auto [it, inserted] = cache.try_emplace({c, m});
    if (inserted) {
      try {
        it->second = jeffreys_interval(c, m, level);
      } catch (...) {
        cache.erase(it);
        throw;
      }
    }
    return it->second;
  };
  std::vector<ProbabilitySummary> out;
  out.reserve(counts.size());
  for (const auto& tc : counts) {
    ProbabilitySummary s;
    s.gamma = level.gamma();
    s.by_type[type_slot(CriticalType::Minimum)] = lookup(tc.c_min, tc.m);
    s.by_type[type_slot(CriticalType::Maximum)] = lookup(tc.c_max, tc.m);
    s.by_type[type_slot(CriticalType::Saddle)] = lookup(tc.c_saddle, tc.m);
    out.push_back(s);
  }
  return out;
}

CoverageReport coverage_experiment(double p_true, std::size_t m, ConfidenceLevel level,
                                   std::size_t reps, std::uint64_t seed) {
  if (!(p_true >= 0.0 && p_true <= 1.0))
    throw InputError("true probability must lie in [0,1], got " + std::to_string(p_true));
  if (reps < 1) throw InputError("coverage needs at least one repetition");
  if (m < 1) throw InputError("ensemble size must be at least 1");

  std::vector<IntervalEstimate> table(m + 1);
  for (std::size_t c = 0; c <= m; ++c) table[c] = jeffreys_interval(c, m, level);

  CounterRng rng(seed);
  CoverageReport report{p_true, m, level.gamma(), reps, 0, 0.0};
  double width_sum = 0.0;
  for (std::size_t r = 0; r < reps; ++r) {
    std::size_t c = 0;
    for (std::size_t t = 0; t < m; ++t) c += rng.uniform() < p_true ? 1 : 0;
    const auto& est = table[c];
    if (est.p_lower <= p_true && p_true <= est.p_upper) ++report.hits;
    width_sum += est.width();
  }
  report.mean_width = width_sum / static_cast<double>(reps);
  return report;
}

}  // namespace cpci
