#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "critical.hpp"

namespace cpci {

class ConfidenceLevel {
 public:
  /// Throws InputError unless 0 < gamma < 1.
  explicit ConfidenceLevel(double gamma = 0.95);

  double gamma() const noexcept { return gamma_; }
  double alpha() const noexcept { return 1.0 - gamma_; }

 private:
  double gamma_;
};

struct IntervalEstimate {
  double p_hat = 0.0;
  double p_lower = 0.0;
  double p_upper = 0.0;
  std::size_t c = 0;
  std::size_t m = 0;

  double width() const noexcept { return p_upper - p_lower; }
  friend bool operator==(const IntervalEstimate&, const IntervalEstimate&) = default;
};

/// The nine per-vertex values, indexed by type_slot().
struct ProbabilitySummary {
  std::array<IntervalEstimate, 3> by_type{};
  double gamma = 0.95;

  const IntervalEstimate& minimum() const noexcept { return by_type[0]; }
  const IntervalEstimate& maximum() const noexcept { return by_type[1]; }
  const IntervalEstimate& saddle() const noexcept { return by_type[2]; }
  std::size_t m() const noexcept { return by_type[0].m; }

  friend bool operator==(const ProbabilitySummary&, const ProbabilitySummary&) = default;
};

/// Slot of a critical type in ProbabilitySummary::by_type (Regular has none).
constexpr std::size_t type_slot(CriticalType t) noexcept { return static_cast<std::size_t>(t); }

double regularized_incomplete_beta(double x, double a, double b);
double beta_quantile(double q, double a, double b);

/// c / m. Throws InputError for m = 0 or c > m.
double point_estimate(std::size_t c, std::size_t m);

/// Equitailed Jeffreys interval from the Beta(c + 1/2, m - c + 1/2) posterior,
/// with lower := 0 when c = 0 and upper := 1 when c = m.
IntervalEstimate jeffreys_interval(std::size_t c, std::size_t m, ConfidenceLevel level);

ProbabilitySummary summarize(const TypeCounts& counts, ConfidenceLevel level);
std::vector<ProbabilitySummary> summarize(std::span<const TypeCounts> counts, ConfidenceLevel level);

struct CoverageReport {
  double p_true = 0.0;
  std::size_t m = 0;
  double gamma = 0.0;
  std::size_t reps = 0;
  std::size_t hits = 0;
  double mean_width = 0.0;

  double empirical_coverage() const noexcept {
    return static_cast<double>(hits) / static_cast<double>(reps);
  }
  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

/// Draws `reps` counts from Bin(m, p_true) and reports how often the Jeffreys
/// interval contains p_true. Deterministic in `seed`.
CoverageReport coverage_experiment(double p_true, std::size_t m, ConfidenceLevel level,
                                   std::size_t reps, std::uint64_t seed);

}  // namespace cpci
