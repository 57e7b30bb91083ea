#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "grid.hpp"
#include "stats.hpp"

namespace cpci {

/// Multivariate normal model N(mean, F F^T) with F stored as r columns of
/// length n = nx*ny. The n x n covariance is never formed.
class MomentModel {
 public:
  MomentModel(GridTopology topo, std::vector<double> mean, std::vector<double> factor_columns,
              std::size_t rank);

  const GridTopology& topology() const noexcept { return topo_; }
  std::size_t rank() const noexcept { return rank_; }
  std::span<const double> mean() const noexcept { return mean_; }
  std::span<const double> factor_column(std::size_t k) const {
    return {factor_.data() + k * mean_.size(), mean_.size()};
  }
  /// (F F^T)_{uv}
  double covariance(std::size_t u, std::size_t v) const;

  /// mean + F z for a vector z of `rank()` coefficients.
  void draw_into(std::span<const double> z, std::span<double> out) const;

  friend bool operator==(const MomentModel&, const MomentModel&) = default;

 private:
  GridTopology topo_;
  std::vector<double> mean_;
  std::vector<double> factor_;
  std::size_t rank_;
};

/// Sample mean and the centred data scaled by 1/sqrt(m-1), so that F F^T is
/// the unbiased sample covariance. Needs m >= 2.
MomentModel estimate_moments(const Ensemble& e);

/// Member k is mean + F z_k, z_k drawn from the substream (seed, k).
Ensemble sample_ensemble(const MomentModel& model, std::size_t m_out, std::uint64_t seed);
ScalarField sample_member(const MomentModel& model, std::uint64_t seed, std::size_t index);

/// Monte-Carlo occurrence probabilities from `n_draws` members of the model.
std::vector<TypeCounts> ground_truth_counts(const MomentModel& model, std::size_t n_draws,
                                            std::uint64_t seed);
std::vector<ProbabilitySummary> ground_truth_probabilities(const MomentModel& model,
                                                           std::size_t n_draws, std::uint64_t seed,
                                                           ConfidenceLevel level = ConfidenceLevel());

/// Collapses every interval onto its point estimate (lo = hat = hi), the
/// degenerate form used for ground-truth glyphs.
std::vector<ProbabilitySummary> collapse_to_point(std::span<const ProbabilitySummary> summaries);

MomentModel load_model(std::istream& in);
void save_model(const MomentModel& model, std::ostream& out);

}  // namespace cpci
