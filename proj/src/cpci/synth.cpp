#include "synth.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "critical.hpp"
#include "errors.hpp"
#include "random.hpp"
#include "textio.hpp"

namespace cpci {

MomentModel::MomentModel(GridTopology topo, std::vector<double> mean,
                         std::vector<double> factor_columns, std::size_t rank)
    : topo_(topo), mean_(std::move(mean)), factor_(std::move(factor_columns)), rank_(rank) {
  if (mean_.size() != topo_.vertex_count()) throw InputError("mean length does not match grid");
  if (rank_ < 1) throw InputError("factor needs at least one column");
  if (factor_.size() != rank_ * mean_.size())
    throw InputError("factor size does not match rank x vertex count");
}

double MomentModel::covariance(std::size_t u, std::size_t v) const {
  double s = 0.0;
  for (std::size_t k = 0; k < rank_; ++k) {
    auto col = factor_column(k);
    s += col[u] * col[v];
  }
  return s;
}

void MomentModel::draw_into(std::span<const double> z, std::span<double> out) const {
  const std::size_t n = mean_.size();
  for (std::size_t v = 0; v < n; ++v) out[v] = 0.0;
  for (std::size_t k = 0; k < rank_; ++k) {
    const double zk = z[k];
    const double* col = factor_.data() + k * n;
    for (std::size_t v = 0; v < n; ++v) out[v] += col[v] * zk;
  }
  for (std::size_t v = 0; v < n; ++v) out[v] += mean_[v];
}

MomentModel estimate_moments(const Ensemble& e) {
  const std::size_t m = e.size();
  if (m < 2) throw InputError("moment estimation needs at least 2 members, got " + std::to_string(m));
  const std::size_t n = e.topology().vertex_count();

  std::vector<double> mean(n, 0.0);
  for (const auto& f : e.members())
    for (std::size_t v = 0; v < n; ++v) mean[v] += f[v];
  for (auto& x : mean) x /= static_cast<double>(m);

  const double scale = 1.0 / std::sqrt(static_cast<double>(m - 1));
  std::vector<double> factor(n * m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& f = e.member(k);
    for (std::size_t v = 0; v < n; ++v) factor[k * n + v] = (f[v] - mean[v]) * scale;
  }
  return MomentModel(e.topology(), std::move(mean), std::move(factor), m);
}

namespace {

void draw_member(const MomentModel& model, std::uint64_t seed, std::size_t index,
                 std::vector<double>& z, std::span<double> out) {
  NormalSource normals(CounterRng(seed, index));
  for (auto& x : z) x = normals.next();
  model.draw_into(z, out);
}

}  // namespace

ScalarField sample_member(const MomentModel& model, std::uint64_t seed, std::size_t index) {
  std::vector<double> z(model.rank());
  std::vector<double> values(model.mean().size());
  draw_member(model, seed, index, z, values);
  return ScalarField(std::move(values));
}

Ensemble sample_ensemble(const MomentModel& model, std::size_t m_out, std::uint64_t seed) {
  if (m_out < 1) throw InputError("sample size must be at least 1");
  std::vector<ScalarField> members;
  members.reserve(m_out);
  for (std::size_t k = 0; k < m_out; ++k) members.push_back(sample_member(model, seed, k));
  return Ensemble(model.topology(), std::move(members));
}

std::vector<TypeCounts> ground_truth_counts(const MomentModel& model, std::size_t n_draws,
                                            std::uint64_t seed) {
  if (n_draws < 1) throw InputError("ground truth needs at least one draw");
  LinkTable links(model.topology());
  const std::size_t n = model.mean().size();
  std::vector<TypeCounts> counts(n);
  std::vector<double> z(model.rank());
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n_draws; ++k) {
    draw_member(model, seed, k, z, values);
    accumulate_counts(classify_field(values, links), counts);
  }
  return counts;
}

std::vector<ProbabilitySummary> ground_truth_probabilities(const MomentModel& model,
                                                           std::size_t n_draws, std::uint64_t seed,
                                                           ConfidenceLevel level) {
  return summarize(ground_truth_counts(model, n_draws, seed), level);
}

std::vector<ProbabilitySummary> collapse_to_point(std::span<const ProbabilitySummary> summaries) {
  std::vector<ProbabilitySummary> out(summaries.begin(), summaries.end());
  for (auto& s : out)
    for (auto& est : s.by_type) est.p_lower = est.p_upper = est.p_hat;
  return out;
}

namespace {

void read_block(textio::LineReader& reader, const GridTopology& topo, const std::string& what,
                std::vector<double>& dst) {
  for (std::size_t j = 0; j < topo.ny(); ++j) {
    auto line = reader.next_content();
    if (!line) throw ParseError(reader.line() + 1, "unexpected end of file in " + what);
    auto row = textio::split_ws(*line);
    if (row.size() != topo.nx())
      throw ParseError(reader.line(), "expected " + std::to_string(topo.nx()) + " values, found " +
                                          std::to_string(row.size()));
    for (auto tok : row) {
      auto v = textio::parse_real(tok);
      if (!v) throw ParseError(reader.line(), "invalid or non-finite value '" + std::string(tok) + "'");
      dst.push_back(*v);
    }
  }
}

void write_block(std::ostream& out, const GridTopology& topo, std::span<const double> values) {
  for (std::size_t j = 0; j < topo.ny(); ++j) {
    for (std::size_t i = 0; i < topo.nx(); ++i) {
      if (i) out << ' ';
      out << textio::format_g(values[j * topo.nx() + i], 17);
    }
    out << '\n';
  }
}

}  // namespace

MomentModel load_model(std::istream& in) {
  textio::LineReader reader(in);
  auto magic = reader.next_raw();
  if (!magic || *magic != "MMF1") throw ParseError(1, "expected magic line 'MMF1'");
  auto header = reader.next_content();
  if (!header) throw ParseError(reader.line() + 1, "missing 'nx ny r' header");
  auto toks = textio::split_ws(*header);
  std::optional<std::size_t> nx, ny, r;
  if (toks.size() == 3) {
    nx = textio::parse_count(toks[0]);
    ny = textio::parse_count(toks[1]);
    r = textio::parse_count(toks[2]);
  }
  if (!nx || !ny || !r) throw ParseError(reader.line(), "header must be 'nx ny r'");
  if (*nx < 2 || *ny < 2) throw ParseError(reader.line(), "grid must be at least 2x2");
  if (*r < 1) throw ParseError(reader.line(), "factor rank must be at least 1");

  GridTopology topo(*nx, *ny);
  std::vector<double> mean;
  mean.reserve(topo.vertex_count());
  read_block(reader, topo, "mean block", mean);
  std::vector<double> factor;
  factor.reserve(*r * topo.vertex_count());
  for (std::size_t k = 0; k < *r; ++k) read_block(reader, topo, "factor column " + std::to_string(k), factor);
  if (reader.next_content()) throw ParseError(reader.line(), "trailing data after last factor column");
  return MomentModel(topo, std::move(mean), std::move(factor), *r);
}

void save_model(const MomentModel& model, std::ostream& out) {
  const auto& topo = model.topology();
  out << "MMF1\n" << topo.nx() << ' ' << topo.ny() << ' ' << model.rank() << '\n';
  write_block(out, topo, model.mean());
  for (std::size_t k = 0; k < model.rank(); ++k) write_block(out, topo, model.factor_column(k));
  if (!out) throw IoError("failed writing model");
}

}  // namespace cpci
