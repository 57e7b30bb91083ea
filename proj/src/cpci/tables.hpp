#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "critical.hpp"
#include "grid.hpp"
#include "stats.hpp"

namespace cpci {

/// Per-vertex summaries as carried by the summary CSV. The grid may be a
/// single row or column here, since rendering accepts such strips.
struct SummaryTable {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::size_t m = 0;
  double gamma = 0.95;
  std::vector<ProbabilitySummary> rows;  // row-major, j major

  const ProbabilitySummary& at(std::size_t i, std::size_t j) const { return rows.at(j * nx + i); }
};

SummaryTable make_table(const GridTopology& topo, std::vector<ProbabilitySummary> rows);

/// `i,j,min_hat,min_lo,min_hi,max_hat,max_lo,max_hi,sad_hat,sad_lo,sad_hi`,
/// preceded by a `# m=<m> gamma=<gamma>` comment. 9 significant digits, LF.
void write_summary_csv(const SummaryTable& table, std::ostream& out);
SummaryTable read_summary_csv(std::istream& in);

/// The nine values of one row formatted exactly as in the CSV.
std::array<std::string, 9> format_row_values(const ProbabilitySummary& s);

/// Human-readable listing of one vertex for the `query` command.
std::string describe_vertex(const SummaryTable& table, std::size_t i, std::size_t j);

/// `i,j,c_min,c_max,c_saddle,m`
void write_counts_csv(const GridTopology& topo, std::span<const TypeCounts> counts, std::ostream& out);

/// `i,j,type` for the non-regular vertices only.
void write_classification_csv(const GridTopology& topo, std::span<const CriticalType> types,
                              std::ostream& out);

}  // namespace cpci
