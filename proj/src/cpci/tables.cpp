#include "tables.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "errors.hpp"
#include "textio.hpp"

namespace cpci {

namespace {

constexpr const char* kSummaryHeader =
    "i,j,min_hat,min_lo,min_hi,max_hat,max_lo,max_hi,sad_hat,sad_lo,sad_hi";
constexpr int kDigits = 9;

// CSV column groups are min, max, saddle: the same order as type_slot().
constexpr const char* kTypeLabel[3] = {"min", "max", "saddle"};

}  // namespace

SummaryTable make_table(const GridTopology& topo, std::vector<ProbabilitySummary> rows) {
  if (rows.size() != topo.vertex_count()) throw InputError("summary count does not match grid");
  SummaryTable t;
  t.nx = topo.nx();
  t.ny = topo.ny();
  t.m = rows.front().m();
  t.gamma = rows.front().gamma;
  t.rows = std::move(rows);
  return t;
}

std::array<std::string, 9> format_row_values(const ProbabilitySummary& s) {
  std::array<std::string, 9> out;
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& e = s.by_type[t];
    out[3 * t] = textio::format_g(e.p_hat, kDigits);
    out[3 * t + 1] = textio::format_g(e.p_lower, kDigits);
    out[3 * t + 2] = textio::format_g(e.p_upper, kDigits);
  }
  return out;
}

void write_summary_csv(const SummaryTable& table, std::ostream& out) {
  out << "# m=" << table.m << " gamma=" << textio::format_g(table.gamma, kDigits) << '\n';
  out << kSummaryHeader << '\n';
  for (std::size_t j = 0; j < table.ny; ++j) {
    for (std::size_t i = 0; i < table.nx; ++i) {
      out << i << ',' << j;
      for (const auto& v : format_row_values(table.at(i, j))) out << ',' << v;
      out << '\n';
    }
  }
  if (!out) throw IoError("failed writing summary CSV");
}

SummaryTable read_summary_csv(std::istream& in) {
  textio::LineReader reader(in);
  SummaryTable t;
  bool have_meta = false;
  std::optional<std::string> line;
  // Metadata comment, then header.
  while ((line = reader.next_raw())) {
    if (line->empty()) continue;
    if ((*line)[0] == '#') {
      auto toks = textio::split_ws(std::string_view(*line).substr(1));
      std::optional<std::size_t> m;
      std::optional<double> gamma;
      for (auto tok : toks) {
        if (tok.starts_with("m=")) m = textio::parse_count(tok.substr(2));
        if (tok.starts_with("gamma=")) gamma = textio::parse_real(tok.substr(6));
      }
      if (m && gamma) {
        if (*m < 1) throw ParseError(reader.line(), "ensemble size must be at least 1");
        if (!(*gamma > 0.0 && *gamma < 1.0)) throw ParseError(reader.line(), "gamma must lie in (0,1)");
        t.m = *m;
        t.gamma = *gamma;
        have_meta = true;
      }
      continue;
    }
    break;
  }
  if (!line || *line != kSummaryHeader)
    throw ParseError(reader.line(), std::string("expected header '") + kSummaryHeader + "'");
  if (!have_meta) throw ParseError(reader.line(), "missing '# m=<m> gamma=<gamma>' metadata line");

  struct Row {
    std::size_t i, j;
    ProbabilitySummary s;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::size_t nx = 0, ny = 0;
  while ((line = reader.next_content())) {
    auto cells = textio::split_char(*line, ',');
    if (cells.size() != 11) throw ParseError(reader.line(), "expected 11 columns, found " + std::to_string(cells.size()));
    auto i = textio::parse_count(cells[0]);
    auto j = textio::parse_count(cells[1]);
    if (!i || !j) throw ParseError(reader.line(), "invalid vertex coordinates");
    Row r{*i, *j, {}, reader.line()};
    r.s.gamma = t.gamma;
    for (std::size_t k = 0; k < 9; ++k) {
      auto v = textio::parse_real(cells[k + 2]);
      if (!v || *v < 0.0 || *v > 1.0) throw ParseError(reader.line(), "invalid probability '" + std::string(cells[k + 2]) + "'");
      auto& e = r.s.by_type[k / 3];
      (k % 3 == 0 ? e.p_hat : k % 3 == 1 ? e.p_lower : e.p_upper) = *v;
    }
    for (auto& e : r.s.by_type) {
      if (e.p_lower > e.p_upper) throw ParseError(reader.line(), "lower bound exceeds upper bound");
      e.m = t.m;
      e.c = static_cast<std::size_t>(std::lround(e.p_hat * static_cast<double>(t.m)));
    }
    nx = std::max(nx, *i + 1);
    ny = std::max(ny, *j + 1);
    rows.push_back(r);
  }
  if (rows.empty()) throw ParseError(reader.line(), "summary has no rows");
  if (rows.size() != nx * ny)
    throw ParseError(reader.line(), "expected " + std::to_string(nx * ny) + " rows for a " +
                                        std::to_string(nx) + "x" + std::to_string(ny) + " grid, found " +
                                        std::to_string(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].j * nx + rows[k].i != k) throw ParseError(rows[k].line, "rows are not in row-major order");
    t.rows.push_back(rows[k].s);
  }
  t.nx = nx;
  t.ny = ny;
  return t;
}

std::string describe_vertex(const SummaryTable& table, std::size_t i, std::size_t j) {
  if (i >= table.nx || j >= table.ny)
    throw InputError("vertex (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range: valid i in [0," + std::to_string(table.nx - 1) +
                     "], j in [0," + std::to_string(table.ny - 1) + "]");
  auto vals = format_row_values(table.at(i, j));
  std::ostringstream os;
  os << "vertex (" << i << "," << j << ")  m=" << table.m
     << "  gamma=" << textio::format_g(table.gamma, kDigits) << '\n';
  for (std::size_t t = 0; t < 3; ++t) {
    os << kTypeLabel[t] << ": p_hat=" << vals[3 * t] << " p_lower=" << vals[3 * t + 1]
       << " p_upper=" << vals[3 * t + 2] << '\n';
  }
  return os.str();
}

void write_counts_csv(const GridTopology& topo, std::span<const TypeCounts> counts, std::ostream& out) {
  out << "i,j,c_min,c_max,c_saddle,m\n";
  for (std::size_t k = 0; k < counts.size(); ++k) {
    auto v = vertex_at(topo, k);
    const auto& c = counts[k];
    out << v.i << ',' << v.j << ',' << c.c_min << ',' << c.c_max << ',' << c.c_saddle << ',' << c.m << '\n';
  }
  if (!out) throw IoError("failed writing counts CSV");
}

void write_classification_csv(const GridTopology& topo, std::span<const CriticalType> types,
                              std::ostream& out) {
  out << "i,j,type\n";
  for (std::size_t k = 0; k < types.size(); ++k) {
    if (types[k] == CriticalType::Regular) continue;
    auto v = vertex_at(topo, k);
    out << v.i << ',' << v.j << ',' << short_name(types[k]) << '\n';
  }
  if (!out) throw IoError("failed writing classification CSV");
}

}  // namespace cpci
