#include "grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "errors.hpp"
#include "textio.hpp"

namespace cpci {

GridTopology::GridTopology(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {
  if (nx < 2 || ny < 2)
    throw InputError("grid needs at least 2x2 vertices, got " + std::to_string(nx) + "x" +
                     std::to_string(ny));
}

bool contains(const GridTopology& topo, VertexIndex v) noexcept {
  return v.i < topo.nx() && v.j < topo.ny();
}

namespace {

// Cyclic neighbour offsets for the (i,j)-(i+1,j+1) diagonal.
constexpr std::array<std::array<int, 2>, 6> kRing{{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};

}  // namespace

VertexLink build_link(const GridTopology& topo, VertexIndex v) {
  if (!contains(topo, v))
    throw InputError("vertex (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                     ") outside " + std::to_string(topo.nx()) + "x" + std::to_string(topo.ny()) +
                     " grid");

  std::array<bool, 6> present{};
  std::array<VertexIndex, 6> cand{};
  int count = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    long long i = static_cast<long long>(v.i) + kRing[k][0];
    long long j = static_cast<long long>(v.j) + kRing[k][1];
    present[k] = i >= 0 && j >= 0 && i < static_cast<long long>(topo.nx()) &&
                 j < static_cast<long long>(topo.ny());
    if (present[k]) {
      cand[k] = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
      ++count;
    }
  }

  VertexLink link;
  if (count == 6) {
    link.closed = true;
    link.neighbors.assign(cand.begin(), cand.end());
    return link;
  }

  // On a rectangle the missing offsets form one contiguous arc of the ring, so
  // the present ones form a path starting right after that arc.
  std::size_t start = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    if (present[k] && !present[(k + 5) % 6]) {
      start = k;
      break;
    }
  }
  for (std::size_t step = 0; step < 6; ++step) {
    std::size_t k = (start + step) % 6;
    if (!present[k]) break;
    link.neighbors.push_back(cand[k]);
  }
  // Orient the path so it begins at the endpoint with the smaller linear index.
  if (linear_index(topo, link.neighbors.back()) < linear_index(topo, link.neighbors.front()))
    std::reverse(link.neighbors.begin(), link.neighbors.end());
  return link;
}

LinkTable::LinkTable(const GridTopology& topo) : topo_(topo) {
  const std::size_t n = topo.vertex_count();
  offsets_.reserve(n + 1);
  closed_.reserve(n);
  flat_.reserve(2 * topo.edge_count());
  offsets_.push_back(0);
  for (std::size_t k = 0; k < n; ++k) {
    auto link = build_link(topo, vertex_at(topo, k));
    for (auto u : link.neighbors) flat_.push_back(linear_index(topo, u));
    offsets_.push_back(flat_.size());
    closed_.push_back(link.closed ? 1 : 0);
  }
}

ScalarField::ScalarField(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (!std::isfinite(values_[k]))
      throw InputError("non-finite field value at vertex " + std::to_string(k));
}

Ensemble::Ensemble(GridTopology topo, std::vector<ScalarField> members)
    : topo_(topo), members_(std::move(members)) {
  if (members_.empty()) throw InputError("ensemble needs at least one member");
  for (std::size_t k = 0; k < members_.size(); ++k)
    if (members_[k].size() != topo_.vertex_count())
      throw InputError("member " + std::to_string(k) + " has " +
                       std::to_string(members_[k].size()) + " values, grid has " +
                       std::to_string(topo_.vertex_count()));
}

Ensemble load_ensemble(std::istream& in) {
  textio::LineReader reader(in);
  auto magic = reader.next_raw();
  if (!magic || *magic != "EGF1") throw ParseError(1, "expected magic line 'EGF1'");

  auto header = reader.next_content();
  if (!header) throw ParseError(reader.line() + 1, "missing 'nx ny m' header");
  auto toks = textio::split_ws(*header);
  std::optional<std::size_t> nx, ny, m;
  if (toks.size() == 3) {
    nx = textio::parse_count(toks[0]);
    ny = textio::parse_count(toks[1]);
    m = textio::parse_count(toks[2]);
  }
  if (!nx || !ny || !m) throw ParseError(reader.line(), "header must be 'nx ny m'");
  if (*nx < 2 || *ny < 2) throw ParseError(reader.line(), "grid must be at least 2x2");
  if (*m < 1) throw ParseError(reader.line(), "ensemble size must be at least 1");

  GridTopology topo(*nx, *ny);
  std::vector<ScalarField> members;
  members.reserve(*m);
  for (std::size_t k = 0; k < *m; ++k) {
    std::vector<double> values;
    values.reserve(topo.vertex_count());
    for (std::size_t j = 0; j < *ny; ++j) {
      auto line = reader.next_content();
      if (!line)
        throw ParseError(reader.line() + 1, "unexpected end of file in member " +
                                                std::to_string(k) + ", row " + std::to_string(j));
      auto row = textio::split_ws(*line);
      if (row.size() != *nx)
        throw ParseError(reader.line(), "expected " + std::to_string(*nx) + " values, found " +
                                            std::to_string(row.size()));
      for (auto tok : row) {
        auto v = textio::parse_real(tok);
        if (!v) throw ParseError(reader.line(), "invalid or non-finite value '" + std::string(tok) + "'");
        values.push_back(*v);
      }
    }
    members.emplace_back(std::move(values));
  }
  if (reader.next_content()) throw ParseError(reader.line(), "trailing data after last member");
  return Ensemble(topo, std::move(members));
}

void save_ensemble(const Ensemble& e, std::ostream& out) {
  const auto& topo = e.topology();
  out << "EGF1\n" << topo.nx() << ' ' << topo.ny() << ' ' << e.size() << '\n';
  for (const auto& f : e.members()) {
    for (std::size_t j = 0; j < topo.ny(); ++j) {
      for (std::size_t i = 0; i < topo.nx(); ++i) {
        if (i) out << ' ';
        out << textio::format_g(f[j * topo.nx() + i], 17);
      }
      out << '\n';
    }
  }
  if (!out) throw IoError("failed writing ensemble");
}

}  // namespace cpci
