#include "critical.hpp"

#include <string>

#include "errors.hpp"

namespace cpci {

const char* short_name(CriticalType t) noexcept {
  switch (t) {
    case CriticalType::Minimum: return "min";
    case CriticalType::Maximum: return "max";
    case CriticalType::Saddle: return "saddle";
    case CriticalType::Regular: return "regular";
  }
  return "regular";
}

Ordering compare_vertices(const ScalarField& field, const GridTopology& topo, VertexIndex u,
                          VertexIndex v) {
  return compare_vertices(field.values(), linear_index(topo, u), linear_index(topo, v));
}

CriticalType classify_signs(std::span<const bool> higher, bool closed) noexcept {
  const std::size_t n = higher.size();
  std::size_t n_higher = 0;
  for (bool h : higher) n_higher += h ? 1 : 0;
  if (n_higher == n) return CriticalType::Minimum;
  if (n_higher == 0) return CriticalType::Maximum;

  std::size_t changes = 0;
  for (std::size_t k = 1; k < n; ++k) changes += higher[k] != higher[k - 1] ? 1 : 0;
  // A cyclic link has as many runs as sign changes around the cycle; a path
  // has one more run than internal changes.
  std::size_t runs = closed ? changes + (higher[n - 1] != higher[0] ? 1 : 0) : changes + 1;
  return runs > 2 ? CriticalType::Saddle : CriticalType::Regular;
}

namespace {

CriticalType classify_at(std::span<const double> field, std::span<const std::size_t> nbrs,
                         bool closed, std::size_t v) {
  bool signs[6];
  for (std::size_t k = 0; k < nbrs.size(); ++k)
    signs[k] = compare_vertices(field, nbrs[k], v) == Ordering::Greater;
  return classify_signs(std::span<const bool>(signs, nbrs.size()), closed);
}

}  // namespace

CriticalType classify_vertex(const ScalarField& field, const GridTopology& topo,
                             const VertexLink& link, VertexIndex v) {
  if (field.size() != topo.vertex_count()) throw InputError("field size does not match grid");
  std::vector<std::size_t> nbrs;
  nbrs.reserve(link.neighbors.size());
  for (auto u : link.neighbors) nbrs.push_back(linear_index(topo, u));
  return classify_at(field.values(), nbrs, link.closed, linear_index(topo, v));
}

std::vector<CriticalType> classify_field(std::span<const double> field, const LinkTable& links) {
  const auto n = links.topology().vertex_count();
  if (field.size() != n)
    throw InputError("field has " + std::to_string(field.size()) + " values, grid has " +
                     std::to_string(n));
  std::vector<CriticalType> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = classify_at(field, links.neighbors(v), links.closed(v), v);
  return out;
}

std::vector<CriticalType> classify_field(const ScalarField& field, const GridTopology& topo) {
  return classify_field(field.values(), LinkTable(topo));
}

void accumulate_counts(std::span<const CriticalType> types, std::span<TypeCounts> counts) {
  for (std::size_t v = 0; v < types.size(); ++v) {
    auto& c = counts[v];
    switch (types[v]) {
      case CriticalType::Minimum: ++c.c_min; break;
      case CriticalType::Maximum: ++c.c_max; break;
      case CriticalType::Saddle: ++c.c_saddle; break;
      case CriticalType::Regular: break;
    }
    ++c.m;
  }
}

std::vector<TypeCounts> count_types(const Ensemble& e) {
  LinkTable links(e.topology());
  std::vector<TypeCounts> counts(e.topology().vertex_count());
  for (const auto& f : e.members()) accumulate_counts(classify_field(f.values(), links), counts);
  return counts;
}

}  // namespace cpci
