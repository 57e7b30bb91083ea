#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "grid.hpp"

namespace cpci {

enum class CriticalType { Minimum, Maximum, Saddle, Regular };

const char* short_name(CriticalType t) noexcept;  // "min", "max", "saddle", "regular"

struct TypeCounts {
  std::size_t c_min = 0;
  std::size_t c_max = 0;
  std::size_t c_saddle = 0;
  std::size_t m = 0;

  friend bool operator==(const TypeCounts&, const TypeCounts&) = default;
};

enum class Ordering { Less, Greater };

/// Strict total order on vertices: by value, ties broken by linear index
/// (simulation of simplicity). Precondition: u != v.
inline Ordering compare_vertices(std::span<const double> field, std::size_t u, std::size_t v) noexcept {
  if (field[u] < field[v]) return Ordering::Less;
  if (field[u] > field[v]) return Ordering::Greater;
  return u < v ? Ordering::Less : Ordering::Greater;
}

Ordering compare_vertices(const ScalarField& field, const GridTopology& topo, VertexIndex u,
                          VertexIndex v);

/// Classifies a link from its Higher(true)/Lower(false) signs in link order.
/// Minimum if all higher, maximum if all lower, saddle if there are more than
/// two constant-sign runs.
CriticalType classify_signs(std::span<const bool> higher, bool closed) noexcept;

CriticalType classify_vertex(const ScalarField& field, const GridTopology& topo,
                             const VertexLink& link, VertexIndex v);

std::vector<CriticalType> classify_field(std::span<const double> field, const LinkTable& links);
std::vector<CriticalType> classify_field(const ScalarField& field, const GridTopology& topo);

/// Adds one member's classification into running per-vertex counts.
void accumulate_counts(std::span<const CriticalType> types, std::span<TypeCounts> counts);

std::vector<TypeCounts> count_types(const Ensemble& e);

}  // namespace cpci
