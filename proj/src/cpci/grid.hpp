#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace cpci {

/// Dimensions of the common 2D simplicial grid.
///
/// Every cell [i,i+1]x[j,j+1] is split along the diagonal (i,j)-(i+1,j+1),
/// which gives interior vertices six link neighbours.
class GridTopology {
 public:
  GridTopology(std::size_t nx, std::size_t ny);

  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  std::size_t vertex_count() const noexcept { return nx_ * ny_; }

  /// Number of triangulation edges (axis-aligned plus diagonals).
  std::size_t edge_count() const noexcept {
    return nx_ * (ny_ - 1) + ny_ * (nx_ - 1) + (nx_ - 1) * (ny_ - 1);
  }

  friend bool operator==(const GridTopology&, const GridTopology&) = default;

 private:
  std::size_t nx_;
  std::size_t ny_;
};

struct VertexIndex {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const VertexIndex&, const VertexIndex&) = default;
};

inline std::size_t linear_index(const GridTopology& topo, VertexIndex v) noexcept {
  return v.j * topo.nx() + v.i;
}

inline VertexIndex vertex_at(const GridTopology& topo, std::size_t linear) noexcept {
  return {linear % topo.nx(), linear / topo.nx()};
}

bool contains(const GridTopology& topo, VertexIndex v) noexcept;

/// Neighbours of a vertex in link order. Interior links are cyclic, boundary
/// links are open paths whose endpoints are not adjacent.
struct VertexLink {
  std::vector<VertexIndex> neighbors;
  bool closed = false;
};

/// Throws InputError when `v` lies outside the grid.
VertexLink build_link(const GridTopology& topo, VertexIndex v);

/// Links for every vertex, stored as linear indices.
class LinkTable {
 public:
  explicit LinkTable(const GridTopology& topo);

  std::span<const std::size_t> neighbors(std::size_t v) const {
    return {flat_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  bool closed(std::size_t v) const { return closed_[v] != 0; }
  const GridTopology& topology() const noexcept { return topo_; }

 private:
  GridTopology topo_;
  std::vector<std::size_t> flat_;
  std::vector<std::size_t> offsets_;
  std::vector<unsigned char> closed_;
};

/// Vertex values of one ensemble member, row-major with j major. All finite.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const noexcept { return values_[k]; }

  friend bool operator==(const ScalarField&, const ScalarField&) = default;

 private:
  std::vector<double> values_;
};

class Ensemble {
 public:
  Ensemble(GridTopology topo, std::vector<ScalarField> members);

  const GridTopology& topology() const noexcept { return topo_; }
  std::size_t size() const noexcept { return members_.size(); }
  const ScalarField& member(std::size_t k) const { return members_.at(k); }
  std::span<const ScalarField> members() const noexcept { return members_; }

  friend bool operator==(const Ensemble&, const Ensemble&) = default;

 private:
  GridTopology topo_;
  std::vector<ScalarField> members_;
};

/// Reads the EGF1 text format. Throws ParseError naming the line.
Ensemble load_ensemble(std::istream& in);
void save_ensemble(const Ensemble& e, std::ostream& out);

}  // namespace cpci
