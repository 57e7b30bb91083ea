#pragma once

#include <array>
#include <span>
#include <string>

#include "stats.hpp"
#include "tables.hpp"

namespace cpci {

struct ShadePair {
  std::string light;
  std::string dark;
};

/// Glyph appearance. Shades are indexed by type_slot().
struct GlyphStyle {
  double r_max = 10.0;  // radius at p = 1
  double cell = 24.0;   // spacing between grid vertices
  double arc_stroke = 1.5;
  double margin = 16.0;
  std::array<ShadePair, 3> shades{{
      {"#B6CDF4", "#2B5AC0"},  // minimum
      {"#F4B6B6", "#C0392B"},  // maximum
      {"#BCE4BC", "#2E8B40"},  // saddle
  }};

  /// Throws InputError when r_max > cell/2 or a colour is not #RRGGBB.
  void validate() const;
};

struct SectorGeometry {
  double start_deg = 0.0;  // counterclockwise from +x
  double end_deg = 0.0;
  double radius_hat = 0.0;
  double radius_lower = 0.0;
  double radius_upper = 0.0;
};

/// Angular span of each type's 120 degree sector: maximum [90,210),
/// minimum [210,330), saddle [330,450).
std::array<double, 2> sector_span(CriticalType t) noexcept;

/// r_max * sqrt(p), so the area of a sector is proportional to p.
double glyph_radius(double p, double r_max);

SectorGeometry glyph_geometry(const IntervalEstimate& est, CriticalType t, double r_max);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Paths for one vertex: per type a light sector (upper), a dark sector
/// (lower) and a black arc (estimate), skipping zero radii.
std::string render_glyph(const ProbabilitySummary& s, const GlyphStyle& style, Point center);

/// Complete SVG 1.1 document: one `<g data-vertex="i,j">` per vertex and a
/// `<g id="legend">` key.
std::string render_map(const SummaryTable& table, const GlyphStyle& style);

}  // namespace cpci
