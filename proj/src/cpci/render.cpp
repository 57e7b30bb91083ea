#include "render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "errors.hpp"
#include "textio.hpp"

namespace cpci {

namespace {

constexpr CriticalType kPaintTypes[3] = {CriticalType::Maximum, CriticalType::Minimum,
                                         CriticalType::Saddle};

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  return textio::format_g(v, 10);
}

bool is_hex_colour(const std::string& c) {
  if (c.size() != 7 || c[0] != '#') return false;
  for (std::size_t k = 1; k < 7; ++k)
    if (!std::isxdigit(static_cast<unsigned char>(c[k]))) return false;
  return true;
}

Point polar(Point c, double r, double deg) {
  const double rad = deg * std::numbers::pi / 180.0;
  // SVG y grows downward; angles are counterclockwise on screen.
  return {c.x + r * std::cos(rad), c.y - r * std::sin(rad)};
}

// Sweep flag 0 draws the arc counterclockwise on screen.
std::string sector_path(Point c, double r, double a0, double a1) {
  auto p0 = polar(c, r, a0);
  auto p1 = polar(c, r, a1);
  return "M " + num(c.x) + " " + num(c.y) + " L " + num(p0.x) + " " + num(p0.y) + " A " + num(r) +
         " " + num(r) + " 0 0 0 " + num(p1.x) + " " + num(p1.y) + " Z";
}

std::string arc_path(Point c, double r, double a0, double a1) {
  auto p0 = polar(c, r, a0);
  auto p1 = polar(c, r, a1);
  return "M " + num(p0.x) + " " + num(p0.y) + " A " + num(r) + " " + num(r) + " 0 0 0 " +
         num(p1.x) + " " + num(p1.y);
}

}  // namespace

void GlyphStyle::validate() const {
  if (!(r_max > 0.0) || !(cell > 0.0))
    throw InputError("glyph radius and cell size must be positive");
  if (r_max > cell / 2.0)
    throw InputError("glyph radius " + num(r_max) + " exceeds half the cell size " + num(cell / 2.0));
  if (!(arc_stroke >= 0.0) || !(margin >= 0.0))
    throw InputError("stroke width and margin must be non-negative");
  for (const auto& s : shades)
    if (!is_hex_colour(s.light) || !is_hex_colour(s.dark))
      throw InputError("colours must be 6-digit hex (#RRGGBB)");
}

std::array<double, 2> sector_span(CriticalType t) noexcept {
  switch (t) {
    case CriticalType::Maximum: return {90.0, 210.0};
    case CriticalType::Minimum: return {210.0, 330.0};
    case CriticalType::Saddle: return {330.0, 450.0};
    case CriticalType::Regular: break;
  }
  return {0.0, 0.0};
}

double glyph_radius(double p, double r_max) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0,1], got " + num(p));
  return r_max * std::sqrt(p);
}

SectorGeometry glyph_geometry(const IntervalEstimate& est, CriticalType t, double r_max) {
  auto span = sector_span(t);
  return {span[0], span[1], glyph_radius(est.p_hat, r_max), glyph_radius(est.p_lower, r_max),
          glyph_radius(est.p_upper, r_max)};
}

std::string render_glyph(const ProbabilitySummary& s, const GlyphStyle& style, Point center) {
  std::string out;
  for (auto t : kPaintTypes) {
    const auto slot = type_slot(t);
    const auto g = glyph_geometry(s.by_type[slot], t, style.r_max);
    const auto& shade = style.shades[slot];
    const std::string tag = short_name(t);
    if (g.radius_upper > 0.0)
      out += "<path class=\"" + tag + "-upper\" d=\"" +
             sector_path(center, g.radius_upper, g.start_deg, g.end_deg) + "\" fill=\"" +
             shade.light + "\"/>\n";
    if (g.radius_lower > 0.0)
      out += "<path class=\"" + tag + "-lower\" d=\"" +
             sector_path(center, g.radius_lower, g.start_deg, g.end_deg) + "\" fill=\"" +
             shade.dark + "\"/>\n";
    if (g.radius_hat > 0.0)
      out += "<path class=\"" + tag + "-hat\" d=\"" +
             arc_path(center, g.radius_hat, g.start_deg, g.end_deg) +
             "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" + num(style.arc_stroke) + "\"/>\n";
  }
  return out;
}

namespace {

std::string render_legend(const GlyphStyle& style, Point origin, double* height) {
  const double r = style.r_max;
  const double row = 2.0 * r + 12.0;
  std::ostringstream os;
  os << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"" << num(std::max(8.0, r)) << "\">\n";
  // Type key: one full light sector per type.
  Point key{origin.x + r, origin.y + r};
  for (auto t : kPaintTypes) {
    auto span = sector_span(t);
    os << "<path d=\"" << sector_path(key, r, span[0], span[1]) << "\" fill=\""
       << style.shades[type_slot(t)].light << "\"/>\n";
  }
  os << "<text x=\"" << num(key.x + r + 6.0) << "\" y=\"" << num(key.y - r / 2.0) << "\">max</text>\n";
  os << "<text x=\"" << num(key.x + r + 6.0) << "\" y=\"" << num(key.y + r) << "\">min</text>\n";
  os << "<text x=\"" << num(key.x + r + 6.0) << "\" y=\"" << num(key.y + r / 4.0) << "\">saddle</text>\n";
  // Size key.
  static constexpr double kLevels[4] = {0.25, 0.5, 0.75, 1.0};
  static constexpr const char* kLabels[4] = {"25%", "50%", "75%", "100%"};
  for (int k = 0; k < 4; ++k) {
    Point c{origin.x + r, origin.y + row * (k + 1) + r};
    os << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\""
       << num(glyph_radius(kLevels[k], r)) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
       << num(style.arc_stroke) << "\"/>\n";
    os << "<text x=\"" << num(c.x + r + 6.0) << "\" y=\"" << num(c.y + r / 3.0) << "\">" << kLabels[k]
       << "</text>\n";
  }
  os << "</g>\n";
  *height = row * 5.0;
  return os.str();
}

}  // namespace

std::string render_map(const SummaryTable& table, const GlyphStyle& style) {
  style.validate();
  if (table.nx == 0 || table.ny == 0 || table.rows.size() != table.nx * table.ny)
    throw InputError("summaries must cover every vertex of the grid");

  const double map_w = 2.0 * style.margin + static_cast<double>(table.nx - 1) * style.cell;
  const double map_h = 2.0 * style.margin + static_cast<double>(table.ny - 1) * style.cell;
  double legend_h = 0.0;
  const std::string legend =
      render_legend(style, {map_w, style.margin}, &legend_h);
  const double width = map_w + 2.0 * style.r_max + 60.0;
  const double height = std::max(map_h, legend_h + 2.0 * style.margin);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"#FFFFFF\"/>\n";
  out += "<g id=\"glyphs\">\n";
  for (std::size_t j = 0; j < table.ny; ++j) {
    for (std::size_t i = 0; i < table.nx; ++i) {
      Point c{style.margin + static_cast<double>(i) * style.cell,
              style.margin + static_cast<double>(table.ny - 1 - j) * style.cell};
      out += "<g data-vertex=\"" + std::to_string(i) + "," + std::to_string(j) + "\">\n";
      out += render_glyph(table.at(i, j), style, c);
      out += "</g>\n";
    }
  }
  out += "</g>\n";
  out += legend;
  out += "</svg>\n";
  return out;
}

}  // namespace cpci
