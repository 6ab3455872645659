#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "movcone/cone_atlas.hpp"
#include "movcone/symmetric_case.hpp"

// SVG rendering of the sum-one affine chart for m = 3. The simplex spanned
// by H_1, H_2, H_3 is equilateral around the canvas centre; everything else
// is clipped to the viewport.

namespace movcone::svg {

struct RenderConfig {
  int depth = 3;
  std::array<double, 4> viewport{0, 0, 600, 600};  // x, y, width, height
  std::string fundamental_fill = "#d62728";
  std::string nef_fill = "#1f77b4";
  std::string orbit_fill = "#7f7f7f";
  std::string stroke = "#202020";
  bool labels = false;
};

/// "%.12g" with "-0" folded into "0".
inline std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

struct Point {
  double x = 0;
  double y = 0;
};

inline constexpr double kCanvas = 600;
inline constexpr double kCircumradius = 220;

/// Canvas position of the simplex vertex H_k, k = 0, 1, 2.
inline Point simplex_vertex(int k) {
  const double pi = std::acos(-1.0);
  const double angle = pi / 2 + 2 * pi * k / 3;
  return {kCanvas / 2 + kCircumradius * std::cos(angle), kCanvas / 2 - kCircumradius * std::sin(angle)};
}

/// Barycentric to cartesian; the coordinates are normalized to sum one first.
inline Point chart_point(const std::array<double, 3>& bary) {
  Point p;
  for (int k = 0; k < 3; ++k) {
    const Point v = simplex_vertex(k);
    p.x += bary[k] * v.x;
    p.y += bary[k] * v.y;
  }
  return p;
}

inline Point chart_point(const IntVec& v) {
  const Vec<Rational> p = project_affine(to_rational(v));
  return chart_point(std::array<double, 3>{p[0].convert_to<double>(), p[1].convert_to<double>(), p[2].convert_to<double>()});
}

inline Point chart_point(const Vec<QuadExt>& v) {
  const Vec<QuadExt> p = project_affine(v);
  return chart_point(std::array<double, 3>{p[0].to_double(), p[1].to_double(), p[2].to_double()});
}

inline void require_rank3(int m, const char* what) {
  if (m != 3) throw ParameterError(std::string(what) + ": svg output needs m = 3");
}

class Document {
 public:
  explicit Document(const RenderConfig& cfg) : cfg_(cfg) {
    const auto& v = cfg.viewport;
    for (double x : v)
      if (!std::isfinite(x)) throw ParameterError("viewport must be finite");
    if (v[2] <= 0 || v[3] <= 0) throw ParameterError("viewport width and height must be positive");
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(v[2]) + "\" height=\"" +
            num(v[3]) + "\" viewBox=\"" + num(v[0]) + " " + num(v[1]) + " " + num(v[2]) + " " + num(v[3]) + "\">\n";
    out_ += "<defs><clipPath id=\"viewport\"><rect x=\"" + num(v[0]) + "\" y=\"" + num(v[1]) + "\" width=\"" +
            num(v[2]) + "\" height=\"" + num(v[3]) + "\"/></clipPath></defs>\n";
    out_ += "<rect x=\"" + num(v[0]) + "\" y=\"" + num(v[1]) + "\" width=\"" + num(v[2]) + "\" height=\"" + num(v[3]) +
            "\" fill=\"#ffffff\"/>\n";
    out_ += "<g clip-path=\"url(#viewport)\">\n";
  }

  void polygon(const std::vector<Point>& pts, const std::string& fill, double opacity, const std::string& extra = "") {
    out_ += "<polygon points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) out_ += (k ? " " : "") + num(pts[k].x) + "," + num(pts[k].y);
    out_ += "\" fill=\"" + fill + "\" fill-opacity=\"" + num(opacity) + "\" stroke=\"" + cfg_.stroke +
            "\" stroke-width=\"0.5\"" + extra + "/>\n";
  }

  void segment(Point a, Point b, const std::string& colour, double width, bool dashed = false) {
    out_ += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) +
            "\" stroke=\"" + colour + "\" stroke-width=\"" + num(width) + "\"" +
            (dashed ? " stroke-dasharray=\"4,3\"" : "") + "/>\n";
  }

  void dot(Point p, double r, const std::string& fill) {
    out_ += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + num(r) + "\" fill=\"" + fill + "\"/>\n";
  }

  void circle(Point c, double r, const std::string& colour) {
    out_ += "<circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" + num(r) + "\" fill=\"none\" stroke=\"" +
            colour + "\" stroke-width=\"1.2\"/>\n";
  }

  void label(Point p, const std::string& text) {
    if (!cfg_.labels) return;
    out_ += "<text x=\"" + num(p.x + 4) + "\" y=\"" + num(p.y - 4) + "\" font-family=\"sans-serif\" font-size=\"11\">" +
            text + "</text>\n";
  }

  std::string finish() {
    out_ += "</g>\n</svg>\n";
    return std::move(out_);
  }

 private:
  const RenderConfig& cfg_;
  std::string out_;
};

/// Fill opacity for an orbit cone at word length `depth`.
inline double depth_opacity(std::size_t depth) { return 0.85 / (1.0 + static_cast<double>(depth)); }

/// The conic {Qhat = 0} in the chart. Qhat commutes with all permutations,
/// so the conic is a circle around the centroid.
inline void draw_conic(Document& doc, const RatMatrix& qhat) {
  const Vec<Rational> c{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  const Vec<Rational> u{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)};  // centroid to H_1
  const Rational ratio = -quadratic_form(qhat, c) / quadratic_form(qhat, u);
  if (ratio <= 0) return;
  doc.circle({kCanvas / 2, kCanvas / 2}, std::sqrt(ratio.convert_to<double>()) * kCircumradius, "#000000");
}

inline std::string render_chambers(const CoxeterSystem& sys, const std::vector<Chamber>& chambers,
                                   const RenderConfig& cfg) {
  require_rank3(sys.m(), "chambers");
  Document doc(cfg);
  for (const auto& ch : chambers) {
    std::vector<Point> pts;
    for (const auto& r : ch.rays) pts.push_back(chart_point(r));
    const std::size_t len = ch.word.length();
    if (len == 0)
      doc.polygon(pts, cfg.nef_fill, 0.85);
    else if (len == 1)
      doc.polygon(pts, cfg.fundamental_fill, 0.85);
    else
      doc.polygon(pts, cfg.orbit_fill, depth_opacity(len));
  }
  if (sys.has_quadric()) draw_conic(doc, sys.quadric());
  for (int k = 0; k < 3; ++k) {
    IntVec e(3, BigInt(0));
    e[k] = 1;
    doc.label(chart_point(e), "H" + std::to_string(k + 1));
  }
  return doc.finish();
}

inline std::string render_boundary(const CoxeterSystem& sys, const std::vector<BoundaryPatch>& patches,
                                   const RenderConfig& cfg) {
  require_rank3(sys.m(), "boundary");
  Document doc(cfg);
  if (sys.has_quadric()) draw_conic(doc, sys.quadric());
  for (const auto& p : patches) {
    const Point base = chart_point(p.base_rays.front());
    const bool zero_apex = std::all_of(p.apex.begin(), p.apex.end(), [](const QuadExt& x) { return x.is_zero(); });
    if (zero_apex) {
      doc.dot(base, 2.5, cfg.nef_fill);
      continue;
    }
    const Point apex = chart_point(p.apex);
    doc.segment(apex, base, cfg.fundamental_fill, 1.0);
    doc.dot(apex, 1.5, cfg.stroke);
  }
  return doc.finish();
}

inline std::string render_symmetric_movable(const std::vector<symmetric::SymCone>& cones, const RenderConfig& cfg) {
  Document doc(cfg);
  for (const auto& c : cones) {
    std::vector<Point> pts;
    for (const auto& r : c.rays) pts.push_back(chart_point(r));
    const std::size_t len = c.word.length();
    doc.polygon(pts, len == 0 ? cfg.fundamental_fill : cfg.orbit_fill, len == 0 ? 0.85 : depth_opacity(len));
  }
  draw_conic(doc, symmetric::general_system().quadric());
  return doc.finish();
}

inline std::string render_psef(const std::vector<symmetric::PsefPatch>& patches, const RenderConfig& cfg) {
  Document doc(cfg);
  for (const auto& p : patches) {
    if (p.kind != symmetric::PsefKind::glued_cone) continue;
    std::vector<Point> pts;
    for (const auto& v : p.vertices) pts.push_back(chart_point(v));
    doc.polygon(pts, cfg.orbit_fill, 0.25, " stroke-dasharray=\"4,3\"");
  }
  draw_conic(doc, symmetric::general_system().quadric());
  for (const auto& p : patches) {
    if (p.kind != symmetric::PsefKind::segment) continue;
    doc.segment(chart_point(p.vertices[0]), chart_point(p.vertices[1]), cfg.fundamental_fill, 1.2);
  }
  const symmetric::DClasses dc = symmetric::d_classes();
  doc.dot(chart_point(dc.d1), 2.5, cfg.stroke);
  doc.dot(chart_point(dc.d2), 2.5, cfg.stroke);
  doc.label(chart_point(dc.d1), "D1");
  doc.label(chart_point(dc.d2), "D2");
  return doc.finish();
}

}  // namespace movcone::svg
