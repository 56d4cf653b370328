#include "symnc/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "symnc/error.hpp"
#include "symnc/io.hpp"

namespace symnc {

namespace {

using nlohmann::json;

constexpr double kSvgScale = 200.0;
constexpr double kTikzScale = 4.0;

// Fixed two-decimal rendering with negative zero folded to zero.
std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

// Rounds away floating noise so JSON output is stable across platforms.
double tidy(double v) {
  double r = std::round(v * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

// Points scaled so the outermost one sits on the unit circle.
std::vector<Point> unit_layout(const std::vector<Point>& pts) {
  double radius = 0.0;
  for (const auto& p : pts) radius = std::max(radius, std::hypot(p.x, p.y));
  if (radius < kGeometryTolerance) radius = 1.0;
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back({p.x / radius, p.y / radius});
  return out;
}

std::string svg_x(Point p) { return fmt2(p.x * kSvgScale); }
std::string svg_y(Point p) { return fmt2(-p.y * kSvgScale); }
std::string tikz_at(Point p) { return "(" + fmt2(p.x) + "," + fmt2(p.y) + ")"; }

// Moves both ends of a segment inwards so arrowheads clear the vertex marks.
std::pair<Point, Point> shorten(Point a, Point b, double by) {
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  if (len <= 2 * by) return {a, b};
  const double ux = (b.x - a.x) / len;
  const double uy = (b.y - a.y) / len;
  return {{a.x + ux * by, a.y + uy * by}, {b.x - ux * by, b.y - uy * by}};
}

json vertices_json(const std::vector<IndexSet>& vertices, const std::vector<Point>& points,
                   const std::vector<bool>& frozen) {
  json out = json::array();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out.push_back({{"set", vertices[i].elements()},
                   {"x", tidy(points[i].x)},
                   {"y", tidy(points[i].y)},
                   {"frozen", static_cast<bool>(frozen[i])}});
  }
  return out;
}

std::string dot_nodes(const std::vector<IndexSet>& vertices, const std::vector<Point>& layout,
                      const std::vector<bool>& frozen) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out += "  \"" + vertices[i].key() + "\" [";
    if (frozen[i]) out += "shape=box, ";
    out += "pos=\"" + fmt2(layout[i].x * kTikzScale) + "," + fmt2(layout[i].y * kTikzScale) +
           "!\"];\n";
  }
  return out;
}

std::string svg_open() {
  const std::string half = fmt2(kSvgScale * 1.15);
  const std::string full = fmt2(kSvgScale * 2.3);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-" + half + " -" + half +
                    " " + full + " " + full + "\" width=\"" + full + "\" height=\"" + full +
                    "\" font-family=\"sans-serif\" font-size=\"7\">\n";
  out += "  <circle cx=\"0.00\" cy=\"0.00\" r=\"" + fmt2(kSvgScale) +
         "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  return out;
}

std::string svg_vertices(const std::vector<IndexSet>& vertices, const std::vector<Point>& layout,
                         const std::vector<bool>& frozen) {
  std::string out = "  <g class=\"vertices\">\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point p = layout[i];
    if (frozen[i]) {
      out += "    <rect class=\"vertex frozen\" x=\"" + fmt2(p.x * kSvgScale - 3) + "\" y=\"" +
             fmt2(-p.y * kSvgScale - 3) + "\" width=\"6.00\" height=\"6.00\" fill=\"white\" stroke=\"black\"/>\n";
    } else {
      out += "    <circle class=\"vertex\" cx=\"" + svg_x(p) + "\" cy=\"" + svg_y(p) +
             "\" r=\"3.00\" fill=\"black\"/>\n";
    }
    out += "    <text x=\"" + fmt2(p.x * kSvgScale + 4) + "\" y=\"" + fmt2(-p.y * kSvgScale - 4) +
           "\">" + vertices[i].key() + "</text>\n";
  }
  out += "  </g>\n";
  return out;
}

std::string tikz_vertices(const std::vector<IndexSet>& vertices, const std::vector<Point>& layout,
                          const std::vector<bool>& frozen) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out += std::string("  \\node[") + (frozen[i] ? "frozen" : "mutable") +
           ", label={[font=\\tiny]above right:" + vertices[i].key() + "}] (v" + std::to_string(i) +
           ") at " + tikz_at(layout[i]) + " {};\n";
  }
  return out;
}

std::string tikz_open() {
  std::string out = "\\begin{tikzpicture}[scale=" + fmt2(kTikzScale) +
                    ", mutable/.style={circle, fill, inner sep=1pt}, "
                    "frozen/.style={draw, rectangle, fill=white, inner sep=1.5pt}]\n";
  out += "  \\draw[gray!50, dashed] (0,0) circle (1);\n";
  return out;
}

std::string complex_dot(const EmbeddedComplex& cx) {
  const auto layout = unit_layout(cx.points);
  std::string out = "graph complex {\n";
  out += "  // n=" + std::to_string(cx.n) + " k=" + std::to_string(cx.k) + "\n";
  out += "  node [shape=ellipse];\n";
  out += dot_nodes(cx.vertices, layout, cx.frozen);
  for (const auto& e : cx.edges) {
    out += "  \"" + cx.vertices[e.a].key() + "\" -- \"" + cx.vertices[e.b].key() + "\";\n";
  }
  out += "}\n";
  return out;
}

std::string complex_json(const EmbeddedComplex& cx) {
  json doc;
  doc["format"] = 1;
  doc["kind"] = "complex";
  doc["n"] = cx.n;
  doc["k"] = cx.k;
  doc["vertices"] = vertices_json(cx.vertices, cx.points, cx.frozen);
  json edges = json::array();
  for (const auto& e : cx.edges) edges.push_back({e.a, e.b});
  doc["edges"] = std::move(edges);
  json faces = json::array();
  for (const auto& f : cx.faces) {
    faces.push_back({{"label", f.label.elements()},
                     {"colour", f.colour == FaceColour::Black ? "black" : "white"},
                     {"cycle", f.cycle},
                     {"sign", f.sign}});
  }
  doc["faces"] = std::move(faces);
  return pretty_json(doc);
}

std::string complex_svg(const EmbeddedComplex& cx) {
  const auto layout = unit_layout(cx.points);
  std::string out = svg_open();
  out += "  <g class=\"faces\">\n";
  for (const auto& f : cx.faces) {
    if (f.colour != FaceColour::Black) continue;
    out += "    <polygon points=\"";
    for (std::size_t i = 0; i < f.cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += svg_x(layout[f.cycle[i]]) + "," + svg_y(layout[f.cycle[i]]);
    }
    out += "\" fill=\"#d9d9d9\" stroke=\"none\"/>\n";
  }
  out += "  </g>\n  <g class=\"edges\" stroke=\"black\" stroke-width=\"0.80\">\n";
  for (const auto& e : cx.edges) {
    out += "    <line x1=\"" + svg_x(layout[e.a]) + "\" y1=\"" + svg_y(layout[e.a]) + "\" x2=\"" +
           svg_x(layout[e.b]) + "\" y2=\"" + svg_y(layout[e.b]) + "\"/>\n";
  }
  out += "  </g>\n";
  out += svg_vertices(cx.vertices, layout, cx.frozen);
  out += "</svg>\n";
  return out;
}

std::string complex_tikz(const EmbeddedComplex& cx) {
  const auto layout = unit_layout(cx.points);
  std::string out = tikz_open();
  for (const auto& f : cx.faces) {
    if (f.colour != FaceColour::Black) continue;
    out += "  \\fill[black!15] ";
    for (std::size_t v : f.cycle) out += tikz_at(layout[v]) + " -- ";
    out += "cycle;\n";
  }
  for (const auto& e : cx.edges) {
    out += "  \\draw " + tikz_at(layout[e.a]) + " -- " + tikz_at(layout[e.b]) + ";\n";
  }
  out += tikz_vertices(cx.vertices, layout, cx.frozen);
  out += "\\end{tikzpicture}\n";
  return out;
}

std::string quiver_dot(const QuiverWithPotential& qp) {
  const auto layout = unit_layout(qp.points);
  std::string out = "digraph quiver {\n";
  out += "  // n=" + std::to_string(qp.n) + " k=" + std::to_string(qp.k) + "\n";
  out += "  node [shape=ellipse];\n";
  out += dot_nodes(qp.vertices, layout, qp.frozen);
  for (const auto& a : qp.arrows) {
    out += "  \"" + qp.vertices[a.tail].key() + "\" -> \"" + qp.vertices[a.head].key() + "\";\n";
  }
  out += "}\n";
  return out;
}

std::string quiver_json(const QuiverWithPotential& qp) {
  json doc;
  doc["format"] = 1;
  doc["kind"] = "quiver";
  doc["n"] = qp.n;
  doc["k"] = qp.k;
  doc["vertices"] = vertices_json(qp.vertices, qp.points, qp.frozen);
  json arrows = json::array();
  for (const auto& a : qp.arrows) arrows.push_back({a.tail, a.head});
  doc["arrows"] = std::move(arrows);
  json potential = json::array();
  for (const auto& t : qp.potential) {
    potential.push_back({{"sign", t.sign}, {"label", t.label.elements()}, {"cycle", t.arrows}});
  }
  doc["potential"] = std::move(potential);
  return pretty_json(doc);
}

std::string quiver_svg(const QuiverWithPotential& qp) {
  const auto layout = unit_layout(qp.points);
  std::string out = svg_open();
  out += "  <defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
         "markerWidth=\"5\" markerHeight=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/>"
         "</marker></defs>\n";
  out += "  <g class=\"arrows\" stroke=\"black\" stroke-width=\"0.80\">\n";
  for (const auto& a : qp.arrows) {
    const auto [p, q] = shorten(layout[a.tail], layout[a.head], 0.03);
    out += "    <line x1=\"" + svg_x(p) + "\" y1=\"" + svg_y(p) + "\" x2=\"" + svg_x(q) +
           "\" y2=\"" + svg_y(q) + "\" marker-end=\"url(#head)\"/>\n";
  }
  out += "  </g>\n";
  out += svg_vertices(qp.vertices, layout, qp.frozen);
  out += "</svg>\n";
  return out;
}

std::string quiver_tikz(const QuiverWithPotential& qp) {
  const auto layout = unit_layout(qp.points);
  std::string out = tikz_open();
  out += tikz_vertices(qp.vertices, layout, qp.frozen);
  for (const auto& a : qp.arrows) {
    out += "  \\draw[->, shorten >=2pt, shorten <=2pt] (v" + std::to_string(a.tail) + ") -- (v" +
           std::to_string(a.head) + ");\n";
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

}  // namespace

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "json") return ExportFormat::Json;
  if (name == "svg") return ExportFormat::Svg;
  if (name == "tikz") return ExportFormat::Tikz;
  throw Error(ErrorCode::UnsupportedFormat, "unknown format \"" + std::string(name) + "\"");
}

std::string_view to_string(ExportFormat format) {
  switch (format) {
    case ExportFormat::Dot: return "dot";
    case ExportFormat::Json: return "json";
    case ExportFormat::Svg: return "svg";
    case ExportFormat::Tikz: return "tikz";
  }
  return "dot";
}

std::string export_complex(const EmbeddedComplex& complex, ExportFormat format) {
  switch (format) {
    case ExportFormat::Dot: return complex_dot(complex);
    case ExportFormat::Json: return complex_json(complex);
    case ExportFormat::Svg: return complex_svg(complex);
    case ExportFormat::Tikz: return complex_tikz(complex);
  }
  throw Error(ErrorCode::UnsupportedFormat, "unknown format");
}

std::string export_quiver(const QuiverWithPotential& qp, ExportFormat format) {
  switch (format) {
    case ExportFormat::Dot: return quiver_dot(qp);
    case ExportFormat::Json: return quiver_json(qp);
    case ExportFormat::Svg: return quiver_svg(qp);
    case ExportFormat::Tikz: return quiver_tikz(qp);
  }
  throw Error(ErrorCode::UnsupportedFormat, "unknown format");
}

}  // namespace symnc
