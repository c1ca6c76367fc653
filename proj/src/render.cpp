#include "altsurf/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <variant>

namespace altsurf {

namespace {

struct Point {
  double x = 0, y = 0;
};

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string pt(Point p) { return num(p.x) + "," + num(p.y); }

class Layout {
 public:
  Layout(const Diagram& d, double size) : d_(d), size_(size) {
    centre_ = {size / 2, size / 2};
    radius_ = d.crossing_count() == 1 ? 0.0 : size * 0.32;
    bubble_ = std::max(8.0, size * 0.03);
  }

  double bubble() const { return bubble_; }

  Point crossing(int x) const {
    const double a = angle(x);
    return centre_ + radius_ * Point{std::cos(a), std::sin(a)};
  }

  /// Unit direction in which end p of crossing x leaves the bubble.
  Point direction(EdgeEnd end) const {
    const double a = angle(end.crossing) + std::numbers::pi / 4 + end.position * std::numbers::pi / 2;
    return {std::cos(a), std::sin(a)};
  }

  Point end_point(EdgeEnd end, double r) const { return crossing(end.crossing) + r * direction(end); }

  /// Point at parameter t in [0,1] along the drawn edge from tail to head.
  Point along(int e, double t) const {
    const auto [p0, p1, p2, p3] = controls(e, 0.0, 0.0);
    const double u = 1 - t;
    return u * u * u * p0 + 3 * u * u * t * p1 + 3 * u * t * t * p2 + t * t * t * p3;
  }

  Point normal_left(int e, double t) const {
    const Point a = along(e, std::max(0.0, t - 0.01));
    const Point b = along(e, std::min(1.0, t + 0.01));
    const Point v = b - a;
    const double len = std::hypot(v.x, v.y);
    if (len == 0) return {0, 0};
    return {v.y / len, -v.x / len};
  }

  std::array<Point, 4> controls(int e, double tail_r, double head_r) const {
    const Edge& edge = d_.edge(e);
    const double reach = std::max(radius_ * 0.7, size_ * 0.12);
    return {end_point(edge.tail, tail_r), end_point(edge.tail, reach), end_point(edge.head, reach),
            end_point(edge.head, head_r)};
  }

 private:
  double angle(int x) const {
    return 2 * std::numbers::pi * x / d_.crossing_count() - std::numbers::pi / 2;
  }

  const Diagram& d_;
  double size_;
  Point centre_;
  double radius_ = 0;
  double bubble_ = 0;
};

/// Parameter along an edge (tail 0, head 1) of B-point i of m, counted from
/// the over-end.
double b_parameter(const Edge& edge, int i, int m) {
  const double from_over = (i + 1.0) / (m + 1.0);
  return edge.tail == edge.over_end ? from_over : 1.0 - from_over;
}

}  // namespace

std::string render_svg(const Diagram& d, const Configuration* cfg, const RenderOptions& options) {
  const Layout layout(d, options.size);
  std::ostringstream out;
  const std::string size = num(options.size);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "  <style>.edge{fill:none;stroke:#222;stroke-width:2.5}"
         ".bubble{fill:none;stroke:#bbb;stroke-width:1}"
         ".curve{fill:none;stroke-width:1.5}.upper{stroke:#c03;stroke-dasharray:6 4}"
         ".lower{stroke:#06c;stroke-dasharray:1 4;stroke-linecap:round}"
         "text{font-family:sans-serif;font-size:11px;fill:#555}</style>\n";

  out << "  <g class=\"bubbles\">\n";
  for (int x = 0; x < d.crossing_count(); ++x) {
    const Point c = layout.crossing(x);
    out << "    <circle class=\"bubble\" id=\"c" << x + 1 << "\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
        << "\" r=\"" << num(layout.bubble()) << "\"/>\n";
    if (options.labels)
      out << "    <text x=\"" << num(c.x + layout.bubble() + 2) << "\" y=\"" << num(c.y - layout.bubble() - 2)
          << "\">c" << x + 1 << "</text>\n";
  }
  out << "  </g>\n  <g class=\"edges\">\n";
  const double gap = layout.bubble() * 0.6;
  for (int e = 0; e < d.edge_count(); ++e) {
    const Edge& edge = d.edge(e);
    const double tail_r = edge.tail == edge.under_end ? gap : 0.0;
    const double head_r = edge.head == edge.under_end ? gap : 0.0;
    const auto c = layout.controls(e, tail_r, head_r);
    out << "    <path class=\"edge\" id=\"e" << edge.label << "\" d=\"M" << pt(c[0]) << " C" << pt(c[1]) << ' '
        << pt(c[2]) << ' ' << pt(c[3]) << "\"/>\n";
    if (options.labels) {
      const Point m = layout.along(e, 0.5) + 8.0 * layout.normal_left(e, 0.5);
      out << "    <text x=\"" << num(m.x) << "\" y=\"" << num(m.y) << "\">e" << edge.label << "</text>\n";
    }
  }
  out << "  </g>\n";

  if (cfg) {
    out << "  <g class=\"overlay\">\n";
    for (const Curve& c : cfg->curves) {
      std::string path;
      for (const Station& s : c.stations) {
        Point p;
        if (const auto* b = std::get_if<BPoint>(&s)) {
          const Edge& edge = d.edge(b->edge);
          const int m = static_cast<int>(cfg->placement.edge_orders.at(b->edge).size());
          const double t = b_parameter(edge, b->index, m);
          const double side = b->side == Side::left ? 1.0 : -1.0;
          p = layout.along(b->edge, t) + (side * 6.0) * layout.normal_left(b->edge, t);
        } else {
          const auto& pass = std::get<SaddlePass>(s);
          const auto qb = saddle_attachments(c.sphere, pass).second;
          // qb.position is the strand end the pass runs around
          const Point around = layout.direction({pass.crossing, qb.position});
          p = layout.crossing(pass.crossing) + (layout.bubble() * (1.3 + 0.3 * pass.level)) * around;
        }
        path += (path.empty() ? "M" : " L") + pt(p);
      }
      out << "    <path class=\"curve " << (c.sphere == Sphere::upper ? "upper" : "lower") << "\" d=\"" << path
          << " Z\"><title>" << to_string(c) << "</title></path>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace altsurf
