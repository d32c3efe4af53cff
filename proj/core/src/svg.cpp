#include "parabolica/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "parabolica/asymptotic.hpp"
#include "parabolica/curve_trace.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/text.hpp"

namespace parabolica {

namespace {

constexpr double kMargin = 24.0;
constexpr double kTitle = 28.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string style_attrs(const Style& s) {
  std::string out = "stroke=\"" + s.stroke + "\" stroke-width=\"" + num(s.width) + "\" fill=\"" + s.fill + "\"";
  if (!s.dash.empty()) out += " stroke-dasharray=\"" + s.dash + "\"";
  return out;
}

struct Mapper {
  Box box;
  double x0, y0, size;

  Point2 operator()(Point2 p) const {
    const double span = std::max(box.width(), box.height());
    const double cx = 0.5 * (box.xmin + box.xmax), cy = 0.5 * (box.ymin + box.ymax);
    return {x0 + size * (0.5 + (p.x - cx) / span), y0 + size * (0.5 - (p.y - cy) / span)};
  }
};

void render_marker(std::ostringstream& out, const Marker& m, Point2 c) {
  const double r = m.size;
  switch (m.glyph) {
    case Glyph::kDisc:
    case Glyph::kCircle:
      out << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r) << "\" "
          << style_attrs(m.style) << "/>\n";
      break;
    case Glyph::kSquare:
      out << "<rect x=\"" << num(c.x - r) << "\" y=\"" << num(c.y - r) << "\" width=\"" << num(2 * r)
          << "\" height=\"" << num(2 * r) << "\" " << style_attrs(m.style) << "/>\n";
      break;
    case Glyph::kTriangle:
      out << "<polygon points=\"" << num(c.x) << "," << num(c.y - r) << " " << num(c.x - r) << ","
          << num(c.y + r) << " " << num(c.x + r) << "," << num(c.y + r) << "\" " << style_attrs(m.style)
          << "/>\n";
      break;
    case Glyph::kCross:
      out << "<path d=\"M" << num(c.x - r) << " " << num(c.y - r) << "L" << num(c.x + r) << " " << num(c.y + r)
          << "M" << num(c.x - r) << " " << num(c.y + r) << "L" << num(c.x + r) << " " << num(c.y - r) << "\" "
          << style_attrs(m.style) << "/>\n";
      break;
  }
}

void render_panel(std::ostringstream& out, const Panel& panel, double x0, double y0, double size) {
  const Box box = panel.viewport == Viewport::kHemisphere ? Box::square(1.05) : panel.box;
  const Mapper map{box, x0, y0 + kTitle, size};
  out << "<g>\n<text x=\"" << num(x0 + size / 2) << "\" y=\"" << num(y0 + 18) << "\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"13\">" << escape(panel.title) << "</text>\n";
  const std::string clip = "clip" + num(x0).substr(0, num(x0).find('.'));
  if (panel.viewport == Viewport::kHemisphere) {
    const Point2 c = map({0, 0});
    const double r = map({1, 0}).x - c.x;
    out << "<clipPath id=\"" << clip << "\"><circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\""
        << num(r + 1) << "\"/></clipPath>\n";
    out << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r)
        << "\" stroke=\"#000000\" stroke-width=\"1.500\" fill=\"#fafafa\"/>\n";
    out << "<path d=\"M" << num(c.x - r) << " " << num(c.y) << "H" << num(c.x + r) << "M" << num(c.x) << " "
        << num(c.y - r) << "V" << num(c.y + r) << "\" stroke=\"#bbbbbb\" stroke-width=\"0.500\"/>\n";
  } else {
    const Point2 a = map({box.xmin, box.ymax}), b = map({box.xmax, box.ymin});
    out << "<clipPath id=\"" << clip << "\"><rect x=\"" << num(a.x) << "\" y=\"" << num(a.y) << "\" width=\""
        << num(b.x - a.x) << "\" height=\"" << num(b.y - a.y) << "\"/></clipPath>\n";
    out << "<rect x=\"" << num(a.x) << "\" y=\"" << num(a.y) << "\" width=\"" << num(b.x - a.x) << "\" height=\""
        << num(b.y - a.y) << "\" stroke=\"#000000\" stroke-width=\"1.000\" fill=\"#fafafa\"/>\n";
    if (box.ymin <= 0 && box.ymax >= 0) {
      out << "<path d=\"M" << num(a.x) << " " << num(map({0, 0}).y) << "H" << num(b.x)
          << "\" stroke=\"#bbbbbb\" stroke-width=\"0.500\"/>\n";
    }
    if (box.xmin <= 0 && box.xmax >= 0) {
      out << "<path d=\"M" << num(map({0, 0}).x) << " " << num(a.y) << "V" << num(b.y)
          << "\" stroke=\"#bbbbbb\" stroke-width=\"0.500\"/>\n";
    }
  }
  for (const auto& layer : panel.layers) {
    out << "<g id=\"" << escape(layer.name) << "\" clip-path=\"url(#" << clip << ")\">\n";
    for (const auto& pl : layer.polylines) {
      if (pl.points.size() < 2) continue;
      out << "<" << (pl.closed ? "polygon" : "polyline") << " points=\"";
      for (std::size_t i = 0; i < pl.points.size(); ++i) {
        const Point2 q = map(pl.points[i]);
        out << (i ? " " : "") << num(q.x) << "," << num(q.y);
      }
      out << "\" " << style_attrs(pl.style) << "/>\n";
    }
    out << "</g>\n";
    for (const auto& m : layer.points) render_marker(out, m, map(m.at));
    for (const auto& l : layer.labels) {
      const Point2 q = map(l.at);
      out << "<text x=\"" << num(q.x + 5) << "\" y=\"" << num(q.y - 5)
          << "\" font-family=\"sans-serif\" font-size=\"10\">" << escape(l.text) << "</text>\n";
    }
  }
  out << "</g>\n";
}

}  // namespace

void validate(const PlotSpec& spec) {
  if (!(spec.panel_size > 0.0)) throw Error(ErrorCode::kInvalidArgument, "panel size must be positive");
  const auto finite = [](Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); };
  for (const auto& panel : spec.panels) {
    if (panel.viewport == Viewport::kRectangle && !(panel.box.width() > 0.0 && panel.box.height() > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "empty viewport in panel '" + panel.title + "'");
    }
    for (const auto& layer : panel.layers) {
      for (const auto& pl : layer.polylines) {
        if (!std::all_of(pl.points.begin(), pl.points.end(), finite)) {
          throw Error(ErrorCode::kInvalidArgument, "non-finite coordinate in layer '" + layer.name + "'");
        }
      }
      for (const auto& m : layer.points) {
        if (!finite(m.at)) throw Error(ErrorCode::kInvalidArgument, "non-finite marker in layer '" + layer.name + "'");
      }
      for (const auto& l : layer.labels) {
        if (!finite(l.at)) throw Error(ErrorCode::kInvalidArgument, "non-finite label in layer '" + layer.name + "'");
      }
    }
  }
}

std::string render_svg(const PlotSpec& spec) {
  validate(spec);
  const std::size_t n = std::max<std::size_t>(spec.panels.size(), 1);
  const double width = kMargin + n * (spec.panel_size + kMargin);
  const double height = spec.panel_size + kTitle + 2 * kMargin;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (std::size_t i = 0; i < spec.panels.size(); ++i) {
    render_panel(out, spec.panels[i], kMargin + i * (spec.panel_size + kMargin), kMargin, spec.panel_size);
  }
  out << "</svg>\n";
  return out.str();
}

void emit_svg(const PlotSpec& spec, const std::string& path) {
  const std::string doc = render_svg(spec);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "' for writing");
  file << doc;
  if (!file) throw Error(ErrorCode::kInvalidArgument, "failed writing '" + path + "'");
}

namespace {

const Style kHessianStyle{"#c0392b", 1.6, "none", ""};
const Style kAsymptoticStyle{"#2c3e80", 0.6, "none", ""};

// Upper-hemisphere image of an affine point: central projection.
Point3 to_sphere(Point2 p) { return normalized(Point3{p.x, p.y, 1.0}); }

void add_sphere_path(std::vector<Polyline>& upper, std::vector<Polyline>& lower, const std::vector<Point3>& path,
                     const Style& style) {
  Polyline up{{}, style, false}, down{{}, style, false};
  const auto flush = [](Polyline& pl, std::vector<Polyline>& into) {
    if (pl.points.size() >= 2) into.push_back(pl);
    pl.points.clear();
  };
  for (const auto& w : path) {
    if (w.z >= 0.0) {
      up.points.push_back({w.x, w.y});
      flush(down, lower);
    } else {
      down.points.push_back({w.x, w.y});
      flush(up, upper);
    }
  }
  flush(up, upper);
  flush(down, lower);
}

Box plane_box(const StructureReport& r) {
  double half = 2.0;
  if (r.godrons) {
    for (const auto& g : r.godrons->godrons) half = std::max(half, 1.3 * std::max(std::abs(g.location.x), std::abs(g.location.y)));
  }
  if (r.topology) half = std::max(half, 2.5 * r.topology->scale);
  half = std::ceil(half);
  return Box::square(half);
}

}  // namespace

PlotSpec build_figure(const BivariatePoly& f, const std::vector<std::string>& layers, const ReportOptions& options) {
  static const std::set<std::string> known{"hessian", "asymptotic", "godrons", "sphere"};
  std::set<std::string> want;
  for (const auto& l : layers) {
    if (!known.count(l)) throw Error(ErrorCode::kInvalidArgument, "unknown layer '" + l + "'");
    want.insert(l);
  }
  const StructureReport r = full_report(f, options);
  const Box box = plane_box(r);

  Panel plane{"plane: " + r.input, Viewport::kRectangle, box, {}};
  Panel upper{"upper hemisphere (w >= 0)", Viewport::kHemisphere, Box::square(1.0), {}};
  Panel lower{"lower hemisphere (w <= 0)", Viewport::kHemisphere, Box::square(1.0), {}};

  if (want.count("hessian")) {
    Layer plane_h{"hessian", {}, {}, {}};
    const BivariatePoly h = hessian(f);
    if (!h.is_zero() && !h.is_constant()) {
      try {
        for (const auto& c : trace_curve(h, box, box.width() / 400.0)) plane_h.polylines.push_back({c.points, kHessianStyle, false});
      } catch (const Error&) {
        // A singular Hessian curve is still drawn in the sphere views when
        // the topology stage succeeded.
      }
    }
    plane.layers.push_back(plane_h);
    if (want.count("sphere") && r.topology) {
      Layer up{"hessian", {}, {}, {}}, down{"hessian", {}, {}, {}};
      for (const auto& c : r.topology->components) {
        add_sphere_path(up.polylines, down.polylines, c.sphere, kHessianStyle);
        std::vector<Point3> anti;
        anti.reserve(c.sphere.size());
        for (const auto& w : c.sphere) anti.push_back(-w);
        add_sphere_path(up.polylines, down.polylines, anti, kHessianStyle);
      }
      upper.layers.push_back(up);
      lower.layers.push_back(down);
    }
  }

  if (want.count("asymptotic")) {
    Layer plane_a{"asymptotic", {}, {}, {}};
    Layer up{"asymptotic", {}, {}, {}}, down{"asymptotic", {}, {}, {}};
    const DenseEvaluator ev(f);
    const int seeds = 9;
    const double step = 1e-3 * box.width();
    for (int i = 0; i < seeds; ++i) {
      for (int j = 0; j < seeds; ++j) {
        const Point2 p0{box.xmin + (i + 0.5) * box.width() / seeds, box.ymin + (j + 0.5) * box.height() / seeds};
        const QuadraticForm q = second_fundamental_form(ev, p0);
        if (q.discriminant() <= 0.0) continue;
        for (int branch : {1, 2}) {
          auto back = integrate_asymptotic_curve(f, p0, branch, step, 0.25 * box.width(), box, true).points;
          const auto fwd = integrate_asymptotic_curve(f, p0, branch, step, 0.25 * box.width(), box).points;
          std::vector<Point2> both(back.rbegin(), back.rend());
          if (!fwd.empty()) both.insert(both.end(), fwd.begin() + 1, fwd.end());
          plane_a.polylines.push_back({both, kAsymptoticStyle, false});
          if (want.count("sphere")) {
            std::vector<Point3> lifted, anti;
            for (const auto& p : both) {
              lifted.push_back(to_sphere(p));
              anti.push_back(-to_sphere(p));
            }
            add_sphere_path(up.polylines, down.polylines, lifted, kAsymptoticStyle);
            add_sphere_path(up.polylines, down.polylines, anti, kAsymptoticStyle);
          }
        }
      }
    }
    plane.layers.push_back(plane_a);
    if (want.count("sphere")) {
      upper.layers.push_back(up);
      lower.layers.push_back(down);
    }
  }

  if (want.count("godrons") && r.godrons) {
    Layer g{"godrons", {}, {}, {}};
    for (const auto& d : r.godrons->godrons) {
      Marker m;
      m.at = d.location;
      m.glyph = d.tangency == Tangency::kInterior ? Glyph::kDisc : Glyph::kSquare;
      m.style = d.tangency == Tangency::kInterior ? Style{"#000000", 1.0, "#27ae60", ""}
                                                  : Style{"#000000", 1.0, "#f39c12", ""};
      g.points.push_back(m);
    }
    plane.layers.push_back(g);
  }

  if (want.count("sphere") && r.infinity) {
    Layer up{"singular_points", {}, {}, {}}, down{"singular_points", {}, {}, {}};
    for (const auto& p : r.infinity->points) {
      Marker m;
      m.at = {p.equator_point.x, p.equator_point.y};
      m.glyph = Glyph::kTriangle;
      m.style = {"#000000", 1.0, "#8e44ad", ""};
      up.points.push_back(m);
      down.points.push_back(m);
    }
    upper.layers.push_back(up);
    lower.layers.push_back(down);
  }

  PlotSpec spec;
  spec.panels.push_back(plane);
  if (want.count("sphere")) {
    spec.panels.push_back(upper);
    spec.panels.push_back(lower);
  }
  return spec;
}

}  // namespace parabolica
