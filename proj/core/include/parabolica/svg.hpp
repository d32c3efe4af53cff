#pragma once

#include <string>
#include <vector>

#include "parabolica/bivariate.hpp"
#include "parabolica/geometry.hpp"
#include "parabolica/report.hpp"

namespace parabolica {

struct Style {
  std::string stroke = "#000000";
  double width = 1.0;
  std::string fill = "none";
  std::string dash;
};

struct Polyline {
  std::vector<Point2> points;
  Style style;
  bool closed = false;
};

enum class Glyph { kDisc, kCircle, kSquare, kTriangle, kCross };

struct Marker {
  Point2 at;
  Glyph glyph = Glyph::kDisc;
  Style style;
  double size = 4.0;  // pixels
};

struct Label {
  Point2 at;
  std::string text;
};

struct Layer {
  std::string name;
  std::vector<Polyline> polylines;
  std::vector<Marker> points;
  std::vector<Label> labels;
};

enum class Viewport { kRectangle, kHemisphere };

struct Panel {
  std::string title;
  Viewport viewport = Viewport::kRectangle;
  /// Data window for rectangles; hemispheres always show the unit disk.
  Box box;
  std::vector<Layer> layers;
};

struct PlotSpec {
  std::vector<Panel> panels;
  double panel_size = 360.0;
};

/// Throws kInvalidArgument for non-finite coordinates or an empty viewport.
void validate(const PlotSpec& spec);

/// Standalone SVG 1.1 document. Output depends only on the spec.
std::string render_svg(const PlotSpec& spec);

/// Writes render_svg(spec) to `path`; throws kInvalidArgument on I/O failure.
void emit_svg(const PlotSpec& spec, const std::string& path);

/// Plane view plus the two closed hemispheres for the given layer names
/// ("hessian", "asymptotic", "godrons", "sphere"). Unknown names throw
/// kInvalidArgument.
PlotSpec build_figure(const BivariatePoly& f, const std::vector<std::string>& layers,
                      const ReportOptions& options = {});

}  // namespace parabolica
