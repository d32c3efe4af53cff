#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "parabolica/errors.hpp"
#include "parabolica/svg.hpp"
#include "parabolica/text.hpp"
#include "parabolica_cli/cli.hpp"

using namespace parabolica;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "parabolica");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp(const std::string& name) { return fs::temp_directory_path() / ("parabolica_test_" + name); }

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

const char* kQ = "x^2 + y^2 + y*(x^2 + y^2)";
const char* kG = "y*(x+3)*(x-y)*(y+x-3)";

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"verify", "-e", kG}).code == cli::kOk);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"verify", "--bogus", "-e", kG}).code == cli::kUsage);
  CHECK(run({"verify"}).code == cli::kUsage);
  CHECK(run({"verify", "/nonexistent/poly.txt"}).code == cli::kUsage);
  const Run parse = run({"verify", "-e", "2x + y"});
  CHECK(parse.code == cli::kParse);
  CHECK(parse.err.find("column 2") != std::string::npos);
  CHECK(run({"analyze", "-e", "x^2 - y^2"}).code == cli::kRefusal);
  CHECK(run({"plot", "-e", kQ, "--layer", "teapot"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("verify exit code matches the report verdict") {
  for (const char* f : {kQ, kG, "x^4 + 3*x^2*y^2 + y^4 + x*y^2 - x^2"}) {
    const Run r = run({"verify", "-e", f});
    const bool verified = full_report(parse_polynomial(f)).verified();
    CHECK((r.code == cli::kOk) == verified);
  }
}

TEST_CASE("analyze reads files and writes JSON") {
  const fs::path in = temp("pair_f.txt"), out = temp("pair_f.json");
  {
    std::ofstream f(in);
    f << "# quartic pair, first member\n"
      << "x^4 + 6*x^2*y^2 - y^4 + 3*x^2*y - 3*x*y^2\n"
      << "  + 10*y^2 - 10*x^2\n";
  }
  CHECK(run({"analyze", in.string(), "--out", out.string()}).code == cli::kOk);
  const std::string doc = slurp(out);
  CHECK(doc.find("\"b_minus_contains\": \"H\"") != std::string::npos);
  const Run g = run({"analyze", "-e", "x^4 + 6*x^2*y^2 - y^4 + 3*x^2*y - 3*x*y^2 + 10*y^2 + 10*x^2"});
  CHECK(g.out.find("\"b_minus_contains\": \"E\"") != std::string::npos);
  fs::remove(in);
  fs::remove(out);
}

TEST_CASE("seed from the environment") {
  setenv("PARABOLICA_SEED", "77", 1);
  const Run r = run({"analyze", "-e", kQ});
  unsetenv("PARABOLICA_SEED");
  CHECK(r.out.find("\"seed\": 77") != std::string::npos);
  CHECK(run({"analyze", "-e", kQ, "--seed", "5"}).out.find("\"seed\": 5") != std::string::npos);
}

TEST_CASE("plot output") {
  const fs::path a = temp("q1.svg"), b = temp("q2.svg");
  REQUIRE(run({"plot", "-e", kQ, "--out", a.string()}).code == cli::kOk);
  REQUIRE(run({"plot", "-e", kQ, "--out", b.string()}).code == cli::kOk);
  const std::string svg = slurp(a);
  CHECK(svg == slurp(b));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(svg, "upper hemisphere") == 1);
  CHECK(count(svg, "lower hemisphere") == 1);
  // Two equator singular points, drawn on each hemisphere, and one godron.
  CHECK(count(svg, "fill=\"#8e44ad\"") == 4);
  CHECK(count(svg, "fill=\"#27ae60\"") == 1);
  fs::remove(a);
  fs::remove(b);
}

TEST_CASE("figure content") {
  const PlotSpec q = build_figure(parse_polynomial(kQ), {"sphere"});
  REQUIRE(q.panels.size() == 3);
  for (int i : {1, 2}) {
    std::size_t markers = 0;
    for (const auto& l : q.panels[i].layers) {
      if (l.name == "singular_points") markers += l.points.size();
    }
    CHECK(markers == 2);
  }

  const PlotSpec g = build_figure(parse_polynomial(kG), {"hessian", "godrons"});
  REQUIRE(g.panels.size() == 1);
  std::size_t ovals = 0, godrons = 0;
  for (const auto& l : g.panels[0].layers) {
    if (l.name == "hessian") {
      for (const auto& pl : l.polylines) {
        const double gap = std::hypot(pl.points.front().x - pl.points.back().x, pl.points.front().y - pl.points.back().y);
        if (pl.closed || gap < 1e-6) ++ovals;
      }
    }
    if (l.name == "godrons") godrons += l.points.size();
  }
  CHECK(ovals == 3);
  CHECK(godrons == 8);
  CHECK_THROWS_AS(build_figure(parse_polynomial(kQ), {"teapot"}), parabolica::Error);
}

TEST_CASE("empty plot spec still renders axes") {
  PlotSpec spec;
  spec.panels.push_back({"empty", Viewport::kRectangle, Box::square(1.0), {}});
  const std::string svg = render_svg(spec);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("stroke=\"#bbbbbb\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  PlotSpec none;
  CHECK(render_svg(none).find("</svg>") != std::string::npos);

  PlotSpec bad;
  bad.panels.push_back({"bad", Viewport::kRectangle, Box{0, 0, 0, 1}, {}});
  CHECK_THROWS_AS(validate(bad), parabolica::Error);
  PlotSpec nan;
  Layer l{"x", {Polyline{{{0, 0}, {std::nan(""), 1}}, {}, false}}, {}, {}};
  nan.panels.push_back({"nan", Viewport::kHemisphere, Box::square(1.0), {l}});
  CHECK_THROWS_AS(validate(nan), parabolica::Error);
  CHECK_THROWS_AS(emit_svg(spec, "/nonexistent/dir/out.svg"), parabolica::Error);
}
