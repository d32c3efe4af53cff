#include "parabolica/curve_trace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <unordered_map>

#include "parabolica/errors.hpp"

namespace parabolica {

ImplicitFunction implicit_function(const BivariatePoly& p) {
  auto ev = std::make_shared<DenseEvaluator>(p);
  return {[ev](double x, double y) { return (*ev)(x, y); },
          [ev](double x, double y) { return ev->magnitude(x, y); }};
}

namespace {

class Tracer {
 public:
  Tracer(const ImplicitFunction& fn, const Box& box, double step) : fn_(fn), box_(box) {
    if (!(step > 0.0) || !(box.width() > 0.0) || !(box.height() > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "tracing needs a positive step and a nonempty box");
    }
    nx_ = std::max(2, static_cast<int>(std::ceil(box.width() / step)));
    ny_ = std::max(2, static_cast<int>(std::ceil(box.height() / step)));
    dx_ = box.width() / nx_;
    dy_ = box.height() / ny_;
    values_.resize(static_cast<std::size_t>((nx_ + 1) * (ny_ + 1)));
    for (int j = 0; j <= ny_; ++j) {
      for (int i = 0; i <= nx_; ++i) values_[node(i, j)] = fn_.value(x_at(i), y_at(j));
    }
  }

  std::vector<CurveComponent> run() {
    for (int j = 0; j < ny_; ++j) {
      for (int i = 0; i < nx_; ++i) cell(i, j);
    }
    return assemble();
  }

 private:
  double x_at(int i) const { return i == nx_ ? box_.xmax : box_.xmin + i * dx_; }
  double y_at(int j) const { return j == ny_ ? box_.ymax : box_.ymin + j * dy_; }
  std::size_t node(int i, int j) const { return static_cast<std::size_t>(j * (nx_ + 1) + i); }
  static bool positive(double v) { return v >= 0.0; }

  // Edge keys: horizontal edges first, then vertical ones.
  long hkey(int i, int j) const { return static_cast<long>(j) * nx_ + i; }
  long vkey(int i, int j) const {
    return static_cast<long>(nx_) * (ny_ + 1) + static_cast<long>(i) * ny_ + j;
  }

  Point2 bisect(Point2 a, Point2 b) const {
    double fa = fn_.value(a.x, a.y);
    if (fa == 0.0) return a;
    for (int it = 0; it < 64; ++it) {
      const Point2 m = 0.5 * (a + b);
      if (m == a || m == b) break;
      const double fm = fn_.value(m.x, m.y);
      if (fm == 0.0) return m;
      if (positive(fm) == positive(fa)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    return 0.5 * (a + b);
  }

  int crossing(long key, Point2 a, Point2 b) {
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(points_.size());
    points_.push_back(bisect(a, b));
    links_.push_back({-1, -1});
    index_.emplace(key, id);
    return id;
  }

  void link(int a, int b) {
    auto add = [&](int from, int to) {
      auto& l = links_[static_cast<std::size_t>(from)];
      if (l[0] == to || l[1] == to) return;
      if (l[0] < 0) {
        l[0] = to;
      } else if (l[1] < 0) {
        l[1] = to;
      } else {
        throw Error(ErrorCode::kTracingInconsistency, "tracing inconsistency: crossing with three neighbours");
      }
    };
    add(a, b);
    add(b, a);
  }

  // Saddle pattern persisting in some subcell of an n x n subdivision.
  bool saddle_persists(int i, int j, int n) const {
    const double x0 = x_at(i), y0 = y_at(j);
    std::vector<double> v(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (int b = 0; b <= n; ++b) {
      for (int a = 0; a <= n; ++a) v[b * (n + 1) + a] = fn_.value(x0 + a * dx_ / n, y0 + b * dy_ / n);
    }
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < n; ++a) {
        const bool s0 = positive(v[b * (n + 1) + a]), s1 = positive(v[b * (n + 1) + a + 1]);
        const bool s2 = positive(v[(b + 1) * (n + 1) + a + 1]), s3 = positive(v[(b + 1) * (n + 1) + a]);
        if (s0 == s2 && s1 == s3 && s0 != s1) return true;
      }
    }
    return false;
  }

  void cell(int i, int j) {
    const Point2 c0{x_at(i), y_at(j)}, c1{x_at(i + 1), y_at(j)};
    const Point2 c2{x_at(i + 1), y_at(j + 1)}, c3{x_at(i), y_at(j + 1)};
    const bool s0 = positive(values_[node(i, j)]), s1 = positive(values_[node(i + 1, j)]);
    const bool s2 = positive(values_[node(i + 1, j + 1)]), s3 = positive(values_[node(i, j + 1)]);
    std::array<int, 4> e{-1, -1, -1, -1};
    if (s0 != s1) e[0] = crossing(hkey(i, j), c0, c1);
    if (s1 != s2) e[1] = crossing(vkey(i + 1, j), c1, c2);
    if (s3 != s2) e[2] = crossing(hkey(i, j + 1), c3, c2);
    if (s0 != s3) e[3] = crossing(vkey(i, j), c0, c3);
    const int count = static_cast<int>(std::count_if(e.begin(), e.end(), [](int v) { return v >= 0; }));
    if (count == 2) {
      int a = -1, b = -1;
      for (int v : e) {
        if (v < 0) continue;
        (a < 0 ? a : b) = v;
      }
      link(a, b);
    } else if (count == 4) {
      if (saddle_persists(i, j, 2) && saddle_persists(i, j, 4)) {
        throw Error(ErrorCode::kSingularCurve, "singular curve suspected near (" + std::to_string(c0.x) + ", " +
                                                   std::to_string(c0.y) + ")");
      }
      const Point2 mid = 0.5 * (c0 + c2);
      if (positive(fn_.value(mid.x, mid.y)) == s0) {
        link(e[0], e[1]);
        link(e[2], e[3]);
      } else {
        link(e[0], e[3]);
        link(e[1], e[2]);
      }
    }
  }

  std::vector<CurveComponent> assemble() {
    std::vector<CurveComponent> out;
    std::vector<char> seen(points_.size(), 0);
    auto walk = [&](int start) {
      CurveComponent c;
      int prev = -1, cur = start;
      while (cur >= 0 && !seen[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = 1;
        c.points.push_back(points_[static_cast<std::size_t>(cur)]);
        const auto& l = links_[static_cast<std::size_t>(cur)];
        const int next = l[0] != prev ? l[0] : l[1];
        prev = cur;
        cur = next;
      }
      if (cur == start && c.points.size() > 2) {
        c.closed = true;
        c.points.push_back(c.points.front());
      }
      return c;
    };
    for (std::size_t k = 0; k < points_.size(); ++k) {
      const auto& l = links_[k];
      const bool end = (l[0] < 0) != (l[1] < 0);
      if (end && !seen[k]) out.push_back(walk(static_cast<int>(k)));
    }
    for (std::size_t k = 0; k < points_.size(); ++k) {
      if (!seen[k] && links_[k][0] >= 0) out.push_back(walk(static_cast<int>(k)));
    }
    return out;
  }

  const ImplicitFunction& fn_;
  Box box_;
  int nx_ = 0, ny_ = 0;
  double dx_ = 0.0, dy_ = 0.0;
  std::vector<double> values_;
  std::vector<Point2> points_;
  std::vector<std::array<int, 2>> links_;
  std::unordered_map<long, int> index_;
};

}  // namespace

std::vector<CurveComponent> trace_curve(const ImplicitFunction& fn, const Box& box, double step) {
  return Tracer(fn, box, step).run();
}

std::vector<CurveComponent> trace_curve(const BivariatePoly& p, const Box& box, double step) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroInput, "zero input: cannot trace the zero polynomial");
  return trace_curve(implicit_function(p), box, step);
}

double max_relative_residual(const ImplicitFunction& fn, const CurveComponent& c) {
  double worst = 0.0;
  for (const Point2& p : c.points) {
    const double m = std::max(fn.magnitude(p.x, p.y), 1e-300);
    worst = std::max(worst, std::fabs(fn.value(p.x, p.y)) / m);
  }
  return worst;
}

}  // namespace parabolica
