#include "parabolica/line_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "parabolica/errors.hpp"

namespace parabolica {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_half_turn(double d) {
  d = std::remainder(d, kPi);  // (-pi/2, pi/2]
  return d <= -kPi / 2 ? d + kPi : d;
}

std::optional<double> field_angle(const QuadraticForm& q, FieldChoice choice) {
  switch (choice) {
    case FieldChoice::kLabel1:
      return labeled_angle(q, 1);
    case FieldChoice::kLabel2:
      return labeled_angle(q, 2);
    case FieldChoice::kEigen:
      return eigen_angle(q);
  }
  return std::nullopt;
}

}  // namespace

DirectionP1 DirectionP1::from_angle(double radians) {
  double a = std::fmod(radians, kPi);
  if (a < 0.0) a += kPi;
  if (a >= kPi) a = 0.0;
  return {a};
}

double distance(DirectionP1 a, DirectionP1 b) {
  const double d = std::abs(a.angle - b.angle);
  return std::min(d, kPi - d);
}

std::optional<double> labeled_angle(const QuadraticForm& q, int label) {
  const double m = 0.5 * (q.a + q.c);
  const double rc = 0.5 * (q.a - q.c);
  const double rs = q.b;
  const double r = std::hypot(rc, rs);
  if (r == 0.0) return std::nullopt;
  const double ratio = -m / r;
  // Rounding can push a double root just outside [-1, 1].
  if (std::abs(ratio) > 1.0 + 1e-12) return std::nullopt;
  const double alpha = std::acos(std::clamp(ratio, -1.0, 1.0));
  const double phi = std::atan2(rs, rc);
  return label == 1 ? 0.5 * (phi - alpha) : 0.5 * (phi + alpha);
}

std::optional<double> eigen_angle(const QuadraticForm& q) {
  if (q.b == 0.0 && q.a == q.c) return std::nullopt;
  return 0.5 * std::atan2(2.0 * q.b, q.a - q.c);
}

double snap_half(double value, double tolerance, bool* snapped) {
  const double nearest = std::round(2.0 * value) / 2.0;
  const bool ok = std::abs(value - nearest) <= tolerance;
  if (snapped) *snapped = ok;
  return ok ? nearest : value;
}

LineFieldIndex line_field_index(const FormField& field, Point2 center, FieldChoice choice,
                                double radius, int samples) {
  const AngleField angles = [&](Point2 p) { return field_angle(field(p), choice); };
  return line_field_index(angles, center, radius, samples);
}

LineFieldIndex line_field_index(const AngleField& field, Point2 center, double radius, int samples,
                                double phase) {
  for (int shrink = 0; shrink <= 8; ++shrink, radius *= 0.5) {
    bool defined = true;
    for (int n = std::max(samples, 8); n <= (1 << 14); n *= 2) {
      std::vector<double> angles;
      angles.reserve(static_cast<std::size_t>(n));
      for (int k = 0; k < n && defined; ++k) {
        const double t = 2.0 * kPi * (k + phase) / n;
        const auto a = field(center + radius * Point2{std::cos(t), std::sin(t)});
        if (!a) {
          defined = false;
        } else {
          angles.push_back(*a);
        }
      }
      if (!defined) break;
      double total = 0.0;
      bool smooth = true;
      for (int k = 0; k < n; ++k) {
        const double inc = wrap_half_turn(angles[static_cast<std::size_t>((k + 1) % n)] -
                                          angles[static_cast<std::size_t>(k)]);
        if (std::abs(inc) > kPi / 4) {
          smooth = false;
          break;
        }
        total += inc;
      }
      if (!smooth) continue;
      LineFieldIndex out;
      out.raw = total / (2.0 * kPi);
      out.value = snap_half(out.raw, 0.05, &out.snapped);
      out.samples = n;
      out.radius = radius;
      return out;
    }
    if (defined) {
      throw Error(ErrorCode::kInternal, "insufficient sampling: line field jumps at 2^14 samples");
    }
  }
  throw Error(ErrorCode::kDegenerate, "line field undefined on every index loop");
}

}  // namespace parabolica
