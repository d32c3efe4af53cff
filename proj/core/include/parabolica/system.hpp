#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parabolica/bivariate.hpp"
#include "parabolica/geometry.hpp"
#include "parabolica/rational.hpp"

namespace parabolica {

struct SystemSolution {
  std::vector<Point2> points;
  /// Per-candidate problems that did not abort the solve ("Newton divergence").
  std::vector<std::string> warnings;
};

struct SolveOptions {
  /// Requested precision of the returned coordinates.
  double precision = 1e-12;
  /// Restricts the search; the whole plane when unset.
  std::optional<Box> box;
};

/// Common real zeros of p and q. Candidate coordinates come from the real
/// roots of Res_y(p, q) and Res_x(p, q); every pairing is polished by 2D
/// Newton and kept when it stays put. Duplicates within 10 * precision merge.
/// Throws kSharedComponent when a resultant vanishes identically.
SystemSolution solve_system(const BivariatePoly& p, const BivariatePoly& q,
                            const SolveOptions& options = {});

}  // namespace parabolica
