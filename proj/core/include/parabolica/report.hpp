#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parabolica/asymptotic.hpp"
#include "parabolica/bivariate.hpp"
#include "parabolica/classify.hpp"
#include "parabolica/sphere.hpp"
#include "parabolica/topology.hpp"

namespace parabolica {

struct BoundCheck {
  std::string name;
  std::string formula;
  std::optional<Rational> lower;
  Rational upper;
  double measured = 0.0;
  bool applicable = true;
  bool pass = true;
  /// "hypotheses not met: ..." for inapplicable checks.
  std::string note;
};

struct IdentityCheck {
  bool evaluated = false;
  /// "+" or "-": the side of the projective Hessian curve where H_f < 0.
  std::string epsilon;
  double lhs = 0.0;
  double rhs = 0.0;
  int chi = 0;
  bool pass = false;
  /// Violated hypothesis when not evaluated.
  std::string refusal;
};

struct StageFailure {
  std::string stage;
  std::string code;
  std::string reason;
};

struct ReportOptions {
  TopologyOptions topology;
  std::optional<Box> godron_box;
};

struct StructureReport {
  std::string input;
  std::string hessian;
  int degree = -1;
  std::uint64_t seed = kDefaultSeed;
  std::optional<CompactnessVerdict> compactness;
  std::optional<CurveTopology> topology;
  std::optional<PetrowskyVerdict> petrowsky;
  std::optional<GodronSearch> godrons;
  int P_i = 0;
  int P_e = 0;
  std::optional<InfinityAnalysis> infinity;
  /// Sum of the Y_1 indices over its singular points.
  double index_sum = 0.0;
  IdentityCheck identity;
  std::vector<BoundCheck> bounds;
  std::vector<StageFailure> refusals;
  std::vector<std::string> warnings;

  bool refused(const std::string& stage) const;
  /// True when the identity (if evaluated) and every applicable bound pass.
  bool verified() const;
};

/// Runs classify, topology, godrons, sphere, identity and bounds. A failing
/// stage is recorded in `refusals` and stages depending on it are skipped.
StructureReport full_report(const BivariatePoly& f, const ReportOptions& options = {});

IdentityCheck verify_index_identity(const BivariatePoly& f, const ReportOptions& options = {});

/// Uses the stages already present in `report`.
std::vector<BoundCheck> bound_checks(const BivariatePoly& f, const StructureReport& report);

/// Largest distance from a polyline to the boundary of its convex hull.
double convex_hull_deviation(const std::vector<Point2>& points);

/// Canonical JSON document; exact values as "p/q" strings, other reals
/// with 12 significant digits.
std::string to_json(const StructureReport& report, int indent = 2);

}  // namespace parabolica
