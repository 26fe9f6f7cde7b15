#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramify/fiber.hpp"
#include "ramify/parser.hpp"
#include "ramify/ramify.hpp"

namespace ramify {

/// Seeded points on the image of a parametrization. The parameter values
/// (1 : 0) and (0 : 1) come first; the rest use coprime integer pairs drawn
/// from std::mt19937_64. Parameter values where every image form vanishes
/// are skipped.
std::vector<ProjectivePoint> sample_points(const Parametrization& param, std::size_t count, std::uint64_t seed);

/// Everything the pointwise checks need, computed once: the equations of
/// Z_lambda for every partition of every k up to the terminal level, the
/// Z_k equations and the charts.
struct CheckPlan {
  const Projection* projection;
  unsigned max_level;
  std::vector<StratumEquations> strata;
  /// z_levels[k] holds the Z_k equations, k = 1 .. max_level + 1.
  std::vector<std::vector<Polynomial>> z_levels;
  /// charts[k] holds the level-k charts, k = 1 .. max_level.
  std::vector<std::vector<Chart>> charts;
};

CheckPlan make_check_plan(const Projection& projection);

struct PointCheck {
  ProjectivePoint q;
  unsigned degree = 0;
  std::optional<Partition> partition;
  /// Z_lambda vanishing agrees with the fiber for every lambda.
  bool strata_ok = true;
  /// q in V(Z_deg) and q not in V(Z_{deg+1}).
  bool levels_ok = true;
  /// Some level-deg chart has nonvanishing leading coefficient at q.
  bool covered = true;
  /// Every covering chart restricts to a form with the fiber's pattern.
  bool charts_ok = true;
  std::vector<std::string> problems;

  bool consistent() const { return strata_ok && levels_ok && covered && charts_ok; }
};

PointCheck check_point(const CheckPlan& plan, const ProjectivePoint& q);

/// Parallel over points with OpenMP.
std::vector<PointCheck> check_points(const CheckPlan& plan, const std::vector<ProjectivePoint>& points);
/// Same results, one point after another.
std::vector<PointCheck> check_points_serial(const CheckPlan& plan, const std::vector<ProjectivePoint>& points);

} // namespace ramify
