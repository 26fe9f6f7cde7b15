#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramify/groebner.hpp"
#include "ramify/partitions.hpp"
#include "ramify/point.hpp"

namespace ramify {

/// Rational map P^1 -> P^n given by forms of equal degree in two parameters.
struct Parametrization {
  RingPtr parameters;
  std::vector<Polynomial> images;

  /// Image of the parameter values, or nullopt where every form vanishes.
  std::optional<ProjectivePoint> point_at(const std::vector<Scalar>& values) const;
};

/// Problem description: the scheme's ideal, the projection center, and
/// optional query points, partitions and parametrization.
struct ProblemFile {
  RingPtr ring;
  Ideal ideal;
  ProjectivePoint center;
  std::vector<ProjectivePoint> points;
  std::vector<Partition> partitions;
  std::optional<Parametrization> parametrization;
};

/// poly := [sign] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := base ('^' nat)?; base := rational | var | '(' poly ')'.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// "(a : b : c)" with rational entries.
ProjectivePoint parse_point(std::string_view text);

/// Statement file:
///   ring x0, x1, x2;
///   ideal x0^2 - x1*x2;
///   center (1 : 0 : 0);
///   points (0:1:1), (0:1:0);          optional
///   partitions (2), (1,1);            optional
///   parametrization (s, t) -> (s*t, s^2, t^2);   optional
/// '#' starts a comment. Rejects inhomogeneous generators and centers on
/// the scheme.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);

/// Round-trips through parse_polynomial.
std::string serialize(const Polynomial& f);
/// "{g1, g2}", "{0}" for the zero ideal.
std::string serialize(const Ideal& ideal);

} // namespace ramify
