#pragma once

#include <optional>
#include <string>

#include "ramify/crl.hpp"
#include "ramify/point.hpp"

namespace ramify {

/// Two-variable ring (s, t) used for lines through the center.
RingPtr line_ring();

/// f restricted to the line {s*q + t*p}: a binary form in (s, t) of degree
/// deg(f), or zero. Throws std::invalid_argument when q = p.
Polynomial restrict_to_line(const Polynomial& f, const ProjectivePoint& q, const ProjectivePoint& p);

/// Fiber of the projection from p through q.
struct FiberReport {
  ProjectivePoint q;
  /// Generator of the saturated fiber ideal on the line; nullopt when the
  /// fiber is empty (q is not on the image).
  std::optional<BinaryForm> form;
  unsigned degree = 0;
  std::optional<Partition> partition;

  bool empty() const { return !form.has_value(); }
};

/// F_q is the gcd of the restrictions of all generators. Throws
/// std::invalid_argument for q = p or the zero ideal, and CenterOnScheme
/// when every restriction vanishes (the whole line lies on V(I)).
FiberReport fiber_form(const Ideal& ideal, const ProjectivePoint& q, const ProjectivePoint& p);

enum class StratumMembership { InOpenStratum, InClosedStratumOnly, NotInStratum };

std::string to_string(StratumMembership m);

StratumMembership classify_point(const FiberReport& report, const Partition& lambda);
StratumMembership classify_point(const Ideal& ideal, const ProjectivePoint& q, const ProjectivePoint& p,
                                 const Partition& lambda);

/// Length-comparison rule behind Z_lambda: the fiber is longer than |lambda|,
/// or has length |lambda| and a pattern coarsening lambda.
bool in_closed_stratum(const FiberReport& report, const Partition& lambda);

} // namespace ramify
