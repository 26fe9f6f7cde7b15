#include "ramify/fiber.hpp"

#include <stdexcept>

#include "ramify/errors.hpp"
#include "ramify/univariate.hpp"

namespace ramify {

namespace {

// Binary form in (s, t) as s^a * h(t) with h(t) = F(1, t) / t^0 of degree d - a.
struct SplitForm {
  unsigned s_power;
  UPoly dehomogenized;
};

SplitForm split(const Polynomial& f) {
  const int d = f.total_degree();
  std::vector<Scalar> c(static_cast<std::size_t>(d) + 1);
  for (const auto& term : f.terms()) c[term.monomial[1]] = term.coefficient;
  unsigned top = 0;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) top = static_cast<unsigned>(j);
  return {static_cast<unsigned>(d) - top, UPoly(std::move(c))};
}

} // namespace

RingPtr line_ring() {
  static const RingPtr ring = make_ring({"s", "t"});
  return ring;
}

Polynomial restrict_to_line(const Polynomial& f, const ProjectivePoint& q, const ProjectivePoint& p) {
  if (q.size() != p.size() || q.size() != f.ring()->size())
    throw std::invalid_argument("point dimension does not match the ring");
  if (q == p) throw std::invalid_argument("query point equals the center");
  const RingPtr& st = line_ring();
  const Polynomial s = Polynomial::variable(st, std::size_t{0});
  const Polynomial t = Polynomial::variable(st, std::size_t{1});
  std::vector<Polynomial> images;
  images.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) images.push_back(q[i] * s + p[i] * t);
  return substitute(f, images);
}

FiberReport fiber_form(const Ideal& ideal, const ProjectivePoint& q, const ProjectivePoint& p) {
  if (ideal.is_zero()) throw std::invalid_argument("fiber of the zero ideal is the whole line");
  std::optional<unsigned> s_power;
  UPoly g;
  for (const auto& gen : ideal.generators()) {
    Polynomial r = restrict_to_line(gen, q, p);
    if (r.is_zero()) continue;
    SplitForm part = split(r);
    s_power = s_power ? std::min(*s_power, part.s_power) : part.s_power;
    g = gcd(g, part.dehomogenized);
  }
  if (!s_power) throw CenterOnScheme("the line through " + q.str() + " and the center lies on V(I)");

  const unsigned d = *s_power + static_cast<unsigned>(g.degree());
  FiberReport report{q, std::nullopt, d, std::nullopt};
  if (d == 0) return report;
  // F = s^a * sum_j g_j s^(deg g - j) t^j; coefficient of s^(d-j) t^j is g_j.
  std::vector<Scalar> coeffs(d + 1);
  for (std::size_t j = 0; j < g.coeffs().size(); ++j) coeffs[j] = g.coeffs()[j];
  report.form = BinaryForm(std::move(coeffs));
  report.partition = multiplicity_partition(*report.form);
  return report;
}

std::string to_string(StratumMembership m) {
  switch (m) {
  case StratumMembership::InOpenStratum: return "IN_OPEN_STRATUM";
  case StratumMembership::InClosedStratumOnly: return "IN_CLOSED_STRATUM_ONLY";
  case StratumMembership::NotInStratum: return "NOT_IN_STRATUM";
  }
  return "?";
}

bool in_closed_stratum(const FiberReport& report, const Partition& lambda) {
  if (report.empty()) return false;
  if (report.degree > lambda.k()) return true;
  return report.degree == lambda.k() && is_coarsening(*report.partition, lambda);
}

StratumMembership classify_point(const FiberReport& report, const Partition& lambda) {
  if (report.partition && *report.partition == lambda) return StratumMembership::InOpenStratum;
  if (in_closed_stratum(report, lambda)) return StratumMembership::InClosedStratumOnly;
  return StratumMembership::NotInStratum;
}

StratumMembership classify_point(const Ideal& ideal, const ProjectivePoint& q, const ProjectivePoint& p,
                                 const Partition& lambda) {
  return classify_point(fiber_form(ideal, q, p), lambda);
}

} // namespace ramify
