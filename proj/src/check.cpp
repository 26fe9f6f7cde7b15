#include "ramify/check.hpp"

#include <exception>
#include <numeric>
#include <random>

namespace ramify {

std::vector<ProjectivePoint> sample_points(const Parametrization& param, std::size_t count, std::uint64_t seed) {
  std::vector<ProjectivePoint> out;
  if (param.parameters->size() != 2) throw std::invalid_argument("sampling needs a two-parameter map");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-30, 30);
  std::size_t drawn = 0;
  while (out.size() < count) {
    long s, t;
    if (drawn == 0) {
      s = 1, t = 0;
    } else if (drawn == 1) {
      s = 0, t = 1;
    } else {
      s = dist(rng);
      t = dist(rng);
      if (std::gcd(s, t) != 1) continue;
    }
    if (++drawn > 100 * (count + 2)) throw std::runtime_error("parametrization yields too few points");
    auto q = param.point_at({Scalar(s), Scalar(t)});
    if (q) out.push_back(std::move(*q));
  }
  return out;
}

CheckPlan make_check_plan(const Projection& projection) {
  CheckPlan plan{&projection, static_cast<unsigned>(projection.terminal()), {}, {}, {}};
  plan.z_levels.resize(plan.max_level + 2);
  plan.charts.resize(plan.max_level + 1);
  for (unsigned k = 1; k <= plan.max_level + 1; ++k) plan.z_levels[k] = projection.z_k_equations(k);
  for (unsigned k = 1; k <= plan.max_level; ++k) {
    plan.charts[k] = projection.charts(k);
    for (const auto& lambda : partitions_of(k)) plan.strata.push_back(projection.z_lambda(lambda));
  }
  return plan;
}

namespace {

bool all_vanish(const std::vector<Polynomial>& eqs, const ProjectivePoint& q) {
  for (const auto& g : eqs)
    if (!vanishes_at(g, q)) return false;
  return true;
}

} // namespace

PointCheck check_point(const CheckPlan& plan, const ProjectivePoint& q) {
  const Projection& proj = *plan.projection;
  const FiberReport report = fiber_form(proj.ideal(), q, proj.center());
  PointCheck out{q, report.degree, report.partition, true, true, true, true, {}};

  for (const auto& stratum : plan.strata) {
    const bool predicted = stratum.vanishes_at(q);
    const bool expected = in_closed_stratum(report, stratum.lambda);
    if (predicted != expected) {
      out.strata_ok = false;
      out.problems.push_back("Z_" + stratum.lambda.str() + (predicted ? " vanishes" : " does not vanish"));
    }
  }

  const unsigned d = report.degree;
  if (d >= 1 && d < plan.z_levels.size() && !all_vanish(plan.z_levels[d], q)) {
    out.levels_ok = false;
    out.problems.push_back("q is not on Z_" + std::to_string(d));
  }
  if (d + 1 < plan.z_levels.size() && all_vanish(plan.z_levels[d + 1], q)) {
    out.levels_ok = false;
    out.problems.push_back("q is on Z_" + std::to_string(d + 1));
  }

  if (d >= 1) {
    out.covered = false;
    if (d < plan.charts.size()) {
      for (const auto& chart : plan.charts[d]) {
        if (vanishes_at(chart.lc_input, q)) continue;
        out.covered = true;
        auto form = chart_form(chart, proj.change(), q);
        if (!form) continue;
        if (multiplicity_partition(*form) != *report.partition) {
          out.charts_ok = false;
          out.problems.push_back("chart " + chart.lc_input.str() + " gives pattern " +
                                 multiplicity_partition(*form).str());
        }
      }
    }
    if (!out.covered) out.problems.push_back("no level-" + std::to_string(d) + " chart covers q");
  }
  return out;
}

std::vector<PointCheck> check_points(const CheckPlan& plan, const std::vector<ProjectivePoint>& points) {
  std::vector<std::optional<PointCheck>> slots(points.size());
  const long n = static_cast<long>(points.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      slots[idx] = check_point(plan, points[idx]);
    } catch (...) {
#pragma omp critical(ramify_check_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<PointCheck> out;
  out.reserve(points.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<PointCheck> check_points_serial(const CheckPlan& plan, const std::vector<ProjectivePoint>& points) {
  std::vector<PointCheck> out;
  out.reserve(points.size());
  for (const auto& q : points) out.push_back(check_point(plan, q));
  return out;
}

} // namespace ramify
