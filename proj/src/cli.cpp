#include "ramify/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "ramify/check.hpp"
#include "ramify/errors.hpp"

namespace ramify {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string format = "text";
  std::string file;
  std::string lambda;
  std::vector<std::string> points;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
};

Json string_list(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.str());
  return out;
}

std::string braces(const std::vector<Polynomial>& polys) {
  if (polys.empty()) return "{ }";
  std::string s = "{ ";
  for (std::size_t i = 0; i < polys.size(); ++i) s += (i ? ", " : "") + polys[i].str();
  return s + " }";
}

std::string level_str(const Ideal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.size() == 1 && gens[0].is_constant()) return "(1)";
  return ideal.str();
}

Partition parse_lambda(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::logic_error& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::vector<Partition> selected_partitions(const Config& cfg, const ProblemFile& problem, std::size_t terminal) {
  if (!cfg.lambda.empty()) return {parse_lambda(cfg.lambda)};
  if (!problem.partitions.empty()) return problem.partitions;
  std::vector<Partition> all;
  for (unsigned k = 1; k <= terminal; ++k)
    for (auto& lambda : partitions_of(k)) all.push_back(std::move(lambda));
  return all;
}

Json psi_json(const CoordinateChange& change) {
  Json m = Json::array();
  for (const auto& row : change.matrix()) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    m.push_back(std::move(r));
  }
  return m;
}

void print_psi(const CoordinateChange& change, std::ostream& out) {
  if (change.is_identity()) return;
  const RingPtr& ring = change.ring();
  out << "psi:";
  for (std::size_t i = 0; i < ring->size(); ++i) {
    out << (i ? ", " : " ") << ring->name(i) << " -> "
        << change.apply(Polynomial::variable(ring, i)).str();
  }
  out << "\n";
}

int cmd_gb(const Config& cfg, std::ostream& out) {
  const ProblemFile problem = load_problem(cfg.file);
  const auto order = MonomialOrder::degrevlex();
  const GroebnerBasis G = buchberger(problem.ideal, order);
  const auto basis = normalize_generators(G.basis());
  if (cfg.format == "json") {
    Json j;
    j["command"] = "gb";
    j["order"] = order.describe();
    j["generators"] = string_list(basis);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& g : basis) out << g.str() << "\n";
  }
  return kExitOk;
}

int cmd_pei(const Config& cfg, std::ostream& out) {
  const ProblemFile problem = load_problem(cfg.file);
  const Projection proj(problem.ideal, problem.center);
  const PeiChain& chain = proj.chain();
  if (cfg.format == "json") {
    Json j;
    j["command"] = "pei";
    j["psi"] = psi_json(proj.change());
    j["generators"] = string_list(chain.basis().basis());
    Json levels = Json::array();
    for (const auto& level : chain.levels()) levels.push_back(string_list(level.generators()));
    j["levels"] = std::move(levels);
    j["terminal"] = chain.terminal();
    out << j.dump(2) << "\n";
  } else {
    print_psi(proj.change(), out);
    for (std::size_t k = 0; k < chain.levels().size(); ++k)
      out << "K_" << k << " = " << level_str(chain.levels()[k]) << "; ";
    out << "l = " << chain.terminal() << "\n";
  }
  return kExitOk;
}

int cmd_crl(const Config& cfg, std::ostream& out) {
  if (cfg.lambda.empty()) throw ParseError("crl needs --lambda", 1, 1);
  const Partition lambda = parse_lambda(cfg.lambda);
  const CrlIdeal crl = coincident_root_ideal(lambda);
  if (cfg.format == "json") {
    Json j;
    j["command"] = "crl";
    j["lambda"] = lambda.str();
    j["k"] = lambda.k();
    j["weights"] = crl.weights;
    j["generators"] = string_list(crl.ideal.generators());
    out << j.dump(2) << "\n";
  } else {
    if (crl.ideal.is_zero()) out << "0\n";
    for (const auto& g : crl.ideal.generators()) out << g.str() << "\n";
  }
  return kExitOk;
}

int cmd_ramify(const Config& cfg, std::ostream& out) {
  const ProblemFile problem = load_problem(cfg.file);
  const Projection proj(problem.ideal, problem.center);
  const auto partitions = selected_partitions(cfg, problem, proj.terminal());
  std::vector<StratumEquations> strata;
  for (const auto& lambda : partitions) strata.push_back(proj.z_lambda(lambda));
  std::vector<Chart> all_charts;
  for (unsigned k = 1; k <= proj.terminal(); ++k)
    for (auto& c : proj.charts(k)) all_charts.push_back(std::move(c));

  if (cfg.format == "json") {
    Json j;
    j["command"] = "ramify";
    j["center"] = problem.center.str();
    j["psi"] = psi_json(proj.change());
    j["terminal"] = proj.terminal();
    Json js = Json::array();
    for (const auto& s : strata) {
      Json e;
      e["lambda"] = s.lambda.str();
      e["k"] = s.lambda.k();
      e["empty"] = s.empty;
      e["generators"] = s.empty ? Json::array() : string_list(s.generators);
      e["k_part"] = string_list(s.k_part);
      e["crl_part"] = string_list(s.crl_part);
      js.push_back(std::move(e));
    }
    j["strata"] = std::move(js);
    Json jc = Json::array();
    for (const auto& c : all_charts) {
      Json e;
      e["level"] = c.level;
      e["g"] = c.g_input.str();
      e["lc"] = c.lc_input.str();
      jc.push_back(std::move(e));
    }
    j["charts"] = std::move(jc);
    out << j.dump(2) << "\n";
  } else {
    print_psi(proj.change(), out);
    for (const auto& s : strata) {
      out << "Z_" << s.lambda.str() << ": ";
      if (s.empty) out << "empty stratum\n";
      else out << braces(s.generators) << "\n";
    }
    for (const auto& c : all_charts)
      out << "chart k=" << c.level << ": LC = " << c.lc_input.str() << " for g = " << c.g_input.str() << "\n";
  }
  return kExitOk;
}

int cmd_fiber(const Config& cfg, std::ostream& out) {
  const ProblemFile problem = load_problem(cfg.file);
  std::vector<ProjectivePoint> points;
  for (const auto& text : cfg.points) {
    points.push_back(parse_point(text));
    if (points.back().size() != problem.ring->size())
      throw ParseError("point " + points.back().str() + " does not match the ring", 1, 1);
  }
  if (points.empty()) points = problem.points;
  if (points.empty()) throw ParseError("fiber needs --point or a points section", 1, 1);
  std::vector<Partition> partitions = problem.partitions;
  if (!cfg.lambda.empty()) partitions = {parse_lambda(cfg.lambda)};

  Json reports = Json::array();
  for (const auto& q : points) {
    const FiberReport r = fiber_form(problem.ideal, q, problem.center);
    if (cfg.format == "json") {
      Json e;
      e["point"] = q.str();
      e["empty"] = r.empty();
      e["form"] = r.form ? Json(r.form->to_polynomial(line_ring()).str()) : Json(nullptr);
      e["degree"] = r.degree;
      e["partition"] = r.partition ? Json(r.partition->str()) : Json(nullptr);
      Json cls = Json::object();
      for (const auto& lambda : partitions) cls[lambda.str()] = to_string(classify_point(r, lambda));
      e["classification"] = std::move(cls);
      reports.push_back(std::move(e));
    } else {
      out << "q = " << q.str() << "\n";
      out << "F_q = " << (r.form ? r.form->to_polynomial(line_ring()).str() : "1 (empty fiber)") << "\n";
      out << "degree = " << r.degree << "\n";
      out << "partition = " << (r.partition ? r.partition->str() : "none") << "\n";
      for (const auto& lambda : partitions)
        out << "lambda " << lambda.str() << ": " << to_string(classify_point(r, lambda)) << "\n";
    }
  }
  if (cfg.format == "json") {
    Json j;
    j["command"] = "fiber";
    j["report"] = std::move(reports);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_check(const Config& cfg, std::ostream& out) {
  const ProblemFile problem = load_problem(cfg.file);
  if (!problem.parametrization)
    throw InputRejected("NO_PARAMETRIZATION", "check needs a parametrization section to sample points");
  const Projection proj(problem.ideal, problem.center);
  std::vector<PointCheck> results;
  if (cfg.samples > 0) {
    const auto points = sample_points(*problem.parametrization, cfg.samples, cfg.seed);
    const CheckPlan plan = make_check_plan(proj);
    results = check_points(plan, points);
  }
  std::size_t good = 0;
  for (const auto& r : results) good += r.consistent() ? 1 : 0;

  if (cfg.format == "json") {
    Json j;
    j["command"] = "check";
    Json report;
    report["samples"] = results.size();
    report["consistent"] = good;
    report["seed"] = cfg.seed;
    Json bad = Json::array();
    for (const auto& r : results) {
      if (r.consistent()) continue;
      Json e;
      e["point"] = r.q.str();
      e["degree"] = r.degree;
      e["problems"] = r.problems;
      bad.push_back(std::move(e));
    }
    report["failures"] = std::move(bad);
    j["report"] = std::move(report);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (r.consistent()) continue;
      out << "inconsistent at " << r.q.str() << ":";
      for (const auto& p : r.problems) out << " " << p << ";";
      out << "\n";
    }
    out << good << "/" << results.size() << " consistent\n";
  }
  return good == results.size() ? kExitOk : kExitInconsistent;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramification of outer linear projections, in exact arithmetic", "ramify"};
  app.require_subcommand(1);
  Config cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", cfg.file, "Problem file")->required()->check(CLI::ExistingFile);
  };

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis (degrevlex)");
  add_file(gb);
  add_format(gb);
  auto* pei = app.add_subcommand("pei", "Partial elimination ideals K_0 .. K_l");
  add_file(pei);
  add_format(pei);
  auto* crl = app.add_subcommand("crl", "Ideal of the coincident root locus X_lambda");
  crl->add_option("--lambda", cfg.lambda, "Partition, e.g. \"(2,1)\"")->required();
  add_format(crl);
  auto* ram = app.add_subcommand("ramify", "Equations of the strata Z_lambda and the charts");
  add_file(ram);
  add_format(ram);
  ram->add_option("--lambda", cfg.lambda, "Only this partition");
  auto* fib = app.add_subcommand("fiber", "Fiber form F_q at points");
  add_file(fib);
  add_format(fib);
  fib->add_option("--point", cfg.points, "Point, e.g. \"(0:1:1)\"; repeatable");
  fib->add_option("--lambda", cfg.lambda, "Classify against this partition");
  auto* chk = app.add_subcommand("check", "Pointwise consistency on sampled points");
  add_file(chk);
  add_format(chk);
  chk->add_option("--samples", cfg.samples, "Number of sample points");
  chk->add_option("--seed", cfg.seed, "Sampling seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (gb->parsed()) return cmd_gb(cfg, out);
    if (pei->parsed()) return cmd_pei(cfg, out);
    if (crl->parsed()) return cmd_crl(cfg, out);
    if (ram->parsed()) return cmd_ramify(cfg, out);
    if (fib->parsed()) return cmd_fiber(cfg, out);
    if (chk->parsed()) return cmd_check(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kExitParse;
  } catch (const InputRejected& e) {
    err << e.what() << "\n";
    return kExitRejected;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRejected;
  }
  return kExitParse;
}

} // namespace ramify
