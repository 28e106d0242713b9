#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "planar_monoid/catalog.hpp"
#include "planar_monoid/designs.hpp"
#include "planar_monoid/io.hpp"
#include "planar_monoid/parallel.hpp"
#include "planar_monoid/plumbing.hpp"
#include "planar_monoid/search.hpp"

namespace {

using pm::Json;

struct Options {
  int jobs = 0;
  std::uint64_t seed = pm::SearchLimits{}.seed;
  std::string path;
  int n = 0;
  int m = 0;
  bool fast = false;
  bool audit = false;
  std::string sym = "dihedral";
  std::string format = "dot";
  int cap = pm::SearchLimits{}.cap;
  std::uint64_t budget = pm::SearchLimits{}.node_budget;
  int restarts = pm::SearchLimits{}.restarts;
  std::size_t keep = pm::SearchLimits{}.max_orderings;
};

pm::SearchLimits limits_of(const Options& o) {
  pm::SearchLimits l;
  l.cap = o.cap;
  l.node_budget = o.budget;
  l.restarts = o.restarts;
  l.seed = o.seed;
  l.max_orderings = o.keep;
  l.jobs = pm::resolve_jobs(o.jobs);
  return l;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_verify(const Options& o) {
  const pm::Relation r = pm::relation_from_json(pm::read_json_file(o.path), o.path);
  const auto rep = pm::verify(r, !o.fast);
  print(pm::to_json(rep));
  const bool ok = rep.verified() && (!rep.oracle_checked || rep.oracle_agreement);
  return ok ? 0 : 1;
}

int cmd_catalog(const Options& o) {
  const auto relations = pm::builtin(o.n);
  const auto reports = pm::verify_all(relations, !o.fast, pm::resolve_jobs(o.jobs));
  Json j;
  j["n"] = o.n;
  j["oracle"] = o.fast ? "skipped" : "checked";
  int verified = 0;
  bool agree = true;
  j["relations"] = Json::array();
  for (const auto& r : reports) {
    verified += r.verified() ? 1 : 0;
    agree = agree && (!r.oracle_checked || r.oracle_agreement);
    j["relations"].push_back(pm::to_json(r));
  }
  j["verified"] = verified;
  j["total"] = reports.size();
  j["discrepancies"] = Json::array();
  for (const auto& d : pm::discrepancy_report(o.n)) j["discrepancies"].push_back(pm::to_json(d));
  if (o.audit) j["audit"] = pm::to_json(pm::completeness_check(o.n, pm::parse_symmetry(o.sym), limits_of(o)));
  print(j);
  std::cerr << verified << "/" << reports.size() << " verified"
            << (o.fast ? ", oracle skipped" : (agree ? ", oracle agrees" : ", oracle DISAGREES")) << '\n';
  for (const auto& r : reports) {
    std::cerr << "  " << r.label << "  chi " << r.lhs_chi << " -> " << r.rhs_chi << (r.verified() ? "" : "  FAILED")
              << '\n';
  }
  return verified == static_cast<int>(reports.size()) && agree ? 0 : 1;
}

int cmd_enumerate(const Options& o) {
  const auto mode = pm::parse_symmetry(o.sym);
  const auto designs = pm::enumerate(o.m, mode);
  Json j;
  j["m"] = o.m;
  j["symmetry"] = pm::to_string(mode);
  j["count"] = designs.size();
  j["designs"] = Json::array();
  for (const auto& d : designs) {
    Json e = pm::to_json(d);
    e["replication"] = pm::replication(d);
    e["exponents"] = pm::exponents_from_design(d).exponents;
    j["designs"].push_back(std::move(e));
  }
  print(j);
  return 0;
}

int cmd_search(const Options& o) {
  const pm::Design d = pm::design_from_json(pm::read_json_file(o.path));
  print(pm::to_json(pm::search_orderings(d, limits_of(o)), d));
  return 0;
}

int cmd_plumb(const Options& o) {
  const Json j = pm::read_json_file(o.path);
  const pm::BoundaryWord lhs =
      j.contains("lhs") ? pm::relation_from_json(j, o.path).lhs : pm::boundary_word_from_json(j);
  if (o.format != "dot" && o.format != "json") throw std::invalid_argument("format must be dot or json");
  const auto g = pm::plumbing_of(lhs);
  std::cout << pm::emit(g, o.format == "dot" ? pm::GraphFormat::dot : pm::GraphFormat::json);
  if (o.format == "json") std::cout << '\n';
  return 0;
}

int cmd_bounds(const Options& o) {
  print(pm::to_json(pm::bounds(o.n)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relations in the mapping class monoid of the n-holed sphere"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--jobs", o.jobs, "worker threads (default: PLANAR_MONOID_JOBS or all cores)");
  app.add_option("--seed", o.seed, "seed for randomized search");

  int (*run)(const Options&) = nullptr;

  auto* verify = app.add_subcommand("verify", "verify a relation file");
  verify->add_option("path", o.path, "relation JSON")->required();
  verify->add_flag("--fast", o.fast, "skip the Lawrence-Krammer cross-check");
  verify->callback([&] { run = cmd_verify; });

  auto* catalog = app.add_subcommand("catalog", "verify the built-in relations");
  catalog->add_option("--n", o.n, "boundary components (5, 6 or 7)")->required();
  catalog->add_flag("--fast", o.fast, "skip the Lawrence-Krammer cross-check");
  catalog->add_flag("--audit", o.audit, "also run the completeness audit");
  catalog->add_option("--sym", o.sym, "audit symmetry: labeled, dihedral or symmetric");
  catalog->add_option("--cap", o.cap, "exhaustive search up to this many blocks");
  catalog->add_option("--budget", o.budget, "nodes per randomized restart");
  catalog->add_option("--restarts", o.restarts, "randomized restarts per design");
  catalog->callback([&] { run = cmd_catalog; });

  auto* enumerate = app.add_subcommand("enumerate", "list linear spaces up to symmetry");
  enumerate->add_option("--m", o.m, "number of points (3..7)")->required();
  enumerate->add_option("--sym", o.sym, "labeled, dihedral or symmetric");
  enumerate->callback([&] { run = cmd_enumerate; });

  auto* search = app.add_subcommand("search", "find block orderings giving the outer twist");
  search->add_option("--design", o.path, "design JSON")->required();
  search->add_option("--cap", o.cap, "exhaustive search up to this many blocks");
  search->add_option("--budget", o.budget, "nodes per randomized restart");
  search->add_option("--restarts", o.restarts, "randomized restarts");
  search->add_option("--max", o.keep, "orderings to list");
  search->callback([&] { run = cmd_search; });

  auto* plumb = app.add_subcommand("plumb", "plumbing graph of a left-hand side");
  plumb->add_option("--file", o.path, "relation or boundary word JSON")->required();
  plumb->add_option("--format", o.format, "dot or json");
  plumb->callback([&] { run = cmd_plumb; });

  auto* bounds = app.add_subcommand("bounds", "twist count and Euler characteristic bounds");
  bounds->add_option("--n", o.n, "boundary components (>= 5)")->required();
  bounds->callback([&] { run = cmd_bounds; });

  for (auto* sub : {verify, catalog, enumerate, search, plumb, bounds}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
