#include "planar_monoid/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "planar_monoid/io.hpp"
#include "planar_monoid/lawrence_krammer.hpp"
#include "planar_monoid/parallel.hpp"
#include "planar_monoid/plumbing.hpp"

namespace pm {

namespace detail {
extern const std::string_view catalog_json;
}

namespace {

struct CatalogData {
  std::vector<CatalogEntry> entries;
  std::vector<Filling> fillings;
};

const CatalogData& data() {
  static const CatalogData d = [] {
    CatalogData out;
    const Json j = Json::parse(detail::catalog_json);
    for (const auto& r : j.at("relations")) {
      CatalogEntry e{relation_from_json(r, ""), {}, {}, {}};
      if (r.contains("printed_lhs")) {
        if (r.at("printed_lhs").is_string()) {
          e.printed_lhs_text = r.at("printed_lhs").get<std::string>();
        } else {
          e.printed_lhs = r.at("printed_lhs").get<std::vector<int>>();
        }
      }
      if (r.contains("printed_rhs")) e.printed_rhs = r.at("printed_rhs").get<std::vector<std::vector<int>>>();
      out.entries.push_back(std::move(e));
    }
    for (const auto& f : j.at("fillings")) {
      const auto chi = f.at("printed_chi").get<std::vector<int>>();
      out.fillings.push_back({f.at("n").get<int>(), f.at("item").get<std::string>(),
                              f.at("relations").get<std::vector<std::string>>(), {chi.at(0), chi.at(1)}});
    }
    return out;
  }();
  return d;
}

void check_catalog_n(int n) {
  if (n < 5 || n > 7) throw std::out_of_range("the catalog covers n = 5, 6, 7");
}

std::string tuple_text(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string pair_text(int a, int b) { return std::to_string(a) + " -> " + std::to_string(b); }

const CatalogEntry& entry(const std::string& label) {
  for (const auto& e : data().entries) {
    if (e.relation.label == label) return e;
  }
  throw std::out_of_range("no catalog relation " + label);
}

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() { return data().entries; }

std::vector<Relation> builtin(int n) {
  check_catalog_n(n);
  std::vector<Relation> out;
  for (const auto& e : data().entries) {
    if (e.relation.lhs.surface.n() == n) out.push_back(e.relation);
  }
  return out;
}

std::vector<Filling> fillings(int n) {
  check_catalog_n(n);
  std::vector<Filling> out;
  for (const auto& f : data().fillings) {
    if (f.n == n) out.push_back(f);
  }
  return out;
}

Relation printed_relation(const std::string& label) {
  const auto& e = entry(label);
  Relation r = e.relation;
  if (!e.printed_lhs.empty()) r.lhs = BoundaryWord(r.lhs.surface, e.printed_lhs, r.lhs.outer);
  if (!e.printed_rhs.empty()) {
    std::vector<ConvexCurve> factors;
    for (const auto& b : e.printed_rhs) factors.push_back(ConvexCurve::around(b));
    r.rhs = TwistWord(r.rhs.surface, std::move(factors));
  }
  return r;
}

VerificationReport verify(const Relation& r, bool with_oracle) {
  VerificationReport rep;
  rep.label = r.label;
  const TwistWord lhs = r.lhs.expand();
  const auto cmp = compare(lhs, r.rhs);
  rep.braid_equal = cmp.braid_equal;
  rep.multiplicities_equal = cmp.multiplicities_equal;
  rep.outer_count_differs = cmp.outer_count_differs;
  rep.lhs_multiplicities = multiplicities(lhs).interior;
  rep.rhs_multiplicities = multiplicities(r.rhs).interior;
  rep.lhs_chi = euler_characteristic(lhs);
  rep.rhs_chi = euler_characteristic(r.rhs);
  if (with_oracle) {
    rep.oracle_checked = true;
    rep.oracle_agreement = lk_equal(to_braid(lhs), to_braid(r.rhs)) == rep.braid_equal;
  }
  return rep;
}

std::vector<VerificationReport> verify_all(const std::vector<Relation>& rs, bool with_oracle, int jobs) {
  return parallel_map(rs.size(), resolve_jobs(jobs), [&](std::size_t i) { return verify(rs[i], with_oracle); });
}

std::vector<Discrepancy> discrepancy_report(int n) {
  check_catalog_n(n);
  std::vector<Discrepancy> out;
  for (const auto& e : data().entries) {
    const auto& r = e.relation;
    if (r.lhs.surface.n() != n) continue;
    if (!e.printed_lhs_text.empty()) {
      out.push_back({r.label, "lhs transcription", e.printed_lhs_text, "exponents " + tuple_text(r.lhs.exponents)});
    }
    if (!e.printed_lhs.empty()) {
      const auto rhs_m = multiplicities(r.rhs).interior;
      out.push_back({r.label, "lhs exponents", tuple_text(e.printed_lhs),
                     tuple_text(r.lhs.exponents) + " from rhs multiplicities " + tuple_text(rhs_m)});
    }
    if (!e.printed_rhs.empty()) {
      std::string printed, used;
      for (std::size_t k = 0; k < e.printed_rhs.size(); ++k) {
        if (e.printed_rhs[k] != r.rhs.factors[k].support()) {
          printed += "block " + std::to_string(k + 1) + " " + tuple_text(e.printed_rhs[k]);
          used += "block " + std::to_string(k + 1) + " " + tuple_text(r.rhs.factors[k].support());
        }
      }
      out.push_back({r.label, "rhs block", printed, used});
    }
  }
  for (const auto& f : fillings(n)) {
    for (const auto& label : f.relations) {
      const auto& r = entry(label).relation;
      const int lhs = euler_characteristic(r.lhs);
      const int rhs = euler_characteristic(r.rhs);
      if (lhs != f.printed_chi.first || rhs != f.printed_chi.second) {
        out.push_back({"filling " + std::to_string(n) + "/" + f.item + " (" + label + ")", "euler characteristic",
                       pair_text(f.printed_chi.first, f.printed_chi.second), pair_text(lhs, rhs)});
      }
    }
  }
  return out;
}

AuditReport completeness_check(int n, SymmetryMode mode, const SearchLimits& limits) {
  check_catalog_n(n);
  const int m = n - 1;
  AuditReport report;
  report.n = n;
  report.mode = mode;
  const auto reps = enumerate(m, mode);
  const auto group = symmetry_group(m, mode);

  // Known orderings of each class, carried over from the catalog.
  std::vector<std::vector<std::string>> labels(reps.size());
  std::vector<std::vector<std::vector<int>>> seeds(reps.size());
  for (const auto& r : builtin(n)) {
    const Design d = from_rhs(r.rhs);
    const Design c = canonical(d, mode);
    const auto it = std::lower_bound(reps.begin(), reps.end(), c);
    if (it == reps.end() || !(*it == c)) {
      report.unmatched_catalog.push_back(r.label);
      continue;
    }
    const auto k = static_cast<std::size_t>(it - reps.begin());
    labels[k].push_back(r.label);
    for (const auto& g : group) {
      if (!(relabel(d, g) == c)) continue;
      std::vector<int> order;
      for (const auto& f : r.rhs.factors) {
        std::vector<int> image = f.support();
        for (auto& p : image) p = g[static_cast<std::size_t>(p - 1)];
        std::sort(image.begin(), image.end());
        const auto& blocks = c.blocks();
        order.push_back(static_cast<int>(std::find(blocks.begin(), blocks.end(), image) - blocks.begin()));
      }
      seeds[k].push_back(std::move(order));
      break;
    }
  }

  const int jobs = resolve_jobs(limits.jobs);
  auto searches = parallel_map(reps.size(), jobs, [&](std::size_t k) {
    SearchLimits l = limits;
    l.jobs = 1;
    l.seeds.insert(l.seeds.end(), seeds[k].begin(), seeds[k].end());
    return search_orderings(reps[k], l);
  });

  for (std::size_t k = 0; k < reps.size(); ++k) {
    AuditClass c{reps[k], exponents_from_design(reps[k]), std::move(searches[k]), labels[k], false};
    c.matches_catalog = (c.search.orderings_total > 0) == !c.catalog_labels.empty();
    report.classes.push_back(std::move(c));
  }

  std::map<std::vector<int>, ReplicationGroup> groups;
  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    const auto& c = report.classes[k];
    auto& g = groups[sorted_copy(c.exponents.exponents)];
    g.sorted_exponents = sorted_copy(c.exponents.exponents);
    g.classes.push_back(k);
    g.realized = g.realized || c.search.orderings_total > 0;
    g.catalogued = g.catalogued || !c.catalog_labels.empty();
  }
  for (const auto& f : fillings(n)) {
    const auto key = sorted_copy(entry(f.relations.front()).relation.lhs.exponents);
    if (auto it = groups.find(key); it != groups.end()) it->second.filling_item = f.item;
  }
  for (auto& [key, g] : groups) report.groups.push_back(std::move(g));
  return report;
}

}  // namespace pm
