#include "planar_monoid/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "planar_monoid/dual_garside.hpp"
#include "planar_monoid/parallel.hpp"

namespace pm {

namespace {

// The mirrored swing of a convex curve on points B is delta_B^{|B|} in the
// dual monoid, and the mirrored full twist is delta^m. A prefix can only be
// completed if it still left-divides delta^m, i.e. its supremum stays <= m.
class Problem {
 public:
  explicit Problem(const Design& d) : m_(d.points()) {
    for (const auto& b : d.blocks()) simples_.push_back(dual::block_simple(m_, b));
    powers_.reserve(d.size());
    for (const auto& b : d.blocks()) powers_.push_back(static_cast<int>(b.size()));
  }

  int strands() const { return m_; }
  std::size_t blocks() const { return simples_.size(); }

  // False if the product no longer divides delta^m.
  bool append(dual::Accumulator& acc, std::size_t block) const {
    for (int r = 0; r < powers_[block]; ++r) acc.multiply(simples_[block]);
    return acc.supremum() <= m_;
  }

  bool complete(const dual::Accumulator& acc) const { return acc.infimum() == m_ && acc.supremum() == m_; }

 private:
  int m_;
  std::vector<Permutation> simples_;
  std::vector<int> powers_;
};

std::string state_key(std::uint32_t mask, const dual::Accumulator& acc) {
  std::string key(reinterpret_cast<const char*>(&mask), sizeof mask);
  const auto bytes = acc.key();
  key.append(bytes.begin(), bytes.end());
  return key;
}

struct Exhaustive {
  const Problem& problem;
  std::size_t keep;
  std::unordered_map<std::string, std::uint64_t> memo;  // state -> completions
  std::vector<std::vector<int>> found;
  std::vector<int> prefix;
  std::uint64_t nodes = 0;

  std::uint64_t run(std::uint32_t mask, const dual::Accumulator& acc) {
    ++nodes;
    const std::uint32_t full = (1u << problem.blocks()) - 1;
    if (mask == full) {
      if (!problem.complete(acc)) return 0;
      if (found.size() < keep) found.push_back(prefix);
      return 1;
    }
    const auto key = state_key(mask, acc);
    if (auto it = memo.find(key); it != memo.end() && (it->second == 0 || found.size() >= keep)) return it->second;
    std::uint64_t total = 0;
    for (std::size_t b = 0; b < problem.blocks(); ++b) {
      if (mask & (1u << b)) continue;
      dual::Accumulator next = acc;
      if (!problem.append(next, b)) continue;
      prefix.push_back(static_cast<int>(b));
      total += run(mask | (1u << b), next);
      prefix.pop_back();
    }
    memo[key] = total;
    return total;
  }
};

struct Randomized {
  const Problem& problem;
  std::uint64_t budget;
  std::mt19937_64 rng;
  std::unordered_map<std::string, bool> dead;
  std::vector<int> prefix;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  bool run(std::uint32_t mask, const dual::Accumulator& acc) {
    if (nodes >= budget) {
      out_of_budget = true;
      return false;
    }
    ++nodes;
    const std::uint32_t full = (1u << problem.blocks()) - 1;
    if (mask == full) return problem.complete(acc);
    const auto key = state_key(mask, acc);
    if (dead.count(key)) return false;
    std::vector<int> order;
    for (std::size_t b = 0; b < problem.blocks(); ++b) {
      if (!(mask & (1u << b))) order.push_back(static_cast<int>(b));
    }
    std::shuffle(order.begin(), order.end(), rng);
    for (int b : order) {
      dual::Accumulator next = acc;
      if (!problem.append(next, static_cast<std::size_t>(b))) continue;
      prefix.push_back(b);
      if (run(mask | (1u << b), next)) return true;
      prefix.pop_back();
      if (out_of_budget) return false;
    }
    dead.emplace(key, true);
    return false;
  }
};

}  // namespace

const char* to_string(SearchStatus s) { return s == SearchStatus::exhausted ? "exhausted" : "budget"; }

bool realizes_full_twist(const Design& d, const std::vector<int>& order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> all(d.size());
  std::iota(all.begin(), all.end(), 0);
  if (sorted != all) return false;
  const TwistWord rhs = ordered_word(d, order);
  return equivalent(exponents_from_design(d).expand(), rhs);
}

SearchReport search_orderings(const Design& d, const SearchLimits& limits) {
  if (d.size() > 31) throw std::out_of_range("too many blocks for ordering search");
  const Problem problem(d);
  const int jobs = resolve_jobs(limits.jobs);
  SearchReport report;

  if (static_cast<int>(d.size()) <= limits.cap) {
    struct Branch {
      std::uint64_t count = 0, nodes = 0;
      std::vector<std::vector<int>> found;
    };
    auto branches = parallel_map(d.size(), jobs, [&](std::size_t first) {
      Branch out;
      dual::Accumulator acc(problem.strands());
      if (!problem.append(acc, first)) return out;
      Exhaustive ex{problem, limits.max_orderings, {}, {}, {static_cast<int>(first)}, 0};
      out.count = ex.run(1u << first, acc);
      out.nodes = ex.nodes;
      out.found = std::move(ex.found);
      return out;
    });
    report.status = SearchStatus::exhausted;
    for (auto& b : branches) {
      report.orderings_total += b.count;
      report.nodes += b.nodes;
      for (auto& o : b.found) {
        if (report.orderings.size() < limits.max_orderings) report.orderings.push_back(std::move(o));
      }
    }
  } else {
    std::set<std::vector<int>> found;
    for (const auto& seed : limits.seeds) {
      dual::Accumulator acc(problem.strands());
      bool ok = seed.size() == d.size();
      std::uint32_t mask = 0;
      for (std::size_t i = 0; ok && i < seed.size(); ++i) {
        const int b = seed[i];
        ok = b >= 0 && static_cast<std::size_t>(b) < d.size() && !(mask & (1u << b)) &&
             problem.append(acc, static_cast<std::size_t>(b));
        if (ok) mask |= 1u << b;
      }
      if (ok && problem.complete(acc)) found.insert(seed);
    }
    struct Restart {
      std::vector<int> ordering;
      std::uint64_t nodes = 0;
      bool finished = false;
    };
    auto restarts = parallel_map(static_cast<std::size_t>(std::max(limits.restarts, 0)), jobs, [&](std::size_t r) {
      Randomized search{problem, limits.node_budget, std::mt19937_64(limits.seed + r), {}, {}, 0, false};
      Restart out;
      const bool hit = search.run(0, dual::Accumulator(problem.strands()));
      out.nodes = search.nodes;
      out.finished = !hit && !search.out_of_budget;
      if (hit) out.ordering = search.prefix;
      return out;
    });
    bool proven_empty = false;
    for (const auto& r : restarts) {
      report.nodes += r.nodes;
      if (!r.ordering.empty()) found.insert(r.ordering);
      proven_empty = proven_empty || r.finished;
    }
    report.status = proven_empty && found.empty() ? SearchStatus::exhausted : SearchStatus::budget;
    report.orderings_total = found.size();
    for (const auto& o : found) {
      if (report.orderings.size() < limits.max_orderings) report.orderings.push_back(o);
    }
  }

  for (const auto& o : report.orderings) {
    if (!realizes_full_twist(d, o)) throw std::logic_error("ordering search returned an unverified ordering");
  }
  return report;
}

}  // namespace pm
