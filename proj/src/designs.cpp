#include "planar_monoid/designs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace pm {

PairCovered::PairCovered(int x, int y, int count)
    : std::invalid_argument("pair (" + std::to_string(x) + "," + std::to_string(y) + ") covered " +
                            std::to_string(count) + " times"),
      x_(x), y_(y), count_(count) {}

namespace {

void check_pairs(int m, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> count(static_cast<std::size_t>(m * m), 0);
  for (const auto& b : blocks) {
    for (std::size_t u = 0; u < b.size(); ++u) {
      for (std::size_t v = u + 1; v < b.size(); ++v) ++count[static_cast<std::size_t>((b[u] - 1) * m + b[v] - 1)];
    }
  }
  for (int x = 1; x <= m; ++x) {
    for (int y = x + 1; y <= m; ++y) {
      const int c = count[static_cast<std::size_t>((x - 1) * m + y - 1)];
      if (c != 1) throw PairCovered(x, y, c);
    }
  }
}

std::vector<std::uint8_t> mask_key(const Design& d) {
  std::vector<std::uint8_t> key;
  for (const auto& b : d.blocks()) {
    std::uint8_t mask = 0;
    for (int p : b) mask = static_cast<std::uint8_t>(mask | (1u << (p - 1)));
    key.push_back(mask);
  }
  std::sort(key.begin(), key.end());
  return key;
}

// Exact cover by dancing links. Columns are the pairs of points, rows the
// candidate blocks.
class Dlx {
 public:
  Dlx(int columns, const std::vector<std::vector<int>>& rows) {
    for (int c = 0; c <= columns; ++c) {
      left_.push_back(c == 0 ? columns : c - 1);
      right_.push_back(c == columns ? 0 : c + 1);
      up_.push_back(c);
      down_.push_back(c);
      col_.push_back(c);
      row_.push_back(-1);
    }
    size_.assign(static_cast<std::size_t>(columns + 1), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int first = -1;
      for (int c0 : rows[r]) {
        const int c = c0 + 1;
        const int node = static_cast<int>(col_.size());
        col_.push_back(c);
        row_.push_back(static_cast<int>(r));
        up_.push_back(up_[at(c)]);
        down_.push_back(c);
        down_[at(up_[at(c)])] = node;
        up_[at(c)] = node;
        ++size_[at(c)];
        if (first < 0) {
          first = node;
          left_.push_back(node);
          right_.push_back(node);
        } else {
          left_.push_back(left_[at(first)]);
          right_.push_back(first);
          right_[at(left_[at(first)])] = node;
          left_[at(first)] = node;
        }
      }
    }
  }

  // `accept(row)` may veto a row (and records it when accepted), `release`
  // undoes an accepted row, `feasible()` prunes partial covers and
  // `solution(rows)` returns false to stop the search.
  template <class Accept, class Release, class Feasible, class Solution>
  bool search(Accept&& accept, Release&& release, Feasible&& feasible, Solution&& solution) {
    if (right_[0] == 0) return solution(chosen_);
    if (!feasible()) return true;
    int best = right_[0];
    for (int c = right_[0]; c != 0; c = right_[at(c)]) {
      if (size_[at(c)] < size_[at(best)]) best = c;
    }
    if (size_[at(best)] == 0) return true;
    cover(best);
    for (int r = down_[at(best)]; r != best; r = down_[at(r)]) {
      const int row = row_[at(r)];
      if (!accept(row)) continue;
      chosen_.push_back(row);
      for (int j = right_[at(r)]; j != r; j = right_[at(j)]) cover(col_[at(j)]);
      const bool go_on = search(accept, release, feasible, solution);
      for (int j = left_[at(r)]; j != r; j = left_[at(j)]) uncover(col_[at(j)]);
      chosen_.pop_back();
      release(row);
      if (!go_on) {
        uncover(best);
        return false;
      }
    }
    uncover(best);
    return true;
  }

 private:
  static std::size_t at(int i) { return static_cast<std::size_t>(i); }

  void cover(int c) {
    right_[at(left_[at(c)])] = right_[at(c)];
    left_[at(right_[at(c)])] = left_[at(c)];
    for (int i = down_[at(c)]; i != c; i = down_[at(i)]) {
      for (int j = right_[at(i)]; j != i; j = right_[at(j)]) {
        down_[at(up_[at(j)])] = down_[at(j)];
        up_[at(down_[at(j)])] = up_[at(j)];
        --size_[at(col_[at(j)])];
      }
    }
  }

  void uncover(int c) {
    for (int i = up_[at(c)]; i != c; i = up_[at(i)]) {
      for (int j = left_[at(i)]; j != i; j = left_[at(j)]) {
        ++size_[at(col_[at(j)])];
        down_[at(up_[at(j)])] = j;
        up_[at(down_[at(j)])] = j;
      }
    }
    right_[at(left_[at(c)])] = c;
    left_[at(right_[at(c)])] = c;
  }

  std::vector<int> left_, right_, up_, down_, col_, row_, size_;
  std::vector<int> chosen_;
};

struct CandidateBlocks {
  std::vector<std::vector<int>> points;  // 1-based labels
  std::vector<std::vector<int>> pairs;   // column indices
};

CandidateBlocks candidate_blocks(int m) {
  std::vector<int> pair_index(static_cast<std::size_t>(m * m), -1);
  int next = 0;
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) pair_index[static_cast<std::size_t>(x * m + y)] = next++;
  }
  CandidateBlocks out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < 2 || k > m - 1) continue;
    std::vector<int> pts, cols;
    for (int x = 0; x < m; ++x) {
      if (mask & (1u << x)) pts.push_back(x + 1);
    }
    for (std::size_t u = 0; u < pts.size(); ++u) {
      for (std::size_t v = u + 1; v < pts.size(); ++v) {
        cols.push_back(pair_index[static_cast<std::size_t>((pts[u] - 1) * m + pts[v] - 1)]);
      }
    }
    out.points.push_back(std::move(pts));
    out.pairs.push_back(std::move(cols));
  }
  return out;
}

void check_range(int m) {
  if (m < 3 || m > 7) throw std::out_of_range("design enumeration supports 3 <= m <= 7");
}

}  // namespace

Design::Design(int m, std::vector<std::vector<int>> blocks) : m_(m), blocks_(std::move(blocks)) {
  if (m < 3) throw std::invalid_argument("designs need at least 3 points");
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    if (b.size() < 2 || static_cast<int>(b.size()) > m - 1) throw std::invalid_argument("block size out of range");
    if (b.front() < 1 || b.back() > m) throw std::out_of_range("block point out of range");
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw std::invalid_argument("repeated point in block");
  }
  std::sort(blocks_.begin(), blocks_.end());
  check_pairs(m, blocks_);
}

SymmetryMode parse_symmetry(const std::string& name) {
  if (name == "labeled") return SymmetryMode::labeled;
  if (name == "dihedral") return SymmetryMode::dihedral;
  if (name == "symmetric") return SymmetryMode::symmetric;
  throw std::invalid_argument("unknown symmetry mode: " + name);
}

const char* to_string(SymmetryMode mode) {
  switch (mode) {
    case SymmetryMode::labeled: return "labeled";
    case SymmetryMode::dihedral: return "dihedral";
    case SymmetryMode::symmetric: return "symmetric";
  }
  return "?";
}

Design from_rhs(const TwistWord& word) {
  std::vector<std::vector<int>> blocks;
  for (const auto& c : word.factors) {
    if (c.is_boundary_parallel(word.surface)) {
      throw std::invalid_argument("right-hand side contains a boundary-parallel curve");
    }
    blocks.push_back(c.support());
  }
  return Design(word.surface.interior(), std::move(blocks));
}

ReplicationVector replication(const Design& d) {
  ReplicationVector r(static_cast<std::size_t>(d.points()), 0);
  for (const auto& b : d.blocks()) {
    for (int p : b) ++r[static_cast<std::size_t>(p - 1)];
  }
  return r;
}

BoundaryWord exponents_from_design(const Design& d) {
  auto a = replication(d);
  for (auto& x : a) --x;
  return BoundaryWord(SurfaceSpec(d.points() + 1), std::move(a), 1);
}

std::vector<std::vector<int>> symmetry_group(int m, SymmetryMode mode) {
  std::vector<std::vector<int>> group;
  std::vector<int> id(static_cast<std::size_t>(m));
  std::iota(id.begin(), id.end(), 1);
  switch (mode) {
    case SymmetryMode::labeled:
      group.push_back(id);
      break;
    case SymmetryMode::dihedral:
      for (int r = 0; r < m; ++r) {
        std::vector<int> rot(static_cast<std::size_t>(m)), ref(static_cast<std::size_t>(m));
        for (int p = 0; p < m; ++p) {
          rot[static_cast<std::size_t>(p)] = (p + r) % m + 1;
          ref[static_cast<std::size_t>(p)] = ((r - p) % m + m) % m + 1;
        }
        group.push_back(rot);
        group.push_back(ref);
      }
      break;
    case SymmetryMode::symmetric:
      do group.push_back(id);
      while (std::next_permutation(id.begin(), id.end()));
      break;
  }
  return group;
}

Design relabel(const Design& d, const std::vector<int>& images) {
  std::vector<std::vector<int>> blocks = d.blocks();
  for (auto& b : blocks) {
    for (auto& p : b) p = images[static_cast<std::size_t>(p - 1)];
  }
  return Design(d.points(), std::move(blocks));
}

Design canonical(const Design& d, SymmetryMode mode) {
  Design best = d;
  for (const auto& g : symmetry_group(d.points(), mode)) {
    Design image = relabel(d, g);
    if (image < best) best = std::move(image);
  }
  return best;
}

void for_each_design(int m, const std::function<void(const Design&)>& visit) {
  check_range(m);
  const auto cand = candidate_blocks(m);
  Dlx dlx(m * (m - 1) / 2, cand.pairs);
  dlx.search([](int) { return true; }, [](int) {}, [] { return true; },
             [&](const std::vector<int>& rows) {
               std::vector<std::vector<int>> blocks;
               for (int r : rows) blocks.push_back(cand.points[static_cast<std::size_t>(r)]);
               visit(Design(m, std::move(blocks)));
               return true;
             });
}

std::vector<Design> enumerate(int m, SymmetryMode mode) {
  check_range(m);
  const auto group = symmetry_group(m, mode);
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<Design> reps;
  for_each_design(m, [&](const Design& d) {
    if (seen.count(mask_key(d))) return;
    Design best = d;
    for (const auto& g : group) {
      Design image = relabel(d, g);
      seen.insert(mask_key(image));
      if (image < best) best = std::move(image);
    }
    reps.push_back(std::move(best));
  });
  std::sort(reps.begin(), reps.end());
  return reps;
}

bool feasible_replication(int m, const ReplicationVector& r) {
  check_range(m);
  if (static_cast<int>(r.size()) != m) return false;
  const auto cand = candidate_blocks(m);
  std::vector<int> count(static_cast<std::size_t>(m), 0);
  std::vector<int> open(static_cast<std::size_t>(m), m - 1);  // uncovered pairs at each point
  auto idx = [](int p) { return static_cast<std::size_t>(p - 1); };
  bool found = false;
  Dlx dlx(m * (m - 1) / 2, cand.pairs);
  dlx.search(
      [&](int row) {
        const auto& pts = cand.points[static_cast<std::size_t>(row)];
        for (int p : pts) {
          if (count[idx(p)] + 1 > r[idx(p)]) return false;
        }
        const int k = static_cast<int>(pts.size());
        for (int p : pts) {
          ++count[idx(p)];
          open[idx(p)] -= k - 1;
        }
        return true;
      },
      [&](int row) {
        const auto& pts = cand.points[static_cast<std::size_t>(row)];
        const int k = static_cast<int>(pts.size());
        for (int p : pts) {
          --count[idx(p)];
          open[idx(p)] += k - 1;
        }
      },
      [&] {
        for (int p = 1; p <= m; ++p) {
          const int left = r[idx(p)] - count[idx(p)];
          if (open[idx(p)] == 0 ? left != 0 : (left < 1 || left > open[idx(p)])) return false;
        }
        return true;
      },
      [&](const std::vector<int>&) {
        for (int p = 1; p <= m; ++p) {
          if (count[idx(p)] != r[idx(p)]) return true;
        }
        found = true;
        return false;
      });
  return found;
}

TwistWord ordered_word(const Design& d, const std::vector<int>& order) {
  std::vector<ConvexCurve> factors;
  for (int i : order) factors.push_back(ConvexCurve::around(d.blocks().at(static_cast<std::size_t>(i))));
  return TwistWord(SurfaceSpec(d.points() + 1), std::move(factors));
}

Relation daisy(int n, int i) {
  if (n < 4 || i < 2 || i >= n - 1) throw std::out_of_range("daisy needs n >= 4 and 2 <= i < n-1");
  std::vector<int> a(static_cast<std::size_t>(n - 1), n - 3);
  for (int j = 0; j < i; ++j) a[static_cast<std::size_t>(j)] = n - i - 1;
  std::vector<int> first(static_cast<std::size_t>(i));
  std::iota(first.begin(), first.end(), 1);
  std::vector<ConvexCurve> rhs{ConvexCurve::around(first)};
  for (int j = i + 1; j <= n - 1; ++j) {
    for (int k = j - 1; k >= 1; --k) rhs.push_back(ConvexCurve::around({j, k}));
  }
  const SurfaceSpec s(n);
  return Relation{"daisy(" + std::to_string(n) + "," + std::to_string(i) + ")", BoundaryWord(s, std::move(a), 1),
                  TwistWord(s, std::move(rhs)), ""};
}

}  // namespace pm
