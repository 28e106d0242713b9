#pragma once

#include <cstdint>
#include <vector>

#include "planar_monoid/designs.hpp"

namespace pm {

struct SearchLimits {
  // Designs with at most `cap` blocks are searched exhaustively.
  int cap = 8;
  // Node budget of each randomized restart.
  std::uint64_t node_budget = 200000;
  int restarts = 16;
  std::uint64_t seed = 20240601;
  // Orderings kept in the report; exhaustive counts continue past it.
  std::size_t max_orderings = 256;
  // Known orderings (block indices, written order) tried before the restarts.
  std::vector<std::vector<int>> seeds;
  int jobs = 1;
};

enum class SearchStatus { exhausted, budget };
const char* to_string(SearchStatus s);

struct SearchReport {
  SearchStatus status = SearchStatus::exhausted;
  // Block indices in written order, each re-verified with the Artin engine.
  std::vector<std::vector<int>> orderings;
  // Exhaustive mode: number of realizing orderings. Otherwise the number of
  // distinct orderings found.
  std::uint64_t orderings_total = 0;
  std::uint64_t nodes = 0;
};

// Orderings of the blocks of `d` whose twist product equals the outer twist,
// i.e. whose braid is the full twist.
SearchReport search_orderings(const Design& d, const SearchLimits& limits = {});

// Checks one ordering with the Artin normal form and multiplicities.
bool realizes_full_twist(const Design& d, const std::vector<int>& order);

}  // namespace pm
