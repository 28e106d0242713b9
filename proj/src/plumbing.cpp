#include "planar_monoid/plumbing.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pm {

PlumbingGraph plumbing_of(const BoundaryWord& w) {
  if (w.outer != 1) throw std::invalid_argument("plumbing graphs need exactly one outer twist");
  PlumbingGraph g;
  g.vertices.push_back({0, -w.surface.n()});
  int next = 1;
  for (int a : w.exponents) {
    if (a < 1) throw std::invalid_argument("plumbing graphs need every exponent >= 1");
    int prev = 0;
    for (int k = 0; k < a - 1; ++k, ++next) {
      g.vertices.push_back({next, -2});
      g.edges.emplace_back(prev, next);
      prev = next;
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

int euler_characteristic(const TwistWord& w) { return 2 - w.surface.n() + static_cast<int>(w.twist_count()); }

int euler_characteristic(const BoundaryWord& w) { return 2 - w.surface.n() + w.twist_count(); }

std::pair<int, int> chi_formulas(int n, int i) {
  if (i < 2 || i >= n - 1) throw std::out_of_range("chi formulas need 2 <= i < n-1");
  const int lhs = n * n - 5 * n + 6 + 2 * i - i * i;
  const int rhs = 3 - n + (n - i - 1) * (i - 1) + (n - i - 1) * (n - i) / 2;
  return {lhs, rhs};
}

BoundsReport bounds(int n) {
  if (n < 5) throw std::out_of_range("bounds are stated for n >= 5");
  return {n, 2 * n - 4, (n - 3) * (n - 1) + 1, n - 2, n * n - 5 * n + 6};
}

std::string emit(const PlumbingGraph& g, GraphFormat format) {
  if (format == GraphFormat::json) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
    return j.dump();
  }
  std::ostringstream os;
  os << "graph plumbing {\n";
  for (const auto& v : g.vertices) os << "  v" << v.id << " [label=\"" << v.weight << "\"];\n";
  for (const auto& [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

PlumbingGraph parse_plumbing_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  PlumbingGraph g;
  std::set<int> ids;
  for (const auto& v : j.at("vertices")) {
    g.vertices.push_back({v.at("id").get<int>(), v.at("weight").get<int>()});
    if (!ids.insert(g.vertices.back().id).second) throw std::invalid_argument("duplicate vertex id");
  }
  for (const auto& e : j.at("edges")) {
    int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    if (!ids.count(a) || !ids.count(b)) throw std::invalid_argument("edge references unknown vertex");
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace pm
