#include "planar_monoid/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pm {

namespace {

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw FormatError(std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

FactorOrder parse_order(const Json& j) {
  if (!j.contains("order")) return FactorOrder::rightmost_first;
  const auto& v = j.at("order");
  if (v == "rightmost-first") return FactorOrder::rightmost_first;
  if (v == "leftmost-first") return FactorOrder::leftmost_first;
  throw FormatError("order must be \"rightmost-first\" or \"leftmost-first\"");
}

std::vector<ConvexCurve> factor_list(const Json& j) {
  if (!j.is_array()) throw FormatError("factors must be an array");
  std::vector<ConvexCurve> out;
  for (const auto& f : j) out.push_back(curve_from_json(f));
  return out;
}

}  // namespace

ConvexCurve curve_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "outer") return ConvexCurve::outer();
    throw FormatError("unknown curve \"" + j.get<std::string>() + "\"");
  }
  return ConvexCurve::around(int_list(j, "curve support"));
}

Json to_json(const ConvexCurve& c) {
  if (c.is_outer()) return "outer";
  return Json(c.support());
}

TwistWord twist_word_from_json(const Json& j) {
  const SurfaceSpec s(int_field(j, "n"));
  auto factors = factor_list(field(j, "factors"));
  if (parse_order(j) == FactorOrder::leftmost_first) std::reverse(factors.begin(), factors.end());
  return TwistWord(s, std::move(factors));
}

Json to_json(const TwistWord& w) {
  Json j;
  j["n"] = w.surface.n();
  j["factors"] = Json::array();
  for (const auto& c : w.factors) j["factors"].push_back(to_json(c));
  return j;
}

BoundaryWord boundary_word_from_json(const Json& j, int n) {
  if (j.is_object() && j.contains("n")) {
    const int declared = int_field(j, "n");
    if (n != 0 && declared != n) throw FormatError("lhs and relation disagree on n");
    n = declared;
  }
  if (n == 0) throw FormatError("missing field \"n\"");
  const int outer = j.is_object() && j.contains("outer") ? int_field(j, "outer") : 1;
  return BoundaryWord(SurfaceSpec(n), int_list(field(j, "exponents"), "exponents"), outer);
}

Json to_json(const BoundaryWord& w) {
  Json j;
  j["n"] = w.surface.n();
  j["exponents"] = w.exponents;
  j["outer"] = w.outer;
  return j;
}

Design design_from_json(const Json& j) {
  std::vector<std::vector<int>> blocks;
  const auto& b = field(j, "blocks");
  if (!b.is_array()) throw FormatError("blocks must be an array");
  for (const auto& x : b) blocks.push_back(int_list(x, "block"));
  return Design(int_field(j, "m"), std::move(blocks));
}

Json to_json(const Design& d) {
  Json j;
  j["m"] = d.points();
  j["blocks"] = d.blocks();
  return j;
}

Relation relation_from_json(const Json& j, const std::string& label) {
  const int n = int_field(j, "n");
  BoundaryWord lhs = boundary_word_from_json(field(j, "lhs"), n);
  auto factors = factor_list(field(j, "rhs"));
  if (parse_order(j) == FactorOrder::leftmost_first) std::reverse(factors.begin(), factors.end());
  std::string note = j.contains("note") && j.at("note").is_string() ? j.at("note").get<std::string>() : "";
  std::string name = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : label;
  return Relation{std::move(name), std::move(lhs), TwistWord(SurfaceSpec(n), std::move(factors)), std::move(note)};
}

Json to_json(const Relation& r) {
  Json j;
  j["label"] = r.label;
  j["n"] = r.lhs.surface.n();
  j["lhs"] = {{"exponents", r.lhs.exponents}, {"outer", r.lhs.outer}};
  j["rhs"] = to_json(r.rhs)["factors"];
  j["order"] = "rightmost-first";
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["label"] = r.label;
  j["verified"] = r.verified();
  j["braid_equal"] = r.braid_equal;
  j["multiplicities_equal"] = r.multiplicities_equal;
  j["lhs_multiplicities"] = r.lhs_multiplicities;
  j["rhs_multiplicities"] = r.rhs_multiplicities;
  j["outer_count_differs"] = r.outer_count_differs;
  j["lhs_chi"] = r.lhs_chi;
  j["rhs_chi"] = r.rhs_chi;
  if (r.oracle_checked) {
    j["oracle_agreement"] = r.oracle_agreement;
  } else {
    j["oracle_agreement"] = nullptr;
  }
  return j;
}

Json to_json(const SearchReport& r, const Design& d) {
  Json j;
  j["design"] = to_json(d);
  j["status"] = to_string(r.status);
  j["orderings_found"] = r.orderings_total;
  j["nodes"] = r.nodes;
  j["orderings"] = Json::array();
  for (const auto& o : r.orderings) {
    Json blocks = Json::array();
    for (int b : o) blocks.push_back(d.blocks()[static_cast<std::size_t>(b)]);
    j["orderings"].push_back(std::move(blocks));
  }
  return j;
}

Json to_json(const AuditReport& r) {
  Json j;
  j["n"] = r.n;
  j["symmetry"] = to_string(r.mode);
  j["classes"] = Json::array();
  for (const auto& c : r.classes) {
    Json e;
    e["design"] = to_json(c.design);
    e["exponents"] = c.exponents.exponents;
    e["orderings_found"] = c.search.orderings_total;
    e["status"] = to_string(c.search.status);
    e["catalog"] = c.catalog_labels;
    e["matches_catalog"] = c.matches_catalog;
    if (!c.search.orderings.empty()) {
      Json first = Json::array();
      for (int b : c.search.orderings.front()) first.push_back(c.design.blocks()[static_cast<std::size_t>(b)]);
      e["example_ordering"] = std::move(first);
    }
    j["classes"].push_back(std::move(e));
  }
  j["replication_groups"] = Json::array();
  for (const auto& g : r.groups) {
    Json e;
    e["sorted_exponents"] = g.sorted_exponents;
    e["classes"] = g.classes;
    e["realized"] = g.realized;
    e["catalogued"] = g.catalogued;
    if (g.filling_item.empty()) {
      e["filling"] = nullptr;
    } else {
      e["filling"] = g.filling_item;
    }
    j["replication_groups"].push_back(std::move(e));
  }
  j["unmatched_catalog"] = r.unmatched_catalog;
  return j;
}

Json to_json(const BoundsReport& b) {
  Json j;
  j["n"] = b.n;
  j["min_twists"] = b.min_twists;
  j["max_twists"] = b.max_twists;
  j["min_chi"] = b.min_chi;
  j["max_chi"] = b.max_chi;
  return j;
}

Json to_json(const Discrepancy& d) {
  Json j;
  j["subject"] = d.subject;
  j["kind"] = d.kind;
  j["printed"] = d.printed;
  j["computed"] = d.computed;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return Json::parse(ss.str());
}

}  // namespace pm
