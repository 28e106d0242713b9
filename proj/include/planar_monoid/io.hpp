#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "planar_monoid/catalog.hpp"
#include "planar_monoid/designs.hpp"
#include "planar_monoid/plumbing.hpp"
#include "planar_monoid/relation.hpp"
#include "planar_monoid/surface.hpp"

namespace pm {

using Json = nlohmann::ordered_json;

// Thrown for well-formed JSON with the wrong shape.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Factor order of a relation file. Rightmost-first is function notation: the
// last listed factor is applied first.
enum class FactorOrder { rightmost_first, leftmost_first };

ConvexCurve curve_from_json(const Json& j);
Json to_json(const ConvexCurve& c);

// {"n": 5, "factors": [[3,4],[2,4],"outer"]}
TwistWord twist_word_from_json(const Json& j);
Json to_json(const TwistWord& w);

// {"n": 5, "exponents": [1,1,1,2], "outer": 1}; "n" may come from the caller.
BoundaryWord boundary_word_from_json(const Json& j, int n = 0);
Json to_json(const BoundaryWord& w);

// {"m": 5, "blocks": [[1,2,3],[1,4],...]}
Design design_from_json(const Json& j);
Json to_json(const Design& d);

// {"n": 5, "lhs": {...}, "rhs": [[3,4],...], "order": "rightmost-first"}
Relation relation_from_json(const Json& j, const std::string& label);
Json to_json(const Relation& r);

Json to_json(const VerificationReport& r);
Json to_json(const SearchReport& r, const Design& d);
Json to_json(const AuditReport& r);
Json to_json(const BoundsReport& b);
Json to_json(const Discrepancy& d);

Json read_json_file(const std::string& path);

}  // namespace pm
