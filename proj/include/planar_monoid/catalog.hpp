#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planar_monoid/designs.hpp"
#include "planar_monoid/relation.hpp"
#include "planar_monoid/search.hpp"

namespace pm {

// A catalog relation together with the printed values it was read from,
// where those differ from the transcription used for verification.
struct CatalogEntry {
  Relation relation;
  std::vector<int> printed_lhs;                // empty when the exponents were printed as used
  std::string printed_lhs_text;                // printed form that is not an exponent vector
  std::vector<std::vector<int>> printed_rhs;   // empty when the blocks were printed as used
};

// One filling pair with its printed Euler characteristics.
struct Filling {
  int n = 0;
  std::string item;
  std::vector<std::string> relations;
  std::pair<int, int> printed_chi;
};

const std::vector<CatalogEntry>& catalog_entries();
std::vector<Relation> builtin(int n);
std::vector<Filling> fillings(int n);
// The relation with printed exponents and blocks in place of the ones used
// for verification.
Relation printed_relation(const std::string& label);

struct VerificationReport {
  std::string label;
  bool braid_equal = false;
  bool multiplicities_equal = false;
  bool outer_count_differs = false;
  std::vector<int> lhs_multiplicities;
  std::vector<int> rhs_multiplicities;
  int lhs_chi = 0;
  int rhs_chi = 0;
  bool oracle_checked = false;
  bool oracle_agreement = false;  // Lawrence-Krammer equality matches braid_equal
  bool verified() const { return braid_equal && multiplicities_equal; }
};

VerificationReport verify(const Relation& r, bool with_oracle = true);
// Reports come back in input order.
std::vector<VerificationReport> verify_all(const std::vector<Relation>& rs, bool with_oracle, int jobs = 1);

struct Discrepancy {
  std::string subject;
  std::string kind;
  std::string printed;
  std::string computed;
};

// Printed values that disagree with the transcription used or with the
// Euler characteristic 2 - n + (number of twists).
std::vector<Discrepancy> discrepancy_report(int n);

struct AuditClass {
  Design design;
  BoundaryWord exponents;
  SearchReport search;
  std::vector<std::string> catalog_labels;  // catalog relations in this class
  bool matches_catalog = false;             // realizable exactly when catalogued
};

struct ReplicationGroup {
  std::vector<int> sorted_exponents;
  std::vector<std::size_t> classes;  // indices into AuditReport::classes
  bool realized = false;
  bool catalogued = false;
  std::string filling_item;  // empty when no printed filling has this graph
};

struct AuditReport {
  int n = 0;
  SymmetryMode mode = SymmetryMode::dihedral;
  std::vector<AuditClass> classes;
  std::vector<ReplicationGroup> groups;
  std::vector<std::string> unmatched_catalog;  // catalog relations whose class was not enumerated
};

AuditReport completeness_check(int n, SymmetryMode mode, const SearchLimits& limits);

}  // namespace pm
