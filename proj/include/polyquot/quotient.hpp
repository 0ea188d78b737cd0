#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyquot/polytope.hpp"
#include "polyquot/subgroup.hpp"

namespace polyquot {

struct SemisparseCheck {
  bool semisparse = false;
  std::string failure;  // first axiom that fails, when not semisparse
  explicit operator bool() const { return semisparse; }
};

/// Direct test: the right cosets of n, with adjacency N g -> N g s_i, must
/// form a fixed-point-free flag graph whose orbit poset is a polytope whose
/// flags are exactly those cosets.
SemisparseCheck semisparse_ground_truth(const MarkedGroup& w, const ElementSet& n);
bool is_semisparse(const MarkedGroup& w, const Subgroup& n);

/// Rejects subgroups containing a conjugate of some s_i or of some s_i s_j
/// with |i - j| >= 2; such subgroups never give a quotient. Inherited by
/// overgroups and invariant under conjugation.
HereditaryFilter reflection_free_filter(const MarkedGroup& w);

/// Rank-4 product-set criterion, valid when the vertex figure has no proper
/// quotients: every conjugate of n meets <s0,s1,s2><s1,s2,s3> inside
/// <s0,s1,s2>, in a semisparse subgroup of <s0,s1,s2>.
bool semisparse_fast_path(const MarkedGroup& w, const Subgroup& n);
/// True when the vertex-figure group <s1,...,s_{n-1}> has no proper
/// quotients.
bool fast_path_applies(const MarkedGroup& w);

/// One representative per conjugacy class of semisparse subgroups, ordered
/// by (order, element list).
std::vector<SubgroupClass> semisparse_classes(const MarkedGroup& w,
                                              std::size_t order_bound = kDefaultSubgroupOrderBound);

/// Throws Error naming the failed axiom when n is not semisparse.
Polytope quotient_polytope(const MarkedGroup& w, const Subgroup& n);

struct SectionClassCount {
  std::string name;  // catalog name or `unrecognized:{type}`
  std::size_t count;
  bool operator==(const SectionClassCount&) const = default;
};

struct QuotientRecord {
  Subgroup subgroup;
  std::size_t class_size = 0;
  Polytope polytope;
  bool normal = false;
  bool regular = false;
  bool section_regular = false;
  std::vector<SectionClassCount> facet_classes;
  std::vector<SectionClassCount> vfig_classes;
  std::string type;
  std::vector<std::size_t> face_counts;

  bool mixed_facets() const { return facet_classes.size() > 1; }
};

struct ClassificationReport {
  std::string universal;
  std::uint64_t group_order = 0;
  std::vector<QuotientRecord> records;

  std::size_t total_quotients() const { return records.size(); }
  std::size_t regular_count() const;
  std::size_t section_regular_count() const;
  std::size_t mixed_facet_count() const;
};

std::vector<SectionClassCount> classify_sections(const Polytope& p, int upper_rank,
                                                 int lower_rank);

ClassificationReport classify_quotients(const MarkedGroup& w, std::string universal,
                                        std::size_t order_bound = kDefaultSubgroupOrderBound);

/// Quotient counts published for a universal polytope that is not
/// enumerated here. `overlap` counts quotients known to coincide with
/// polytopes already counted elsewhere; the regular and section regular
/// overlaps are included in it.
struct QuotedReport {
  int case_number = 0;
  std::string universal;
  std::size_t total = 0, regular = 0, section_regular = 0, mixed = 0;
  std::size_t overlap = 0, overlap_regular = 0, overlap_section_regular = 0;
  std::string overlap_note;
};

struct Contribution {
  int case_number = 0;
  std::string universal;
  std::string source;  // computed | paper
  std::size_t total = 0, regular = 0, section_regular = 0, mixed = 0;
  /// Quotients not already counted by an earlier contribution.
  std::size_t new_total = 0, new_regular = 0, new_section_regular = 0;
};

struct AggregateSummary {
  std::vector<Contribution> contributions;
  std::size_t total_with_multiplicity = 0;
  std::size_t distinct_total = 0;
  std::size_t distinct_regular = 0;
  std::size_t distinct_section_regular = 0;
  std::size_t degenerate_extra = 0;
  std::size_t grand_total() const { return distinct_total + degenerate_extra; }
  std::string reconciliation;
};

/// Quotients of different universals are identified by flag-graph
/// isomorphism; quoted reports are appended after the computed ones.
AggregateSummary aggregate_summary(const std::vector<std::pair<int, ClassificationReport>>& reports,
                                   const std::vector<QuotedReport>& quoted = {},
                                   std::size_t degenerate_extra = 0);

/// Published figures for the two universals of type {5,3,5} with a
/// spherical member.
std::vector<QuotedReport> quoted_535_reports();

}  // namespace polyquot
