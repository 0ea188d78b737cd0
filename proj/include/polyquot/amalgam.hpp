#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyquot/catalog.hpp"

namespace polyquot {

/// Prescribed facet K of type {p,q} and vertex figure L of type {q,r}.
struct AmalgamSpec {
  CatalogEntry facet;
  CatalogEntry vfig;

  /// {p,q,r}; throws Error when the facet and vertex figure do not share q.
  SchlafliSymbol symbol() const;
  AmalgamSpec dual() const;
  std::string label() const;  // e.g. {cube,hemicross}
};

enum class Outcome { exists, collapsed, not_polytopal, exceeded_limit };
std::string_view to_string(Outcome o);

struct UniversalResult {
  Outcome outcome = Outcome::exceeded_limit;
  /// Regular representation; present whenever the enumeration over the
  /// trivial subgroup closed.
  std::optional<MarkedGroup> group;
  std::uint64_t group_order = 0;  // 0 when unknown
  std::uint64_t facet_subgroup_order = 0;
  std::uint64_t vfig_subgroup_order = 0;
  std::size_t cosets = 0;  // index of the enumerated subgroup
  bool over_facets = false;
  std::string detail;
};

/// Coxeter relators of {p,q,r}, the facet's extra relators on s_0,s_1,s_2
/// and the vertex figure's extra relators on s_1,s_2,s_3.
Presentation amalgam_presentation(const AmalgamSpec& spec);

UniversalResult build_universal(const AmalgamSpec& spec,
                                std::size_t max_cosets = kDefaultMaxCosets);

/// Enumerates the cosets of <s_0,s_1,s_2> instead (one per facet). The
/// order is reported as index * |facet group| only after checking that the
/// facet and vertex-figure groups act faithfully on those cosets.
UniversalResult build_universal_over_facets(const AmalgamSpec& spec, std::size_t max_cosets);

struct Table1Case {
  int number;
  AmalgamSpec spec;
  std::optional<int> dual_case;  // nullopt when self-dual
};

/// The 22 pairs (facet, vertex figure) with a projective member and
/// duality resolved as in the classification table.
const std::vector<Table1Case>& table1_cases();

struct Table1Row {
  Table1Case row;
  UniversalResult result;
};
std::vector<Table1Row> classify_table1(std::size_t max_cosets = kDefaultMaxCosets);

/// 2^H: the elementary abelian group on the vertices of h extended by the
/// group of h, with s_0 the vertex swap at the base vertex and s_{i+1} the
/// generators of h.
MarkedGroup twisted_2H(const CatalogEntry& h);

}  // namespace polyquot
