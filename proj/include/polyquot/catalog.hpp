#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyquot/coset_enumeration.hpp"
#include "polyquot/marked_group.hpp"
#include "polyquot/polytope.hpp"
#include "polyquot/presentation.hpp"

namespace polyquot {

struct SchlafliSymbol {
  std::vector<int> entries;

  int rank() const { return static_cast<int>(entries.size()) + 1; }
  /// Throws Error if an entry is below 2.
  void validate() const;
  SchlafliSymbol reversed() const;
  std::string to_string() const;
  bool operator==(const SchlafliSymbol&) const = default;
};

enum class EntryClass { spherical, projective, degenerate };
std::string_view to_string(EntryClass c);

struct CatalogEntry {
  std::string name;
  SchlafliSymbol symbol;
  std::vector<Word> extra_relators;
  std::uint64_t expected_order = 0;
  EntryClass kind = EntryClass::spherical;

  /// Coxeter relators of the symbol plus the extra relators.
  Presentation presentation() const;
};

Presentation coxeter_presentation(const SchlafliSymbol& symbol);
/// Appends (s_0 s_1 s_2)^r to a rank-3 presentation.
Presentation with_petrie(const Presentation& pres, int r);

/// Regular permutation representation of the entry's group. Throws Error if
/// the enumeration does not close.
MarkedGroup realize(const CatalogEntry& entry, std::size_t max_cosets = kDefaultMaxCosets);
Polytope entry_polytope(const CatalogEntry& entry);

/// Quotient by the central inversion, described by an extra relator
/// spelling the inversion. Throws Error when the group has no central
/// involution (the tetrahedron).
CatalogEntry central_quotient(const CatalogEntry& entry);

/// The five spherical and four projective rank-3 polytopes.
const std::vector<CatalogEntry>& rank3_catalog();
/// {p,2} and {2,p}, each with group of order 4p.
CatalogEntry dihedron(int p);
CatalogEntry hosohedron(int p);

/// Accepts catalog names, the aliases `cross` / `hemioctahedron`, and
/// `dihedron(p)` / `hosohedron(p)`.
std::optional<CatalogEntry> find_entry(std::string_view name);
CatalogEntry lookup_entry(std::string_view name);  // throws Error if unknown
CatalogEntry dual_entry(const CatalogEntry& entry);

/// Name of the rank-3 catalog polytope (including dihedra and hosohedra)
/// isomorphic to p, if any.
std::optional<std::string> identify(const Polytope& p);

/// Group of the ditope {p,q,2} over a rank-3 polytope: the facet group
/// times a commuting reflection.
MarkedGroup ditope_group(const CatalogEntry& facet);
Polytope build_ditope(const CatalogEntry& facet);

}  // namespace polyquot
