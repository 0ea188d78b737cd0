#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "polyquot/element_table.hpp"
#include "polyquot/marked_group.hpp"

namespace polyquot {

/// Subgroup of a MarkedGroup, held as its full element set.
class Subgroup {
 public:
  /// Throws Error if a generator is not in the parent.
  Subgroup(MarkedGroup parent, const std::vector<Permutation>& gens);
  /// `elements` must already be closed under multiplication.
  Subgroup(MarkedGroup parent, ElementSet elements);
  static Subgroup generated_by(MarkedGroup parent, std::span<const ElementId> gens);
  static Subgroup trivial(MarkedGroup parent);
  static Subgroup whole(MarkedGroup parent);

  const MarkedGroup& parent() const { return parent_; }
  const ElementTable& table() const { return parent_.elements(); }
  const ElementSet& elements() const { return elements_; }
  std::size_t order() const { return order_; }
  bool contains(ElementId e) const { return elements_.contains(e); }
  bool contains(const Permutation& p) const;

  /// Small deterministic generating set (greedy by element id).
  const std::vector<ElementId>& generator_ids() const { return gens_; }
  std::vector<Permutation> generators() const;

  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

 private:
  MarkedGroup parent_;
  ElementSet elements_;
  std::size_t order_ = 0;
  std::vector<ElementId> gens_;
};

/// Closure of `start` (a set already closed under `start_gens`, or just the
/// identity) under right multiplication by `gens`.
ElementSet closure(const ElementTable& t, std::span<const ElementId> gens);
ElementSet extend_closure(const ElementTable& t, const ElementSet& start,
                          std::span<const ElementId> gens);
std::vector<ElementId> small_generating_set(const ElementTable& t, const ElementSet& h);
/// { g^-1 h g : h in set }
ElementSet conjugate_set(const ElementTable& t, const ElementSet& set, ElementId g);

Subgroup intersect(const Subgroup& h1, const Subgroup& h2);
/// Elements of h lying in the product set a*b (a set, not a subgroup).
std::vector<ElementId> product_set_intersect(const Subgroup& h, const Subgroup& a,
                                             const Subgroup& b);
ElementSet product_set(const Subgroup& a, const Subgroup& b);

/// Some g with h1^g = h2, if one exists.
std::optional<ElementId> are_conjugate(const MarkedGroup& g, const Subgroup& h1,
                                       const Subgroup& h2);
/// Full conjugacy class of h, ordered by the lexicographic order of element
/// lists.
std::vector<Subgroup> conjugates(const MarkedGroup& g, const Subgroup& h);
Subgroup normalizer(const MarkedGroup& g, const Subgroup& h);
bool is_normal(const MarkedGroup& g, const Subgroup& h);

struct SubgroupClass {
  Subgroup representative;  // lexicographically least member of the class
  std::size_t class_size;
};

/// Must be inherited by subgroups (rejecting H rejects every K >= H) and
/// invariant under conjugation.
using HereditaryFilter = std::function<bool(const ElementSet&)>;

struct SubgroupSearchOptions {
  std::size_t order_bound = kDefaultSubgroupOrderBound;
  /// Empty means accept everything.
  HereditaryFilter filter;
};

/// One representative per conjugacy class, sorted by (order, element list).
/// Throws OrderBoundExceeded if the group is larger than the bound.
std::vector<SubgroupClass> enumerate_subgroups(const MarkedGroup& g,
                                               const SubgroupSearchOptions& options = {});

}  // namespace polyquot
