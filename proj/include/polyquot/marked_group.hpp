#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "polyquot/coset_enumeration.hpp"
#include "polyquot/element_table.hpp"
#include "polyquot/permutation.hpp"
#include "polyquot/presentation.hpp"

namespace polyquot {

inline constexpr std::size_t kDefaultSubgroupOrderBound = 10'000;

/// Raised when an operation needs the full element list of a group whose
/// order exceeds the configured bound.
class OrderBoundExceeded : public Error {
 public:
  OrderBoundExceeded(std::uint64_t order, std::size_t bound);
  std::uint64_t order;
  std::size_t bound;
};

/// Permutation group with an ordered list of distinguished involutions
/// s_0, ..., s_{n-1}. Copies share lazily computed data.
class MarkedGroup {
 public:
  MarkedGroup(std::size_t degree, std::vector<Permutation> gens);

  std::size_t degree() const { return degree_; }
  int rank() const { return static_cast<int>(gens_.size()); }
  const std::vector<Permutation>& generators() const { return gens_; }
  const Permutation& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }

  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  /// Transitive with trivial point stabilisers.
  bool acts_regularly() const;

  Permutation evaluate(const Word& w) const;
  bool satisfies(const Presentation& pres) const;

  /// Multiplication table; throws OrderBoundExceeded past `bound`.
  const ElementTable& elements(std::size_t bound = kDefaultSubgroupOrderBound) const;
  Permutation permutation_of(ElementId e) const;
  /// Inverse of permutation_of; nullopt when p is not in the group.
  std::optional<ElementId> element_of(const Permutation& p) const;

  /// The same group with generators listed in a different order.
  MarkedGroup reordered(const std::vector<int>& order) const;
  /// Reverses the generator list (the group of the dual polytope).
  MarkedGroup dual() const;

 private:
  struct Cache;
  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<Cache> cache_;
  Cache& cache() const { return *cache_; }
};

std::uint64_t group_order(const MarkedGroup& g);
bool is_member(const MarkedGroup& g, const Permutation& p);
/// Action of the generators on the cosets of a closed table.
MarkedGroup perm_rep(const CosetTable& table);

}  // namespace polyquot
