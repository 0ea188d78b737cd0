#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyquot/marked_group.hpp"

namespace polyquot {

using FlagId = std::uint32_t;

/// Flags with one adjacency involution per rank.
struct FlagGraph {
  std::size_t flag_count = 0;
  std::vector<std::vector<FlagId>> adjacency;  // adjacency[i][flag]

  int rank() const { return static_cast<int>(adjacency.size()); }
  FlagId adjacent(int i, FlagId f) const {
    return adjacency[static_cast<std::size_t>(i)][f];
  }
  /// First violated invariant (fixed-point-free involutions, commuting
  /// non-consecutive ranks, connectivity), or nullopt.
  std::optional<std::string> violation() const;
  bool operator==(const FlagGraph&) const = default;
};

/// String C-group test: involutive generators, (s_i s_j)^2 = 1 for
/// |i - j| >= 2, and the intersection condition over all index subsets.
/// Returns the first failure as a diagnostic.
std::optional<std::string> c_group_violation(const MarkedGroup& g);
bool intersection_condition(const MarkedGroup& g);

/// Flags are group elements; the i-adjacency is right multiplication by s_i.
FlagGraph flag_graph_from_group(const MarkedGroup& g);

/// Flags are the right cosets N g of `n` (given as an element set of the
/// table), with adjacency N g -> N g s_i. May have fixed points.
FlagGraph coset_flag_graph(const ElementTable& t, const ElementSet& n);

}  // namespace polyquot
