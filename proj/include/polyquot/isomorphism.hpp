#pragma once

#include <cstdint>
#include <vector>

#include "polyquot/polytope.hpp"

namespace polyquot {

/// Canonical form of a flag graph up to rank-preserving isomorphism: the
/// lexicographically least BFS adjacency encoding over all root flags.
struct Certificate {
  int rank = 0;
  std::vector<std::uint32_t> code;
  auto operator<=>(const Certificate&) const = default;
};

Certificate certificate(const FlagGraph& fg);
/// Requires a flag graph; throws Error otherwise.
Certificate certificate(const Polytope& p);
bool are_isomorphic(const FlagGraph& a, const FlagGraph& b);
bool are_isomorphic(const Polytope& a, const Polytope& b);

/// Number of flag-graph automorphisms (each determined by the image of
/// flag 0).
std::uint64_t flag_graph_automorphisms(const FlagGraph& fg);
/// True when every flag is the image of flag 0 under some automorphism.
bool flag_transitive(const FlagGraph& fg);

}  // namespace polyquot
