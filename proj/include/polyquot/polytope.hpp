#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyquot/flag_graph.hpp"

namespace polyquot {

struct Face {
  int rank;  // -1 .. n
  std::uint32_t index;
  auto operator<=>(const Face&) const = default;
};

/// Ranked poset with explicit least (rank -1) and greatest (rank n) faces,
/// stored as its covering relation. Carries a flag graph whenever the
/// diamond condition holds.
class Polytope {
 public:
  Polytope() = default;
  /// `counts[r + 1]` faces of rank r for r = -1..n; covers are (lower, upper)
  /// with upper.rank == lower.rank + 1.
  static Polytope from_covers(int rank, std::vector<std::size_t> counts,
                              const std::vector<std::pair<Face, Face>>& covers);

  int rank() const { return rank_; }
  std::size_t face_count(int r) const { return up_[static_cast<std::size_t>(r + 1)].size(); }
  /// Counts for ranks 0..n-1.
  std::vector<std::size_t> face_counts() const;
  const std::vector<std::uint32_t>& up(Face f) const {
    return up_[static_cast<std::size_t>(f.rank + 1)][f.index];
  }
  const std::vector<std::uint32_t>& down(Face f) const {
    return down_[static_cast<std::size_t>(f.rank + 1)][f.index];
  }
  /// a <= b in the poset.
  bool incident(Face a, Face b) const;
  Face least() const { return {-1, 0}; }
  Face greatest() const { return {rank_, 0}; }

  bool has_flags() const { return flags_.has_value(); }
  /// Throws Error when the poset has no well-defined flag graph.
  const FlagGraph& flag_graph() const;
  /// Face of rank r (0..n-1) in the given flag.
  std::uint32_t flag_face(FlagId f, int r) const {
    return flag_faces_[static_cast<std::size_t>(f) * static_cast<std::size_t>(rank_) +
                       static_cast<std::size_t>(r)];
  }
  /// Faces of ranks 0..n-1 in the given flag; flags are sorted by chain.
  std::span<const std::uint32_t> chain(FlagId f) const {
    return {flag_faces_.data() + static_cast<std::size_t>(f) * static_cast<std::size_t>(rank_),
            static_cast<std::size_t>(rank_)};
  }
  std::size_t flag_count() const { return flags_ ? flags_->flag_count : 0; }
  const std::string& flag_failure() const { return flag_failure_; }

  /// Schläfli type: polygon sizes occurring for each entry.
  std::vector<std::set<int>> type() const;
  std::string type_string() const;

 private:
  void build_flags();

  int rank_ = -1;
  std::vector<std::vector<std::vector<std::uint32_t>>> up_;    // [rank+1][index]
  std::vector<std::vector<std::vector<std::uint32_t>>> down_;  // [rank+1][index]
  std::optional<FlagGraph> flags_;
  std::vector<std::uint32_t> flag_faces_;
  std::string flag_failure_;
};

struct OrbitPoset {
  Polytope poset;
  /// Empty when every flag orbit is a distinct maximal chain and the chains
  /// exhaust the poset's flags.
  std::string failure;
};

/// Faces of rank i are the orbits of the adjacencies other than i; a face
/// covers another when they share a flag. The flag graph may have fixed
/// points.
OrbitPoset orbit_poset(const FlagGraph& fg);
/// As orbit_poset, but requires a valid flag graph and throws otherwise.
Polytope faces_from_flags(const FlagGraph& fg);
Polytope polytope_from_group(const MarkedGroup& g);

struct PolytopalityResult {
  bool ok = true;
  std::string failed_axiom;  // bounded | ranked | diamond | strongly-connected
  std::string detail;
  explicit operator bool() const { return ok; }
};
PolytopalityResult is_polytopal(const Polytope& p);

/// Faces between g and f inclusive.
Polytope section(const Polytope& p, Face f, Face g);
Polytope facet(const Polytope& p, std::uint32_t index);
Polytope vertex_figure(const Polytope& p, std::uint32_t index);
Polytope dual(const Polytope& p);

std::uint64_t automorphism_count(const Polytope& p);
bool is_regular(const Polytope& p);

/// For each (i, j) with j >= i + 2: section counts per isomorphism class of
/// F/G with rank(F) = j, rank(G) = i, in order of first appearance.
struct SectionProfile {
  std::map<std::pair<int, int>, std::vector<std::size_t>> class_counts;
  bool section_regular() const;
};
SectionProfile section_profile(const Polytope& p);
bool is_section_regular(const Polytope& p);

/// One representative per isomorphism class among the sections with the
/// given ranks, with multiplicities.
std::vector<std::pair<Polytope, std::size_t>> section_classes(const Polytope& p, int upper_rank,
                                                              int lower_rank);

std::string hasse_dot(const Polytope& p);
std::string flag_graph_dot(const FlagGraph& fg);

}  // namespace polyquot
