#include "polyquot/flag_graph.hpp"

#include "polyquot/subgroup.hpp"

namespace polyquot {

std::optional<std::string> FlagGraph::violation() const {
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    const auto& a = adjacency[static_cast<std::size_t>(i)];
    if (a.size() != flag_count) return "adjacency " + std::to_string(i) + " has wrong size";
    for (FlagId f = 0; f < flag_count; ++f) {
      if (a[f] >= flag_count) return "adjacency " + std::to_string(i) + " out of range";
      if (a[f] == f) return "adjacency " + std::to_string(i) + " fixes flag " + std::to_string(f);
      if (a[a[f]] != f) return "adjacency " + std::to_string(i) + " is not an involution";
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      for (FlagId f = 0; f < flag_count; ++f) {
        if (adjacent(i, adjacent(j, f)) != adjacent(j, adjacent(i, f)))
          return "adjacencies " + std::to_string(i) + " and " + std::to_string(j) +
                 " do not commute";
      }
    }
  }
  if (flag_count > 0) {
    std::vector<bool> seen(flag_count, false);
    std::vector<FlagId> todo{0};
    seen[0] = true;
    for (std::size_t k = 0; k < todo.size(); ++k) {
      for (int i = 0; i < n; ++i) {
        FlagId g = adjacent(i, todo[k]);
        if (!seen[g]) {
          seen[g] = true;
          todo.push_back(g);
        }
      }
    }
    if (todo.size() != flag_count) return std::string("flag graph is not connected");
  }
  return std::nullopt;
}

std::optional<std::string> c_group_violation(const MarkedGroup& g) {
  const int n = g.rank();
  for (int i = 0; i < n; ++i) {
    const Permutation& s = g.generator(i);
    if (s.is_identity()) return "s" + std::to_string(i) + " is trivial";
    if (!(s * s).is_identity()) return "s" + std::to_string(i) + " is not an involution";
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      Permutation p = g.generator(i) * g.generator(j);
      if (!(p * p).is_identity())
        return "s" + std::to_string(i) + " and s" + std::to_string(j) + " do not commute";
    }
  }
  const ElementTable& t = g.elements();
  const unsigned subsets = 1U << n;
  std::vector<ElementSet> parabolic;
  parabolic.reserve(subsets);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    std::vector<ElementId> gens;
    for (int i = 0; i < n; ++i)
      if (mask & (1U << i)) gens.push_back(t.generator(i));
    parabolic.push_back(closure(t, gens));
  }
  for (unsigned a = 0; a < subsets; ++a) {
    for (unsigned b = a + 1; b < subsets; ++b) {
      ElementSet meet = parabolic[a];
      meet &= parabolic[b];
      if (meet.count() != parabolic[a & b].count()) {
        return "intersection condition fails for index sets " + std::to_string(a) +
               " and " + std::to_string(b) + " (masks)";
      }
    }
  }
  return std::nullopt;
}

bool intersection_condition(const MarkedGroup& g) { return !c_group_violation(g); }

FlagGraph flag_graph_from_group(const MarkedGroup& g) {
  if (auto why = c_group_violation(g)) throw Error("not a string C-group: " + *why);
  const ElementTable& t = g.elements();
  FlagGraph fg;
  fg.flag_count = t.size();
  fg.adjacency.resize(static_cast<std::size_t>(g.rank()));
  for (int i = 0; i < g.rank(); ++i) {
    auto& a = fg.adjacency[static_cast<std::size_t>(i)];
    a.resize(t.size());
    for (std::size_t e = 0; e < t.size(); ++e)
      a[e] = t.times_generator(static_cast<ElementId>(e), i);
  }
  return fg;
}

FlagGraph coset_flag_graph(const ElementTable& t, const ElementSet& n) {
  constexpr FlagId kUnset = static_cast<FlagId>(-1);
  std::vector<FlagId> coset_of(t.size(), kUnset);
  std::vector<ElementId> n_elems = n.to_vector();
  std::vector<ElementId> reps;
  for (std::size_t g = 0; g < t.size(); ++g) {
    if (coset_of[g] != kUnset) continue;
    auto id = static_cast<FlagId>(reps.size());
    reps.push_back(static_cast<ElementId>(g));
    for (ElementId x : n_elems) coset_of[t.mul(x, static_cast<ElementId>(g))] = id;
  }
  FlagGraph fg;
  fg.flag_count = reps.size();
  fg.adjacency.resize(static_cast<std::size_t>(t.rank()));
  for (int i = 0; i < t.rank(); ++i) {
    auto& a = fg.adjacency[static_cast<std::size_t>(i)];
    a.resize(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) a[c] = coset_of[t.times_generator(reps[c], i)];
  }
  return fg;
}

}  // namespace polyquot
