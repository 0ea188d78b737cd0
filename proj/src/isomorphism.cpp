#include "polyquot/isomorphism.hpp"

#include <limits>

namespace polyquot {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// BFS from `root`, writing the encoding into `code`. When `best` is
// non-empty the walk stops as soon as the encoding exceeds it; returns true
// if the new code is strictly smaller (or `best` was empty).
bool encode(const FlagGraph& fg, FlagId root, std::vector<std::uint32_t>& label,
            std::vector<FlagId>& order, std::vector<std::uint32_t>& code,
            const std::vector<std::uint32_t>* best) {
  const auto n = static_cast<std::size_t>(fg.rank());
  std::fill(label.begin(), label.end(), kNone);
  order.clear();
  code.clear();
  label[root] = 0;
  order.push_back(root);
  bool smaller = best == nullptr || best->empty();
  for (std::size_t k = 0; k < order.size(); ++k) {
    FlagId f = order[k];
    for (std::size_t i = 0; i < n; ++i) {
      FlagId g = fg.adjacency[i][f];
      if (label[g] == kNone) {
        label[g] = static_cast<std::uint32_t>(order.size());
        order.push_back(g);
      }
      std::uint32_t v = label[g];
      if (!smaller) {
        std::uint32_t b = (*best)[code.size()];
        if (v > b) return false;
        if (v < b) smaller = true;
      }
      code.push_back(v);
    }
  }
  return smaller;
}

bool extends(const FlagGraph& fg, FlagId target, std::vector<FlagId>& phi,
             std::vector<FlagId>& todo) {
  std::fill(phi.begin(), phi.end(), kNone);
  todo.clear();
  phi[0] = target;
  todo.push_back(0);
  const int n = fg.rank();
  for (std::size_t k = 0; k < todo.size(); ++k) {
    FlagId f = todo[k];
    for (int i = 0; i < n; ++i) {
      FlagId g = fg.adjacent(i, f);
      FlagId img = fg.adjacent(i, phi[f]);
      if (phi[g] == kNone) {
        phi[g] = img;
        todo.push_back(g);
      } else if (phi[g] != img) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Certificate certificate(const FlagGraph& fg) {
  Certificate cert;
  cert.rank = fg.rank();
  if (fg.flag_count == 0) return cert;
  std::vector<std::uint32_t> label(fg.flag_count);
  std::vector<FlagId> order;
  std::vector<std::uint32_t> code;
  std::size_t reached = 0;
  for (FlagId root = 0; root < fg.flag_count; ++root) {
    if (encode(fg, root, label, order, code, &cert.code)) {
      cert.code.swap(code);
      reached = order.size();
    }
  }
  // Disconnected graphs encode only the root's component; append the
  // component size so such graphs never compare equal to connected ones.
  cert.code.push_back(static_cast<std::uint32_t>(reached));
  cert.code.push_back(static_cast<std::uint32_t>(fg.flag_count));
  return cert;
}

Certificate certificate(const Polytope& p) { return certificate(p.flag_graph()); }

bool are_isomorphic(const FlagGraph& a, const FlagGraph& b) {
  if (a.rank() != b.rank() || a.flag_count != b.flag_count) return false;
  return certificate(a) == certificate(b);
}

bool are_isomorphic(const Polytope& a, const Polytope& b) {
  if (a.rank() != b.rank() || a.face_counts() != b.face_counts()) return false;
  if (!a.has_flags() || !b.has_flags()) return false;
  return are_isomorphic(a.flag_graph(), b.flag_graph());
}

std::uint64_t flag_graph_automorphisms(const FlagGraph& fg) {
  std::vector<FlagId> phi(fg.flag_count), todo;
  std::uint64_t count = 0;
  for (FlagId t = 0; t < fg.flag_count; ++t)
    if (extends(fg, t, phi, todo)) ++count;
  return count;
}

bool flag_transitive(const FlagGraph& fg) {
  std::vector<FlagId> phi(fg.flag_count), todo;
  for (FlagId t = 0; t < fg.flag_count; ++t)
    if (!extends(fg, t, phi, todo)) return false;
  return true;
}

}  // namespace polyquot
