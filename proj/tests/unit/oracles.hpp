#pragma once

// Naive reference computations used to cross-check the library. Everything
// here works on raw image vectors and std containers only.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "polyquot/marked_group.hpp"
#include "polyquot/polytope.hpp"

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm compose(const Perm& a, const Perm& b) {  // a then b
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[a[x]];
  return c;
}

inline Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<std::uint32_t>(x);
  return c;
}

inline std::vector<Perm> raw(const polyquot::MarkedGroup& g) {
  std::vector<Perm> out;
  for (const auto& p : g.generators()) out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

/// Every element reachable from the identity by multiplying by generators.
inline std::set<Perm> word_closure(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Perm> seen{id};
  std::queue<Perm> todo;
  todo.push(id);
  while (!todo.empty()) {
    Perm p = todo.front();
    todo.pop();
    for (const auto& s : gens) {
      Perm q = compose(p, s);
      if (seen.insert(q).second) todo.push(q);
    }
  }
  return seen;
}

/// Explicit group: elements indexed in set order, with a multiplication table.
struct Group {
  std::vector<Perm> elems;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;

  explicit Group(const polyquot::MarkedGroup& g) {
    auto all = word_closure(raw(g), g.degree());
    elems.assign(all.begin(), all.end());
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    mul.assign(elems.size(), std::vector<int>(elems.size()));
    inv.resize(elems.size());
    for (std::size_t a = 0; a < elems.size(); ++a) {
      inv[a] = index[inverse(elems[a])];
      for (std::size_t b = 0; b < elems.size(); ++b) mul[a][b] = index[compose(elems[a], elems[b])];
    }
  }
  int size() const { return static_cast<int>(elems.size()); }

  std::set<int> generate(std::set<int> h, int g) const {
    h.insert(g);
    std::vector<int> gens(h.begin(), h.end());
    std::set<int> out{0};
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop();
      for (int s : gens)
        if (out.insert(mul[x][s]).second) todo.push(mul[x][s]);
    }
    return out;
  }

  std::set<int> conjugate(const std::set<int>& h, int g) const {
    std::set<int> out;
    for (int x : h) out.insert(mul[mul[inv[g]][x]][g]);
    return out;
  }
};

/// All subgroups, by repeatedly adjoining single elements.
inline std::set<std::set<int>> all_subgroups(const Group& g) {
  std::set<std::set<int>> found{{0}};
  std::vector<std::set<int>> todo{{0}};
  while (!todo.empty()) {
    auto h = todo.back();
    todo.pop_back();
    for (int x = 0; x < g.size(); ++x) {
      if (h.count(x)) continue;
      auto k = g.generate(h, x);
      if (found.insert(k).second) todo.push_back(k);
    }
  }
  return found;
}

/// Conjugacy classes of subgroups as (order, class size), sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> subgroup_classes(const Group& g) {
  std::set<std::set<int>> done;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& h : all_subgroups(g)) {
    if (done.count(h)) continue;
    std::set<std::set<int>> cls;
    for (int x = 0; x < g.size(); ++x) cls.insert(g.conjugate(h, x));
    done.insert(cls.begin(), cls.end());
    out.emplace_back(h.size(), cls.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank-preserving bijections of the proper faces that preserve covering,
/// found by backtracking. Only for small posets.
inline std::uint64_t automorphisms(const polyquot::Polytope& p) {
  using polyquot::Face;
  // Breadth-first over the Hasse diagram, so every face after the first has
  // an already placed neighbour constraining it.
  std::vector<Face> faces;
  std::set<Face> placed;
  std::queue<Face> todo;
  todo.push({0, 0});
  placed.insert({0, 0});
  while (!todo.empty()) {
    Face f = todo.front();
    todo.pop();
    faces.push_back(f);
    std::vector<Face> nbrs;
    if (f.rank + 1 < p.rank())
      for (auto u : p.up(f)) nbrs.push_back({f.rank + 1, u});
    if (f.rank > 0)
      for (auto d : p.down(f)) nbrs.push_back({f.rank - 1, d});
    for (Face g : nbrs)
      if (placed.insert(g).second) todo.push(g);
  }
  std::map<Face, std::size_t> pos;
  for (std::size_t i = 0; i < faces.size(); ++i) pos[faces[i]] = i;
  auto covers = [&](Face a, Face b) {
    const auto& u = p.up(a);
    return std::find(u.begin(), u.end(), b.index) != u.end();
  };
  std::vector<std::int64_t> image(faces.size(), -1);
  std::vector<bool> used(faces.size(), false);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == faces.size()) {
      ++count;
      return;
    }
    Face f = faces[k];
    for (std::uint32_t c = 0; c < p.face_count(f.rank); ++c) {
      Face t{f.rank, c};
      std::size_t tp = pos[t];
      if (used[tp]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        Face a = faces[j];
        Face b = faces[static_cast<std::size_t>(image[j])];
        if (a.rank == f.rank - 1) ok = covers(a, f) == covers(b, t);
        if (a.rank == f.rank + 1) ok = covers(f, a) == covers(t, b);
      }
      if (!ok) continue;
      image[k] = static_cast<std::int64_t>(tp);
      used[tp] = true;
      self(self, k + 1);
      used[tp] = false;
    }
  };
  rec(rec, 0);
  return count;
}

/// Maximal chains of proper faces, by DFS over covers.
inline std::size_t flag_count(const polyquot::Polytope& p) {
  std::size_t count = 0;
  auto rec = [&](auto&& self, polyquot::Face f) -> void {
    if (f.rank == p.rank() - 1) {
      ++count;
      return;
    }
    for (auto u : p.up(f)) self(self, polyquot::Face{f.rank + 1, u});
  };
  for (std::uint32_t v = 0; v < p.face_count(0); ++v) rec(rec, {0, v});
  return count;
}

}  // namespace oracle
