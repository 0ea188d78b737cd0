#include "polyquot/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polyquot/isomorphism.hpp"

namespace polyquot {

namespace {

constexpr std::size_t kMaxFlags = 20'000'000;

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::uint32_t> parent;
};

std::string face_name(Face f) {
  return "face " + std::to_string(f.index) + " of rank " + std::to_string(f.rank);
}

// Faces of each rank lying between g and f (inclusive); indexed by rank + 1.
std::vector<std::vector<std::uint32_t>> interval(const Polytope& p, Face f, Face g) {
  const auto levels = static_cast<std::size_t>(p.rank() + 2);
  std::vector<std::vector<std::uint32_t>> above(levels), below(levels);
  above[static_cast<std::size_t>(g.rank + 1)] = {g.index};
  for (int r = g.rank; r < f.rank; ++r) {
    auto& next = above[static_cast<std::size_t>(r + 2)];
    for (std::uint32_t x : above[static_cast<std::size_t>(r + 1)])
      for (std::uint32_t y : p.up({r, x})) next.push_back(y);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
  }
  below[static_cast<std::size_t>(f.rank + 1)] = {f.index};
  for (int r = f.rank; r > g.rank; --r) {
    auto& next = below[static_cast<std::size_t>(r)];
    for (std::uint32_t x : below[static_cast<std::size_t>(r + 1)])
      for (std::uint32_t y : p.down({r, x})) next.push_back(y);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
  }
  std::vector<std::vector<std::uint32_t>> out(levels);
  for (int r = g.rank; r <= f.rank; ++r) {
    auto i = static_cast<std::size_t>(r + 1);
    std::set_intersection(above[i].begin(), above[i].end(), below[i].begin(), below[i].end(),
                          std::back_inserter(out[i]));
  }
  return out;
}

}  // namespace

Polytope Polytope::from_covers(int rank, std::vector<std::size_t> counts,
                               const std::vector<std::pair<Face, Face>>& covers) {
  if (rank < -1) throw Error("polytope rank must be at least -1");
  if (counts.size() != static_cast<std::size_t>(rank + 2))
    throw Error("face counts must cover ranks -1.." + std::to_string(rank));
  Polytope p;
  p.rank_ = rank;
  p.up_.resize(counts.size());
  p.down_.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    p.up_[i].resize(counts[i]);
    p.down_[i].resize(counts[i]);
  }
  for (const auto& [lo, hi] : covers) {
    if (hi.rank != lo.rank + 1 || lo.rank < -1 || hi.rank > rank)
      throw Error("cover between " + face_name(lo) + " and " + face_name(hi) +
                  " does not join adjacent ranks");
    if (lo.index >= counts[static_cast<std::size_t>(lo.rank + 1)] ||
        hi.index >= counts[static_cast<std::size_t>(hi.rank + 1)])
      throw Error("cover refers to a face index out of range");
    p.up_[static_cast<std::size_t>(lo.rank + 1)][lo.index].push_back(hi.index);
    p.down_[static_cast<std::size_t>(hi.rank + 1)][hi.index].push_back(lo.index);
  }
  for (auto* side : {&p.up_, &p.down_}) {
    for (auto& level : *side) {
      for (auto& list : level) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
      }
    }
  }
  p.build_flags();
  return p;
}

std::vector<std::size_t> Polytope::face_counts() const {
  std::vector<std::size_t> out;
  for (int r = 0; r < rank_; ++r) out.push_back(face_count(r));
  return out;
}

bool Polytope::incident(Face a, Face b) const {
  if (a.rank > b.rank) return false;
  if (a.rank == b.rank) return a.index == b.index;
  auto lv = interval(*this, b, a);
  return !lv[static_cast<std::size_t>(a.rank + 1)].empty();
}

const FlagGraph& Polytope::flag_graph() const {
  if (!flags_) throw Error("poset has no flag graph: " + flag_failure_);
  return *flags_;
}

// Flags are enumerated as chains in lexicographic order of face indices;
// the i-neighbour of a chain replaces its rank-i face by the other face of
// the rank-1 section around it.
void Polytope::build_flags() {
  flags_.reset();
  flag_faces_.clear();
  flag_failure_.clear();
  if (face_count(-1) != 1 || face_count(rank_) != 1) {
    flag_failure_ = "not bounded";
    return;
  }
  for (int r = -1; r <= rank_; ++r) {
    for (std::uint32_t x = 0; x < face_count(r); ++x) {
      if ((r < rank_ && up({r, x}).empty()) || (r > -1 && down({r, x}).empty())) {
        flag_failure_ = "not ranked at " + face_name({r, x});
        return;
      }
    }
  }
  // Diamond condition on every rank-1 section.
  for (int r = -1; r + 2 <= rank_; ++r) {
    for (std::uint32_t g = 0; g < face_count(r); ++g) {
      std::vector<std::uint32_t> tops;
      for (std::uint32_t m : up({r, g}))
        for (std::uint32_t t : up({r + 1, m})) tops.push_back(t);
      std::sort(tops.begin(), tops.end());
      for (std::size_t k = 0; k < tops.size();) {
        std::size_t e = k;
        while (e < tops.size() && tops[e] == tops[k]) ++e;
        if (e - k != 2) {
          flag_failure_ = "diamond fails between " + face_name({r, g}) + " and " +
                          face_name({r + 2, tops[k]}) + " (" + std::to_string(e - k) +
                          " middle faces)";
          return;
        }
        k = e;
      }
    }
  }
  FlagGraph fg;
  if (rank_ <= 0) {
    fg.flag_count = 1;
    flags_ = std::move(fg);
    return;
  }
  const auto n = static_cast<std::size_t>(rank_);
  fg.adjacency.assign(n, {});
  std::vector<std::uint32_t> chain(n);
  std::vector<std::size_t> pos(n, 0);
  // Iterative DFS over chains.
  std::vector<const std::vector<std::uint32_t>*> options(n);
  options[0] = &up(least());
  std::size_t depth = 0;
  while (true) {
    if (pos[depth] < options[depth]->size()) {
      chain[depth] = (*options[depth])[pos[depth]++];
      if (depth + 1 == n) {
        flag_faces_.insert(flag_faces_.end(), chain.begin(), chain.end());
        if (flag_faces_.size() / n > kMaxFlags) {
          flag_faces_.clear();
          flag_failure_ = "too many flags";
          return;
        }
      } else {
        ++depth;
        options[depth] = &up({static_cast<int>(depth) - 1, chain[depth - 1]});
        pos[depth] = 0;
      }
    } else {
      if (depth == 0) break;
      --depth;
    }
  }
  fg.flag_count = flag_faces_.size() / n;
  auto less_chain = [&](std::size_t a, const std::uint32_t* b) {
    return std::lexicographical_compare(flag_faces_.begin() + static_cast<std::ptrdiff_t>(a * n),
                                        flag_faces_.begin() + static_cast<std::ptrdiff_t>(a * n + n),
                                        b, b + n);
  };
  auto find_chain = [&](const std::uint32_t* c) -> FlagId {
    std::size_t lo = 0, hi = fg.flag_count;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (less_chain(mid, c))
        lo = mid + 1;
      else
        hi = mid;
    }
    return static_cast<FlagId>(lo);
  };
  std::vector<std::uint32_t> other(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& adj = fg.adjacency[i];
    adj.resize(fg.flag_count);
    for (std::size_t f = 0; f < fg.flag_count; ++f) {
      const std::uint32_t* c = &flag_faces_[f * n];
      std::copy(c, c + n, other.begin());
      const auto& cand = i == 0 ? up(least()) : up({static_cast<int>(i) - 1, c[i - 1]});
      std::uint32_t upper = i + 1 < n ? c[i + 1] : 0;
      for (std::uint32_t x : cand) {
        if (x == c[i]) continue;
        const auto& ups = up({static_cast<int>(i), x});
        if (std::binary_search(ups.begin(), ups.end(), upper)) {
          other[i] = x;
          break;
        }
      }
      adj[f] = find_chain(other.data());
    }
  }
  flags_ = std::move(fg);
}

std::vector<std::set<int>> Polytope::type() const {
  std::vector<std::set<int>> out;
  if (!flags_ || rank_ < 2) return out;
  const auto n = static_cast<std::size_t>(rank_);
  for (std::size_t k = 1; k < n; ++k) {
    // Polygon through faces of ranks k-2 and k+1: count its rank k-1 faces
    // by walking the alternating k-1 / k adjacencies.
    std::set<int> sizes;
    std::vector<bool> seen(flags_->flag_count, false);
    for (FlagId f = 0; f < flags_->flag_count; ++f) {
      if (seen[f]) continue;
      FlagId g = f;
      int steps = 0;
      do {
        seen[g] = true;
        g = flags_->adjacency[k - 1][g];
        seen[g] = true;
        g = flags_->adjacency[k][g];
        ++steps;
      } while (g != f);
      sizes.insert(steps);
    }
    out.push_back(std::move(sizes));
  }
  return out;
}

std::string Polytope::type_string() const {
  std::string s = "{";
  auto t = type();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ',';
    bool first = true;
    for (int v : t[k]) {
      if (!first) s += '|';
      s += std::to_string(v);
      first = false;
    }
  }
  return s + "}";
}

OrbitPoset orbit_poset(const FlagGraph& fg) {
  const int n = fg.rank();
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::vector<std::uint32_t>> face_of(nn);
  std::vector<std::size_t> counts(nn + 2, 1);
  for (int i = 0; i < n; ++i) {
    UnionFind uf(fg.flag_count);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (FlagId f = 0; f < fg.flag_count; ++f) uf.unite(f, fg.adjacent(j, f));
    }
    auto& fo = face_of[static_cast<std::size_t>(i)];
    fo.assign(fg.flag_count, 0);
    std::vector<std::uint32_t> id(fg.flag_count, static_cast<std::uint32_t>(-1));
    std::uint32_t next = 0;
    for (FlagId f = 0; f < fg.flag_count; ++f) {
      std::uint32_t r = uf.find(f);
      if (id[r] == static_cast<std::uint32_t>(-1)) id[r] = next++;
      fo[f] = id[r];
    }
    counts[static_cast<std::size_t>(i + 1)] = next;
  }
  std::vector<std::pair<Face, Face>> covers;
  for (FlagId f = 0; f < fg.flag_count; ++f) {
    for (int r = -1; r < n; ++r) {
      Face lo{r, r < 0 ? 0U : face_of[static_cast<std::size_t>(r)][f]};
      Face hi{r + 1, r + 1 >= n ? 0U : face_of[static_cast<std::size_t>(r + 1)][f]};
      covers.emplace_back(lo, hi);
    }
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  OrbitPoset out{Polytope::from_covers(n, counts, covers), {}};
  const Polytope& p = out.poset;
  if (!p.has_flags()) {
    out.failure = p.flag_failure();
    return out;
  }
  if (p.flag_count() != fg.flag_count) {
    out.failure = "poset has " + std::to_string(p.flag_count()) + " flags but there are " +
                  std::to_string(fg.flag_count) + " flag orbits";
    return out;
  }
  if (n == 0) return out;
  // Map each orbit to its chain and require a bijection that respects
  // adjacency.
  std::vector<FlagId> chain_of(fg.flag_count);
  std::vector<bool> hit(fg.flag_count, false);
  const FlagGraph& pg = p.flag_graph();
  std::vector<std::uint32_t> key(nn);
  // Chains of p are sorted, so locate each orbit's chain by binary search.
  auto find = [&](const std::vector<std::uint32_t>& c) -> std::optional<FlagId> {
    std::size_t lo = 0, hi = p.flag_count();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      auto m = p.chain(static_cast<FlagId>(mid));
      if (std::lexicographical_compare(m.begin(), m.end(), c.begin(), c.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == p.flag_count()) return std::nullopt;
    auto m = p.chain(static_cast<FlagId>(lo));
    if (!std::equal(m.begin(), m.end(), c.begin(), c.end())) return std::nullopt;
    return static_cast<FlagId>(lo);
  };
  for (FlagId f = 0; f < fg.flag_count; ++f) {
    for (std::size_t r = 0; r < nn; ++r) key[r] = face_of[r][f];
    auto id = find(key);
    if (!id) {
      out.failure = "flag orbit " + std::to_string(f) + " is not a maximal chain";
      return out;
    }
    if (hit[*id]) {
      out.failure = "two flag orbits share the chain of flag orbit " + std::to_string(f);
      return out;
    }
    hit[*id] = true;
    chain_of[f] = *id;
  }
  for (int i = 0; i < n; ++i) {
    for (FlagId f = 0; f < fg.flag_count; ++f) {
      if (chain_of[fg.adjacent(i, f)] != pg.adjacent(i, chain_of[f])) {
        out.failure = "adjacency " + std::to_string(i) + " of flag orbit " + std::to_string(f) +
                      " does not match the poset";
        return out;
      }
    }
  }
  return out;
}

Polytope faces_from_flags(const FlagGraph& fg) {
  if (auto why = fg.violation()) throw Error("invalid flag graph: " + *why);
  OrbitPoset op = orbit_poset(fg);
  if (!op.failure.empty()) throw Error("flag graph does not give a polytope: " + op.failure);
  return std::move(op.poset);
}

Polytope polytope_from_group(const MarkedGroup& g) {
  return faces_from_flags(flag_graph_from_group(g));
}

PolytopalityResult is_polytopal(const Polytope& p) {
  PolytopalityResult res;
  auto fail = [&](std::string axiom, std::string detail) {
    res.ok = false;
    res.failed_axiom = std::move(axiom);
    res.detail = std::move(detail);
    return res;
  };
  const int n = p.rank();
  if (p.face_count(-1) != 1 || p.face_count(n) != 1)
    return fail("bounded", "needs exactly one least and one greatest face");
  for (int r = -1; r <= n; ++r) {
    for (std::uint32_t x = 0; x < p.face_count(r); ++x) {
      if (r < n && p.up({r, x}).empty())
        return fail("ranked", face_name({r, x}) + " lies in a short maximal chain");
      if (r > -1 && p.down({r, x}).empty())
        return fail("ranked", face_name({r, x}) + " lies in a short maximal chain");
    }
  }
  if (!p.has_flags()) {
    if (p.flag_failure().rfind("diamond", 0) == 0) return fail("diamond", p.flag_failure());
    return fail("ranked", p.flag_failure());
  }
  const FlagGraph& fg = p.flag_graph();
  // Strong connectivity: for each rank pair i < j with j - i >= 3, the flags
  // through a fixed (rank-i, rank-j) pair of faces must form one class under
  // the adjacencies other than i and j.
  for (int i = -1; i <= n; ++i) {
    for (int j = i + 3; j <= n; ++j) {
      UnionFind uf(fg.flag_count);
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        for (FlagId f = 0; f < fg.flag_count; ++f) uf.unite(f, fg.adjacent(k, f));
      }
      std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> comp;
      for (FlagId f = 0; f < fg.flag_count; ++f) {
        std::uint32_t a = i < 0 ? 0 : p.flag_face(f, i);
        std::uint32_t b = j >= n ? 0 : p.flag_face(f, j);
        auto [it, fresh] = comp.emplace(std::make_pair(a, b), uf.find(f));
        if (!fresh && it->second != uf.find(f)) {
          return fail("strongly-connected", "section between " + face_name({i, a}) + " and " +
                                                face_name({j, b}) + " is not flag-connected");
        }
      }
    }
  }
  return res;
}

Polytope section(const Polytope& p, Face f, Face g) {
  if (f.rank < g.rank || !p.incident(g, f))
    throw Error(face_name(g) + " is not below " + face_name(f));
  auto lv = interval(p, f, g);
  const int base = g.rank;
  const int rank = f.rank - g.rank - 1;
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::uint32_t>> local(lv.size());
  for (int r = g.rank; r <= f.rank; ++r) counts.push_back(lv[static_cast<std::size_t>(r + 1)].size());
  std::vector<std::pair<Face, Face>> covers;
  for (int r = g.rank; r < f.rank; ++r) {
    const auto& lower = lv[static_cast<std::size_t>(r + 1)];
    const auto& upper = lv[static_cast<std::size_t>(r + 2)];
    for (std::size_t a = 0; a < lower.size(); ++a) {
      for (std::uint32_t u : p.up({r, lower[a]})) {
        auto it = std::lower_bound(upper.begin(), upper.end(), u);
        if (it == upper.end() || *it != u) continue;
        covers.push_back({{r - base - 1, static_cast<std::uint32_t>(a)},
                          {r - base, static_cast<std::uint32_t>(it - upper.begin())}});
      }
    }
  }
  return Polytope::from_covers(rank, counts, covers);
}

Polytope facet(const Polytope& p, std::uint32_t index) {
  return section(p, {p.rank() - 1, index}, p.least());
}

Polytope vertex_figure(const Polytope& p, std::uint32_t index) {
  return section(p, p.greatest(), {0, index});
}

Polytope dual(const Polytope& p) {
  const int n = p.rank();
  std::vector<std::size_t> counts;
  for (int r = n; r >= -1; --r) counts.push_back(p.face_count(r));
  std::vector<std::pair<Face, Face>> covers;
  for (int r = -1; r < n; ++r) {
    for (std::uint32_t x = 0; x < p.face_count(r); ++x)
      for (std::uint32_t y : p.up({r, x})) covers.push_back({{n - 2 - r, y}, {n - 1 - r, x}});
  }
  return Polytope::from_covers(n, counts, covers);
}

std::uint64_t automorphism_count(const Polytope& p) {
  return flag_graph_automorphisms(p.flag_graph());
}

bool is_regular(const Polytope& p) { return p.has_flags() && flag_transitive(p.flag_graph()); }

bool SectionProfile::section_regular() const {
  return std::all_of(class_counts.begin(), class_counts.end(),
                     [](const auto& kv) { return kv.second.size() <= 1; });
}

std::vector<std::pair<Polytope, std::size_t>> section_classes(const Polytope& p, int upper_rank,
                                                              int lower_rank) {
  const int n = p.rank();
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (FlagId f = 0; f < p.flag_count(); ++f) {
    std::uint32_t a = lower_rank < 0 ? 0 : p.flag_face(f, lower_rank);
    std::uint32_t b = upper_rank >= n ? 0 : p.flag_face(f, upper_rank);
    pairs.emplace(a, b);
  }
  std::vector<std::pair<Polytope, std::size_t>> out;
  std::vector<Certificate> certs;
  for (auto [a, b] : pairs) {
    Polytope s = section(p, {upper_rank, b}, {lower_rank, a});
    if (pairs.size() == 1) {
      out.emplace_back(std::move(s), 1);
      break;
    }
    Certificate c = certificate(s);
    auto it = std::find(certs.begin(), certs.end(), c);
    if (it == certs.end()) {
      certs.push_back(std::move(c));
      out.emplace_back(std::move(s), 1);
    } else {
      ++out[static_cast<std::size_t>(it - certs.begin())].second;
    }
  }
  return out;
}

SectionProfile section_profile(const Polytope& p) {
  SectionProfile prof;
  const int n = p.rank();
  for (int i = -1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      auto classes = section_classes(p, j, i);
      auto& counts = prof.class_counts[{i, j}];
      for (const auto& c : classes) counts.push_back(c.second);
    }
  }
  return prof;
}

bool is_section_regular(const Polytope& p) { return section_profile(p).section_regular(); }

std::string hasse_dot(const Polytope& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int r = -1; r <= p.rank(); ++r) {
    os << "  { rank=same;";
    for (std::uint32_t x = 0; x < p.face_count(r); ++x) os << " \"" << r << ':' << x << '"';
    os << " }\n";
  }
  for (int r = -1; r < p.rank(); ++r) {
    for (std::uint32_t x = 0; x < p.face_count(r); ++x)
      for (std::uint32_t y : p.up({r, x}))
        os << "  \"" << r << ':' << x << "\" -> \"" << r + 1 << ':' << y << "\" [dir=none];\n";
  }
  os << "}\n";
  return os.str();
}

std::string flag_graph_dot(const FlagGraph& fg) {
  static const char* const kColors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown"};
  std::ostringstream os;
  os << "graph flags {\n";
  for (int i = 0; i < fg.rank(); ++i) {
    for (FlagId f = 0; f < fg.flag_count; ++f) {
      FlagId g = fg.adjacent(i, f);
      if (f <= g)
        os << "  " << f << " -- " << g << " [color=" << kColors[i % 6] << ", label=" << i
           << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace polyquot
