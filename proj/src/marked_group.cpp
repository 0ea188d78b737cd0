#include "polyquot/marked_group.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace polyquot {

OrderBoundExceeded::OrderBoundExceeded(std::uint64_t order_, std::size_t bound_)
    : Error("group order " + std::to_string(order_) + " exceeds bound " +
            std::to_string(bound_)),
      order(order_),
      bound(bound_) {}

namespace {

// Stabiliser chain with explicit transversals.
class StabChain {
 public:
  StabChain(std::size_t degree, const std::vector<Permutation>& gens)
      : degree_(degree) {
    for (const Permutation& g : gens) {
      if (!g.is_identity()) strong_.push_back({g, 0});
    }
    if (!strong_.empty()) build();
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const Level& l : levels_) n *= l.orbit.size();
    return n;
  }

  bool contains(const Permutation& p) const {
    auto [residue, depth] = sift(p);
    (void)depth;
    return residue.is_identity();
  }

 private:
  struct Strong {
    Permutation perm;
    std::size_t level;  // fixes the first `level` base points
  };
  struct Level {
    Point base;
    std::vector<Point> orbit;
    std::vector<std::optional<Permutation>> transversal;  // indexed by point
  };

  std::pair<Permutation, std::size_t> sift(Permutation h) const {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      Point b = h[levels_[i].base];
      const auto& u = levels_[i].transversal[b];
      if (!u) return {h, i};
      h = h * u->inverse();
    }
    return {h, levels_.size()};
  }

  void rebuild_orbit(std::size_t i) {
    Level& l = levels_[i];
    l.transversal.assign(degree_, std::nullopt);
    l.transversal[l.base] = Permutation::identity(degree_);
    l.orbit = {l.base};
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      Point x = l.orbit[k];
      for (const Strong& s : strong_) {
        if (s.level < i) continue;
        Point y = s.perm[x];
        if (!l.transversal[y]) {
          l.transversal[y] = *l.transversal[x] * s.perm;
          l.orbit.push_back(y);
        }
      }
    }
  }

  Point first_moved(const Permutation& p) const {
    for (Point x = 0; x < degree_; ++x)
      if (p[x] != x) return x;
    return 0;
  }

  void build() {
    levels_.push_back({first_moved(strong_.front().perm), {}, {}});
    rebuild_orbit(0);
    // Process levels bottom-up; a new strong generator restarts at its level.
    std::size_t i = 0;
    while (true) {
      bool restarted = false;
      for (std::size_t k = 0; !restarted && k < levels_[i].orbit.size(); ++k) {
        Point beta = levels_[i].orbit[k];
        for (std::size_t si = 0; !restarted && si < strong_.size(); ++si) {
          if (strong_[si].level < i) continue;
          const Permutation s = strong_[si].perm;
          Permutation h = *levels_[i].transversal[beta] * s *
                          levels_[i].transversal[s[beta]]->inverse();
          if (h.is_identity()) continue;
          std::size_t j = i + 1;
          for (; j < levels_.size(); ++j) {
            const auto& u = levels_[j].transversal[h[levels_[j].base]];
            if (!u) break;
            h = h * u->inverse();
          }
          if (h.is_identity()) continue;
          if (j == levels_.size()) levels_.push_back({first_moved(h), {}, {}});
          strong_.push_back({std::move(h), j});
          for (std::size_t r = i + 1; r <= j; ++r) rebuild_orbit(r);
          i = j;
          restarted = true;
        }
      }
      if (restarted) continue;
      if (i == 0) break;
      --i;
    }
  }

  std::size_t degree_;
  std::vector<Strong> strong_;
  std::vector<Level> levels_;
};

// BFS tree from point 0 through the generators.
struct PointTree {
  std::vector<std::int64_t> parent;
  std::vector<int> via;
  std::vector<Point> order;
};

PointTree point_tree(std::size_t degree, const std::vector<Permutation>& gens) {
  PointTree t;
  t.parent.assign(degree, -1);
  t.via.assign(degree, -1);
  if (degree == 0) return t;
  t.parent[0] = 0;
  t.order.push_back(0);
  for (std::size_t k = 0; k < t.order.size(); ++k) {
    Point x = t.order[k];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Point y = gens[i][x];
      if (t.parent[y] < 0) {
        t.parent[y] = x;
        t.via[y] = static_cast<int>(i);
        t.order.push_back(y);
      }
    }
  }
  return t;
}

}  // namespace

struct MarkedGroup::Cache {
  std::once_flag regular_once;
  bool regular = false;
  PointTree tree;

  std::once_flag chain_once;
  std::optional<StabChain> chain;

  std::once_flag order_once;
  std::uint64_t order = 0;

  std::mutex elements_mutex;
  std::unique_ptr<ElementTable> elements;
  // Generic path only: element permutations by id.
  std::vector<Permutation> element_perms;
  std::unordered_map<Permutation, ElementId, PermutationHash> element_index;
};

MarkedGroup::MarkedGroup(std::size_t degree, std::vector<Permutation> gens)
    : degree_(degree), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const Permutation& g : gens_) {
    if (g.degree() != degree_) throw Error("generator degree mismatch");
  }
}

bool MarkedGroup::acts_regularly() const {
  Cache& c = cache();
  std::call_once(c.regular_once, [&] {
    c.tree = point_tree(degree_, gens_);
    if (degree_ == 0 || c.tree.order.size() != degree_) return;
    // Regular iff the coloured Schreier graph is vertex-transitive: for
    // each target t there is a colour-preserving map sending 0 to t.
    std::vector<Point> image(degree_);
    for (Point t = 0; t < degree_; ++t) {
      image[0] = t;
      bool ok = true;
      for (std::size_t k = 1; k < c.tree.order.size(); ++k) {
        Point y = c.tree.order[k];
        auto x = static_cast<Point>(c.tree.parent[y]);
        image[y] = gens_[static_cast<std::size_t>(c.tree.via[y])][image[x]];
      }
      for (Point x = 0; x < degree_ && ok; ++x) {
        for (const Permutation& g : gens_) {
          if (image[g[x]] != g[image[x]]) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) return;
    }
    c.regular = true;
  });
  return c.regular;
}

std::uint64_t MarkedGroup::order() const {
  Cache& c = cache();
  std::call_once(c.order_once, [&] {
    if (gens_.empty() || std::all_of(gens_.begin(), gens_.end(),
                                     [](const Permutation& p) { return p.is_identity(); })) {
      c.order = 1;
    } else if (acts_regularly()) {
      c.order = degree_;
    } else {
      std::call_once(c.chain_once, [&] { c.chain.emplace(degree_, gens_); });
      c.order = c.chain->order();
    }
  });
  return c.order;
}

bool MarkedGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw Error("permutation acts on a different domain");
  if (p.is_identity()) return true;
  if (gens_.empty()) return false;
  if (acts_regularly()) {
    const PointTree& t = cache().tree;
    Point y = p[0];
    Word w;
    while (y != 0) {
      w.push_back(t.via[y]);
      y = static_cast<Point>(t.parent[y]);
    }
    std::reverse(w.begin(), w.end());
    return evaluate(w) == p;
  }
  Cache& c = cache();
  std::call_once(c.chain_once, [&] { c.chain.emplace(degree_, gens_); });
  return c.chain->contains(p);
}

Permutation MarkedGroup::evaluate(const Word& w) const {
  std::vector<Point> img(degree_);
  std::iota(img.begin(), img.end(), Point{0});
  for (Generator g : w) {
    if (g < 0 || g >= rank()) throw Error("word uses an unknown generator");
    const Permutation& s = gens_[static_cast<std::size_t>(g)];
    for (Point& x : img) x = s[x];
  }
  return Permutation(std::move(img));
}

bool MarkedGroup::satisfies(const Presentation& pres) const {
  if (pres.rank != rank()) return false;
  for (const Permutation& g : gens_)
    if (!(g * g).is_identity()) return false;
  for (const Word& r : pres.relators)
    if (!evaluate(r).is_identity()) return false;
  return true;
}

const ElementTable& MarkedGroup::elements(std::size_t bound) const {
  std::uint64_t n = order();
  if (n > bound) throw OrderBoundExceeded(n, bound);
  Cache& c = cache();
  std::lock_guard lock(c.elements_mutex);
  if (c.elements) return *c.elements;
  const auto size = static_cast<std::size_t>(n);
  std::vector<std::vector<ElementId>> right(gens_.size(), std::vector<ElementId>(size));
  if (acts_regularly()) {
    // Element e is the unique one sending point 0 to e; image arrays compare
    // first at point 0, so point order is lexicographic order.
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t e = 0; e < size; ++e) right[i][e] = gens_[i][static_cast<Point>(e)];
  } else {
    std::vector<Permutation> perms{Permutation::identity(degree_)};
    std::unordered_map<Permutation, ElementId, PermutationHash> index{{perms[0], 0}};
    for (std::size_t k = 0; k < perms.size(); ++k) {
      for (const Permutation& g : gens_) {
        Permutation p = perms[k] * g;
        if (index.try_emplace(p, static_cast<ElementId>(perms.size())).second)
          perms.push_back(std::move(p));
      }
    }
    std::vector<ElementId> sorted(perms.size());
    std::iota(sorted.begin(), sorted.end(), ElementId{0});
    std::sort(sorted.begin(), sorted.end(),
              [&](ElementId a, ElementId b) { return perms[a] < perms[b]; });
    std::vector<ElementId> rank_of(perms.size());
    for (std::size_t r = 0; r < sorted.size(); ++r) rank_of[sorted[r]] = static_cast<ElementId>(r);
    c.element_perms.resize(perms.size());
    c.element_index.clear();
    for (std::size_t k = 0; k < perms.size(); ++k) {
      for (std::size_t i = 0; i < gens_.size(); ++i)
        right[i][rank_of[k]] = rank_of[index.at(perms[k] * gens_[i])];
    }
    for (std::size_t k = 0; k < perms.size(); ++k) {
      c.element_index.emplace(perms[k], rank_of[k]);
      c.element_perms[rank_of[k]] = std::move(perms[k]);
    }
  }
  c.elements = std::make_unique<ElementTable>(size, std::move(right));
  return *c.elements;
}

Permutation MarkedGroup::permutation_of(ElementId e) const {
  const ElementTable& t = elements(std::numeric_limits<std::size_t>::max());
  if (!cache().element_perms.empty()) return cache().element_perms[e];
  return evaluate(t.word(e));
}

std::optional<ElementId> MarkedGroup::element_of(const Permutation& p) const {
  if (p.degree() != degree_) throw Error("permutation acts on a different domain");
  elements(std::numeric_limits<std::size_t>::max());
  if (acts_regularly()) {
    auto e = static_cast<ElementId>(p[0]);
    if (permutation_of(e) != p) return std::nullopt;
    return e;
  }
  auto it = cache().element_index.find(p);
  if (it == cache().element_index.end()) return std::nullopt;
  return it->second;
}

MarkedGroup MarkedGroup::reordered(const std::vector<int>& order) const {
  std::vector<Permutation> gens;
  for (int i : order) gens.push_back(gens_.at(static_cast<std::size_t>(i)));
  return MarkedGroup(degree_, std::move(gens));
}

MarkedGroup MarkedGroup::dual() const {
  return MarkedGroup(degree_, std::vector<Permutation>(gens_.rbegin(), gens_.rend()));
}

std::uint64_t group_order(const MarkedGroup& g) { return g.order(); }

bool is_member(const MarkedGroup& g, const Permutation& p) { return g.contains(p); }

MarkedGroup perm_rep(const CosetTable& table) {
  if (!table.closed()) throw Error("perm_rep needs a closed coset table");
  const std::size_t n = table.coset_count();
  std::vector<Permutation> gens;
  for (int g = 0; g < table.rank(); ++g) {
    std::vector<Point> img(n);
    for (std::size_t c = 0; c < n; ++c) img[c] = static_cast<Point>(table.image(c, g));
    gens.emplace_back(std::move(img));
  }
  return MarkedGroup(n, std::move(gens));
}

}  // namespace polyquot
