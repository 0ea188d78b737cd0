#include "polyquot/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace polyquot {

Subgroup::Subgroup(MarkedGroup parent, const std::vector<Permutation>& gens)
    : parent_(std::move(parent)) {
  const ElementTable& t = parent_.elements();
  std::vector<ElementId> ids;
  for (const Permutation& p : gens) {
    auto e = parent_.element_of(p);
    if (!e) throw Error("subgroup generator is not in the parent group");
    ids.push_back(*e);
  }
  elements_ = closure(t, ids);
  order_ = elements_.count();
  gens_ = small_generating_set(t, elements_);
}

Subgroup::Subgroup(MarkedGroup parent, ElementSet elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  const ElementTable& t = parent_.elements();
  if (elements_.universe() != t.size()) throw Error("element set from another group");
  order_ = elements_.count();
  gens_ = small_generating_set(t, elements_);
}

Subgroup Subgroup::generated_by(MarkedGroup parent, std::span<const ElementId> gens) {
  ElementSet s = closure(parent.elements(), gens);
  return Subgroup(std::move(parent), std::move(s));
}

Subgroup Subgroup::trivial(MarkedGroup parent) {
  return generated_by(std::move(parent), {});
}

Subgroup Subgroup::whole(MarkedGroup parent) {
  ElementSet all = parent.elements().all();
  return Subgroup(std::move(parent), std::move(all));
}

bool Subgroup::contains(const Permutation& p) const {
  auto e = parent_.element_of(p);
  return e && elements_.contains(*e);
}

std::vector<Permutation> Subgroup::generators() const {
  std::vector<Permutation> out;
  for (ElementId e : gens_) out.push_back(parent_.permutation_of(e));
  return out;
}

ElementSet extend_closure(const ElementTable& t, const ElementSet& start,
                          std::span<const ElementId> gens) {
  ElementSet set = start;
  std::vector<ElementId> todo = start.to_vector();
  if (!set.contains(ElementTable::identity())) {
    set.insert(ElementTable::identity());
    todo.push_back(ElementTable::identity());
  }
  for (std::size_t k = 0; k < todo.size(); ++k) {
    for (ElementId g : gens) {
      ElementId y = t.mul(todo[k], g);
      if (!set.contains(y)) {
        set.insert(y);
        todo.push_back(y);
      }
    }
  }
  return set;
}

ElementSet closure(const ElementTable& t, std::span<const ElementId> gens) {
  return extend_closure(t, t.empty_set(), gens);
}

std::vector<ElementId> small_generating_set(const ElementTable& t, const ElementSet& h) {
  std::vector<ElementId> gens;
  ElementSet span = closure(t, gens);
  const std::size_t target = h.count();
  h.for_each([&](ElementId e) {
    if (span.count() == target || span.contains(e)) return;
    gens.push_back(e);
    span = extend_closure(t, span, gens);
  });
  return gens;
}

ElementSet conjugate_set(const ElementTable& t, const ElementSet& set, ElementId g) {
  ElementSet out = t.empty_set();
  const ElementId gi = t.inv(g);
  set.for_each([&](ElementId h) { out.insert(t.mul(t.mul(gi, h), g)); });
  return out;
}

Subgroup intersect(const Subgroup& h1, const Subgroup& h2) {
  if (!(h1.parent().generators() == h2.parent().generators()))
    throw Error("subgroups of different groups");
  ElementSet s = h1.elements();
  s &= h2.elements();
  return Subgroup(h1.parent(), std::move(s));
}

ElementSet product_set(const Subgroup& a, const Subgroup& b) {
  const ElementTable& t = a.table();
  ElementSet out = t.empty_set();
  std::vector<ElementId> bs = b.elements().to_vector();
  a.elements().for_each([&](ElementId x) {
    for (ElementId y : bs) out.insert(t.mul(x, y));
  });
  return out;
}

std::vector<ElementId> product_set_intersect(const Subgroup& h, const Subgroup& a,
                                             const Subgroup& b) {
  ElementSet s = product_set(a, b);
  s &= h.elements();
  return s.to_vector();
}

namespace {

bool normalizes(const ElementTable& t, const ElementSet& h,
                const std::vector<ElementId>& h_gens, ElementId g) {
  const ElementId gi = t.inv(g);
  for (ElementId x : h_gens)
    if (!h.contains(t.mul(t.mul(gi, x), g))) return false;
  return true;
}

ElementSet normalizer_set(const ElementTable& t, const ElementSet& h,
                          const std::vector<ElementId>& h_gens) {
  ElementSet n = t.empty_set();
  for (std::size_t g = 0; g < t.size(); ++g)
    if (normalizes(t, h, h_gens, static_cast<ElementId>(g))) n.insert(static_cast<ElementId>(g));
  return n;
}

// Representatives g of the right cosets N g, so that h^g runs over the
// conjugacy class without repeats.
std::vector<ElementId> right_transversal(const ElementTable& t, const ElementSet& n) {
  std::vector<ElementId> n_elems = n.to_vector();
  std::vector<bool> covered(t.size(), false);
  std::vector<ElementId> reps;
  for (std::size_t g = 0; g < t.size(); ++g) {
    if (covered[g]) continue;
    reps.push_back(static_cast<ElementId>(g));
    for (ElementId x : n_elems) covered[t.mul(x, static_cast<ElementId>(g))] = true;
  }
  return reps;
}

void check_same_parent(const MarkedGroup& g, const Subgroup& h) {
  if (!(g.generators() == h.parent().generators()))
    throw Error("subgroup does not belong to this group");
}

}  // namespace

std::optional<ElementId> are_conjugate(const MarkedGroup& g, const Subgroup& h1,
                                       const Subgroup& h2) {
  check_same_parent(g, h1);
  check_same_parent(g, h2);
  if (h1.order() != h2.order()) return std::nullopt;
  const ElementTable& t = g.elements();
  for (std::size_t x = 0; x < t.size(); ++x) {
    auto e = static_cast<ElementId>(x);
    const ElementId xi = t.inv(e);
    bool ok = true;
    for (ElementId s : h1.generator_ids()) {
      if (!h2.contains(t.mul(t.mul(xi, s), e))) {
        ok = false;
        break;
      }
    }
    if (ok) return e;
  }
  return std::nullopt;
}

Subgroup normalizer(const MarkedGroup& g, const Subgroup& h) {
  check_same_parent(g, h);
  return Subgroup(g, normalizer_set(g.elements(), h.elements(), h.generator_ids()));
}

bool is_normal(const MarkedGroup& g, const Subgroup& h) {
  check_same_parent(g, h);
  const ElementTable& t = g.elements();
  for (int i = 0; i < t.rank(); ++i)
    if (!normalizes(t, h.elements(), h.generator_ids(), t.generator(i))) return false;
  return true;
}

std::vector<Subgroup> conjugates(const MarkedGroup& g, const Subgroup& h) {
  check_same_parent(g, h);
  const ElementTable& t = g.elements();
  ElementSet n = normalizer_set(t, h.elements(), h.generator_ids());
  std::vector<ElementSet> sets;
  for (ElementId x : right_transversal(t, n)) sets.push_back(conjugate_set(t, h.elements(), x));
  std::sort(sets.begin(), sets.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.lex_less(b); });
  std::vector<Subgroup> out;
  for (auto& s : sets) out.emplace_back(g, std::move(s));
  return out;
}

namespace {

bool is_prime_power(std::uint32_t n) {
  if (n < 2) return false;
  std::uint32_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) up[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> up;
};

struct FoundClass {
  ElementSet rep;
  std::vector<ElementId> gens;
  ElementSet normalizer;
  std::size_t class_size;
};

class LatticeSearch {
 public:
  LatticeSearch(const ElementTable& t, const HereditaryFilter& filter)
      : t_(t), filter_(filter) {}

  std::vector<FoundClass> run() {
    collect_cyclics();
    add_class(single(ElementTable::identity()));
    for (std::size_t idx = 0; idx < classes_.size(); ++idx) extend(idx);
    return std::move(classes_);
  }

 private:
  ElementSet single(ElementId e) const {
    ElementSet s = t_.empty_set();
    s.insert(e);
    return s;
  }

  void collect_cyclics() {
    cyclic_of_.assign(t_.size(), kNone);
    for (std::size_t x = 1; x < t_.size(); ++x) {
      auto e = static_cast<ElementId>(x);
      if (cyclic_of_[e] != kNone) continue;
      const std::uint32_t ord = t_.order_of(e);
      if (!is_prime_power(ord)) continue;
      ElementId gen[] = {e};
      ElementSet c = closure(t_, gen);
      if (filter_ && !filter_(c)) continue;
      const std::size_t id = cyclic_gen_.size();
      cyclic_gen_.push_back(e);
      // Other generators of the same cyclic group: coprime powers.
      ElementId p = e;
      for (std::uint32_t k = 1; k <= ord; ++k, p = t_.mul(p, e)) {
        if (std::gcd(k, ord) == 1) cyclic_of_[p] = id;
      }
    }
  }

  void add_class(ElementSet k) {
    std::vector<ElementId> gens = small_generating_set(t_, k);
    ElementSet n = normalizer_set(t_, k, gens);
    std::vector<ElementId> trans = right_transversal(t_, n);
    const std::size_t cls = classes_.size();
    ElementSet best = k;
    ElementId best_g = 0;
    for (ElementId g : trans) {
      ElementSet c = conjugate_set(t_, k, g);
      seen_.emplace(c.hash(), std::make_pair(cls, g));
      if (c.lex_less(best)) {
        best = std::move(c);
        best_g = g;
      }
    }
    FoundClass fc{std::move(best), {}, conjugate_set(t_, n, best_g), trans.size()};
    fc.gens = small_generating_set(t_, fc.rep);
    // seen_ stores conjugators relative to k; remember k to verify hits.
    original_.push_back(std::move(k));
    classes_.push_back(std::move(fc));
  }

  bool already_seen(const ElementSet& k) const {
    auto [lo, hi] = seen_.equal_range(k.hash());
    for (auto it = lo; it != hi; ++it) {
      auto [cls, g] = it->second;
      if (classes_[cls].rep.count() != k.count()) continue;
      if (conjugate_set(t_, original_[cls], g) == k) return true;
    }
    return false;
  }

  void extend(std::size_t idx) {
    const ElementSet h = classes_[idx].rep;
    const std::vector<ElementId> h_gens = classes_[idx].gens;
    std::vector<ElementId> n_gens = small_generating_set(t_, classes_[idx].normalizer);
    UnionFind orbits(cyclic_gen_.size());
    for (std::size_t c = 0; c < cyclic_gen_.size(); ++c) {
      for (ElementId n : n_gens) {
        std::size_t d = cyclic_of_[t_.conj(cyclic_gen_[c], n)];
        orbits.unite(c, d);
      }
    }
    for (std::size_t c = 0; c < cyclic_gen_.size(); ++c) {
      if (orbits.find(c) != c) continue;
      if (h.contains(cyclic_gen_[c])) continue;
      std::vector<ElementId> gens = h_gens;
      gens.push_back(cyclic_gen_[c]);
      ElementSet k = extend_closure(t_, h, gens);
      if (filter_ && !filter_(k)) continue;
      if (already_seen(k)) continue;
      add_class(std::move(k));
    }
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const ElementTable& t_;
  const HereditaryFilter& filter_;
  std::vector<std::size_t> cyclic_of_;
  std::vector<ElementId> cyclic_gen_;
  std::vector<FoundClass> classes_;
  std::vector<ElementSet> original_;
  std::unordered_multimap<std::size_t, std::pair<std::size_t, ElementId>> seen_;
};

}  // namespace

std::vector<SubgroupClass> enumerate_subgroups(const MarkedGroup& g,
                                               const SubgroupSearchOptions& options) {
  const ElementTable& t = g.elements(options.order_bound);
  std::vector<FoundClass> found = LatticeSearch(t, options.filter).run();
  std::sort(found.begin(), found.end(), [](const FoundClass& a, const FoundClass& b) {
    std::size_t na = a.rep.count(), nb = b.rep.count();
    if (na != nb) return na < nb;
    return a.rep.lex_less(b.rep);
  });
  std::vector<SubgroupClass> out;
  out.reserve(found.size());
  for (FoundClass& f : found) out.push_back({Subgroup(g, std::move(f.rep)), f.class_size});
  return out;
}

}  // namespace polyquot
