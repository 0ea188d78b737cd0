#include "polyquot/amalgam.hpp"

#include <algorithm>

#include "polyquot/subgroup.hpp"

namespace polyquot {

namespace {

std::uint64_t parabolic_order(const MarkedGroup& g, std::initializer_list<int> idx) {
  std::vector<Permutation> gens;
  for (int i : idx) gens.push_back(g.generator(i));
  return MarkedGroup(g.degree(), std::move(gens)).order();
}

std::string describe_parabolic(const MarkedGroup& g, std::initializer_list<int> idx,
                               const CatalogEntry& expected, std::string_view role) {
  std::vector<Permutation> gens;
  for (int i : idx) gens.push_back(g.generator(i));
  MarkedGroup sub(g.degree(), std::move(gens));
  std::string s = std::string(role) + " group has order " + std::to_string(sub.order()) +
                  " instead of " + std::to_string(expected.expected_order) + " (" +
                  expected.name + ")";
  if (sub.order() <= kDefaultSubgroupOrderBound && !c_group_violation(sub)) {
    Polytope p = polytope_from_group(sub);
    s += ", it is the group of " + identify(p).value_or("a polytope of type " + p.type_string());
  }
  return s;
}

// One nonidentity word from each minimal normal subgroup of the entry's
// group.
std::vector<Word> minimal_normal_witnesses(const CatalogEntry& entry) {
  MarkedGroup g = realize(entry);
  const ElementTable& t = g.elements();
  std::vector<ElementSet> normal;
  for (const auto& cls : enumerate_subgroups(g))
    if (cls.class_size == 1 && cls.representative.order() > 1)
      normal.push_back(cls.representative.elements());
  std::vector<Word> out;
  for (const auto& n : normal) {
    bool minimal = std::none_of(normal.begin(), normal.end(), [&](const ElementSet& m) {
      return !(m == n) && m.is_subset_of(n);
    });
    if (!minimal) continue;
    ElementId e = 0;
    n.for_each([&](ElementId x) {
      if (e == 0 && x != 0) e = x;
    });
    out.push_back(t.word(e));
  }
  return out;
}

bool acts_nontrivially(const CosetTable& t, const Word& w) {
  for (std::size_t c = 0; c < t.coset_count(); ++c)
    if (t.trace(c, w) != static_cast<std::int32_t>(c)) return true;
  return false;
}

}  // namespace

SchlafliSymbol AmalgamSpec::symbol() const {
  const auto& k = facet.symbol.entries;
  const auto& l = vfig.symbol.entries;
  if (k.size() != 2 || l.size() != 2) throw Error("facet and vertex figure must have rank 3");
  if (k[1] != l[0])
    throw Error("incompatible types: facet " + facet.symbol.to_string() + " and vertex figure " +
                vfig.symbol.to_string() + " do not share the middle entry");
  return {{k[0], k[1], l[1]}};
}

AmalgamSpec AmalgamSpec::dual() const { return {dual_entry(vfig), dual_entry(facet)}; }

std::string AmalgamSpec::label() const { return "{" + facet.name + "," + vfig.name + "}"; }

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::exists: return "exists";
    case Outcome::collapsed: return "collapsed";
    case Outcome::not_polytopal: return "not-polytopal";
    case Outcome::exceeded_limit: return "exceeded-limit";
  }
  return "?";
}

Presentation amalgam_presentation(const AmalgamSpec& spec) {
  Presentation p = coxeter_presentation(spec.symbol());
  for (const Word& w : spec.facet.extra_relators) p.relators.push_back(w);
  for (const Word& w : spec.vfig.extra_relators) p.relators.push_back(shifted(w, 1));
  p.validate();
  return p;
}

UniversalResult build_universal(const AmalgamSpec& spec, std::size_t max_cosets) {
  UniversalResult res;
  CosetTable t = coset_enumeration(amalgam_presentation(spec), {}, max_cosets);
  res.cosets = t.coset_count();
  if (!t.closed()) {
    res.outcome = Outcome::exceeded_limit;
    res.detail = "enumeration exceeded " + std::to_string(max_cosets) + " cosets";
    return res;
  }
  MarkedGroup g = perm_rep(t);
  res.group = g;
  res.group_order = t.coset_count();
  res.facet_subgroup_order = parabolic_order(g, {0, 1, 2});
  res.vfig_subgroup_order = parabolic_order(g, {1, 2, 3});
  std::vector<std::string> shrunk;
  if (res.facet_subgroup_order < spec.facet.expected_order)
    shrunk.push_back(describe_parabolic(g, {0, 1, 2}, spec.facet, "facet"));
  if (res.vfig_subgroup_order < spec.vfig.expected_order)
    shrunk.push_back(describe_parabolic(g, {1, 2, 3}, spec.vfig, "vertex-figure"));
  auto violation = c_group_violation(g);
  if (!shrunk.empty()) {
    res.outcome = Outcome::collapsed;
    for (std::size_t i = 0; i < shrunk.size(); ++i) res.detail += (i ? "; " : "") + shrunk[i];
    res.detail += "; the amalgam has order " + std::to_string(res.group_order);
    if (!violation && res.group_order <= kDefaultSubgroupOrderBound) {
      Polytope p = polytope_from_group(g);
      res.detail += " and is the group of a polytope of type " + p.type_string() + " with " +
                    std::to_string(p.face_count(3)) + " facets";
    }
    return res;
  }
  if (violation) {
    res.outcome = Outcome::not_polytopal;
    res.detail = *violation;
    return res;
  }
  res.outcome = Outcome::exists;
  return res;
}

UniversalResult build_universal_over_facets(const AmalgamSpec& spec, std::size_t max_cosets) {
  UniversalResult res;
  res.over_facets = true;
  const std::vector<Word> facet_words = {{0}, {1}, {2}};
  CosetTable t = coset_enumeration(amalgam_presentation(spec), facet_words, max_cosets);
  res.cosets = t.coset_count();
  if (!t.closed()) {
    res.outcome = Outcome::exceeded_limit;
    res.detail = "enumeration over the facet subgroup exceeded " + std::to_string(max_cosets) +
                 " cosets";
    return res;
  }
  std::vector<std::string> unfaithful;
  for (const Word& w : minimal_normal_witnesses(spec.facet))
    if (!acts_nontrivially(t, w)) unfaithful.push_back("facet element " + format_word(w));
  for (const Word& w : minimal_normal_witnesses(spec.vfig))
    if (!acts_nontrivially(t, shifted(w, 1)))
      unfaithful.push_back("vertex-figure element " + format_word(shifted(w, 1)));
  if (!unfaithful.empty()) {
    res.outcome = Outcome::exceeded_limit;
    res.detail = "order undetermined: " + unfaithful.front() + " acts trivially on facets";
    return res;
  }
  res.facet_subgroup_order = spec.facet.expected_order;
  res.vfig_subgroup_order = spec.vfig.expected_order;
  res.group_order = t.coset_count() * spec.facet.expected_order;
  // <s1,s2,s3> acts faithfully, so its stabiliser of the base facet has
  // order |L| / orbit; the intersection condition needs that to be |<s1,s2>|.
  std::vector<bool> seen(t.coset_count(), false);
  std::vector<std::size_t> orbit{0};
  seen[0] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (int g = 1; g <= 3; ++g) {
      auto c = static_cast<std::size_t>(t.image(orbit[k], g));
      if (!seen[c]) {
        seen[c] = true;
        orbit.push_back(c);
      }
    }
  }
  const std::uint64_t middle = 2 * static_cast<std::uint64_t>(spec.symbol().entries[1]);
  if (spec.vfig.expected_order % orbit.size() != 0 ||
      spec.vfig.expected_order / orbit.size() != middle) {
    res.outcome = Outcome::not_polytopal;
    res.detail = "facet and vertex-figure groups meet in a subgroup of order " +
                 std::to_string(spec.vfig.expected_order / orbit.size()) + " instead of " +
                 std::to_string(middle);
    return res;
  }
  res.outcome = Outcome::exists;
  res.detail = "order reconstructed as " + std::to_string(t.coset_count()) + " facets x " +
               std::to_string(spec.facet.expected_order) + "; " +
               std::to_string(orbit.size()) + " facets meet at a vertex";
  return res;
}

const std::vector<Table1Case>& table1_cases() {
  static const std::vector<Table1Case> cases = [] {
    const std::pair<const char*, const char*> pairs[] = {
        {"tetrahedron", "hemicross"},          {"tetrahedron", "hemi-icosahedron"},
        {"octahedron", "hemicube"},            {"hemicross", "hemicube"},
        {"hemicross", "cube"},                 {"icosahedron", "hemidodecahedron"},
        {"hemi-icosahedron", "hemidodecahedron"}, {"hemi-icosahedron", "dodecahedron"},
        {"hemicube", "tetrahedron"},           {"cube", "hemicross"},
        {"hemicube", "hemicross"},             {"hemicube", "octahedron"},
        {"cube", "hemi-icosahedron"},          {"hemicube", "hemi-icosahedron"},
        {"hemicube", "icosahedron"},           {"hemidodecahedron", "tetrahedron"},
        {"dodecahedron", "hemicross"},         {"hemidodecahedron", "hemicross"},
        {"hemidodecahedron", "octahedron"},    {"dodecahedron", "hemi-icosahedron"},
        {"hemidodecahedron", "hemi-icosahedron"}, {"hemidodecahedron", "icosahedron"}};
    std::vector<Table1Case> out;
    for (const auto& [k, l] : pairs)
      out.push_back({static_cast<int>(out.size()) + 1, {lookup_entry(k), lookup_entry(l)}, {}});
    for (auto& c : out) {
      AmalgamSpec d = c.spec.dual();
      for (const auto& o : out) {
        if (o.spec.facet.name == d.facet.name && o.spec.vfig.name == d.vfig.name &&
            o.number != c.number)
          c.dual_case = o.number;
      }
    }
    return out;
  }();
  return cases;
}

std::vector<Table1Row> classify_table1(std::size_t max_cosets) {
  std::vector<Table1Row> rows;
  for (const auto& c : table1_cases()) rows.push_back({c, build_universal(c.spec, max_cosets)});
  return rows;
}

MarkedGroup twisted_2H(const CatalogEntry& h) {
  if (h.symbol.rank() != 3) throw Error("twisting needs a rank-3 polytope");
  MarkedGroup gh = realize(h);
  const std::vector<Word> vertex_stabiliser = {{1}, {2}};
  CosetTable vt = coset_enumeration(h.presentation(), vertex_stabiliser);
  if (!vt.closed()) throw Error("vertex enumeration of " + h.name + " did not close");
  const auto v = static_cast<Point>(vt.coset_count());
  const auto reg = static_cast<Point>(gh.degree());
  const Point degree = 2 * v + reg;
  std::vector<Permutation> gens;
  {
    std::vector<Point> img(degree);
    for (Point x = 0; x < degree; ++x) img[x] = x;
    std::swap(img[0], img[v]);
    gens.emplace_back(std::move(img));
  }
  for (int i = 0; i < 3; ++i) {
    std::vector<Point> img(degree);
    for (Point x = 0; x < v; ++x) {
      auto y = static_cast<Point>(vt.image(x, i));
      img[x] = y;
      img[x + v] = y + v;
    }
    for (Point x = 0; x < reg; ++x) img[2 * v + x] = 2 * v + gh.generator(i)[x];
    gens.emplace_back(std::move(img));
  }
  return MarkedGroup(degree, std::move(gens));
}

}  // namespace polyquot
