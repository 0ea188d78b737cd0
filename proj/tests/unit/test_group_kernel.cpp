#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "polyquot/catalog.hpp"
#include "polyquot/coset_enumeration.hpp"
#include "polyquot/subgroup.hpp"

using namespace polyquot;

namespace {

CosetTable enumerate(const Presentation& p, std::size_t limit = kDefaultMaxCosets) {
  return coset_enumeration(p, std::span<const Word>{}, limit);
}

// x, y, z of the cube group: x = s0, y = s1 x s1, z = s2 y s2.
struct CubeReflections {
  MarkedGroup w = realize(lookup_entry("cube"));
  const ElementTable& t = w.elements();
  ElementId x = t.evaluate({0});
  ElementId y = t.evaluate({1, 0, 1});
  ElementId z = t.evaluate({2, 1, 0, 1, 2});
  Subgroup gen(std::vector<ElementId> g) const { return Subgroup::generated_by(w, g); }
};

}  // namespace

TEST_CASE("presentation text round-trips") {
  Presentation p = lookup_entry("hemi-icosahedron").presentation();
  std::string text = format_presentation(p, "hemi-icosahedron");
  CHECK(parse_presentation_text(text) == p);
  CHECK(parse_presentation_text("# c\nrank 2\nrel 0 1 0 1  # tail\n").relators.size() == 1);
  CHECK_THROWS_AS(parse_presentation_text("rel 0 1\n"), Error);
  CHECK_THROWS_AS(parse_presentation_text("rank 2\nrel 0 x\n"), Error);
  CHECK_THROWS_AS((Presentation{2, {{0, 2}}}.validate()), Error);
}

TEST_CASE("word helpers") {
  CHECK(power({0, 1}, 3) == Word{0, 1, 0, 1, 0, 1});
  CHECK(inverse({0, 1, 2}) == Word{2, 1, 0});
  CHECK(shifted({0, 1}, 1) == Word{1, 2});
  CHECK(concat({0}, {1}) == Word{0, 1});
}

TEST_CASE("coset enumeration on small presentations") {
  CHECK(enumerate(Presentation{1, {}}).coset_count() == 2);
  CHECK(enumerate(coxeter_presentation({{4, 3}})).coset_count() == 48);
  CHECK(enumerate(with_petrie(coxeter_presentation({{5, 3}}), 5)).coset_count() == 60);
  CHECK(enumerate(with_petrie(coxeter_presentation({{4, 3}}), 6)).coset_count() == 48);
  CHECK(enumerate(with_petrie(coxeter_presentation({{4, 3}}), 3)).coset_count() == 24);
  CHECK(enumerate(with_petrie(coxeter_presentation({{3, 5}}), 5)).coset_count() == 60);
  CHECK(enumerate(with_petrie(coxeter_presentation({{3, 4}}), 3)).coset_count() == 24);

  std::vector<Word> vertex_stabiliser = {{1}, {2}};
  CHECK(coset_enumeration(coxeter_presentation({{4, 3}}), vertex_stabiliser).coset_count() == 8);
}

TEST_CASE("coset enumeration reports the limit instead of closing") {
  CosetTable t = enumerate(coxeter_presentation({{5, 3, 5}}), 5000);
  CHECK_FALSE(t.closed());
  CHECK(t.status() == EnumerationStatus::exceeded_limit);
}

TEST_CASE("closed coset tables are involutive and every relator traces to a loop") {
  for (const auto& e : rank3_catalog()) {
    CAPTURE(e.name);
    CosetTable t = enumerate(e.presentation());
    REQUIRE(t.closed());
    CHECK(t.coset_count() == e.expected_order);
    for (std::size_t c = 0; c < t.coset_count(); ++c) {
      for (int g = 0; g < t.rank(); ++g)
        REQUIRE(t.image(static_cast<std::size_t>(t.image(c, g)), g) == static_cast<std::int32_t>(c));
      for (const Word& r : t.presentation().relators)
        REQUIRE(t.trace(c, r) == static_cast<std::int32_t>(c));
    }
  }
}

TEST_CASE("permutation representation of a closed table") {
  MarkedGroup one = perm_rep(enumerate(Presentation{1, {}}));
  CHECK(one.degree() == 2);
  CHECK(one.generator(0) == Permutation::from_cycles(2, {{0, 1}}));
  MarkedGroup cube = perm_rep(enumerate(coxeter_presentation({{4, 3}})));
  CHECK(cube.degree() == 48);
  CHECK(cube.order() == 48);
  CHECK(cube.acts_regularly());
}

TEST_CASE("permutations act on the right") {
  Permutation a = Permutation::from_cycles(3, {{0, 1}});
  Permutation b = Permutation::from_cycles(3, {{1, 2}});
  CHECK((a * b)[0] == 2);  // 0 -> 1 under a, then 1 -> 2 under b
  CHECK((a * b).order() == 3);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.conjugated_by(b) == b.inverse() * a * b);
}

TEST_CASE("group orders agree with brute-force word closure") {
  std::vector<MarkedGroup> groups;
  for (const auto& e : rank3_catalog()) groups.push_back(realize(e));
  for (int p = 2; p <= 5; ++p) groups.push_back(realize(dihedron(p)));
  // Non-regular actions: S4 on 4 points, and the cube group on the 6 signed
  // coordinate axes (point 2k is +e_k, 2k+1 is -e_k).
  groups.emplace_back(4, std::vector<Permutation>{Permutation::from_cycles(4, {{0, 1}}),
                                                  Permutation::from_cycles(4, {{1, 2}}),
                                                  Permutation::from_cycles(4, {{2, 3}})});
  groups.emplace_back(6, std::vector<Permutation>{Permutation::from_cycles(6, {{0, 1}}),
                                                  Permutation::from_cycles(6, {{0, 2}, {1, 3}}),
                                                  Permutation::from_cycles(6, {{2, 4}, {3, 5}})});
  for (const auto& g : groups) {
    if (g.order() > 240) continue;
    CHECK(g.order() == oracle::word_closure(oracle::raw(g), g.degree()).size());
  }
}

TEST_CASE("membership") {
  MarkedGroup cube = realize(lookup_entry("cube"));
  CHECK(cube.contains(Permutation::identity(48)));
  CHECK(cube.contains(cube.generator(0) * cube.generator(1)));
  // 3-cycle on points 48..50 of a larger domain: outside every orbit.
  MarkedGroup s3(51, {Permutation::from_cycles(51, {{0, 1}}), Permutation::from_cycles(51, {{1, 2}})});
  CHECK_FALSE(s3.contains(Permutation::from_cycles(51, {{48, 49, 50}})));
  CHECK(s3.contains(Permutation::from_cycles(51, {{0, 1, 2}})));
  CHECK(MarkedGroup(3, {}).order() == 1);
}

TEST_CASE("element table is a group table in image-lex order") {
  MarkedGroup w = realize(lookup_entry("hemi-icosahedron"));
  const ElementTable& t = w.elements();
  REQUIRE(t.size() == 60);
  CHECK(w.permutation_of(0).is_identity());
  for (ElementId e = 1; e < t.size(); ++e) CHECK(w.permutation_of(e - 1) < w.permutation_of(e));
  std::mt19937 rng(7);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(t.size() - 1));
  for (int k = 0; k < 500; ++k) {
    ElementId a = pick(rng), b = pick(rng), c = pick(rng);
    REQUIRE(t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)));
    REQUIRE(w.permutation_of(t.mul(a, b)) == w.permutation_of(a) * w.permutation_of(b));
    REQUIRE(t.mul(a, t.inv(a)) == ElementTable::identity());
  }
  for (ElementId e = 0; e < t.size(); ++e) {
    REQUIRE(t.evaluate(t.word(e)) == e);
    REQUIRE(*w.element_of(w.permutation_of(e)) == e);
  }
  CHECK_THROWS_AS(realize(lookup_entry("icosahedron")).elements(100), OrderBoundExceeded);
}

TEST_CASE("subgroup classes match a brute-force lattice") {
  for (const char* name : {"tetrahedron", "hemicube", "cube", "hemi-icosahedron", "icosahedron"}) {
    CAPTURE(name);
    MarkedGroup w = realize(lookup_entry(name));
    oracle::Group g(w);
    auto expected = oracle::subgroup_classes(g);
    std::vector<std::pair<std::size_t, std::size_t>> got;
    for (const auto& c : enumerate_subgroups(w)) got.emplace_back(c.representative.order(), c.class_size);
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("known subgroup class counts") {
  MarkedGroup c2(2, {Permutation::from_cycles(2, {{0, 1}})});
  CHECK(enumerate_subgroups(c2).size() == 2);
  MarkedGroup s3(3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{1, 2}})});
  auto cls = enumerate_subgroups(s3);
  REQUIRE(cls.size() == 4);
  std::vector<std::size_t> orders;
  for (const auto& c : cls) orders.push_back(c.representative.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 6});
  CHECK(enumerate_subgroups(realize(lookup_entry("tetrahedron"))).size() == 11);
  CHECK(enumerate_subgroups(realize(lookup_entry("cube"))).size() == 33);
}

TEST_CASE("subgroup classes are sorted, sized correctly and respect the filter") {
  MarkedGroup w = realize(lookup_entry("cube"));
  auto cls = enumerate_subgroups(w);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const auto& c = cls[i];
    CHECK(w.order() % c.class_size == 0);
    CHECK(c.class_size * normalizer(w, c.representative).order() == w.order());
    CHECK(conjugates(w, c.representative).size() == c.class_size);
    CHECK(conjugates(w, c.representative).front() == c.representative);
    if (i > 0) CHECK(cls[i - 1].representative.order() <= c.representative.order());
  }
  SubgroupSearchOptions opts;
  const ElementTable& t = w.elements();
  ElementId s0 = t.generator(0);
  std::vector<ElementId> reflections;
  for (ElementId g = 0; g < t.size(); ++g) reflections.push_back(t.conj(s0, g));
  opts.filter = [&](const ElementSet& h) {
    for (ElementId r : reflections)
      if (h.contains(r)) return false;
    return true;
  };
  for (const auto& c : enumerate_subgroups(w, opts)) CHECK(opts.filter(c.representative.elements()));
  CHECK_THROWS_AS(enumerate_subgroups(w, {.order_bound = 10, .filter = {}}), OrderBoundExceeded);
}

TEST_CASE("conjugacy of the cube's subgroups") {
  CubeReflections c;
  const ElementTable& t = c.t;
  Subgroup xy = c.gen({t.mul(c.x, c.y)});
  Subgroup yz = c.gen({t.mul(c.y, c.z)});
  Subgroup xz = c.gen({t.mul(c.x, c.z)});
  Subgroup xyz = c.gen({t.mul(t.mul(c.x, c.y), c.z)});
  REQUIRE(xy.order() == 2);
  REQUIRE(xyz.order() == 2);

  auto g = are_conjugate(c.w, xy, yz);
  REQUIRE(g.has_value());
  CHECK(conjugate_set(t, xy.elements(), *g) == yz.elements());
  CHECK(are_conjugate(c.w, xy, xy).has_value());
  CHECK_FALSE(are_conjugate(c.w, xy, xyz).has_value());

  // Equivalence relation over every subgroup of order 2.
  std::vector<Subgroup> invol;
  for (ElementId e = 1; e < t.size(); ++e)
    if (t.order_of(e) == 2) invol.push_back(c.gen({e}));
  for (const auto& a : invol)
    for (const auto& b : invol) {
      bool ab = are_conjugate(c.w, a, b).has_value();
      CHECK(ab == are_conjugate(c.w, b, a).has_value());
      if (!ab) continue;
      for (const auto& d : invol)
        if (are_conjugate(c.w, b, d)) CHECK(are_conjugate(c.w, a, d).has_value());
    }

  CHECK(conjugates(c.w, xyz).size() == 1);
  CHECK(is_normal(c.w, xyz));
  CHECK(conjugates(c.w, Subgroup::trivial(c.w)).size() == 1);
  auto cls = conjugates(c.w, xy);
  CHECK(cls.size() == 3);
  CHECK(std::find(cls.begin(), cls.end(), xz) != cls.end());
  CHECK(intersect(xy, yz).order() == 1);
  Subgroup all = Subgroup::whole(c.w);
  CHECK(product_set_intersect(xy, all, all).size() == xy.order());
}

TEST_CASE("subgroup generating sets regenerate the subgroup") {
  MarkedGroup w = realize(lookup_entry("hemi-icosahedron"));
  for (const auto& c : enumerate_subgroups(w)) {
    const Subgroup& h = c.representative;
    CHECK(closure(h.table(), h.generator_ids()) == h.elements());
    CHECK(Subgroup(w, h.generators()) == h);
  }
}
