#include <doctest.h>

#include "oracles.hpp"
#include "polyquot/amalgam.hpp"
#include "polyquot/catalog.hpp"
#include "polyquot/flag_graph.hpp"
#include "polyquot/isomorphism.hpp"
#include "polyquot/quotient.hpp"

using namespace polyquot;

namespace {

Polytope named(std::string_view name) { return entry_polytope(lookup_entry(name)); }

Polytope universal(std::string_view facet, std::string_view vfig) {
  UniversalResult r = build_universal({lookup_entry(facet), lookup_entry(vfig)});
  REQUIRE(r.outcome == Outcome::exists);
  return polytope_from_group(*r.group);
}

// A polygon-like poset whose edge 0 has three vertices.
Polytope three_vertex_edge() {
  std::vector<std::pair<Face, Face>> covers;
  for (std::uint32_t v = 0; v < 3; ++v) {
    covers.push_back({{-1, 0}, {0, v}});
    covers.push_back({{0, v}, {1, 0}});
  }
  covers.push_back({{0, 0}, {1, 1}});
  covers.push_back({{0, 1}, {1, 1}});
  for (std::uint32_t e = 0; e < 2; ++e) covers.push_back({{1, e}, {2, 0}});
  return Polytope::from_covers(2, {1, 3, 2, 1}, covers);
}

}  // namespace

TEST_CASE("flag graph of a group") {
  MarkedGroup cube = realize(lookup_entry("cube"));
  FlagGraph fg = flag_graph_from_group(cube);
  CHECK(fg.flag_count == 48);
  CHECK(fg.rank() == 3);
  CHECK_FALSE(fg.violation().has_value());

  MarkedGroup c2(2, {Permutation::from_cycles(2, {{0, 1}})});
  FlagGraph two = flag_graph_from_group(c2);
  CHECK(two.flag_count == 2);
  CHECK(two.adjacent(0, 0) == 1);
  CHECK(two.adjacent(0, 1) == 0);
}

TEST_CASE("string C-group checks") {
  for (const auto& e : rank3_catalog()) CHECK_FALSE(c_group_violation(realize(e)).has_value());
  MarkedGroup cube = realize(lookup_entry("cube"));
  auto why = c_group_violation(cube.reordered({1, 0, 2}));
  REQUIRE(why.has_value());
  CHECK(why->find("commut") != std::string::npos);
  CHECK_THROWS_AS(flag_graph_from_group(cube.reordered({1, 0, 2})), Error);

  UniversalResult r = build_universal({lookup_entry("cube"), lookup_entry("hemicross")});
  REQUIRE(r.group);
  CHECK(intersection_condition(*r.group));
  // s0 = s1 breaks the intersection condition <s0> ∩ <s1> = 1.
  MarkedGroup bad(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1}})});
  CHECK(c_group_violation(bad).has_value());
}

TEST_CASE("face counts from flag orbits") {
  Polytope cube = named("cube");
  CHECK(cube.face_counts() == std::vector<std::size_t>{8, 12, 6});
  CHECK(named("hemicube").face_counts() == std::vector<std::size_t>{4, 6, 3});
  CHECK(universal("hemi-icosahedron", "hemidodecahedron").face_count(3) == 11);
  CHECK(cube.type_string() == "{4,3}");
  for (const auto& e : rank3_catalog()) {
    Polytope p = entry_polytope(e);
    CHECK(oracle::flag_count(p) == e.expected_order);
  }
}

TEST_CASE("flag graph round trip") {
  for (const char* name : {"cube", "hemidodecahedron", "tetrahedron"}) {
    MarkedGroup g = realize(lookup_entry(name));
    FlagGraph fg = flag_graph_from_group(g);
    Polytope p = faces_from_flags(fg);
    CHECK(are_isomorphic(p.flag_graph(), fg));
    CHECK(are_isomorphic(faces_from_flags(p.flag_graph()), p));
  }
  Polytope p11 = universal("hemi-icosahedron", "hemidodecahedron");
  CHECK(p11.flag_count() == 660);
}

TEST_CASE("polytopality axioms") {
  CHECK(is_polytopal(named("cube")));
  PolytopalityResult r = is_polytopal(three_vertex_edge());
  CHECK_FALSE(r);
  CHECK(r.failed_axiom == "diamond");

  // Two disjoint triangles under one greatest face: diamond holds, the flag
  // graph is disconnected.
  std::vector<std::pair<Face, Face>> covers;
  for (std::uint32_t t = 0; t < 2; ++t)
    for (std::uint32_t k = 0; k < 3; ++k) {
      std::uint32_t v = 3 * t + k, w = 3 * t + (k + 1) % 3, e = 3 * t + k;
      covers.push_back({{-1, 0}, {0, v}});
      covers.push_back({{0, v}, {1, e}});
      covers.push_back({{0, w}, {1, e}});
      covers.push_back({{1, e}, {2, 0}});
    }
  PolytopalityResult two = is_polytopal(Polytope::from_covers(2, {1, 6, 6, 1}, covers));
  CHECK_FALSE(two);
  CHECK(two.failed_axiom == "strongly-connected");

  MarkedGroup cube = realize(lookup_entry("cube"));
  const ElementTable& t = cube.elements();
  ElementSet x = t.empty_set();
  x.insert(0);
  x.insert(t.generator(0));
  CHECK_FALSE(semisparse_ground_truth(cube, x));
}

TEST_CASE("sections") {
  Polytope p = universal("cube", "hemicross");
  CHECK(identify(facet(p, 0)) == "cube");
  CHECK(identify(vertex_figure(p, 0)) == "hemicross");
  Polytope edge = section(p, {1, 0}, {0, p.down({1, 0}).front()});
  CHECK(edge.rank() == 0);
  CHECK(edge.flag_count() == 1);
}

TEST_CASE("section regularity") {
  CHECK(is_section_regular(universal("cube", "hemi-icosahedron")));
  for (const auto& e : rank3_catalog()) CHECK(is_section_regular(entry_polytope(e)));
}

TEST_CASE("automorphisms agree with a brute-force incidence search") {
  MarkedGroup cube = realize(lookup_entry("cube"));
  for (const auto& c : semisparse_classes(cube)) {
    Polytope q = quotient_polytope(cube, c.representative);
    std::uint64_t brute = oracle::automorphisms(q);
    CHECK(automorphism_count(q) == brute);
    CHECK(flag_graph_automorphisms(q.flag_graph()) == brute);
    CHECK(is_regular(q) == (brute == q.flag_count()));
  }
  for (const auto& e : rank3_catalog()) {
    Polytope p = entry_polytope(e);
    CHECK(oracle::automorphisms(p) == e.expected_order);
    CHECK(is_regular(p));
  }
}

TEST_CASE("the digonal prism is not regular") {
  MarkedGroup cube = realize(lookup_entry("cube"));
  const ElementTable& t = cube.elements();
  ElementId x = t.generator(0), y = t.evaluate({1, 0, 1});
  Polytope prism = quotient_polytope(cube, Subgroup::generated_by(cube, std::vector{t.mul(x, y)}));
  CHECK(prism.flag_count() == 24);
  // Automorphisms act freely on the 24 flags, so their number divides 24;
  // here it is |N(<xy>)| / |<xy>| = 16 / 2.
  CHECK(oracle::automorphisms(prism) == 8);
  CHECK(automorphism_count(prism) == 8);
  CHECK_FALSE(is_regular(prism));
  CHECK(prism.type_string() == "{2|4,3}");
}

TEST_CASE("regularity of larger polytopes") {
  CHECK(is_regular(universal("hemidodecahedron", "hemi-icosahedron")));
  CHECK(is_regular(named("cube")));
}

TEST_CASE("duality") {
  CHECK(are_isomorphic(dual(named("cube")), named("octahedron")));
  CHECK(are_isomorphic(named("cube"), dual(named("octahedron"))));
  CHECK(are_isomorphic(dual(universal("cube", "hemicross")), universal("hemicube", "octahedron")));
  Polytope p11 = universal("hemi-icosahedron", "hemidodecahedron");
  CHECK(are_isomorphic(dual(p11), p11));
  for (const char* name : {"cube", "hemidodecahedron", "tetrahedron"}) {
    Polytope p = named(name);
    CHECK(certificate(dual(dual(p))) == certificate(p));
  }
  Polytope prism = universal("cube", "hemicross");
  CHECK(certificate(dual(dual(prism))) == certificate(prism));
}

TEST_CASE("isomorphism certificates") {
  CHECK_FALSE(are_isomorphic(named("hemicube"), named("hemicross")));
  CHECK_FALSE(are_isomorphic(named("cube"), named("octahedron")));
  // Relabelling the flags leaves the certificate unchanged.
  FlagGraph fg = named("dodecahedron").flag_graph();
  std::vector<FlagId> perm(fg.flag_count);
  for (FlagId f = 0; f < fg.flag_count; ++f) perm[f] = static_cast<FlagId>((f * 7 + 3) % fg.flag_count);
  FlagGraph relabelled = fg;
  for (int i = 0; i < fg.rank(); ++i)
    for (FlagId f = 0; f < fg.flag_count; ++f)
      relabelled.adjacency[static_cast<std::size_t>(i)][perm[f]] = perm[fg.adjacent(i, f)];
  CHECK(certificate(relabelled) == certificate(fg));
  CHECK(flag_transitive(fg));
}

TEST_CASE("quotients by conjugate subgroups are isomorphic") {
  MarkedGroup cube = realize(lookup_entry("cube"));
  for (const auto& c : enumerate_subgroups(cube)) {
    auto members = conjugates(cube, c.representative);
    if (!is_semisparse(cube, members.front())) continue;
    Certificate ref = certificate(quotient_polytope(cube, members.front()));
    for (const auto& m : members) CHECK(certificate(quotient_polytope(cube, m)) == ref);
  }
}

TEST_CASE("dot output") {
  std::string dot = hasse_dot(named("tetrahedron"));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(flag_graph_dot(named("tetrahedron").flag_graph()).find("graph") != std::string::npos);
}
