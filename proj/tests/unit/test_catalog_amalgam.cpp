#include <doctest.h>

#include "oracles.hpp"
#include "polyquot/amalgam.hpp"
#include "polyquot/catalog.hpp"
#include "polyquot/flag_graph.hpp"
#include "polyquot/isomorphism.hpp"
#include "polyquot/quotient.hpp"

using namespace polyquot;

TEST_CASE("Schläfli symbols") {
  SchlafliSymbol cube{{4, 3}};
  CHECK(cube.rank() == 3);
  CHECK(cube.to_string() == "{4,3}");
  CHECK(cube.reversed() == SchlafliSymbol{{3, 4}});
  CHECK_THROWS_AS((SchlafliSymbol{{1, 3}}.validate()), Error);

  Presentation p = coxeter_presentation(cube);
  CHECK(p.rank == 3);
  CHECK(p.relators.size() == 3);
  MarkedGroup digon = realize({"digon", {{2}}, {}, 4, EntryClass::degenerate});
  CHECK(digon.order() == 4);
  CHECK(SchlafliSymbol{{5, 3, 5}}.to_string() == "{5,3,5}");
}

TEST_CASE("catalog groups have the listed orders") {
  const auto& cat = rank3_catalog();
  CHECK(cat.size() == 9);
  std::size_t projective = 0;
  for (const auto& e : cat) {
    CAPTURE(e.name);
    MarkedGroup g = realize(e);
    CHECK(g.order() == e.expected_order);
    CHECK(oracle::word_closure(oracle::raw(g), g.degree()).size() == e.expected_order);
    if (e.kind == EntryClass::projective) {
      ++projective;
      CHECK(e.extra_relators.size() == 1);
    }
  }
  CHECK(projective == 4);
  CHECK(realize(lookup_entry("hemicube")).order() == 24);
  CHECK(realize(lookup_entry("hemi-icosahedron")).order() == 60);
}

TEST_CASE("central quotients") {
  CatalogEntry h = central_quotient(lookup_entry("cube"));
  CHECK(h.name == "hemicube");
  CHECK(realize(h).order() == 24);
  CHECK(are_isomorphic(entry_polytope(h), entry_polytope(lookup_entry("hemicube"))));
  CatalogEntry hi = central_quotient(lookup_entry("icosahedron"));
  CHECK(realize(hi).order() == 60);
  CHECK(identify(entry_polytope(hi)) == "hemi-icosahedron");
  CHECK_THROWS_AS(central_quotient(lookup_entry("tetrahedron")), Error);
}

TEST_CASE("lookup, aliases and duals") {
  CHECK(lookup_entry("cross").name == "octahedron");
  CHECK(lookup_entry("hemioctahedron").name == "hemicross");
  CHECK(find_entry("dihedron(5)")->symbol == SchlafliSymbol{{5, 2}});
  CHECK_FALSE(find_entry("nonesuch").has_value());
  CHECK_THROWS_AS(lookup_entry("nonesuch"), Error);
  for (const auto& e : rank3_catalog()) {
    CatalogEntry d = dual_entry(e);
    CHECK(d.symbol == e.symbol.reversed());
    CHECK(dual_entry(d).name == e.name);
    CHECK(are_isomorphic(entry_polytope(d), dual(entry_polytope(e))));
  }
  CHECK(dual_entry(dihedron(4)).name == "hosohedron(4)");
}

TEST_CASE("degenerate families") {
  for (int p = 2; p <= 6; ++p) {
    CHECK(realize(dihedron(p)).order() == static_cast<std::uint64_t>(4 * p));
    CHECK(realize(hosohedron(p)).order() == static_cast<std::uint64_t>(4 * p));
    if (p > 2) CHECK(identify(entry_polytope(hosohedron(p))) == hosohedron(p).name);
  }
  // {2,2} is both; the dihedral name wins.
  CHECK(identify(entry_polytope(hosohedron(2))) == "dihedron(2)");
  CHECK_THROWS_AS(dihedron(1), Error);
}

TEST_CASE("identification against the catalog") {
  for (const auto& e : rank3_catalog()) CHECK(identify(entry_polytope(e)) == e.name);
  MarkedGroup cube = realize(lookup_entry("cube"));
  const ElementTable& t = cube.elements();
  ElementId x = t.generator(0), y = t.evaluate({1, 0, 1});
  Polytope prism = quotient_polytope(cube, Subgroup::generated_by(cube, std::vector{t.mul(x, y)}));
  CHECK_FALSE(identify(prism).has_value());
}

TEST_CASE("ditopes") {
  CatalogEntry hemicube = lookup_entry("hemicube");
  Polytope d = build_ditope(hemicube);
  CHECK(d.type_string() == "{4,3,2}");
  CHECK(d.face_count(3) == 2);
  MarkedGroup dg = ditope_group(lookup_entry("hemidodecahedron"));
  CHECK(dg.order() == 120);
  CHECK(classify_quotients(dg, "ditope(hemidodecahedron)").total_quotients() == 1);
}

TEST_CASE("amalgam presentations") {
  AmalgamSpec case10{lookup_entry("cube"), lookup_entry("hemicross")};
  CHECK(case10.symbol() == SchlafliSymbol{{4, 3, 4}});
  CHECK(case10.label() == "{cube,hemicross}");
  Presentation p = amalgam_presentation(case10);
  CHECK(p.rank == 4);
  CHECK(p.relators.size() == coxeter_presentation({{4, 3, 4}}).relators.size() + 1);
  // The Petrie relator lives on s1, s2, s3.
  Word petrie = p.relators.back();
  CHECK(std::all_of(petrie.begin(), petrie.end(), [](int g) { return g >= 1; }));

  AmalgamSpec case7{lookup_entry("hemi-icosahedron"), lookup_entry("hemidodecahedron")};
  CHECK(amalgam_presentation(case7).relators.size() ==
        coxeter_presentation({{3, 5, 3}}).relators.size() + 2);
  AmalgamSpec spherical{lookup_entry("cube"), lookup_entry("octahedron")};
  CHECK(amalgam_presentation(spherical) == coxeter_presentation({{4, 3, 4}}));

  CHECK_THROWS_AS((AmalgamSpec{lookup_entry("cube"), lookup_entry("cube")}.symbol()), Error);
  CHECK(case10.dual().label() == "{hemicube,octahedron}");
}

TEST_CASE("universal polytopes") {
  auto build = [](const char* k, const char* l) {
    return build_universal({lookup_entry(k), lookup_entry(l)});
  };
  UniversalResult r7 = build("hemi-icosahedron", "hemidodecahedron");
  CHECK(r7.outcome == Outcome::exists);
  CHECK(r7.group_order == 660);

  UniversalResult r8 = build("hemi-icosahedron", "dodecahedron");
  CHECK(r8.outcome == Outcome::collapsed);
  CHECK(r8.vfig_subgroup_order == 60);
  CHECK(r8.detail.find("11 facets") != std::string::npos);

  UniversalResult r13 = build("cube", "hemi-icosahedron");
  CHECK(r13.outcome == Outcome::exists);
  CHECK(r13.group_order == 3840);
  Polytope p13 = polytope_from_group(*r13.group);
  CHECK(p13.face_count(3) == 80);
  CHECK(p13.face_count(0) == 64);

  CHECK(build("hemicube", "hemicross").group_order == 96);
  UniversalResult r21 = build("hemidodecahedron", "hemi-icosahedron");
  CHECK(r21.group_order == 3420);
  CHECK(polytope_from_group(*r21.group).face_count(3) == 57);
  CHECK(build("tetrahedron", "hemicross").outcome == Outcome::collapsed);
  CHECK(build("hemicube", "icosahedron").outcome == Outcome::collapsed);
  // The cubic tiling: infinite.
  CHECK(build_universal({lookup_entry("cube"), lookup_entry("octahedron")}, 20000).outcome ==
        Outcome::exceeded_limit);
}

TEST_CASE("classification table structure") {
  const auto& cases = table1_cases();
  REQUIRE(cases.size() == 22);
  for (const auto& c : cases) {
    CHECK(c.number >= 1);
    if (!c.dual_case) {
      CHECK(c.spec.dual().label() == c.spec.label());
      continue;
    }
    const auto& d = cases[static_cast<std::size_t>(*c.dual_case - 1)];
    CHECK(d.dual_case == c.number);
    CHECK(d.spec.label() == c.spec.dual().label());
  }
  CHECK(cases[6].dual_case == std::nullopt);
  CHECK(cases[9].dual_case == 12);
  CHECK(cases[12].dual_case == 19);
}

TEST_CASE("dual cases have equal group orders") {
  for (const auto& c : table1_cases()) {
    if (!c.dual_case || *c.dual_case < c.number || c.number >= 20) continue;
    UniversalResult a = build_universal(c.spec);
    UniversalResult b = build_universal(table1_cases()[static_cast<std::size_t>(*c.dual_case - 1)].spec);
    CAPTURE(c.number);
    CHECK(a.outcome == b.outcome);
    CHECK(a.group_order == b.group_order);
  }
}

TEST_CASE("the 2^H construction") {
  MarkedGroup h3 = twisted_2H(lookup_entry("hemicross"));
  CHECK(h3.order() == 192);
  CHECK_FALSE(c_group_violation(h3).has_value());
  UniversalResult r10 = build_universal({lookup_entry("cube"), lookup_entry("hemicross")});
  CHECK(are_isomorphic(polytope_from_group(h3), polytope_from_group(*r10.group)));

  MarkedGroup h6 = twisted_2H(lookup_entry("hemi-icosahedron"));
  CHECK(h6.order() == 64 * 60);
  UniversalResult r13 = build_universal({lookup_entry("cube"), lookup_entry("hemi-icosahedron")});
  CHECK(are_isomorphic(polytope_from_group(h6), polytope_from_group(*r13.group)));
}

TEST_CASE("enumeration over the facet subgroup") {
  AmalgamSpec case13{lookup_entry("cube"), lookup_entry("hemi-icosahedron")};
  UniversalResult r = build_universal_over_facets(case13, 100000);
  CHECK(r.outcome == Outcome::exists);
  CHECK(r.over_facets);
  CHECK(r.cosets == 80);
  CHECK(r.group_order == 3840);
  UniversalResult r7 = build_universal_over_facets(
      {lookup_entry("hemi-icosahedron"), lookup_entry("hemidodecahedron")}, 100000);
  CHECK(r7.cosets == 11);
  CHECK(r7.group_order == 660);
  UniversalResult r8 = build_universal_over_facets(
      {lookup_entry("hemi-icosahedron"), lookup_entry("dodecahedron")}, 100000);
  CHECK(r8.outcome != Outcome::exists);
}
