#include <doctest.h>

#include "polyquot/amalgam.hpp"
#include "polyquot/catalog.hpp"
#include "polyquot/isomorphism.hpp"
#include "polyquot/quotient.hpp"
#include "polyquot/report.hpp"

using namespace polyquot;

namespace {

MarkedGroup universal_group(const char* k, const char* l) {
  UniversalResult r = build_universal({lookup_entry(k), lookup_entry(l)});
  REQUIRE(r.group.has_value());
  return *r.group;
}

struct Cube {
  MarkedGroup w = realize(lookup_entry("cube"));
  const ElementTable& t = w.elements();
  ElementId x = t.generator(0);
  ElementId y = t.evaluate({1, 0, 1});
  ElementId z = t.evaluate({2, 1, 0, 1, 2});
  Subgroup gen(std::vector<ElementId> g) const { return Subgroup::generated_by(w, g); }
};

}  // namespace

TEST_CASE("semisparse subgroups of the cube group") {
  Cube c;
  const ElementTable& t = c.t;
  Subgroup xy = c.gen({t.mul(c.x, c.y)});
  Subgroup xyz = c.gen({t.mul(t.mul(c.x, c.y), c.z)});
  Subgroup xy_yz = c.gen({t.mul(c.x, c.y), t.mul(c.y, c.z)});
  CHECK(is_semisparse(c.w, xy));
  CHECK(is_semisparse(c.w, Subgroup::trivial(c.w)));
  CHECK_FALSE(is_semisparse(c.w, c.gen({c.x})));
  CHECK_THROWS_AS(quotient_polytope(c.w, c.gen({c.x})), Error);

  auto cls = semisparse_classes(c.w);
  REQUIRE(cls.size() == 4);
  CHECK(cls[0].representative.order() == 1);
  CHECK(identify(quotient_polytope(c.w, xyz)) == "hemicube");
  CHECK(identify(quotient_polytope(c.w, xy_yz)) == "hosohedron(3)");
  CHECK(quotient_polytope(c.w, xy_yz).type_string() == "{2,3}");
  std::size_t conj_of_xy = 0;
  for (const auto& k : cls)
    if (are_conjugate(c.w, k.representative, xy)) conj_of_xy = k.class_size;
  CHECK(conj_of_xy == 3);

  CHECK(semisparse_classes(realize(lookup_entry("hemicube"))).size() == 1);
}

TEST_CASE("reflection-free prefilter only rejects non-semisparse subgroups") {
  for (MarkedGroup w : {realize(lookup_entry("cube")), universal_group("cube", "hemicross")}) {
    HereditaryFilter keep = reflection_free_filter(w);
    for (const auto& c : enumerate_subgroups(w)) {
      if (keep(c.representative.elements())) continue;
      CHECK_FALSE(is_semisparse(w, c.representative));
    }
  }
}

TEST_CASE("product-set criterion agrees with the direct test on every subgroup") {
  MarkedGroup w = universal_group("cube", "hemicross");
  REQUIRE(w.order() == 192);
  CHECK(fast_path_applies(w));
  auto all = enumerate_subgroups(w);
  CHECK(all.size() == 238);
  std::size_t agree = 0;
  for (const auto& c : all) {
    bool direct = is_semisparse(w, c.representative);
    bool fast = semisparse_fast_path(w, c.representative);
    CAPTURE(c.representative.order());
    CHECK(direct == fast);
    agree += direct == fast;
  }
  CHECK(agree == all.size());
  CHECK_FALSE(fast_path_applies(realize(lookup_entry("cube"))));  // rank 3
}

TEST_CASE("quotient classification of the {cube,hemicross} universal") {
  MarkedGroup w = universal_group("cube", "hemicross");
  ClassificationReport rep = classify_quotients(w, "{cube,hemicross}");
  CHECK(rep.group_order == 192);
  REQUIRE(rep.total_quotients() == 4);
  CHECK(rep.records[0].subgroup.order() == 1);
  std::size_t digon_faceted = 0;
  for (const auto& r : rep.records) {
    CHECK(r.regular == r.normal);
    CHECK(r.vfig_classes.size() == 1);
    CHECK(r.vfig_classes[0].name == "hemicross");
    if (!r.regular) {
      REQUIRE(r.facet_classes.size() == 1);
      CHECK(r.facet_classes[0].name == "unrecognized:{2|4,3}");
      ++digon_faceted;
    }
  }
  CHECK(digon_faceted == 1);

  MarkedGroup w11 = universal_group("hemicube", "hemicross");
  CHECK(classify_quotients(w11, "{hemicube,hemicross}").total_quotients() == 1);
}

TEST_CASE("regular quotients are exactly those by normal subgroups") {
  for (auto [k, l] : {std::pair{"cube", "hemi-icosahedron"}, std::pair{"hemi-icosahedron", "hemidodecahedron"}}) {
    MarkedGroup w = universal_group(k, l);
    ClassificationReport rep = classify_quotients(w, k);
    for (const auto& r : rep.records) {
      CHECK(r.regular == r.normal);
      CHECK(r.section_regular >= r.regular);
      CHECK(w.order() % (r.subgroup.order() * r.class_size) == 0);
    }
  }
}

TEST_CASE("aggregate counting") {
  AggregateSummary empty = aggregate_summary({});
  CHECK(empty.total_with_multiplicity == 0);
  CHECK(empty.distinct_total == 0);
  CHECK(empty.grand_total() == 0);

  // The same report twice: everything is counted once when distinct.
  MarkedGroup w = universal_group("cube", "hemicross");
  ClassificationReport rep = classify_quotients(w, "{cube,hemicross}");
  AggregateSummary s = aggregate_summary({{10, rep}, {10, rep}}, {}, 2);
  CHECK(s.total_with_multiplicity == 8);
  CHECK(s.distinct_total == 4);
  CHECK(s.distinct_regular == rep.regular_count());
  CHECK(s.grand_total() == 6);
  CHECK(s.contributions[1].new_total == 0);

  auto quoted = quoted_535_reports();
  REQUIRE(quoted.size() == 2);
  CHECK(quoted[0].total == 145);
  CHECK(quoted[0].overlap == 1);
}

TEST_CASE("reports serialise deterministically") {
  MarkedGroup w = universal_group("cube", "hemicross");
  std::string a = to_json(classify_quotients(w, "{cube,hemicross}")).dump(2);
  std::string b = to_json(classify_quotients(universal_group("cube", "hemicross"), "{cube,hemicross}")).dump(2);
  CHECK(a == b);
  auto j = nlohmann::ordered_json::parse(a);
  CHECK(j["universal"] == "{cube,hemicross}");
  CHECK(j["quotients"].size() == 4);
  for (const char* key : {"subgroup_order", "class_size", "regular", "section_regular", "facet_classes",
                          "vfig_classes", "type", "face_counts"})
    CHECK(j["quotients"][0].contains(key));

  ClassificationReport rep = classify_quotients(w, "{cube,hemicross}");
  auto agg = to_json(aggregate_summary({{10, rep}}, quoted_535_reports()));
  REQUIRE(agg["contributions"].size() == 3);
  CHECK(agg["contributions"][0]["source"] == "computed");
  CHECK(agg["contributions"][0]["verified"] == true);
  CHECK(agg["contributions"][1]["source"] == "paper");
  CHECK(agg["contributions"][1]["verified"] == false);

  std::string dot = quotient_lattice_dot(w, rep);
  CHECK(dot.find("q0 -> ") != std::string::npos);
}
