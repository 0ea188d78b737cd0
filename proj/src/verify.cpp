#include "polyquot/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "polyquot/amalgam.hpp"
#include "polyquot/isomorphism.hpp"
#include "polyquot/quotient.hpp"
#include "polyquot/subgroup.hpp"

namespace polyquot {

namespace {

struct Check {
  std::vector<std::string> facts;
  std::vector<std::string> failures;

  template <class T>
  void eq(const std::string& what, const T& expected, const T& actual) {
    facts.push_back(what + "=" + str(actual));
    if (!(expected == actual))
      failures.push_back(what + ": expected " + str(expected) + ", got " + str(actual));
  }
  void ok(const std::string& what, bool cond) {
    if (!cond) failures.push_back(what + " fails");
  }
  template <class T>
  static std::string str(const T& v) {
    if constexpr (std::is_same_v<T, bool>)
      return v ? "true" : "false";
    else if constexpr (std::is_convertible_v<T, std::string>)
      return std::string(v);
    else
      return std::to_string(v);
  }
};

class Context {
 public:
  explicit Context(const VerifyOptions& o) : opts_(o) {}

  const Table1Case& row(int c) const { return table1_cases()[static_cast<std::size_t>(c - 1)]; }

  const UniversalResult& universal(int c) {
    auto it = universals_.find(c);
    if (it == universals_.end())
      it = universals_.emplace(c, build_universal(row(c).spec, opts_.max_cosets)).first;
    return it->second;
  }

  const MarkedGroup& group(int c) {
    const UniversalResult& u = universal(c);
    if (!u.group) throw Error("case " + std::to_string(c) + " has no group: " + u.detail);
    return *u.group;
  }

  const Polytope& polytope(int c) {
    auto it = polytopes_.find(c);
    if (it == polytopes_.end()) it = polytopes_.emplace(c, polytope_from_group(group(c))).first;
    return it->second;
  }

  const ClassificationReport& report(int c) {
    auto it = reports_.find(c);
    if (it == reports_.end()) {
      it = reports_
               .emplace(c, classify_quotients(group(c), row(c).spec.label(),
                                              opts_.subgroup_order_bound))
               .first;
    }
    return it->second;
  }

  const VerifyOptions& options() const { return opts_; }

 private:
  VerifyOptions opts_;
  std::map<int, UniversalResult> universals_;
  std::map<int, Polytope> polytopes_;
  std::map<int, ClassificationReport> reports_;
};

const std::vector<int> kExistingCases = {7, 10, 11, 12, 13, 19, 21};

Polytope digonal_prism() {
  MarkedGroup cube = realize(lookup_entry("cube"));
  Permutation x = cube.generator(0);
  Permutation y = cube.generator(1) * x * cube.generator(1);
  return quotient_polytope(cube, Subgroup(cube, {x * y}));
}

std::size_t facet_count(const Polytope& p) { return p.face_count(p.rank() - 1); }

bool all_sections_named(const std::vector<SectionClassCount>& v, const std::string& name) {
  return v.size() == 1 && v[0].name == name;
}

void c1_catalog(Context&, Check& ck) {
  const std::map<std::string, std::uint64_t> expected = {
      {"tetrahedron", 24},     {"cube", 48},      {"octahedron", 48},
      {"dodecahedron", 120},   {"icosahedron", 120}, {"hemicube", 24},
      {"hemicross", 24},       {"hemidodecahedron", 60}, {"hemi-icosahedron", 60}};
  for (const auto& e : rank3_catalog()) {
    ck.eq("|" + e.name + "|", expected.at(e.name), realize(e).order());
    ck.eq("expected_order(" + e.name + ")", expected.at(e.name), e.expected_order);
  }
  for (const auto& e : rank3_catalog()) {
    if (e.kind != EntryClass::spherical || e.name == "tetrahedron") continue;
    CatalogEntry q = central_quotient(e);
    CatalogEntry petrie = lookup_entry(q.name);
    std::uint64_t order = realize(q).order();
    ck.eq("|" + e.name + "/omega|", petrie.expected_order, order);
    ck.ok(e.name + "/omega isomorphic to " + petrie.name,
          are_isomorphic(entry_polytope(q), entry_polytope(petrie)));
  }
  bool threw = false;
  try {
    central_quotient(lookup_entry("tetrahedron"));
  } catch (const Error&) {
    threw = true;
  }
  ck.ok("tetrahedron has no central inversion", threw);
}

void c2_cube(Context&, Check& ck) {
  MarkedGroup g = realize(lookup_entry("cube"));
  const Permutation x = g.generator(0);
  const Permutation y = g.generator(1) * x * g.generator(1);
  const Permutation z = g.generator(2) * y * g.generator(2);
  auto classes = semisparse_classes(g);
  ck.eq("semisparse classes", std::size_t{4}, classes.size());
  struct Want {
    std::string name;
    Subgroup sub;
    std::size_t class_size;
  };
  const std::vector<Want> wants = {{"trivial", Subgroup::trivial(g), 1},
                                   {"<xy>", Subgroup(g, {x * y}), 3},
                                   {"<xyz>", Subgroup(g, {x * y * z}), 1},
                                   {"<xy,yz>", Subgroup(g, {x * y, y * z}), 1}};
  const Polytope cube = entry_polytope(lookup_entry("cube"));
  for (const auto& w : wants) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const SubgroupClass& c) {
      return are_conjugate(g, c.representative, w.sub).has_value();
    });
    ck.ok(w.name + " is semisparse", it != classes.end());
    if (it == classes.end()) continue;
    ck.eq("class size " + w.name, w.class_size, it->class_size);
    Polytope q = quotient_polytope(g, w.sub);
    if (w.name == "trivial") ck.ok("cube/1 is the cube", are_isomorphic(q, cube));
    if (w.name == "<xy>") {
      ck.ok("cube/<xy> is a nonregular digonal prism",
            !is_regular(q) && q.flag_count() == 24 && q.type_string() == "{2|4,3}");
    }
    if (w.name == "<xyz>") ck.eq("cube/<xyz>", std::string("hemicube"), identify(q).value_or("?"));
    if (w.name == "<xy,yz>")
      ck.eq("cube/<xy,yz>", std::string("hosohedron(3)"), identify(q).value_or("?"));
  }
  ck.ok("<x> is not semisparse", !is_semisparse(g, Subgroup(g, {x})));
}

void c3_hemicube(Context&, Check& ck) {
  for (const char* name : {"hemicube", "hemicross", "hemidodecahedron", "hemi-icosahedron"})
    ck.eq(std::string("quotients of ") + name, std::size_t{1},
          semisparse_classes(realize(lookup_entry(name))).size());
}

void c4_case10(Context& cx, Check& ck) {
  const UniversalResult& u = cx.universal(10);
  ck.eq("outcome", std::string("exists"), std::string(to_string(u.outcome)));
  ck.eq("order", std::uint64_t{192}, u.group_order);
  if (u.outcome != Outcome::exists) return;
  Polytope twisted = polytope_from_group(twisted_2H(lookup_entry("hemicross")));
  ck.ok("2^hemicross isomorphic to the universal", are_isomorphic(twisted, cx.polytope(10)));
  const auto& rep = cx.report(10);
  ck.eq("quotient classes", std::size_t{4}, rep.total_quotients());
  const Polytope prism = digonal_prism();
  int universal = 0, hemi = 0, hoso = 0, digon = 0;
  for (const auto& r : rep.records) {
    bool vf = all_sections_named(r.vfig_classes, "hemicross");
    if (r.regular && vf && all_sections_named(r.facet_classes, "cube")) ++universal;
    if (r.regular && vf && all_sections_named(r.facet_classes, "hemicube")) ++hemi;
    if (r.regular && vf && all_sections_named(r.facet_classes, "hosohedron(3)")) ++hoso;
    if (!r.regular) {
      auto facets = section_classes(r.polytope, 3, -1);
      if (facets.size() == 1 && are_isomorphic(facets[0].first, prism)) ++digon;
    }
  }
  ck.eq("universal itself", 1, universal);
  ck.eq("{hemicube,hemicross}", 1, hemi);
  ck.eq("{{2,3},hemicross} regular", 1, hoso);
  ck.eq("nonregular with digonal-prism facets", 1, digon);
}

void c5_case11(Context& cx, Check& ck) {
  const UniversalResult& u = cx.universal(11);
  ck.eq("order", std::uint64_t{96}, u.group_order);
  if (u.outcome != Outcome::exists) return;
  ck.eq("quotient classes", std::size_t{1}, cx.report(11).total_quotients());
  bool found = false;
  for (const auto& r : cx.report(10).records)
    found = found || are_isomorphic(r.polytope, cx.polytope(11));
  ck.ok("is a quotient of case 10", found);
}

void self_dual_case(Context& cx, Check& ck, int c, std::uint64_t order, std::size_t facets) {
  const UniversalResult& u = cx.universal(c);
  ck.eq("order", order, u.group_order);
  if (u.outcome != Outcome::exists) return;
  const Polytope& p = cx.polytope(c);
  ck.eq("facets", facets, facet_count(p));
  ck.ok("self-dual", are_isomorphic(p, dual(p)));
  ck.eq("quotient classes", std::size_t{1}, cx.report(c).total_quotients());
}

void c6_case7(Context& cx, Check& ck) { self_dual_case(cx, ck, 7, 660, 11); }

void c7_case21(Context& cx, Check& ck) {
  self_dual_case(cx, ck, 21, 3420, 57);
  if (cx.universal(21).group)
    ck.ok("satisfies the presentation of case 20",
          cx.group(21).satisfies(amalgam_presentation(cx.row(20).spec)));
}

void c8_case13(Context& cx, Check& ck) {
  const UniversalResult& u = cx.universal(13);
  ck.eq("order", std::uint64_t{64 * 60}, u.group_order);
  if (u.outcome != Outcome::exists) return;
  const Polytope& p = cx.polytope(13);
  ck.eq("facets", std::size_t{80}, facet_count(p));
  ck.eq("vertices", std::size_t{64}, p.face_count(0));
  ck.ok("2^hemi-icosahedron isomorphic to the universal",
        are_isomorphic(polytope_from_group(twisted_2H(lookup_entry("hemi-icosahedron"))), p));
  const auto& rep = cx.report(13);
  ck.eq("quotient classes", std::size_t{70}, rep.total_quotients());
  ck.eq("regular", std::size_t{3}, rep.regular_count());
  int same_type = 0, mixed = 0, hoso = 0, central = 0;
  for (const auto& r : rep.records) {
    bool vf = all_sections_named(r.vfig_classes, "hemi-icosahedron");
    if (!r.regular && vf && all_sections_named(r.facet_classes, "cube")) ++same_type;
    bool cube_and_hemi = r.facet_classes.size() == 2 && r.facet_classes[0].name == "cube" &&
                         r.facet_classes[1].name == "hemicube";
    if (vf && cube_and_hemi && r.type == "{4,3,5}" && !r.section_regular) ++mixed;
    if (r.regular && vf && all_sections_named(r.facet_classes, "hosohedron(3)")) ++hoso;
    if (r.regular && r.subgroup.order() == 2) ++central;
  }
  ck.eq("nonregular of type {cube,hemi-icosahedron}", 9, same_type);
  ck.eq("mixed cube/hemicube facets, not section regular", 8, mixed);
  ck.eq("regular {{2,3},hemi-icosahedron}", 1, hoso);
  ck.eq("regular quotient by a normal subgroup of order 2", 1, central);
}

void c9_nonexistence(Context& cx, Check& ck) {
  for (int c : {1, 2, 3, 4, 5, 6, 8, 9, 14, 15, 16, 17, 18}) {
    const UniversalResult& u = cx.universal(c);
    ck.ok("case " + std::to_string(c) + " reports no polytope",
          u.outcome == Outcome::collapsed || u.outcome == Outcome::not_polytopal);
  }
  for (int c : {6, 8}) {
    const UniversalResult& u = cx.universal(c);
    bool eleven_cell = u.group && u.group_order == 660 && intersection_condition(*u.group) &&
                       are_isomorphic(polytope_from_group(*u.group), cx.polytope(7));
    ck.ok("case " + std::to_string(c) + " collapses to the 11-cell", eleven_cell);
  }
  ck.facts.push_back("13 cases without a polytope");
}

void c10_properties(Context& cx, Check& ck) {
  std::size_t quotients = 0;
  auto check_report = [&](const std::string& label, const ClassificationReport& rep) {
    for (const auto& r : rep.records) {
      ++quotients;
      PolytopalityResult pr = is_polytopal(r.polytope);
      ck.ok(label + " quotient by order " + std::to_string(r.subgroup.order()) + " is polytopal (" +
                pr.failed_axiom + ")",
            pr.ok);
      ck.ok(label + " regular <=> normal for order " + std::to_string(r.subgroup.order()),
            r.regular == r.normal);
      ck.ok(label + " regular => section regular", !r.regular || r.section_regular);
    }
  };
  for (const char* name : {"cube", "hemicube"}) {
    MarkedGroup g = realize(lookup_entry(name));
    check_report(name, classify_quotients(g, name));
  }
  for (int c : kExistingCases) {
    const Polytope& p = cx.polytope(c);
    ck.ok("universal of case " + std::to_string(c) + " is polytopal", is_polytopal(p).ok);
    ck.ok("facets of case " + std::to_string(c) + " are " + cx.row(c).spec.facet.name,
          all_sections_named(classify_sections(p, 3, -1), cx.row(c).spec.facet.name));
    ck.ok("vertex figures of case " + std::to_string(c) + " are " + cx.row(c).spec.vfig.name,
          all_sections_named(classify_sections(p, 4, 0), cx.row(c).spec.vfig.name));
    check_report("case " + std::to_string(c), cx.report(c));
  }
  for (auto [a, b] : {std::pair{10, 12}, std::pair{13, 19}})
    ck.ok("cases " + std::to_string(a) + "/" + std::to_string(b) + " are dual",
          are_isomorphic(dual(cx.polytope(a)), cx.polytope(b)));
  ck.facts.push_back(std::to_string(quotients) + " quotients checked");
}

void c11_finite(Context& cx, Check& ck) {
  std::size_t closed = 0, existing = 0;
  for (int c = 1; c <= 21; ++c) {
    if (c == 20) continue;
    const UniversalResult& u = cx.universal(c);
    ck.ok("case " + std::to_string(c) + " closes", u.outcome != Outcome::exceeded_limit);
    if (u.outcome != Outcome::exceeded_limit) ++closed;
    if (u.outcome == Outcome::exists) {
      ++existing;
      ck.ok("case " + std::to_string(c) + " has a finite group", u.group_order > 0);
    }
  }
  ck.eq("closed enumerations", std::size_t{20}, closed);
  ck.eq("existing cases", kExistingCases.size(), existing);
}

void c12_aggregate(Context& cx, Check& ck) {
  std::vector<std::pair<int, ClassificationReport>> reports;
  for (int c : kExistingCases) reports.emplace_back(c, cx.report(c));
  std::set<Certificate> quotient_certs;
  for (const auto& [c, rep] : reports)
    for (const auto& r : rep.records) quotient_certs.insert(certificate(r.polytope));

  // Degenerate locally projective polytopes: ditopes over the projective
  // polyhedra and their duals.
  std::size_t extra = 0, among_quotients = 0;
  for (const auto& e : rank3_catalog()) {
    if (e.kind != EntryClass::projective) continue;
    MarkedGroup g = ditope_group(e);
    for (const MarkedGroup& h : {g, g.dual()}) {
      Polytope p = polytope_from_group(h);
      bool quotient = quotient_certs.count(certificate(p)) > 0;
      ck.ok("ditope over " + e.name + " has no proper quotients",
            semisparse_classes(h).size() == 1);
      // Quotients of the two {5,3,5} universals all have that type.
      if (quotient)
        ++among_quotients;
      else if (p.type_string() != "{5,3,5}")
        ++extra;
    }
  }
  ck.eq("degenerate polytopes among the computed quotients", std::size_t{4}, among_quotients);
  AggregateSummary s = aggregate_summary(reports, quoted_535_reports(), extra);
  ck.eq("distinct quotients", std::size_t{437}, s.distinct_total);
  ck.eq("regular", std::size_t{17}, s.distinct_regular);
  ck.eq("section regular", std::size_t{169}, s.distinct_section_regular);
  ck.eq("with multiplicity", std::size_t{441}, s.total_with_multiplicity);
  ck.eq("distinct + degenerate extras", std::size_t{441}, s.grand_total());
  std::size_t computed = 0;
  for (const auto& c : s.contributions)
    if (c.source == "computed") computed += c.new_total;
  ck.facts.push_back("computed distinct=" + std::to_string(computed) +
                     "; cases 20 and 22 quoted from the literature, unverified");
}

void c13_stretch(Context& cx, Check& ck) {
  UniversalResult u =
      build_universal_over_facets(cx.row(20).spec, cx.options().stretch_max_cosets);
  ck.eq("outcome", std::string("exists"), std::string(to_string(u.outcome)));
  ck.eq("facets", std::size_t{5'003'460}, u.cosets);
  ck.eq("order", std::uint64_t{600'415'200}, u.group_order);
  ck.eq("vertices", std::uint64_t{10'006'920},
        u.vfig_subgroup_order ? u.group_order / u.vfig_subgroup_order : 0);
}

struct Criterion {
  int id;
  const char* title;
  const char* expected;
  std::vector<int> cases;
  void (*run)(Context&, Check&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "catalog orders", "24,48,48,120,120; projective 24,24,60,60", {}, c1_catalog},
      {2, "cube semisparse classes", "4 classes: 1, <xy> (3 conjugates), <xyz>, <xy,yz>", {},
       c2_cube},
      {3, "hemicube has no proper quotients", "1 class for each projective polyhedron", {},
       c3_hemicube},
      {4, "case 10", "order 192, 2^H isomorphic, 4 quotients", {10}, c4_case10},
      {5, "case 11", "order 96, 1 quotient", {11}, c5_case11},
      {6, "case 7 (11-cell)", "order 660, 11 facets, self-dual, 1 quotient", {7}, c6_case7},
      {7, "case 21 (57-cell)", "order 3420, 57 facets, self-dual, 1 quotient", {21}, c7_case21},
      {8, "case 13", "order 3840 = 2^6*60, 80 facets, 64 vertices, 70 quotients (3/9/8)", {13},
       c8_case13},
      {9, "nonexistence", "cases 1-6, 8, 9, 14-18 collapsed or not polytopal",
       {1, 2, 3, 4, 5, 6, 8, 9, 14, 15, 16, 17, 18}, c9_nonexistence},
      {10, "polytopality and regularity <=> normality", "all quotients pass",
       {7, 10, 11, 12, 13, 19, 21}, c10_properties},
      {11, "finiteness", "every case among 1-19, 21 closes",
       {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 21}, c11_finite},
      {12, "aggregate", "437 total, 17 regular, 169 section regular; 437 + 4 = 441",
       {7, 10, 11, 12, 13, 19, 20, 21, 22}, c12_aggregate},
      {13, "case 20 over the facet subgroup (stretch)", "index 5003460, order 600415200", {20},
       c13_stretch},
  };
  return list;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(
    const VerifyOptions& options, const std::function<void(const CriterionResult&)>& on_result) {
  Context cx(options);
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (options.only_case &&
        std::find(c.cases.begin(), c.cases.end(), *options.only_case) == c.cases.end())
      continue;
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    r.expected = c.expected;
    r.optional = c.id == 13;
    if (c.id == 13 && !options.stretch) {
      r.skipped = true;
      r.actual = "not run (needs --stretch)";
    } else {
      auto t0 = std::chrono::steady_clock::now();
      Check ck;
      try {
        c.run(cx, ck);
      } catch (const OrderBoundExceeded& e) {
        r.resource_bound = true;
        ck.failures.push_back(e.what());
      } catch (const Error& e) {
        ck.failures.push_back(std::string("error: ") + e.what());
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      r.passed = ck.failures.empty();
      const auto& parts = r.passed ? ck.facts : ck.failures;
      for (std::size_t i = 0; i < parts.size(); ++i) r.actual += (i ? "; " : "") + parts[i];
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

bool suite_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed || r.optional || r.skipped; });
}

std::string format_result(const CriterionResult& r) {
  std::string status = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", r.seconds);
  return "[" + status + "] " + std::to_string(r.id) + ". " + r.title + " (" + time +
         ")\n    expected: " + r.expected + "\n    actual:   " + r.actual;
}

}  // namespace polyquot
