#include "polyquot/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polyquot/catalog.hpp"
#include "polyquot/isomorphism.hpp"

namespace polyquot {

namespace {

struct Candidate {
  OrbitPoset poset;
  std::string failure;
};

Candidate candidate_quotient(const MarkedGroup& w, const ElementSet& n) {
  FlagGraph fg = coset_flag_graph(w.elements(), n);
  for (int i = 0; i < fg.rank(); ++i) {
    for (FlagId f = 0; f < fg.flag_count; ++f) {
      if (fg.adjacent(i, f) == f)
        return {{}, "diamond: flag orbit fixed by adjacency " + std::to_string(i)};
    }
  }
  if (auto why = fg.violation()) return {{}, *why};
  Candidate c{orbit_poset(fg), {}};
  if (!c.poset.failure.empty()) {
    c.failure = c.poset.failure;
    return c;
  }
  PolytopalityResult pr = is_polytopal(c.poset.poset);
  if (!pr) c.failure = pr.failed_axiom + ": " + pr.detail;
  return c;
}

MarkedGroup parabolic(const MarkedGroup& w, std::initializer_list<int> idx) {
  std::vector<Permutation> gens;
  for (int i : idx) gens.push_back(w.generator(i));
  return MarkedGroup(w.degree(), std::move(gens));
}

}  // namespace

SemisparseCheck semisparse_ground_truth(const MarkedGroup& w, const ElementSet& n) {
  Candidate c = candidate_quotient(w, n);
  return {c.failure.empty(), c.failure};
}

bool is_semisparse(const MarkedGroup& w, const Subgroup& n) {
  return semisparse_ground_truth(w, n.elements()).semisparse;
}

HereditaryFilter reflection_free_filter(const MarkedGroup& w) {
  const ElementTable& t = w.elements();
  ElementSet bad = t.empty_set();
  std::vector<ElementId> seeds;
  for (int i = 0; i < t.rank(); ++i) {
    seeds.push_back(t.generator(i));
    for (int j = i + 2; j < t.rank(); ++j) seeds.push_back(t.mul(t.generator(i), t.generator(j)));
  }
  for (ElementId s : seeds)
    for (ElementId g = 0; g < t.size(); ++g) bad.insert(t.conj(s, g));
  return [bad](const ElementSet& h) {
    ElementSet meet = h;
    meet &= bad;
    return meet.empty();
  };
}

bool semisparse_fast_path(const MarkedGroup& w, const Subgroup& n) {
  if (w.rank() != 4) throw Error("the product-set criterion is for rank 4");
  const ElementTable& t = w.elements();
  const std::vector<ElementId> facet_gens = {t.generator(0), t.generator(1), t.generator(2)};
  const std::vector<ElementId> vfig_gens = {t.generator(1), t.generator(2), t.generator(3)};
  Subgroup wf = Subgroup::generated_by(w, facet_gens);
  Subgroup wv = Subgroup::generated_by(w, vfig_gens);
  ElementSet prod = product_set(wf, wv);
  MarkedGroup facet_group = parabolic(w, {0, 1, 2});
  const ElementTable& ft = facet_group.elements();
  std::map<std::vector<ElementId>, bool> seen;
  for (const Subgroup& c : conjugates(w, n)) {
    ElementSet x = c.elements();
    x &= prod;
    if (!x.is_subset_of(wf.elements())) return false;
    std::vector<ElementId> xs = x.to_vector();
    if (!(closure(t, xs) == x)) return false;
    auto [it, fresh] = seen.emplace(xs, false);
    if (fresh) {
      ElementSet local = ft.empty_set();
      for (ElementId e : xs) local.insert(*facet_group.element_of(w.permutation_of(e)));
      it->second = semisparse_ground_truth(facet_group, local).semisparse;
    }
    if (!it->second) return false;
  }
  return true;
}

bool fast_path_applies(const MarkedGroup& w) {
  if (w.rank() != 4) return false;
  return semisparse_classes(parabolic(w, {1, 2, 3})).size() == 1;
}

std::vector<SubgroupClass> semisparse_classes(const MarkedGroup& w, std::size_t order_bound) {
  SubgroupSearchOptions opts;
  opts.order_bound = order_bound;
  opts.filter = reflection_free_filter(w);
  std::vector<SubgroupClass> out;
  for (auto& cls : enumerate_subgroups(w, opts))
    if (semisparse_ground_truth(w, cls.representative.elements())) out.push_back(std::move(cls));
  return out;
}

Polytope quotient_polytope(const MarkedGroup& w, const Subgroup& n) {
  Candidate c = candidate_quotient(w, n.elements());
  if (!c.failure.empty()) throw Error("subgroup is not semisparse: " + c.failure);
  return std::move(c.poset.poset);
}

std::size_t ClassificationReport::regular_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return r.regular; }));
}

std::size_t ClassificationReport::section_regular_count() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [](const auto& r) { return r.section_regular; }));
}

std::size_t ClassificationReport::mixed_facet_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return r.mixed_facets(); }));
}

std::vector<SectionClassCount> classify_sections(const Polytope& p, int upper_rank,
                                                 int lower_rank) {
  std::vector<SectionClassCount> out;
  for (const auto& [s, count] : section_classes(p, upper_rank, lower_rank)) {
    std::string name = identify(s).value_or("unrecognized:" + s.type_string());
    out.push_back({std::move(name), count});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

ClassificationReport classify_quotients(const MarkedGroup& w, std::string universal,
                                        std::size_t order_bound) {
  ClassificationReport rep;
  rep.universal = std::move(universal);
  rep.group_order = w.order();
  const int n = w.rank();
  for (auto& cls : semisparse_classes(w, order_bound)) {
    QuotientRecord r{.subgroup = cls.representative,
                     .class_size = cls.class_size,
                     .polytope = quotient_polytope(w, cls.representative),
                     .facet_classes = {},
                     .vfig_classes = {},
                     .type = {},
                     .face_counts = {}};
    r.normal = cls.class_size == 1;
    r.regular = is_regular(r.polytope);
    r.section_regular = r.regular || is_section_regular(r.polytope);
    r.facet_classes = classify_sections(r.polytope, n - 1, -1);
    r.vfig_classes = classify_sections(r.polytope, n, 0);
    r.type = r.polytope.type_string();
    r.face_counts = r.polytope.face_counts();
    rep.records.push_back(std::move(r));
  }
  return rep;
}

AggregateSummary aggregate_summary(const std::vector<std::pair<int, ClassificationReport>>& reports,
                                   const std::vector<QuotedReport>& quoted,
                                   std::size_t degenerate_extra) {
  AggregateSummary sum;
  std::set<Certificate> seen;
  for (const auto& [number, rep] : reports) {
    Contribution c;
    c.case_number = number;
    c.universal = rep.universal;
    c.source = "computed";
    c.total = rep.total_quotients();
    c.regular = rep.regular_count();
    c.section_regular = rep.section_regular_count();
    c.mixed = rep.mixed_facet_count();
    for (const auto& r : rep.records) {
      if (!seen.insert(certificate(r.polytope)).second) continue;
      ++c.new_total;
      if (r.regular) ++c.new_regular;
      if (r.section_regular) ++c.new_section_regular;
    }
    sum.contributions.push_back(std::move(c));
  }
  for (const auto& q : quoted) {
    Contribution c;
    c.case_number = q.case_number;
    c.universal = q.universal;
    c.source = "paper";
    c.total = q.total;
    c.regular = q.regular;
    c.section_regular = q.section_regular;
    c.mixed = q.mixed;
    c.new_total = q.total - q.overlap;
    c.new_regular = q.regular - q.overlap_regular;
    c.new_section_regular = q.section_regular - q.overlap_section_regular;
    sum.contributions.push_back(std::move(c));
  }
  for (const auto& c : sum.contributions) {
    sum.total_with_multiplicity += c.total;
    sum.distinct_total += c.new_total;
    sum.distinct_regular += c.new_regular;
    sum.distinct_section_regular += c.new_section_regular;
  }
  sum.degenerate_extra = degenerate_extra;
  sum.reconciliation = std::to_string(sum.distinct_total) + " distinct quotients + " +
                       std::to_string(degenerate_extra) +
                       " degenerate polytopes that are not quotients of these = " +
                       std::to_string(sum.grand_total()) + "; counted with multiplicity over "
                       "the universals the quotients number " +
                       std::to_string(sum.total_with_multiplicity);
  return sum;
}

std::vector<QuotedReport> quoted_535_reports() {
  QuotedReport q20;
  q20.case_number = 20;
  q20.universal = "{dodecahedron,hemi-icosahedron}";
  q20.total = 145;
  q20.regular = 3;  // the universal, the quotient with group J1, the 57-cell
  q20.section_regular = 3 + 67;
  q20.mixed = 75;
  q20.overlap = q20.overlap_regular = q20.overlap_section_regular = 1;
  q20.overlap_note =
      "the 57-cell, already counted as the universal {hemidodecahedron,hemi-icosahedron}";
  QuotedReport q22 = q20;
  q22.case_number = 22;
  q22.universal = "{hemidodecahedron,icosahedron}";
  // Duals of the case-20 quotients. A quotient common to both would have
  // hemidodecahedral facets and hemi-icosahedral vertex figures, so it is
  // covered by the 57-cell, which has no proper quotients.
  q22.overlap_note = "the 57-cell; no other quotient is shared with case 20";
  return {q20, q22};
}

}  // namespace polyquot
