#include "polyquot/report.hpp"

#include <sstream>

namespace polyquot {

using nlohmann::ordered_json;

namespace {

ordered_json section_counts(const std::vector<SectionClassCount>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& c : v) a.push_back({{"name", c.name}, {"count", c.count}});
  return a;
}

}  // namespace

ordered_json to_json(const CatalogEntry& e) {
  ordered_json extra = ordered_json::array();
  for (const Word& w : e.extra_relators) extra.push_back(w);
  return {{"name", e.name},
          {"symbol", e.symbol.to_string()},
          {"class", to_string(e.kind)},
          {"order", e.expected_order},
          {"extra_relators", extra}};
}

ordered_json to_json(const Polytope& p) {
  ordered_json j;
  j["rank"] = p.rank();
  j["face_counts"] = p.face_counts();
  j["type"] = p.type_string();
  j["flags"] = p.flag_count();
  j["regular"] = is_regular(p);
  SectionProfile prof = section_profile(p);
  j["section_regular"] = prof.section_regular();
  ordered_json profile = ordered_json::array();
  for (const auto& [ranks, counts] : prof.class_counts)
    profile.push_back({{"lower_rank", ranks.first}, {"upper_rank", ranks.second}, {"classes", counts}});
  j["section_profile"] = profile;
  return j;
}

ordered_json to_json(const AmalgamSpec& spec, const UniversalResult& r) {
  ordered_json j;
  j["facet"] = spec.facet.name;
  j["vfig"] = spec.vfig.name;
  j["type"] = spec.symbol().to_string();
  j["outcome"] = to_string(r.outcome);
  j["group_order"] = r.group_order;
  j["facet_subgroup_order"] = r.facet_subgroup_order;
  j["vfig_subgroup_order"] = r.vfig_subgroup_order;
  j["enumerated_over"] = r.over_facets ? "facet subgroup" : "trivial subgroup";
  j["cosets"] = r.cosets;
  j["detail"] = r.detail;
  return j;
}

ordered_json to_json(const ClassificationReport& r) {
  ordered_json j;
  j["universal"] = r.universal;
  j["group_order"] = r.group_order;
  j["total_quotients"] = r.total_quotients();
  j["regular_count"] = r.regular_count();
  j["section_regular_count"] = r.section_regular_count();
  j["mixed_facet_count"] = r.mixed_facet_count();
  ordered_json qs = ordered_json::array();
  for (const auto& q : r.records) {
    qs.push_back({{"subgroup_order", q.subgroup.order()},
                  {"class_size", q.class_size},
                  {"normal", q.normal},
                  {"regular", q.regular},
                  {"section_regular", q.section_regular},
                  {"type", q.type},
                  {"facet_classes", section_counts(q.facet_classes)},
                  {"vfig_classes", section_counts(q.vfig_classes)},
                  {"face_counts", q.face_counts}});
  }
  j["quotients"] = qs;
  return j;
}

ordered_json to_json(const AggregateSummary& s) {
  ordered_json j;
  ordered_json contributions = ordered_json::array();
  for (const auto& c : s.contributions) {
    contributions.push_back({{"case", c.case_number},
                             {"universal", c.universal},
                             {"source", c.source},
                             {"verified", c.source == "computed"},
                             {"total", c.total},
                             {"regular", c.regular},
                             {"section_regular", c.section_regular},
                             {"mixed", c.mixed},
                             {"new_total", c.new_total},
                             {"new_regular", c.new_regular},
                             {"new_section_regular", c.new_section_regular}});
  }
  j["contributions"] = contributions;
  j["total_with_multiplicity"] = s.total_with_multiplicity;
  j["distinct_total"] = s.distinct_total;
  j["distinct_regular"] = s.distinct_regular;
  j["distinct_section_regular"] = s.distinct_section_regular;
  j["degenerate_extra"] = s.degenerate_extra;
  j["grand_total"] = s.grand_total();
  j["reconciliation"] = s.reconciliation;
  return j;
}

std::string quotient_lattice_dot(const MarkedGroup& w, const ClassificationReport& r) {
  const std::size_t n = r.records.size();
  // below[i][j]: quotient j is a further quotient of quotient i, i.e. some
  // conjugate of N_i lies in N_j.
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Subgroup> conj = conjugates(w, r.records[i].subgroup);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || r.records[j].subgroup.order() % r.records[i].subgroup.order() != 0) continue;
      for (const Subgroup& c : conj) {
        if (c.elements().is_subset_of(r.records[j].subgroup.elements())) {
          below[i][j] = true;
          break;
        }
      }
    }
  }
  std::ostringstream os;
  os << "digraph quotients {\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& q = r.records[i];
    os << "  q" << i << " [label=\"" << q.type << "\\n|N|=" << q.subgroup.order()
       << (q.regular ? " regular" : "") << "\"];\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k)
        if (below[i][k] && below[k][j]) covering = false;
      if (covering) os << "  q" << i << " -> q" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace polyquot
