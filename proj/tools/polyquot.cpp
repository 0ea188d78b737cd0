#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polyquot/amalgam.hpp"
#include "polyquot/catalog.hpp"
#include "polyquot/quotient.hpp"
#include "polyquot/report.hpp"
#include "polyquot/verify.hpp"

using namespace polyquot;
using nlohmann::ordered_json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitBound = 2;
constexpr int kExitUsage = 3;
constexpr std::size_t kStretchCosets = 6'000'000;

struct RunConfig {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t subgroup_order_bound = kDefaultSubgroupOrderBound;
  bool stretch = false;
  std::string format = "text";
  std::string output_path;

  std::size_t effective_max_cosets() const {
    return stretch ? std::max(max_cosets, kStretchCosets) : max_cosets;
  }
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw UsageError("cannot write " + cfg.output_path);
  out << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

AmalgamSpec spec_from(const std::string& facet, const std::string& vfig) {
  auto k = find_entry(facet);
  if (!k) throw UsageError("unknown facet '" + facet + "'");
  auto l = find_entry(vfig);
  if (!l) throw UsageError("unknown vertex figure '" + vfig + "'");
  AmalgamSpec spec{*k, *l};
  try {
    spec.symbol();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return spec;
}

std::optional<int> table1_number(const AmalgamSpec& spec) {
  for (const auto& c : table1_cases())
    if (c.spec.facet.name == spec.facet.name && c.spec.vfig.name == spec.vfig.name) return c.number;
  return std::nullopt;
}

// Quotient counts with the polytope itself included.
const std::map<int, std::size_t> kKnownQuotientCounts = {
    {7, 1}, {10, 4}, {11, 1}, {12, 4}, {13, 70}, {19, 70}, {20, 145}, {21, 1}, {22, 145}};

int cmd_catalog(const RunConfig& cfg, bool degenerate, int max_p) {
  std::vector<CatalogEntry> entries = rank3_catalog();
  if (degenerate) {
    for (int p = 2; p <= max_p; ++p) entries.push_back(dihedron(p));
    for (int p = 2; p <= max_p; ++p) entries.push_back(hosohedron(p));
  }
  if (cfg.format == "json") {
    ordered_json a = ordered_json::array();
    for (const auto& e : entries) a.push_back(to_json(e));
    emit(cfg, dump(a));
    return 0;
  }
  std::ostringstream os;
  for (const auto& e : entries) {
    os << std::left << std::setw(18) << e.name << std::setw(8) << e.symbol.to_string()
       << std::setw(12) << to_string(e.kind) << "order " << realize(e).order() << "\n";
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_catalog_dump(const RunConfig& cfg) {
  if (cfg.output_path.empty()) {
    std::ostringstream os;
    for (const auto& e : rank3_catalog())
      os << format_presentation(e.presentation(), e.name) << "\n";
    std::cout << os.str();
    return 0;
  }
  std::filesystem::create_directories(cfg.output_path);
  for (const auto& e : rank3_catalog()) {
    auto path = std::filesystem::path(cfg.output_path) / (e.name + ".pres");
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path.string());
    out << format_presentation(e.presentation(), e.name);
  }
  return 0;
}

UniversalResult build(const AmalgamSpec& spec, const RunConfig& cfg, bool over_facets) {
  return over_facets ? build_universal_over_facets(spec, cfg.effective_max_cosets())
                     : build_universal(spec, cfg.effective_max_cosets());
}

int cmd_build(const RunConfig& cfg, const std::string& facet, const std::string& vfig,
              bool over_facets) {
  AmalgamSpec spec = spec_from(facet, vfig);
  UniversalResult r = build(spec, cfg, over_facets);
  std::optional<Polytope> p;
  if (r.outcome == Outcome::exists && r.group) p = polytope_from_group(*r.group);
  if (cfg.format == "json") {
    ordered_json j = to_json(spec, r);
    if (p) j["polytope"] = to_json(*p);
    emit(cfg, dump(j));
  } else if (cfg.format == "dot") {
    if (!p) throw UsageError("no polytope to draw: outcome " + std::string(to_string(r.outcome)));
    emit(cfg, hasse_dot(*p));
  } else {
    std::ostringstream os;
    os << spec.label() << " type " << spec.symbol().to_string() << ": " << to_string(r.outcome)
       << "\n";
    if (r.group_order) os << "  group order " << r.group_order << "\n";
    if (r.facet_subgroup_order)
      os << "  facet group " << r.facet_subgroup_order << ", vertex-figure group "
         << r.vfig_subgroup_order << "\n";
    if (p) {
      os << "  faces";
      for (auto c : p->face_counts()) os << " " << c;
      os << "\n";
    }
    if (!r.detail.empty()) os << "  " << r.detail << "\n";
    emit(cfg, os.str());
  }
  return r.outcome == Outcome::exceeded_limit ? kExitBound : 0;
}

int cmd_quotients(const RunConfig& cfg, const std::string& facet, const std::string& vfig) {
  AmalgamSpec spec = spec_from(facet, vfig);
  UniversalResult u = build_universal(spec, cfg.effective_max_cosets());
  if (u.outcome == Outcome::exceeded_limit) {
    std::cerr << spec.label() << ": " << u.detail << "\n";
    return kExitBound;
  }
  if (u.outcome != Outcome::exists) {
    std::cerr << spec.label() << ": no universal polytope (" << to_string(u.outcome) << ": "
              << u.detail << ")\n";
    return kExitMismatch;
  }
  ClassificationReport rep = classify_quotients(*u.group, spec.label(), cfg.subgroup_order_bound);
  if (cfg.format == "json") {
    emit(cfg, dump(to_json(rep)));
  } else if (cfg.format == "dot") {
    emit(cfg, quotient_lattice_dot(*u.group, rep));
  } else {
    std::ostringstream os;
    os << rep.universal << " group order " << rep.group_order << "\n";
    for (const auto& q : rep.records) {
      os << "  |N|=" << q.subgroup.order() << " x" << q.class_size << (q.regular ? " regular" : "")
         << (q.section_regular ? " section-regular" : "") << " " << q.type << " facets:";
      for (const auto& c : q.facet_classes) os << " " << c.count << " " << c.name;
      os << "; vertex figures:";
      for (const auto& c : q.vfig_classes) os << " " << c.count << " " << c.name;
      os << "\n";
    }
    os << "quotients " << rep.total_quotients() << ", regular " << rep.regular_count()
       << ", section regular " << rep.section_regular_count() << ", mixed facets "
       << rep.mixed_facet_count() << "\n";
    if (auto c = table1_number(spec)) {
      if (auto it = kKnownQuotientCounts.find(*c); it != kKnownQuotientCounts.end())
        os << "published count for case " << *c << ": " << it->second
           << (it->second == rep.total_quotients() ? " (match)" : " (MISMATCH)") << "\n";
    }
    emit(cfg, os.str());
  }
  return 0;
}

int cmd_table1(const RunConfig& cfg) {
  std::vector<Table1Row> rows;
  for (const auto& c : table1_cases()) {
    bool large = c.number == 20 || c.number == 22;
    if (cfg.stretch && c.number == 22) {
      // Dual of case 20: same order, facets and vertices exchanged.
      UniversalResult r = rows[19].result;
      std::swap(r.facet_subgroup_order, r.vfig_subgroup_order);
      r.over_facets = false;
      r.cosets = 0;
      r.detail = "dual of case 20";
      rows.push_back({c, r});
      continue;
    }
    rows.push_back({c, cfg.stretch && large ? build_universal_over_facets(c.spec, cfg.effective_max_cosets())
                                            : build_universal(c.spec, cfg.max_cosets)});
  }
  bool exceeded = false;
  for (const auto& r : rows) exceeded = exceeded || r.result.outcome == Outcome::exceeded_limit;
  if (cfg.format == "json") {
    ordered_json a = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j = to_json(r.row.spec, r.result);
      j["case"] = r.row.number;
      if (r.row.dual_case)
        j["dual_case"] = *r.row.dual_case;
      else
        j["dual_case"] = nullptr;
      a.push_back(j);
    }
    emit(cfg, dump(a));
  } else {
    std::ostringstream os;
    for (const auto& r : rows) {
      os << std::right << std::setw(2) << r.row.number << "  " << std::left << std::setw(18)
         << r.row.spec.facet.name << std::setw(18) << r.row.spec.vfig.name << std::setw(9)
         << r.row.spec.symbol().to_string() << std::setw(15) << to_string(r.result.outcome);
      if (r.result.group_order) os << "order " << r.result.group_order;
      if (r.row.dual_case)
        os << "  (dual " << *r.row.dual_case << ")";
      else
        os << "  (self-dual)";
      os << "\n";
      if (r.result.outcome != Outcome::exists && !r.result.detail.empty())
        os << "      " << r.result.detail << "\n";
    }
    emit(cfg, os.str());
  }
  return exceeded ? kExitBound : 0;
}

int cmd_verify(const RunConfig& cfg, std::optional<int> only_case) {
  VerifyOptions opts;
  opts.max_cosets = cfg.max_cosets;
  opts.subgroup_order_bound = cfg.subgroup_order_bound;
  opts.stretch = cfg.stretch;
  opts.stretch_max_cosets = cfg.effective_max_cosets();
  opts.only_case = only_case;
  const bool text = cfg.format != "json";
  auto results = run_acceptance(opts, [&](const CriterionResult& r) {
    if (text && cfg.output_path.empty()) std::cout << format_result(r) << std::endl;
  });
  if (cfg.format == "json") {
    ordered_json a = ordered_json::array();
    for (const auto& r : results) {
      a.push_back({{"criterion", r.id},
                   {"title", r.title},
                   {"status", r.skipped ? "skipped" : r.passed ? "pass" : "fail"},
                   {"optional", r.optional},
                   {"expected", r.expected},
                   {"actual", r.actual}});
    }
    emit(cfg, dump(a));
  } else if (!cfg.output_path.empty()) {
    std::string all;
    for (const auto& r : results) all += format_result(r) + "\n";
    emit(cfg, all);
  }
  if (suite_passed(results)) return 0;
  bool mismatch = false;
  for (const auto& r : results)
    if (!r.passed && !r.optional && !r.skipped && !r.resource_bound) mismatch = true;
  return mismatch ? kExitMismatch : kExitBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal locally projective polytopes and their quotients"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("POLYQUOT_MAX_COSETS")) {
    try {
      cfg.max_cosets = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "POLYQUOT_MAX_COSETS must be a positive integer\n";
      return kExitUsage;
    }
  }
  app.add_option("--max-cosets", cfg.max_cosets, "Coset enumeration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--subgroup-order-bound", cfg.subgroup_order_bound,
                 "Largest group whose subgroups are enumerated")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--output-path", cfg.output_path, "Write output here instead of stdout");
  app.fallthrough();

  bool degenerate = false;
  int max_p = 6;
  auto* catalog = app.add_subcommand("catalog", "List the rank-3 building blocks");
  catalog->add_flag("--degenerate", degenerate, "Include dihedra and hosohedra");
  catalog->add_option("--max-p", max_p, "Largest p for the degenerate families")
      ->check(CLI::Range(2, 1000));
  auto* dump_cmd = catalog->add_subcommand("dump", "Write one presentation file per entry");

  std::string facet, vfig;
  bool over_facets = false;
  auto* build_cmd = app.add_subcommand("build", "Build the universal polytope {vfig, facet}");
  build_cmd->add_option("--facet", facet)->required();
  build_cmd->add_option("--vfig", vfig)->required();
  build_cmd->add_flag("--over-facets", over_facets, "Enumerate cosets of the facet subgroup");
  build_cmd->add_flag("--stretch", cfg.stretch, "Raise the coset budget");

  auto* quot_cmd = app.add_subcommand("quotients", "Classify the quotients of a universal");
  quot_cmd->add_option("--facet", facet)->required();
  quot_cmd->add_option("--vfig", vfig)->required();

  auto* table_cmd = app.add_subcommand("table1", "Run all 22 classification cases");
  table_cmd->add_flag("--stretch", cfg.stretch, "Enumerate cases 20 and 22 over facets");

  std::optional<int> only_case;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  verify_cmd->add_flag("--stretch", cfg.stretch, "Include the case 20 enumeration");
  verify_cmd->add_option("--case", only_case, "Only the criteria touching this case")
      ->check(CLI::Range(1, 22));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*dump_cmd) return cmd_catalog_dump(cfg);
    if (*catalog) return cmd_catalog(cfg, degenerate, max_p);
    if (*build_cmd) return cmd_build(cfg, facet, vfig, over_facets);
    if (*quot_cmd) return cmd_quotients(cfg, facet, vfig);
    if (*table_cmd) return cmd_table1(cfg);
    if (*verify_cmd) return cmd_verify(cfg, only_case);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OrderBoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
