#include "polyquot/catalog.hpp"

#include <charconv>
#include <map>
#include <mutex>

#include "polyquot/isomorphism.hpp"

namespace polyquot {

namespace {

Word petrie_word(int r) { return power({0, 1, 2}, r); }

CatalogEntry make(std::string name, std::vector<int> symbol, std::vector<Word> extra,
                  std::uint64_t order, EntryClass kind) {
  return {std::move(name), {std::move(symbol)}, std::move(extra), order, kind};
}

const std::map<std::string, std::string, std::less<>>& dual_names() {
  static const std::map<std::string, std::string, std::less<>> m = {
      {"tetrahedron", "tetrahedron"},     {"cube", "octahedron"},
      {"octahedron", "cube"},             {"dodecahedron", "icosahedron"},
      {"icosahedron", "dodecahedron"},    {"hemicube", "hemicross"},
      {"hemicross", "hemicube"},          {"hemidodecahedron", "hemi-icosahedron"},
      {"hemi-icosahedron", "hemidodecahedron"}};
  return m;
}

std::optional<int> parse_parameter(std::string_view name, std::string_view prefix) {
  if (name.size() < prefix.size() + 3 || name.substr(0, prefix.size()) != prefix) return {};
  if (name[prefix.size()] != '(' || name.back() != ')') return {};
  std::string_view digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  int p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return {};
  return p;
}

}  // namespace

void SchlafliSymbol::validate() const {
  for (int e : entries)
    if (e < 2) throw Error("Schläfli symbol " + to_string() + " has an entry below 2");
}

SchlafliSymbol SchlafliSymbol::reversed() const {
  return {std::vector<int>(entries.rbegin(), entries.rend())};
}

std::string SchlafliSymbol::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries[i]);
  }
  return s + "}";
}

std::string_view to_string(EntryClass c) {
  switch (c) {
    case EntryClass::spherical: return "spherical";
    case EntryClass::projective: return "projective";
    case EntryClass::degenerate: return "degenerate";
  }
  return "?";
}

Presentation CatalogEntry::presentation() const {
  Presentation p = coxeter_presentation(symbol);
  for (const Word& w : extra_relators) p.relators.push_back(w);
  p.validate();
  return p;
}

Presentation coxeter_presentation(const SchlafliSymbol& symbol) {
  symbol.validate();
  Presentation p;
  p.rank = symbol.rank();
  for (int i = 0; i + 1 < p.rank; ++i)
    p.relators.push_back(power({i, i + 1}, symbol.entries[static_cast<std::size_t>(i)]));
  for (int i = 0; i < p.rank; ++i)
    for (int j = i + 2; j < p.rank; ++j) p.relators.push_back(power({i, j}, 2));
  return p;
}

Presentation with_petrie(const Presentation& pres, int r) {
  if (pres.rank != 3) throw Error("Petrie relator needs a rank-3 presentation");
  if (r < 2) throw Error("Petrie length must be at least 2");
  Presentation p = pres;
  p.relators.push_back(petrie_word(r));
  return p;
}

MarkedGroup realize(const CatalogEntry& entry, std::size_t max_cosets) {
  CosetTable t = coset_enumeration(entry.presentation(), {}, max_cosets);
  if (!t.closed())
    throw Error("enumeration of " + entry.name + " exceeded " + std::to_string(max_cosets) +
                " cosets");
  return perm_rep(t);
}

Polytope entry_polytope(const CatalogEntry& entry) { return polytope_from_group(realize(entry)); }

CatalogEntry central_quotient(const CatalogEntry& entry) {
  static const std::map<std::string, std::string, std::less<>> kNames = {
      {"cube", "hemicube"},
      {"octahedron", "hemicross"},
      {"dodecahedron", "hemidodecahedron"},
      {"icosahedron", "hemi-icosahedron"}};
  if (entry.kind != EntryClass::spherical)
    throw Error(entry.name + " is not a spherical polytope");
  MarkedGroup g = realize(entry);
  const ElementTable& t = g.elements();
  std::optional<ElementId> omega;
  for (ElementId e = 1; e < t.size() && !omega; ++e) {
    if (t.order_of(e) != 2) continue;
    bool central = true;
    for (int i = 0; i < t.rank() && central; ++i)
      central = t.mul(e, t.generator(i)) == t.mul(t.generator(i), e);
    if (central) omega = e;
  }
  if (!omega) throw Error(entry.name + " has no central inversion");
  auto it = kNames.find(entry.name);
  CatalogEntry out = entry;
  out.name = it != kNames.end() ? it->second : entry.name + "/2";
  out.extra_relators.push_back(t.word(*omega));
  out.expected_order = entry.expected_order / 2;
  out.kind = EntryClass::projective;
  return out;
}

const std::vector<CatalogEntry>& rank3_catalog() {
  static const std::vector<CatalogEntry> entries = {
      make("tetrahedron", {3, 3}, {}, 24, EntryClass::spherical),
      make("cube", {4, 3}, {}, 48, EntryClass::spherical),
      make("octahedron", {3, 4}, {}, 48, EntryClass::spherical),
      make("dodecahedron", {5, 3}, {}, 120, EntryClass::spherical),
      make("icosahedron", {3, 5}, {}, 120, EntryClass::spherical),
      make("hemicube", {4, 3}, {petrie_word(3)}, 24, EntryClass::projective),
      make("hemicross", {3, 4}, {petrie_word(3)}, 24, EntryClass::projective),
      make("hemidodecahedron", {5, 3}, {petrie_word(5)}, 60, EntryClass::projective),
      make("hemi-icosahedron", {3, 5}, {petrie_word(5)}, 60, EntryClass::projective),
  };
  return entries;
}

CatalogEntry dihedron(int p) {
  if (p < 2) throw Error("dihedron needs p >= 2");
  return make("dihedron(" + std::to_string(p) + ")", {p, 2}, {},
              4 * static_cast<std::uint64_t>(p), EntryClass::degenerate);
}

CatalogEntry hosohedron(int p) {
  if (p < 2) throw Error("hosohedron needs p >= 2");
  return make("hosohedron(" + std::to_string(p) + ")", {2, p}, {},
              4 * static_cast<std::uint64_t>(p), EntryClass::degenerate);
}

std::optional<CatalogEntry> find_entry(std::string_view name) {
  if (name == "cross") name = "octahedron";
  if (name == "hemioctahedron") name = "hemicross";
  for (const auto& e : rank3_catalog())
    if (e.name == name) return e;
  if (auto p = parse_parameter(name, "dihedron"); p && *p >= 2) return dihedron(*p);
  if (auto p = parse_parameter(name, "hosohedron"); p && *p >= 2) return hosohedron(*p);
  return std::nullopt;
}

CatalogEntry lookup_entry(std::string_view name) {
  if (auto e = find_entry(name)) return *e;
  throw Error("unknown catalog entry '" + std::string(name) + "'");
}

CatalogEntry dual_entry(const CatalogEntry& entry) {
  CatalogEntry out = entry;
  out.symbol = entry.symbol.reversed();
  const int n = entry.symbol.rank();
  for (Word& w : out.extra_relators)
    for (Generator& g : w) g = n - 1 - g;
  if (auto it = dual_names().find(entry.name); it != dual_names().end()) {
    out.name = it->second;
  } else if (auto p = parse_parameter(entry.name, "dihedron")) {
    out.name = hosohedron(*p).name;
  } else if (auto q = parse_parameter(entry.name, "hosohedron")) {
    out.name = dihedron(*q).name;
  } else {
    out.name = "dual(" + entry.name + ")";
  }
  return out;
}

std::optional<std::string> identify(const Polytope& p) {
  if (p.rank() != 3 || !p.has_flags()) return std::nullopt;
  struct Known {
    std::string name;
    Polytope polytope;
  };
  static std::mutex mutex;
  static std::vector<Known> known;
  static std::map<int, bool> degenerate_loaded;
  std::lock_guard lock(mutex);
  if (known.empty()) {
    for (const auto& e : rank3_catalog()) known.push_back({e.name, entry_polytope(e)});
  }
  auto counts = p.face_counts();
  // {p,2} has p vertices, p edges and 2 faces; {2,p} is its dual.
  for (int m : {static_cast<int>(counts[0]), static_cast<int>(counts[2])}) {
    if (m >= 2 && !degenerate_loaded[m]) {
      degenerate_loaded[m] = true;
      known.push_back({dihedron(m).name, entry_polytope(dihedron(m))});
      known.push_back({hosohedron(m).name, entry_polytope(hosohedron(m))});
    }
  }
  for (const auto& k : known)
    if (are_isomorphic(k.polytope, p)) return k.name;
  return std::nullopt;
}

MarkedGroup ditope_group(const CatalogEntry& facet) {
  if (facet.symbol.rank() != 3) throw Error("ditope needs a rank-3 facet");
  CatalogEntry e = facet;
  e.name = "ditope(" + facet.name + ")";
  e.symbol.entries.push_back(2);
  e.expected_order = facet.expected_order * 2;
  return realize(e);
}

Polytope build_ditope(const CatalogEntry& facet) {
  return polytope_from_group(ditope_group(facet));
}

}  // namespace polyquot
