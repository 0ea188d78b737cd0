#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "polyquot/amalgam.hpp"
#include "polyquot/quotient.hpp"

namespace polyquot {

nlohmann::ordered_json to_json(const CatalogEntry& e);
/// Face counts, type, regularity flags and section profile.
nlohmann::ordered_json to_json(const Polytope& p);
nlohmann::ordered_json to_json(const AmalgamSpec& spec, const UniversalResult& r);
nlohmann::ordered_json to_json(const ClassificationReport& r);
nlohmann::ordered_json to_json(const AggregateSummary& s);

/// Nodes are quotient classes; an edge joins a quotient to each of its
/// immediate further quotients.
std::string quotient_lattice_dot(const MarkedGroup& w, const ClassificationReport& r);

}  // namespace polyquot
