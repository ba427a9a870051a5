#pragma once

#include <json.hpp>

#include "orbjac/verify.hpp"

namespace orbjac {

using Json = nlohmann::ordered_json;

/// { "conductor": M, "terms": [ { "power": k, "coeff": "p/q" }, ... ] }
/// meaning sum of (p/q) e[k/M] over the reduced representation.
Json cyc_to_json(const CycNum& v);
CycNum cyc_from_json(const Json& j, const FieldPtr& fld);

/// "1" for the empty monomial, else "x1^2*x3" in the input grammar.
std::string monomial_key(const Monomial& m, const VarSet& vs);
Monomial monomial_from_key(const std::string& key, const VarSet& vs);

Json class_to_json(const AlgebraClass& cls);
AlgebraClass class_from_json(const Json& j, const SectorAlgebra& sector);

Json element_to_json(const GroupElement& g);
Json group_to_json(const Group& g);
Json analyze_to_json(const InvertiblePolynomial& ip);
Json sector_to_json(const SectorAlgebra& s);
Json table_to_json(const ProductTable& t);
Json invariants_to_json(const Workspace& ws, const Group& group, const InvariantAlgebra& inv);
Json report_to_json(const ComparisonReport& r);

}  // namespace orbjac
