#pragma once

#include <json.hpp>

#include "schurq/identities.hpp"
#include "schurq/odd_poly.hpp"
#include "schurq/q_engine.hpp"
#include "schurq/tau.hpp"

namespace schurq {

using json = nlohmann::json;

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

/// [{"monomial": [[k, e], ...], "coeff": "p/q"}, ...] in term order.
json to_json(const OddPoly& p);
OddPoly poly_from_json(const json& j);

/// [{"partition": [...], "coeff": "p/q"}, ...] sorted (weight, dec-lex).
json to_json(const QExpansion& e);
QExpansion qexpansion_from_json(const json& j);

/// [{"hbar_order": a, "poly": ...}, ...].
json to_json(const HbarSeries& s);
HbarSeries hbar_series_from_json(const json& j, int truncation_degree);

json to_json(const IdentityReport& r);

/// Comma-separated integers, e.g. "3,2,1"; empty string is the empty vector.
IntVector parse_int_vector(const std::string& text);

}  // namespace schurq
