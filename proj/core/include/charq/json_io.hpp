#pragma once

#include <nlohmann/json.hpp>

#include "charq/invariants.hpp"
#include "charq/nice_rational.hpp"
#include "charq/reconstruct.hpp"

namespace charq {

using Json = nlohmann::json;

/*
 * Wire formats.  Coefficients that can outgrow 64-bit transport (Laurent
 * terms, integer series entries) are emitted as decimal strings; other
 * integer fields are emitted as JSON numbers when they fit in int64 and as
 * decimal strings otherwise.  Parsers accept both spellings everywhere.
 * Schema violations throw InputError.
 */

Json int_to_json(const Int& v);
Int json_to_int(const Json& j);

// Array of {"coeff": "...", "alpha": [..]} records.  On parsing, the
// variable count is inferred from the terms unless expected_vars >= 0 pins it
// (an empty array then parses as the zero polynomial in expected_vars).
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j, int expected_vars = -1);

// {"vars": n, "order": N, "coeffs": [poly, ...]} with exactly N+1 entries.
Json character_series_to_json(const CharacterSeries& s);
CharacterSeries character_series_from_json(const Json& j);

// {"order": N, "coeffs": ["..", ...]}.
Json int_series_to_json(const IntSeries& s);
IntSeries int_series_from_json(const Json& j);

// {"vars": n, "numerator": [{"coeff", "alpha", "qpow"}],
//  "denominator": [{"alpha", "qpow", "mult"}]}.
Json nice_rational_to_json(const NiceRational& f);
NiceRational nice_rational_from_json(const Json& j);

// {"type": "gl"|"sl"|"torus"|"unipotent"|"cyclic", "n": ..} plus
// "weights" (torus) or "order"/"exponents" (cyclic).
Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

// [{"coeff": .., "lam": [..]}, ...]
Json schur_expansion_to_json(const SchurExpansion& e);
SchurExpansion schur_expansion_from_json(const Json& j);

// {"a": [{"lam", "qpow", "mult"}], "terms": [{"coeff", "lam", "qpow"}]}
Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

// {"fit": bool} plus "numerator", "denominator_degrees", "verified_to" on success.
Json fit_report_to_json(const std::optional<FittedForm>& fit);

// {"found": bool, "order": L, "denom_poly": ["1", "-4", ...]} with rational
// coefficients rendered as "p" or "p/q".
Json recurrence_to_json(const RecurrenceGuess& guess);

}  // namespace charq
