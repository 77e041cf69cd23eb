#ifndef PERMEQ_SERIALIZE_HPP
#define PERMEQ_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "permeq/numtheory.hpp"
#include "permeq/perm.hpp"
#include "permeq/ranges.hpp"
#include "permeq/reducer.hpp"
#include "permeq/report.hpp"

// JSON forms used by the command-line tool. Objects keep insertion order so
// identical inputs always serialize to identical bytes.

namespace permeq {

using Json = nlohmann::ordered_json;

/// {"n": N, "image": [...]} with a one-based image table.
Json perm_to_json(const Perm& p);

/// Inverse of perm_to_json; throws InvalidPermutation on bad input.
Perm perm_from_json(const Json& j);

/// {"q": p} | {"q": "infinity"} | {"q_at_least": b}
Json qvalue_to_json(const QValue& q);

/// {"d": d, "members": [...]}
Json drange_to_json(const DRange& dr);

/// Case tag, alpha, beta, exponent, reducibility and both transform words.
Json reduced_form_to_json(const ReducedForm& rf);

/// {"verdict", "reason", "solutions": [cycle notation...], "hypotheses_log":
/// [{"condition", "numbers", "pass"}...]}
Json report_to_json(const SolutionReport& report);

}  // namespace permeq

#endif  // PERMEQ_SERIALIZE_HPP
