#pragma once

#include <nlohmann/json.hpp>

#include "pejm/blocks.hpp"
#include "pejm/gclass.hpp"
#include "pejm/jantzen.hpp"
#include "pejm/kl.hpp"
#include "pejm/odd_reflections.hpp"
#include "pejm/weight.hpp"

namespace pejm {

// Insertion-ordered JSON keeps field order stable for golden comparisons.
using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);        // ["0", "1/2", ...]
Weight weight_from_json(const Json& j);
Json to_json(const GClass& cls);      // [{weight, coefficient, basis}, ...]
Json to_json(const BlockKey& key);    // {n, residues, atypical, partial_index}
Json to_json(const OddReflectionTrace& trace);  // [{alpha, kind, weight}, ...]
Json to_json(const WitnessCertificate& cert);
Json to_json(const JantzenReport& report);
Json to_json(const BlockReport& report);
Json to_json(const KLPoly& p);        // coefficient list

}  // namespace pejm
