#pragma once

#include <json.hpp>

#include "nsg/checks.hpp"
#include "nsg/classes.hpp"
#include "nsg/numerator.hpp"

namespace nsg {

using json = nlohmann::json;

/// {"0":1,"8":-1,...} — nonzero coefficients of Q keyed by degree. Values
/// are emitted as JSON integers when they fit, decimal strings otherwise.
json numerator_to_json(const Numerator& num);

/// One scan/verify record. Exact values travel as strings.
json record_to_json(const SemigroupReport& rep, const CheckRecord& rec,
                    bool with_timings);

/// The `info` summary for one semigroup.
json info_to_json(const Semigroup& s, const Numerator& num,
                  const Classification& cls);

}  // namespace nsg
