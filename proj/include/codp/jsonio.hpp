#pragma once

#include <json.hpp>

#include "codp/dp.hpp"
#include "codp/param.hpp"
#include "codp/rational.hpp"

namespace codp {

using Json = nlohmann::json;

// Accepts an integer, {"num": n, "den": d}, or the string "n/d".
Rat rat_from_json(const Json& node);

// Emits {"den": ..., "num": ...}; components render as JSON integers when
// they fit in 64 bits and as decimal strings otherwise. With render_decimal
// the rational becomes a display string instead (exact decimal when the
// denominator allows, "n/d" otherwise).
Json rat_to_json(const Rat& r, bool render_decimal = false);

Json labels_to_json(const std::vector<std::string>& labels);

Json dp_to_json(const DesignProblem& d);
Json uncertain_dp_to_json(const Uncertain<DesignProblem>& value,
                          bool render_decimal = false);

}  // namespace codp
