#pragma once

#include "pacert/certify.hpp"

#include "json.hpp"

namespace pacert {

using ordered_json = nlohmann::ordered_json;

// JSON integer when the value fits in 64 bits, decimal string otherwise.
ordered_json json_int(const Int& v);

ordered_json to_json(const IntPoly& p);        // {"coeffs_desc": [...]}
ordered_json to_json(const IntMatrix& m);      // {"dim": n, "rows": [[...], ...]}
ordered_json to_json(const MCWord& w);         // grammar mirror with e-basis vectors
ordered_json to_json(const Certificate& c);

}  // namespace pacert
