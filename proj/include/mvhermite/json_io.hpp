#pragma once

#include <json.hpp>

#include "mvhermite/mvops.hpp"

namespace mvh {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
json to_json(const PiScalar& s);
json to_json(const RMatrix& m);
json to_json(const RMatPoly& p);
json family_to_json(const WeightFamily& fam);
WeightFamily family_from_json(const json& j);
json sequence_to_json(const MVOPSequence& seq);

}  // namespace mvh
