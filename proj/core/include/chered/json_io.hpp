#pragma once

#include <json.hpp>

#include "chered/cherednik.hpp"
#include "chered/classify.hpp"
#include "chered/hecke.hpp"

namespace chered {

// All report emission goes through ordered_json so identical inputs yield
// byte-identical documents.
using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);  // "p/q" string
Json to_json(const Cyc& c);  // {order, coeffs: ["p/q", ...]}
Json to_json(const Params& p);
Json to_json(const IrrepLabel& v);
Json to_json(const CharacterSeries& s);
Json to_json(const Classification& c);
Json to_json(const VerifyReport& r);
Json to_json(const HeckeRep& r);
Json to_json(const AlgebraCheckReport& r);
Json character_table_json(int d);

// The per-point computation record: slice dims, singular content by type,
// and Gram ranks, degree by degree.
Json computation_record(const Params& p, const IrrepLabel& v, int cutoff);

}  // namespace chered
