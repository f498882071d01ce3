#pragma once

// JSON encoding of the domain types.
//
// Rationals are canonical strings ("3/2", "-1"). Integers that fit in 64 bits
// are JSON numbers, larger ones are decimal strings. Every decode_* accepts
// what the matching encode produces and throws InvalidInput otherwise.

#include <vector>

#include <json.hpp>

#include "qplane/betti.hpp"
#include "qplane/polynomial.hpp"
#include "qplane/rational.hpp"
#include "qplane/torsion.hpp"

namespace qplane {

using Json = nlohmann::ordered_json;

Json encode(const Rat& r);
Json encode(const BigInt& v);
Json encode(const HilbPoly& p);
Json encode(const PValues& p);
Json encode(const BettiPair& s);
Json encode(const TorsionResolution& r);
Json encode_sequence(std::span<const Degree> v);

Rat decode_rat(const Json& j);
BigInt decode_bigint(const Json& j);
HilbPoly decode_poly(const Json& j);
PValues decode_pvalues(const Json& j);
std::vector<Degree> decode_sequence(const Json& j);
BettiPair decode_betti(const Json& j);
TorsionResolution decode_torsion(const Json& j);

}  // namespace qplane
