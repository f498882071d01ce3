#include "qplane/serialize.hpp"

#include <limits>

#include "qplane/errors.hpp"

namespace qplane {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing JSON field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json encode(const Rat& r) { return r.to_string(); }

Json encode(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

Json encode(const HilbPoly& p) {
    Json j = Json::object();
    j["c2"] = encode(p.c2());
    j["c1"] = encode(p.c1());
    j["c0"] = encode(p.c0());
    return j;
}

Json encode(const PValues& p) {
    Json j = Json::object();
    j["p2"] = encode(p.p2);
    j["p1"] = encode(p.p1);
    j["p0"] = encode(p.p0);
    return j;
}

Json encode_sequence(std::span<const Degree> v) {
    Json j = Json::array();
    for (Degree x : v)
        j.push_back(x);
    return j;
}

Json encode(const BettiPair& s) {
    Json j = Json::object();
    j["a"] = encode_sequence(s.a());
    j["b"] = encode_sequence(s.b());
    return j;
}

Json encode(const TorsionResolution& r) {
    Json j = Json::object();
    j["a"] = encode_sequence(r.a());
    j["b"] = encode_sequence(r.b());
    return j;
}

Rat decode_rat(const Json& j) {
    if (j.is_number_integer())
        return Rat(j.get<std::int64_t>());
    if (j.is_string())
        return Rat::parse(j.get<std::string>());
    throw InvalidInput("expected a rational, got " + j.dump());
}

BigInt decode_bigint(const Json& j) {
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        Rat r = Rat::parse(j.get<std::string>());
        if (r.is_integer())
            return r.to_integer();
    }
    throw InvalidInput("expected an integer, got " + j.dump());
}

HilbPoly decode_poly(const Json& j) {
    return {decode_rat(field(j, "c2")), decode_rat(field(j, "c1")), decode_rat(field(j, "c0"))};
}

PValues decode_pvalues(const Json& j) {
    return {decode_rat(field(j, "p2")), decode_rat(field(j, "p1")), decode_rat(field(j, "p0"))};
}

std::vector<Degree> decode_sequence(const Json& j) {
    if (!j.is_array())
        throw InvalidInput("expected an integer array, got " + j.dump());
    std::vector<Degree> out;
    for (const Json& x : j) {
        if (!x.is_number_integer())
            throw InvalidInput("expected an integer, got " + x.dump());
        out.push_back(x.get<Degree>());
    }
    return out;
}

BettiPair decode_betti(const Json& j) {
    return {decode_sequence(field(j, "a")), decode_sequence(field(j, "b"))};
}

TorsionResolution decode_torsion(const Json& j) {
    return {decode_sequence(field(j, "a")), decode_sequence(field(j, "b"))};
}

}  // namespace qplane
