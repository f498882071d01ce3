#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qplane/betti.hpp"
#include "qplane/polynomial.hpp"
#include "qplane/rational.hpp"

namespace qplane::cli {

inline constexpr const char* kSchemaVersion = "1";

/// Integer or "p/q"; throws InvalidInput when malformed.
Rat parse_rational(std::string_view text);

/// Comma-separated integers, e.g. "1,1,2". The empty string is the empty sequence.
std::vector<Degree> parse_sequence(std::string_view text);

/// "c2,c1,c0", highest degree first.
HilbPoly parse_poly(std::string_view text);

/// "p2,p1,p0".
PValues parse_pvalues(std::string_view text);

/// Runs one subcommand. args excludes the program name.
/// Returns 0 on success, 1 on invalid input, 2 on a consistency or
/// verification failure.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qplane::cli
