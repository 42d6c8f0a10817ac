#pragma once

#include <iosfwd>
#include <string>

#include "gluecoeff/partitions.hpp"
#include "gluecoeff/theta.hpp"

namespace gluecoeff::cli {

// "a1,a2[;ap1,..] | b1,..[;bp1,..]", whitespace ignored.
EndData parse_end_data(const std::string& text);

// "p/q", checked against guard.
Theta parse_theta(const std::string& text, Mult guard);

MultList parse_list(const std::string& text);

// "p/q" for an elliptic orbit, "h<n>" for a hyperbolic one of rotation n.
OrbitKind parse_orbit_kind(const std::string& text, Mult guard);

// Exit status: 0 ok, 1 a check failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gluecoeff::cli
