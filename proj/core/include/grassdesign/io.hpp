#pragma once

#include <iosfwd>
#include <string>

#include "grassdesign/potential.hpp"

namespace grassdesign {

/// Configuration JSON:
///   {"d": int,
///    "points": [{"rank": int, "matrix": [[..]] | "frame": [[..cols..]],
///                "weight": num}, ...],
///    "meta": {...}}   (meta optional, ignored on load)
/// Writers always emit "matrix" so that a round trip reproduces the
/// stored matrices bit for bit; loaders accept "frame" columns too and
/// orthonormalize them.  Malformed documents raise std::invalid_argument
/// with a position diagnostic.
std::string configuration_to_json(const Configuration& config);
Configuration configuration_from_json(const std::string& text);
Configuration configuration_from_stream(std::istream& in);

void write_configuration(const Configuration& config, const std::string& path);
Configuration read_configuration(const std::string& path);

/// Report JSON: {"t", "ffp", "bound", "bound_exact", "gap", "masses",
/// "verdict", "tol"} with masses keyed by the rank as a string.
std::string report_to_json(const CertificationReport& report);
CertificationReport report_from_json(const std::string& text);

}  // namespace grassdesign
