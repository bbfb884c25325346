#pragma once

// Canonical JSON for lattices, place systems, curve specs and reports.
// Integers beyond 2^53 in magnitude are written as decimal strings.

#include <string>

#include <json.hpp>

#include "fflat/autgroup.hpp"
#include "fflat/builders.hpp"
#include "fflat/curves.hpp"
#include "fflat/lattice.hpp"

namespace fflat {

using Json = nlohmann::json;

Json int_to_json(const Int& x);
/// Accepts JSON integers and decimal strings.
Int int_from_json(const Json& j);

Json lattice_to_json(const IntegerLattice& lattice);
IntegerLattice lattice_from_json(const Json& j);

Json places_to_json(const PlaceSystem& system);

/// {"p": 11, "f": [9,0,2,4,9,3,5,1]}
HyperellipticModel curve_from_json(const Json& j);
Json curve_to_json(const HyperellipticModel& model);

Json isometry_report_to_json(const IsometryReport& report);

/// Two-space indented, keys sorted, trailing newline.
std::string dump_canonical(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace fflat
