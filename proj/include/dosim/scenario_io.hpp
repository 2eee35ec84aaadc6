#pragma once

#include <iosfwd>
#include <string>

#include "dosim/model.hpp"

namespace dosim {

// Named unit-energy constellations: "bpsk", "qpsk", "8psk", "16qam", "64qam".
ChannelInput named_constellation(const std::string& name);

struct LoadedScenario {
    Scenario scenario;
    bool with_separation = false;
    bool rate_was_optimal = false;  // "optimal" resolved at load time
};

// Parses a JSON scenario document. Unknown keys anywhere are rejected.
LoadedScenario parse_scenario(std::istream& in);
LoadedScenario load_scenario_file(const std::string& path);

// Compact single-line JSON echo of the resolved scenario, embedded in
// every output artifact.
std::string scenario_echo_json(const LoadedScenario& loaded);

}  // namespace dosim
