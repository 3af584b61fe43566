#pragma once

#include <string>

#include "ssc/construct.hpp"

namespace ssc {

/// Code file: JSON with a fixed key order so identical codes serialize to
/// identical bytes. Orbit records hold the canonical representative, the
/// stabilizer degree t and the orbit size.
std::string code_to_json(const CyclicCode& c);
CyclicCode code_from_json(const std::string& text);

void save_code(const CyclicCode& c, const std::string& path);
CyclicCode load_code(const std::string& path);

} // namespace ssc
