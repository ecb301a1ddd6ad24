#pragma once

#include "cuspcollide/geometry.hpp"

#include <map>
#include <string>

namespace cuspcollide {

// Flat key=value files: one pair per line, '#' starts a comment,
// whitespace around keys and values is trimmed.
std::map<std::string, std::string> read_key_value_file(const std::string& path);

// Profile parameters from keys alpha, h, r0, d0; absent keys keep the
// defaults of the base profile.
SolidProfile profile_from_file(const std::string& path, SolidProfile base = {});

} // namespace cuspcollide
