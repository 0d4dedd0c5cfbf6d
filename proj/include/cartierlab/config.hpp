#pragma once

// Reader for the extension description files: a small TOML subset with
// [sections], key = value lines, double-quoted strings, integers,
// booleans and (possibly nested, possibly multi-line) arrays.

#include <string>
#include <string_view>

#include "json.hpp"

namespace cartierlab {

/// Returns {section: {key: value}}; keys before any section go under "".
/// Throws InputError with a line number.
nlohmann::json parse_config(std::string_view text);

}  // namespace cartierlab
