#pragma once

#include <string>

#include "torifan/divisor.hpp"
#include "torifan/fan.hpp"

namespace torifan {

/// Whole contents of a file.  Throws parse_error when unreadable.
std::string read_text_file(const std::string& path);

/// {"dim": n, "rays": [[..], ..], "max_cones": [[i, j, ..], ..]} with
/// 0-based ray indices.  Structure only; run validate() for fan semantics.
Fan fan_from_json(const std::string& text);
std::string fan_to_json(const Fan& f);

/// {"coeffs": [..]} with entries either integers or exact "p/q" strings,
/// positionally aligned with the fan's rays.
InvariantDivisor divisor_from_json(const std::string& text, const Fan& fan);
std::string divisor_to_json(const InvariantDivisor& d);

}  // namespace torifan
