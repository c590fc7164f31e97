#pragma once

#include <stdexcept>
#include <string>

namespace torifan {

/// Failure vocabulary for the whole library.  Every throwing operation
/// documents the subset of codes it may raise; nothing else escapes.
enum class errc {
  singular_system,
  zero_vector,
  invalid_argument,
  invalid_fan,
  non_complete_fan,
  ray_outside_support,
  duplicate_ray,
  dimension_mismatch,
  not_cartier,
  not_nef,
  not_smooth,
  not_a_cone,
  unbounded_polytope,
  incompatible_map,
  parse_error,
  usage_error,
};

const char* to_string(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what);
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& what);

}  // namespace torifan
