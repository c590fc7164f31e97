#include "torifan/error.hpp"

namespace torifan {

const char* to_string(errc code) {
  switch (code) {
    case errc::singular_system: return "singular system";
    case errc::zero_vector: return "zero vector";
    case errc::invalid_argument: return "invalid argument";
    case errc::invalid_fan: return "invalid fan";
    case errc::non_complete_fan: return "non-complete fan";
    case errc::ray_outside_support: return "ray outside support";
    case errc::duplicate_ray: return "duplicate ray";
    case errc::dimension_mismatch: return "dimension mismatch";
    case errc::not_cartier: return "not Cartier";
    case errc::not_nef: return "not nef";
    case errc::not_smooth: return "not smooth";
    case errc::not_a_cone: return "not a cone";
    case errc::unbounded_polytope: return "unbounded polytope";
    case errc::incompatible_map: return "incompatible map";
    case errc::parse_error: return "parse error";
    case errc::usage_error: return "usage error";
  }
  return "unknown";
}

Error::Error(errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace torifan
