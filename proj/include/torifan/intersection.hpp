#pragma once

#include "torifan/divisor.hpp"

namespace torifan {

/// Invariant curve dual to a wall: the wall's ray set plus the apex ray each
/// incident maximal cone adds on its side.
struct WallCurve {
  std::vector<int> wall_rays;
  int left = -1;
  int right = -1;  // incident maximal cone indices, left < right
  int extra_left = -1;
  int extra_right = -1;

  friend bool operator==(const WallCurve&, const WallCurve&) = default;
};

std::string str(const WallCurve& w);

/// All wall curves, in walls() order.  Throws non_complete_fan.
std::vector<WallCurve> wall_curves(const Fan& f);

/// Intersection number of d with the wall's curve: the jump of the Cartier
/// data across the wall, paired with the right apex ray.  Smooth cones only.
/// Throws not_cartier, not_smooth, non_complete_fan (via precondition),
/// invalid_argument (wall does not belong to the fan), dimension_mismatch.
Rat wall_number(const InvariantDivisor& d, const WallCurve& w);

struct WallWitness {
  WallCurve wall;
  std::size_t index = 0;  // position in wall_curves order
  Rat value;
};

struct NefVerdict {
  bool value = false;
  WallWitness min;  // first wall attaining the minimal number

  explicit operator bool() const { return value; }
};

/// All wall numbers nonnegative.  Errors as wall_number.
NefVerdict is_nef(const InvariantDivisor& d);

struct AmpleVerdict {
  bool value = false;
  WallWitness min;

  explicit operator bool() const { return value; }
};

/// All wall numbers strictly positive.  Errors as wall_number.
AmpleVerdict is_ample(const InvariantDivisor& d);

}  // namespace torifan
