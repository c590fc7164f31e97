#pragma once

#include <string>

#include "torifan/fan.hpp"

namespace torifan {

/// Standard basis rays plus their negative sum; one maximal cone per
/// omitted ray.
Fan projective_space_fan(int n);

/// Projectivization of a split sum of line bundles over projective space:
/// base dimension s, fiber twists (a_0 = 0, a_1, ..., a_k).
struct BundleSpec {
  int base_dim = 0;
  std::vector<Int> twists;
};

struct SplitBundleFan {
  Fan fan;
  std::vector<int> base_rays;   // lifts of e_1..e_s, then the negative ray
  std::vector<int> fiber_rays;  // f_1..f_k, then f_0 = -sum
  Cone section_cone;            // spanned by f_1..f_k
  FanMap to_base;               // coordinate projection onto projective_space_fan(s)
};

/// Throws invalid_argument on a malformed spec (s < 1, fewer than two
/// twists, a_0 != 0).
SplitBundleFan split_bundle_fan(const BundleSpec& spec);

/// Star subdivision at the primitive sum of the cone's rays.  The center
/// must span a face of some maximal cone and the fan must be smooth.
/// Throws not_a_cone, not_smooth, plus star_subdivision's errors.
Fan blow_up_invariant(const Fan& f, const std::vector<int>& cone_rays);

/// Fiber-product lift: each base ray u gains a last coordinate h_u, and the
/// two vertical rays close the fiber direction.  One cone per (base cone,
/// vertical ray) pair.
Fan p1_bundle_fan(const Fan& base, const std::vector<Int>& heights);

/// Ruled surface over the projective line with twist a.
Fan hirzebruch_fan(const Int& a);

/// Six-ray, eight-cone threefold ruled over hirzebruch_fan(3).
Fan sato_fan();

/// sato_fan refined at (0,1,1) and then (0,2,1): twelve maximal cones.
Fan sato_blowup_fan();

struct CatalogEntry {
  std::string name;
  Fan fan;
};

/// The stock smooth complete fans used by the self-test and property suites.
std::vector<CatalogEntry> catalog();

}  // namespace torifan
