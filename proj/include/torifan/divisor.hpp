#pragma once

#include <optional>
#include <vector>

#include "torifan/fan.hpp"

namespace torifan {

/// Torus-invariant Q-divisor: one coefficient per ray, in ray order.
struct InvariantDivisor {
  Fan fan;
  std::vector<Rat> coeffs;
};

/// Sum of all invariant prime divisors (coefficients all one).
InvariantDivisor anticanonical(const Fan& f);

/// Divisor of the character for m: coefficient <m, u_rho> on each ray.
InvariantDivisor character_divisor(const Fan& f, const RationalCovector& m);

InvariantDivisor scale(const Int& k, const InvariantDivisor& d);
InvariantDivisor add(const InvariantDivisor& a, const InvariantDivisor& b);

/// Per maximal cone, the covector m_sigma with <m_sigma, u_rho> = -a_rho on
/// the cone's rays; the divisor is Cartier exactly when all are integral.
struct CartierData {
  std::vector<RationalCovector> per_cone;
  bool integral = false;
};

/// Throws dimension_mismatch (coefficient count), singular_system.
CartierData cartier_data(const InvariantDivisor& d);

/// { m : <m, normal_i> >= rhs_i for all i }.
struct HPolytope {
  int dim = 0;
  std::vector<LatticeVector> normals;
  std::vector<Rat> rhs;
};

/// Section polytope { m : <m, u_rho> >= -a_rho }.
HPolytope polytope(const InvariantDivisor& d);

/// Throws dimension_mismatch.
bool contains(const HPolytope& p, const RationalCovector& m);

/// All vertices, deterministic order, no repeats.
std::vector<RationalCovector> vertices(const HPolytope& p);

/// Dimension of the affine hull; nullopt encodes the empty polytope.
std::optional<int> affine_dim(const HPolytope& p);

bool is_bounded(const HPolytope& p);

/// Exact number of lattice points.  Throws unbounded_polytope.
Int count_lattice_points(const HPolytope& p);

struct BpfVerdict {
  bool value = false;
  int witness_cone = -1;  // first cone whose covector leaves the polytope
  int witness_ray = -1;   // first violated inequality, by ray index

  explicit operator bool() const { return value; }
};

/// Global sections generate: every Cartier covector lies in the section
/// polytope.  On a complete fan this is equivalent to nefness.
/// Throws not_cartier, non_complete_fan, invalid_fan.
BpfVerdict is_basepoint_free(const InvariantDivisor& d);

/// Dimension of the section polytope of a nef divisor.
/// Throws not_nef (plus everything is_basepoint_free throws).
int kodaira_dimension(const InvariantDivisor& d);

/// Pullback along a fan map: covectors transport by the transpose, and the
/// coefficient on a source ray is read off from any cone containing it.
/// Throws incompatible_map (map fails check_fan_map or transported data
/// disagree), not_cartier, dimension_mismatch.
InvariantDivisor pullback(const FanMap& m, const InvariantDivisor& d);

}  // namespace torifan
