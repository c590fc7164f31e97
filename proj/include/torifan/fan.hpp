#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torifan/lattice.hpp"

namespace torifan {

/// Cone of a fan, stored as sorted indices into the fan's ray list.
/// Only full-dimensional simplicial maximal cones are supported, so a cone
/// of an n-dimensional fan carries exactly n indices.
struct Cone {
  std::vector<int> rays;

  friend bool operator==(const Cone&, const Cone&) = default;
};

std::string str(const Cone& c);

/// Rational simplicial fan given by its maximal cones.
struct Fan {
  int dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<Cone> max_cones;

  friend bool operator==(const Fan&, const Fan&) = default;
};

struct Diagnostic {
  enum class Kind {
    bad_dimension,
    empty_fan,
    ray_dimension,
    zero_ray,
    non_primitive_ray,
    duplicate_ray,
    cone_index,
    cone_size,
    degenerate_cone,
    unused_ray,
    duplicate_cone,
    cone_overlap,
  };
  Kind kind;
  std::string message;
};

/// Full structural and geometric audit.  One diagnostic per violation.
/// Geometric checks (degeneracy, pairwise face condition) run only once the
/// structural layer they depend on is clean.
std::vector<Diagnostic> validate(const Fan& f);

/// Throws invalid_fan carrying the first diagnostic.
void require_valid(const Fan& f);

struct SmoothVerdict {
  bool value = false;
  int witness_cone = -1;  // first non-unimodular maximal cone on failure

  explicit operator bool() const { return value; }
};

/// Every maximal cone unimodular.  Throws invalid_fan.
SmoothVerdict is_smooth(const Fan& f);

/// Support covers N_Q: every ridge lies in exactly two maximal cones and the
/// wall graph is connected.  Valid for the supported dimension range.
/// Throws invalid_fan.
bool is_complete(const Fan& f);

/// Ridge shared by exactly two maximal cones; left < right by cone index.
struct Wall {
  std::vector<int> rays;
  int left = -1;
  int right = -1;

  friend bool operator==(const Wall&, const Wall&) = default;
};

/// All walls, sorted by ray-index set.  Throws non_complete_fan if some
/// candidate wall has a number of incident maximal cones other than two.
std::vector<Wall> walls(const Fan& f);

/// Refine along the ray through v: cones containing v are replaced by their
/// joins of v with the facets not containing it.  Ray order is preserved, v
/// appended last.  Throws ray_outside_support, duplicate_ray, zero_vector,
/// invalid_argument (non-primitive v), dimension_mismatch.
Fan star_subdivision(const Fan& f, const LatticeVector& v);

/// Lattice map N_source -> N_target together with the two fans.
struct FanMap {
  IntegerMatrix matrix;
  Fan source;
  Fan target;
};

struct MapVerdict {
  bool value = false;
  int witness_cone = -1;  // first source cone mapping into no target cone

  explicit operator bool() const { return value; }
};

/// True when every source cone maps into some target cone.
/// Throws dimension_mismatch.
MapVerdict check_fan_map(const FanMap& m);

/// Rows are the generators of the cone's rays.
IntegerMatrix ray_matrix(const Fan& f, const Cone& c);

/// Coefficients of v in the cone's ray basis.
std::vector<Rat> cone_coordinates(const Fan& f, const Cone& c, const LatticeVector& v);

bool cone_contains(const Fan& f, const Cone& c, const LatticeVector& v);

}  // namespace torifan
