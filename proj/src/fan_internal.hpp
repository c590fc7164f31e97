#pragma once

#include <map>
#include <vector>

#include "torifan/fan.hpp"

namespace torifan::detail {

/// Ridge -> incident maximal cone indices, keyed by sorted ray-index set.
std::map<std::vector<int>, std::vector<int>> ridge_incidence(const Fan& f);

/// Ridge double-incidence plus wall-graph connectivity, with none of the
/// geometric auditing of validate: the completeness test ops may run per
/// call without leaving their declared error set.
bool complete_cheap(const Fan& f);

}  // namespace torifan::detail
