#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "walg/reduction.hpp"

namespace walg {

/// dims[(i, p)] = dim H^i(n_ell, gr Q)_p, the Chevalley-Eilenberg cohomology
/// with coefficients in C[chi + a^perp] in total Kazhdan degree p. The dual
/// basis vector of x in n_ell carries degree 2 - deg x, so the differential
/// preserves total degree and each C^i_p is finite dimensional.
struct CohomologyReport {
  int i_max = 0;
  int n_max = 0;
  std::map<std::pair<int, int>, std::size_t> dims;
  std::map<std::pair<int, int>, std::size_t> cochain_dims;

  std::size_t dim(int i, int p) const { return dims.at({i, p}); }
};

/// Also verifies d o d = 0 on every computed piece (InternalError).
CohomologyReport ce_cohomology(const ReductionCase& c, int i_max, int n_max);

}  // namespace walg
