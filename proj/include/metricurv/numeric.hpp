#pragma once

#include <algorithm>
#include <vector>

namespace metricurv {

/// Sum whose result does not depend on the order in which terms were
/// produced, so per-edge values survive vertex relabelling bit-for-bit.
inline double canonical_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

}  // namespace metricurv
