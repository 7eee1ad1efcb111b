#pragma once

#include "hypertrees/json_io.hpp"
#include "hypertrees/oracle.hpp"

namespace hypertrees {

struct SelftestOutcome {
  bool passed = false;
  int checks = 0;
  /// On success the census reports; on failure the first failing case.
  Json report;
};

/// Certifies every counting formula and both codecs against exhaustive
/// enumeration: hypertrees up to bounds.max_n, codes up to min(max_n, 4),
/// bipartite trees up to bounds.max_ab.
SelftestOutcome run_selftest(const OracleBounds& bounds);

}  // namespace hypertrees
