#pragma once

#include <cstdint>

#include "qcartan/verify/report.hpp"

namespace qcartan::verify {

struct PropertyBounds {
  int n = 8;         // partition sizes; some properties go a few steps beyond
  int qmax = 40;     // quantum integer ranges
  int samples = 200; // randomized cases per sampled property
};

/// Runs every module property with the given seed. lhs lists "name:pass|fail", rhs lists
/// "name:pass", so equal holds exactly when all properties pass. n = 0 makes every range empty.
CheckReport run_property_suite(std::uint64_t seed, const PropertyBounds& bounds = {});

}  // namespace qcartan::verify
