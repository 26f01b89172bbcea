#pragma once

#include <optional>

#include "qcartan/snf.hpp"

namespace qcartan::detail {

/// Smith form over Q[v,v^-1] assembled from local Smith forms at the places dividing det.
/// Returns nullopt when the matrix is not square, is singular, or its determinant has an
/// irreducible factor that is not cyclotomic; callers then use plain Euclidean elimination.
std::optional<InvariantFactors> snf_by_localization(const LMatrix& m);

/// Valuations of the invariant factors at Phi_b (ascending); nullopt if singular.
std::optional<std::vector<long>> local_valuations_at_cyclotomic(const LMatrix& m, long b);

}  // namespace qcartan::detail
