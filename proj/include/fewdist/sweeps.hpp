#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fewdist/setcalc.hpp"
#include "fewdist/verify.hpp"

namespace fewdist {

/// Calls f(indices) for every subset of {0, ..., n-1} with min_size..max_size
/// elements; size-major, lexicographic within a size.
void for_each_subset(std::size_t n, std::size_t min_size, std::size_t max_size,
                     const std::function<void(const std::vector<std::size_t>&)>& f);

/// Every subset of {lo, ..., hi} with min_size..max_size elements.
std::vector<NumSet> integer_subsets(std::int64_t lo, std::int64_t hi, std::size_t min_size, std::size_t max_size);

/// The canned small-instance sweeps behind `verify <id> --exhaustive-small`.
///   differencing:   A in {0..10}, 1 <= |A| <= 5
///   plunnecke:      S in {0..9}, 2 <= |S| <= 5, (m, n) in {(1,1), (2,1), (2,2)}
///   solymosi:       constructions over the 3-subsets of {1..8}
///   product-sumset: S in {1..6}, 1 <= |S| <= 3
///   ungar:          subsets of the 4 x 4 grid {0..3}^2 with 2..6 points
///   main-theorem:   A in {0..6}, |A| >= 2
///   rudin:          A in {0..6}, |A| >= 2
/// Per-instance errors are embedded in the records.
std::vector<AuditRecord> exhaustive_small(StatementId id, AuditDepth depth, const Limits& limits = {});

}  // namespace fewdist
