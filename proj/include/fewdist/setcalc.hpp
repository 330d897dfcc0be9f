#pragma once

#include <cstdint>
#include <string>

#include "fewdist/numset.hpp"
#include "fewdist/scalar.hpp"

namespace fewdist {

/// Thresholds shared by every enumerating operation.
struct Limits {
  /// Pairwise enumerations with more pairs than this are refused before allocation.
  std::uint64_t max_pairs = 500'000'000;
  /// Largest dense presence bitmap the integer path may allocate.
  std::uint64_t max_bitmap_bits = std::uint64_t{1} << 31;
  /// When false every operation takes the generic rational route.  Results are identical.
  bool integer_fast_path = true;
};

/// |X|*|Y| saturating at UINT64_MAX.
std::uint64_t pair_count(std::uint64_t x, std::uint64_t y) noexcept;

/// Throws FeasibilityError naming `what` when `pairs` exceeds limits.max_pairs.
void require_feasible(std::uint64_t pairs, const Limits& limits, const std::string& what);

/// {x + y}.  Empty input is a DomainError.
NumSet sumset(const NumSet& x, const NumSet& y, const Limits& limits = {});
/// {x - y}.
NumSet difference_set(const NumSet& x, const NumSet& y, const Limits& limits = {});
/// {x * y}.
NumSet product_set(const NumSet& x, const NumSet& y, const Limits& limits = {});
/// {x / y}; 0 in Y is a DomainError ("zero divisor element").
NumSet ratio_set(const NumSet& x, const NumSet& y, const Limits& limits = {});
/// {x^2}.
NumSet square_set(const NumSet& x);
/// {c * x}.  c = 0 collapses a nonempty set to {0}.
NumSet dilate(const NumSet& x, const Scalar& c);
/// {-x}.
NumSet negate(const NumSet& x);

/// m-fold sumset of S minus n-fold sumset of S, folded left:
/// ((S + S) + ... ) - S - ... - S.  Each step is guarded before it allocates.
NumSet iterated_combination(unsigned m, unsigned n, const NumSet& s, const Limits& limits = {});

/// |{(a, b) in A x A : a - b = d}|.
std::uint64_t rep_count(const NumSet& a, const Scalar& d);

}  // namespace fewdist
