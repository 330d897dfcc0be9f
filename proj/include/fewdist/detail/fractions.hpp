#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fewdist/numset.hpp"

namespace fewdist::detail {

/// num/den over int64, den != 0.
struct IntFraction {
  std::int64_t num;
  std::int64_t den;
};

/// Set of the given fractions.  nullopt if some component is INT64_MIN
/// (its negation is not representable during reduction).
std::optional<NumSet> fractions_to_set(std::vector<IntFraction> fractions);

}  // namespace fewdist::detail
