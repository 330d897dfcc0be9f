#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "fewdist/scalar.hpp"

namespace fewdist {

/// Inclusive integer bounds of a NumSet whose elements are all integers.
struct IntegerUniverse {
  std::int64_t lo;
  std::int64_t hi;
  friend bool operator==(const IntegerUniverse&, const IntegerUniverse&) = default;
};

/// Finite set of Scalars, strictly increasing, no duplicates.
///
/// A set whose elements are all integers representable in int64_t is stored
/// as a flat integer vector and carries an IntegerUniverse; that storage is
/// canonical, so two equal sets always share the same representation.
class NumSet {
 public:
  NumSet() = default;

  /// Sorts and deduplicates.
  static NumSet from_scalars(std::vector<Scalar> values);
  static NumSet from_integers(std::vector<std::int64_t> values);
  /// Caller guarantees strictly increasing order.
  static NumSet from_sorted_integers(std::vector<std::int64_t> values);
  static NumSet from_sorted_scalars(std::vector<Scalar> values);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  Scalar operator[](std::size_t i) const;
  Scalar min() const { return (*this)[0]; }
  Scalar max() const { return (*this)[size() - 1]; }
  bool contains(const Scalar& value) const;

  /// Present iff every element is an int64 integer (and the set is nonempty).
  std::optional<IntegerUniverse> integer_universe() const;
  bool is_integral() const noexcept { return std::holds_alternative<std::vector<std::int64_t>>(data_); }
  bool contains_zero() const;

  /// Valid only when is_integral().
  std::span<const std::int64_t> integers() const;
  /// Valid only when !is_integral().
  std::span<const Scalar> rationals() const;

  std::vector<Scalar> to_scalars() const;

  friend bool operator==(const NumSet& a, const NumSet& b) { return a.data_ == b.data_; }

 private:
  std::variant<std::vector<std::int64_t>, std::vector<Scalar>> data_;
};

}  // namespace fewdist
