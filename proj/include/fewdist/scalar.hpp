#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fewdist {

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1.
///
/// Backed by GMP's mpq_class.  Every constructor canonicalizes, so equality,
/// ordering and hashing all agree with the rational value.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t numerator, std::int64_t denominator);
  explicit Scalar(mpq_class value);

  /// Parses an integer or "p/q".  Whitespace is not accepted.
  static Scalar parse(std::string_view text);
  static std::optional<Scalar> try_parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// True when the value is an integer representable as int64_t.
  bool fits_int64() const;
  /// Requires fits_int64().
  std::int64_t to_int64() const;
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws DomainError on division by zero.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const noexcept;

 private:
  mpq_class value_;
};

/// Integer power with a non-negative exponent.
Scalar pow(const Scalar& base, unsigned exponent);

/// Formats a positive real with `digits` significant digits ("%#.*g").
std::string format_significant(double value, int digits = 6);

}  // namespace fewdist

template <>
struct std::hash<fewdist::Scalar> {
  std::size_t operator()(const fewdist::Scalar& s) const noexcept { return s.hash(); }
};
