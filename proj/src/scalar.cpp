#include "fewdist/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <limits>

#include "fewdist/errors.hpp"

namespace fewdist {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::size_t hash_mpz(mpz_srcptr z) noexcept {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

Scalar::Scalar(std::int64_t value) : value_() {
  // mpq_class has no int64_t constructor on every platform; go through long.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  value_ = static_cast<long>(value);
}

Scalar::Scalar(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  value_.get_num() = static_cast<long>(numerator);
  value_.get_den() = static_cast<long>(denominator);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

std::optional<Scalar> Scalar::try_parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) return std::nullopt;
  std::string num_str(num.front() == '+' ? num.substr(1) : num);

  mpq_class q;
  q.get_num().set_str(num_str, 10);
  if (slash == std::string_view::npos) {
    q.get_den() = 1;
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) return std::nullopt;
    q.get_den().set_str(std::string(den), 10);
    if (q.get_den() == 0) return std::nullopt;
  }
  return Scalar(std::move(q));
}

Scalar Scalar::parse(std::string_view text) {
  auto parsed = try_parse(text);
  if (!parsed) throw DomainError("malformed scalar '" + std::string(text) + "'");
  return *std::move(parsed);
}

bool Scalar::fits_int64() const { return is_integer() && value_.get_num().fits_slong_p(); }

std::int64_t Scalar::to_int64() const { return value_.get_num().get_si(); }

std::string Scalar::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.value_ = -value_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  value_ += rhs.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::size_t Scalar::hash() const noexcept {
  const std::size_t h = hash_mpz(value_.get_num_mpz_t());
  return h ^ (hash_mpz(value_.get_den_mpz_t()) * 31 + 0x7f4a7c15ULL + (h << 6) + (h >> 2));
}

Scalar pow(const Scalar& base, unsigned exponent) {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Scalar(std::move(r));
}

std::string format_significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.*g", digits, value);
  return buf;
}

}  // namespace fewdist
