#include "fewdist/numset.hpp"

#include <algorithm>
#include <cassert>

namespace fewdist {

NumSet NumSet::from_scalars(std::vector<Scalar> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return from_sorted_scalars(std::move(values));
}

NumSet NumSet::from_sorted_scalars(std::vector<Scalar> values) {
  const bool integral = std::all_of(values.begin(), values.end(), [](const Scalar& s) { return s.fits_int64(); });
  NumSet out;
  if (integral) {
    std::vector<std::int64_t> ints;
    ints.reserve(values.size());
    for (const auto& s : values) ints.push_back(s.to_int64());
    out.data_ = std::move(ints);
  } else {
    out.data_ = std::move(values);
  }
  return out;
}

NumSet NumSet::from_integers(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return from_sorted_integers(std::move(values));
}

NumSet NumSet::from_sorted_integers(std::vector<std::int64_t> values) {
  assert(std::adjacent_find(values.begin(), values.end(), std::greater_equal<>()) == values.end());
  NumSet out;
  out.data_ = std::move(values);
  return out;
}

std::size_t NumSet::size() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, data_);
}

Scalar NumSet::operator[](std::size_t i) const {
  if (is_integral()) return Scalar(integers()[i]);
  return rationals()[i];
}

bool NumSet::contains(const Scalar& value) const {
  if (is_integral()) {
    if (!value.fits_int64()) return false;
    const auto ints = integers();
    return std::binary_search(ints.begin(), ints.end(), value.to_int64());
  }
  const auto rats = rationals();
  return std::binary_search(rats.begin(), rats.end(), value);
}

bool NumSet::contains_zero() const { return contains(Scalar(0)); }

std::optional<IntegerUniverse> NumSet::integer_universe() const {
  if (!is_integral() || empty()) return std::nullopt;
  const auto ints = integers();
  return IntegerUniverse{ints.front(), ints.back()};
}

std::span<const std::int64_t> NumSet::integers() const { return std::get<std::vector<std::int64_t>>(data_); }

std::span<const Scalar> NumSet::rationals() const { return std::get<std::vector<Scalar>>(data_); }

std::vector<Scalar> NumSet::to_scalars() const {
  if (!is_integral()) return std::get<std::vector<Scalar>>(data_);
  std::vector<Scalar> out;
  out.reserve(size());
  for (auto v : integers()) out.emplace_back(v);
  return out;
}

}  // namespace fewdist
