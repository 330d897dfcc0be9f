#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "fewdist/geometry.hpp"
#include "fewdist/numset.hpp"

namespace testing_support {

inline fewdist::NumSet ints(std::initializer_list<std::int64_t> v) {
  return fewdist::NumSet::from_integers(std::vector<std::int64_t>(v));
}

inline fewdist::NumSet rats(std::initializer_list<std::string_view> v) {
  std::vector<fewdist::Scalar> out;
  for (auto s : v) out.push_back(fewdist::Scalar::parse(s));
  return fewdist::NumSet::from_scalars(std::move(out));
}

inline fewdist::NumSet range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  for (auto i = lo; i <= hi; ++i) v.push_back(i);
  return fewdist::NumSet::from_sorted_integers(std::move(v));
}

inline fewdist::PointSet pts(std::initializer_list<std::pair<std::int64_t, std::int64_t>> v) {
  std::vector<fewdist::Point> out;
  for (auto [x, y] : v) out.push_back({x, y});
  return fewdist::PointSet(std::move(out));
}

inline fewdist::Limits slow_path() {
  fewdist::Limits l;
  l.integer_fast_path = false;
  return l;
}

}  // namespace testing_support
