#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fewdist/numset.hpp"
#include "fewdist/scalar.hpp"
#include "fewdist/setcalc.hpp"

namespace fewdist {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Deduplicated, lexicographically ordered planar points.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  /// A x B.
  static PointSet product(const NumSet& a, const NumSet& b);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }
  bool contains(const Point& p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

/// Direction of a point pair.  An empty value is the vertical direction.
struct Slope {
  std::optional<Scalar> value;

  static Slope infinity() { return Slope{}; }
  bool is_infinite() const { return !value.has_value(); }
  std::string to_string() const { return value ? value->to_string() : "inf"; }

  friend bool operator==(const Slope&, const Slope&) = default;
};

/// Distinct slopes: finite ones as a NumSet, plus the vertical flag.
struct SlopeSet {
  NumSet finite;
  bool has_infinity = false;

  std::size_t size() const { return finite.size() + (has_infinity ? 1 : 0); }
  bool contains(const Slope& s) const { return s.is_infinite() ? has_infinity : finite.contains(*s.value); }
  friend bool operator==(const SlopeSet&, const SlopeSet&) = default;
};

/// A line a - b = d of A x A together with its points.
struct RichLine {
  Scalar d;
  PointSet points;
};

/// Nonzero difference and its representation count.
struct RepBucket {
  Scalar d;
  std::uint64_t count;
};

enum class Quadrant { I = 0, II = 1, III = 2, IV = 3 };

/// The origin line of slope `slope` in a Solymosi construction.
struct OriginLine {
  Scalar slope;
  std::uint64_t count = 0;
  std::array<std::uint64_t, 4> per_quadrant{};  // indexed by Quadrant
};

struct SolymosiConstruction {
  PointSet points;
  std::vector<OriginLine> lines;  // ascending slope
};

/// {(p1 - q1)^2 + (p2 - q2)^2 : p, q in P}.
NumSet distance_set(const PointSet& p, const Limits& limits = {});

/// (A - A)^2 + (A - A)^2, the distance set of A x A computed in one dimension.
NumSet product_distance_set(const NumSet& a, const Limits& limits = {});

/// Slopes of all pairs of distinct points.  Needs |P| >= 2.
SlopeSet slope_set(const PointSet& p, const Limits& limits = {});

bool is_collinear(const PointSet& p);

/// Counts rep_count(A, d) for every nonzero d in A - A, ascending in d.
std::vector<RepBucket> rep_histogram(const NumSet& a, const Limits& limits = {});

/// (|A|^2 - |A|) / (|A - A| - 1): the average nonzero-difference line load.
Scalar rich_line_bound(const NumSet& a, const Limits& limits = {});

/// The nonzero d maximizing rep_count(A, d) with its points (a, a - d).
/// Ties go to the smallest (|numerator|, denominator), positive first.
RichLine rich_line(const NumSet& a, const Limits& limits = {});

/// {p + q}.
PointSet pointset_sumset(const PointSet& p, const PointSet& q, const Limits& limits = {});

/// {(s1 s, s2 s) : s1, s2, s in S} with one record per origin line.  0 in S is a DomainError.
SolymosiConstruction solymosi_construct(const NumSet& s, const Limits& limits = {});

/// Open quadrant of a point off both axes.
std::optional<Quadrant> quadrant_of(const Point& p);

}  // namespace fewdist
