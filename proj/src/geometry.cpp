#include "fewdist/geometry.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "fewdist/detail/fractions.hpp"
#include "fewdist/errors.hpp"

namespace fewdist {
namespace {

using i64 = std::int64_t;
using i128 = __int128;

bool fits(i128 v) { return v >= std::numeric_limits<i64>::min() && v <= std::numeric_limits<i64>::max(); }

struct IntPoint {
  i64 x;
  i64 y;
  friend auto operator<=>(const IntPoint&, const IntPoint&) = default;
};

// Integer copy of P when every coordinate is an int64 bounded by `bound` in magnitude.
std::optional<std::vector<IntPoint>> integer_points(const PointSet& p, i64 bound) {
  std::vector<IntPoint> out;
  out.reserve(p.size());
  for (const auto& pt : p) {
    if (!pt.x.fits_int64() || !pt.y.fits_int64()) return std::nullopt;
    const i64 x = pt.x.to_int64();
    const i64 y = pt.y.to_int64();
    if (x > bound || x < -bound || y > bound || y < -bound) return std::nullopt;
    out.push_back({x, y});
  }
  return out;
}

Scalar origin_slope(const Point& p) { return p.y / p.x; }

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet PointSet::product(const NumSet& a, const NumSet& b) {
  std::vector<Point> pts;
  pts.reserve(a.size() * b.size());
  const auto as = a.to_scalars();
  const auto bs = b.to_scalars();
  for (const auto& x : as) {
    for (const auto& y : bs) pts.push_back({x, y});
  }
  return PointSet(std::move(pts));
}

bool PointSet::contains(const Point& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

NumSet distance_set(const PointSet& p, const Limits& limits) {
  if (p.empty()) throw DomainError("empty set");
  require_feasible(pair_count(p.size(), p.size()), limits, "distance set");
  // |coordinate| <= 2^30 keeps every squared distance below 2^63.
  if (limits.integer_fast_path) {
    if (auto ip = integer_points(p, i64{1} << 30)) {
      std::vector<i64> out;
      out.reserve(ip->size() * (ip->size() - 1) / 2 + 1);
      out.push_back(0);
      for (std::size_t i = 0; i < ip->size(); ++i) {
        for (std::size_t j = i + 1; j < ip->size(); ++j) {
          const i64 dx = (*ip)[i].x - (*ip)[j].x;
          const i64 dy = (*ip)[i].y - (*ip)[j].y;
          out.push_back(dx * dx + dy * dy);
        }
      }
      return NumSet::from_integers(std::move(out));
    }
  }
  std::vector<Scalar> out;
  out.reserve(p.size() * (p.size() - 1) / 2 + 1);
  out.emplace_back(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const Scalar dx = p[i].x - p[j].x;
      const Scalar dy = p[i].y - p[j].y;
      out.push_back(dx * dx + dy * dy);
    }
  }
  return NumSet::from_scalars(std::move(out));
}

NumSet product_distance_set(const NumSet& a, const Limits& limits) {
  const NumSet d = difference_set(a, a, limits);
  const NumSet d2 = square_set(d);
  return sumset(d2, d2, limits);
}

SlopeSet slope_set(const PointSet& p, const Limits& limits) {
  if (p.size() < 2) throw DomainError("slope set needs at least two points");
  require_feasible(pair_count(p.size(), p.size()), limits, "slope set");
  SlopeSet out;
  if (limits.integer_fast_path) {
    if (auto ip = integer_points(p, i64{1} << 61)) {
      std::vector<detail::IntFraction> fr;
      for (std::size_t i = 0; i < ip->size(); ++i) {
        for (std::size_t j = i + 1; j < ip->size(); ++j) {
          const i64 dx = (*ip)[j].x - (*ip)[i].x;
          if (dx == 0) {
            out.has_infinity = true;
          } else {
            fr.push_back({(*ip)[j].y - (*ip)[i].y, dx});
          }
        }
      }
      if (auto set = detail::fractions_to_set(std::move(fr))) {
        out.finite = *std::move(set);
        return out;
      }
      out.has_infinity = false;
    }
  }
  std::vector<Scalar> finite;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const Scalar dx = p[j].x - p[i].x;
      if (dx.is_zero()) {
        out.has_infinity = true;
      } else {
        finite.push_back((p[j].y - p[i].y) / dx);
      }
    }
  }
  out.finite = NumSet::from_scalars(std::move(finite));
  return out;
}

bool is_collinear(const PointSet& p) {
  if (p.size() <= 2) return true;
  const Point& o = p[0];
  const Scalar ux = p[1].x - o.x;
  const Scalar uy = p[1].y - o.y;
  for (std::size_t i = 2; i < p.size(); ++i) {
    if (ux * (p[i].y - o.y) != uy * (p[i].x - o.x)) return false;
  }
  return true;
}

std::vector<RepBucket> rep_histogram(const NumSet& a, const Limits& limits) {
  if (a.empty()) throw DomainError("empty set");
  require_feasible(pair_count(a.size(), a.size()), limits, "difference histogram");
  std::vector<RepBucket> out;
  if (a.is_integral()) {
    const auto ints = a.integers();
    const i128 span = static_cast<i128>(ints.back()) - ints.front();
    if (fits(span)) {
      std::vector<i64> diffs;
      diffs.reserve(ints.size() * (ints.size() - 1));
      for (auto x : ints) {
        for (auto y : ints) {
          if (x != y) diffs.push_back(x - y);
        }
      }
      std::sort(diffs.begin(), diffs.end());
      for (std::size_t i = 0; i < diffs.size();) {
        std::size_t j = i;
        while (j < diffs.size() && diffs[j] == diffs[i]) ++j;
        out.push_back({Scalar(diffs[i]), j - i});
        i = j;
      }
      return out;
    }
  }
  std::map<Scalar, std::uint64_t> counts;
  const auto xs = a.to_scalars();
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      if (x != y) ++counts[x - y];
    }
  }
  for (auto& [d, c] : counts) out.push_back({d, c});
  return out;
}

Scalar rich_line_bound(const NumSet& a, const Limits& limits) {
  if (a.size() < 2) throw DomainError("rich line needs |A| >= 2");
  const auto n = static_cast<std::int64_t>(a.size());
  const auto diff = static_cast<std::int64_t>(difference_set(a, a, limits).size());
  return Scalar(n * n - n, diff - 1);
}

RichLine rich_line(const NumSet& a, const Limits& limits) {
  if (a.size() < 2) throw DomainError("rich line needs |A| >= 2");
  const auto hist = rep_histogram(a, limits);
  // Larger count wins; ties go to smaller |numerator|, then smaller denominator, then positive sign.
  auto preferred = [](const RepBucket& a, const RepBucket& b) {
    if (a.count != b.count) return a.count > b.count;
    const int by_num = cmp(abs(a.d.numerator()), abs(b.d.numerator()));
    if (by_num != 0) return by_num < 0;
    const int by_den = cmp(a.d.denominator(), b.d.denominator());
    if (by_den != 0) return by_den < 0;
    return a.d.sign() > b.d.sign();
  };
  const RepBucket* best = &hist.front();
  for (const auto& b : hist) {
    if (preferred(b, *best)) best = &b;
  }
  std::vector<Point> witnesses;
  for (const auto& x : a.to_scalars()) {
    Scalar y = x - best->d;
    if (a.contains(y)) witnesses.push_back({x, std::move(y)});
  }
  return RichLine{best->d, PointSet(std::move(witnesses))};
}

PointSet pointset_sumset(const PointSet& p, const PointSet& q, const Limits& limits) {
  if (p.empty() || q.empty()) throw DomainError("empty set");
  require_feasible(pair_count(p.size(), q.size()), limits, "point sumset");
  if (limits.integer_fast_path) {
    auto ip = integer_points(p, i64{1} << 61);
    auto iq = ip ? integer_points(q, i64{1} << 61) : std::nullopt;
    if (ip && iq) {
      std::vector<IntPoint> sums;
      sums.reserve(ip->size() * iq->size());
      for (const auto& a : *ip) {
        for (const auto& b : *iq) sums.push_back({a.x + b.x, a.y + b.y});
      }
      std::sort(sums.begin(), sums.end());
      sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
      std::vector<Point> pts;
      pts.reserve(sums.size());
      for (const auto& s : sums) pts.push_back({Scalar(s.x), Scalar(s.y)});
      return PointSet(std::move(pts));
    }
  }
  std::vector<Point> pts;
  pts.reserve(p.size() * q.size());
  for (const auto& a : p) {
    for (const auto& b : q) pts.push_back({a.x + b.x, a.y + b.y});
  }
  return PointSet(std::move(pts));
}

std::optional<Quadrant> quadrant_of(const Point& p) {
  const int sx = p.x.sign();
  const int sy = p.y.sign();
  if (sx == 0 || sy == 0) return std::nullopt;
  if (sx > 0) return sy > 0 ? Quadrant::I : Quadrant::IV;
  return sy > 0 ? Quadrant::II : Quadrant::III;
}

SolymosiConstruction solymosi_construct(const NumSet& s, const Limits& limits) {
  if (s.empty()) throw DomainError("empty set");
  if (s.contains_zero()) throw DomainError("zero divisor element");
  require_feasible(pair_count(pair_count(s.size(), s.size()), s.size()), limits, "solymosi construction");

  const auto elems = s.to_scalars();
  std::vector<Point> pts;
  pts.reserve(elems.size() * elems.size() * elems.size());
  for (const auto& s1 : elems) {
    for (const auto& s2 : elems) {
      for (const auto& t : elems) pts.push_back({s1 * t, s2 * t});
    }
  }
  SolymosiConstruction out{PointSet(std::move(pts)), {}};

  std::vector<std::pair<Scalar, Quadrant>> tagged;
  tagged.reserve(out.points.size());
  for (const auto& p : out.points) tagged.emplace_back(origin_slope(p), *quadrant_of(p));
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < tagged.size();) {
    OriginLine line{tagged[i].first, 0, {}};
    std::size_t j = i;
    for (; j < tagged.size() && tagged[j].first == tagged[i].first; ++j) {
      ++line.count;
      ++line.per_quadrant[static_cast<std::size_t>(tagged[j].second)];
    }
    out.lines.push_back(std::move(line));
    i = j;
  }
  return out;
}

}  // namespace fewdist
