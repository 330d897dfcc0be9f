#include "fewdist/setcalc.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fewdist/detail/fractions.hpp"
#include "fewdist/errors.hpp"

namespace fewdist {
namespace {

using i64 = std::int64_t;
using i128 = __int128;

constexpr i128 kI64Min = std::numeric_limits<i64>::min();
constexpr i128 kI64Max = std::numeric_limits<i64>::max();

bool fits(i128 v) { return v >= kI64Min && v <= kI64Max; }

void require_nonempty(const NumSet& s) {
  if (s.empty()) throw DomainError("empty set");
}

// Collects values in bounded chunks, deduplicating as it goes so that memory
// tracks the output size rather than the pair count.
class SortedAccumulator {
 public:
  explicit SortedAccumulator(std::size_t expected) { buffer_.reserve(std::min(expected, kChunk)); }

  void push(i64 v) {
    buffer_.push_back(v);
    if (buffer_.size() >= kChunk) flush();
  }

  std::vector<i64> finish() {
    flush();
    return std::move(result_);
  }

 private:
  static constexpr std::size_t kChunk = std::size_t{1} << 22;

  void flush() {
    if (buffer_.empty()) return;
    std::sort(buffer_.begin(), buffer_.end());
    buffer_.erase(std::unique(buffer_.begin(), buffer_.end()), buffer_.end());
    if (result_.empty()) {
      result_.swap(buffer_);
    } else {
      std::vector<i64> merged;
      merged.reserve(result_.size() + buffer_.size());
      std::set_union(result_.begin(), result_.end(), buffer_.begin(), buffer_.end(), std::back_inserter(merged));
      result_.swap(merged);
    }
    buffer_.clear();
  }

  std::vector<i64> result_;
  std::vector<i64> buffer_;
};

class Bitmap {
 public:
  Bitmap(i64 lo, std::uint64_t bits) : lo_(lo), words_((bits + 63) / 64, 0) {}

  void set(i64 v) {
    const auto off = static_cast<std::uint64_t>(v - lo_);
    words_[off >> 6] |= std::uint64_t{1} << (off & 63);
  }

  // ORs `src` (a bitmap anchored at bit 0) into this one, shifted left by `shift` bits.
  void or_shifted(std::span<const std::uint64_t> src, std::uint64_t shift) {
    const std::size_t q = shift >> 6;
    const unsigned r = shift & 63;
    const std::size_t n = std::min(src.size(), words_.size() - q);
    if (r == 0) {
      for (std::size_t w = 0; w < n; ++w) words_[w + q] |= src[w];
      return;
    }
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < n; ++w) {
      words_[w + q] |= (src[w] << r) | carry;
      carry = src[w] >> (64 - r);
    }
    if (carry != 0 && q + n < words_.size()) words_[q + n] |= carry;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::vector<i64> extract() const {
    std::size_t count = 0;
    for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
    std::vector<i64> out;
    out.reserve(count);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int b = std::countr_zero(w);
        out.push_back(lo_ + static_cast<i64>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  i64 lo_;
  std::vector<std::uint64_t> words_;
};

bool bitmap_pays_off(std::uint64_t range_bits, std::uint64_t pairs, const Limits& limits) {
  return range_bits <= limits.max_bitmap_bits && range_bits / 64 <= 8 * pairs + 4096;
}

// Enumerates op(x_i, y_j) (only i <= j when `triangle`), given that every value
// lies in [lo, hi].  Chooses a dense bitmap or sort-merge by estimated cost.
template <class Op>
std::vector<i64> enumerate_pairs(std::span<const i64> x, std::span<const i64> y, bool triangle, i64 lo, i64 hi,
                                 const Limits& limits, Op op) {
  const auto range_bits = static_cast<std::uint64_t>(static_cast<i128>(hi) - lo + 1);
  const std::uint64_t pairs = triangle ? x.size() * (x.size() + 1) / 2 : pair_count(x.size(), y.size());
  if (bitmap_pays_off(range_bits, pairs, limits)) {
    Bitmap bm(lo, range_bits);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = triangle ? i : 0; j < y.size(); ++j) bm.set(op(x[i], y[j]));
    }
    return bm.extract();
  }
  SortedAccumulator acc(pairs);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = triangle ? i : 0; j < y.size(); ++j) acc.push(op(x[i], y[j]));
  }
  return acc.finish();
}

// Integer sumset.  nullopt when the result would leave int64.
std::optional<std::vector<i64>> int_sumset(std::span<const i64> x, std::span<const i64> y, bool same,
                                           const Limits& limits) {
  const i128 lo = static_cast<i128>(x.front()) + y.front();
  const i128 hi = static_cast<i128>(x.back()) + y.back();
  if (!fits(lo) || !fits(hi)) return std::nullopt;
  const auto range_bits = static_cast<std::uint64_t>(hi - lo + 1);

  // Dense inputs: OR shifted copies of the larger operand's bitmap.
  std::span<const i64> outer = x.size() <= y.size() ? x : y;
  std::span<const i64> inner = x.size() <= y.size() ? y : x;
  const auto inner_bits = static_cast<std::uint64_t>(static_cast<i128>(inner.back()) - inner.front() + 1);
  const std::uint64_t pair_cost = same ? x.size() * (x.size() + 1) / 2 : pair_count(x.size(), y.size());
  const std::uint64_t shift_cost = pair_count(outer.size(), inner_bits / 64 + 2);
  if (range_bits <= limits.max_bitmap_bits && shift_cost < pair_cost) {
    Bitmap inner_bm(inner.front(), inner_bits);
    for (auto v : inner) inner_bm.set(v);
    Bitmap out(static_cast<i64>(lo), range_bits);
    for (auto v : outer) out.or_shifted(inner_bm.words(), static_cast<std::uint64_t>(v - outer.front()));
    return out.extract();
  }
  return enumerate_pairs(x, y, same, static_cast<i64>(lo), static_cast<i64>(hi), limits,
                         [](i64 a, i64 b) { return a + b; });
}

std::optional<std::vector<i64>> int_product_set(std::span<const i64> x, std::span<const i64> y, bool same,
                                                const Limits& limits) {
  const i128 corners[] = {static_cast<i128>(x.front()) * y.front(), static_cast<i128>(x.front()) * y.back(),
                          static_cast<i128>(x.back()) * y.front(), static_cast<i128>(x.back()) * y.back()};
  const i128 lo = *std::min_element(std::begin(corners), std::end(corners));
  const i128 hi = *std::max_element(std::begin(corners), std::end(corners));
  if (!fits(lo) || !fits(hi)) return std::nullopt;
  return enumerate_pairs(x, y, same, static_cast<i64>(lo), static_cast<i64>(hi), limits,
                         [](i64 a, i64 b) { return a * b; });
}

template <class Op>
NumSet rational_pairs(const NumSet& x, const NumSet& y, Op op) {
  const auto xs = x.to_scalars();
  const auto ys = y.to_scalars();
  std::vector<Scalar> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& a : xs) {
    for (const auto& b : ys) out.push_back(op(a, b));
  }
  return NumSet::from_scalars(std::move(out));
}

bool both_integral(const NumSet& x, const NumSet& y, const Limits& limits) {
  return limits.integer_fast_path && x.is_integral() && y.is_integral();
}

}  // namespace

namespace detail {

std::optional<NumSet> fractions_to_set(std::vector<IntFraction> fractions) {
  constexpr i64 kMin = std::numeric_limits<i64>::min();
  for (auto& f : fractions) {
    if (f.num == kMin || f.den == kMin) return std::nullopt;
    const i64 g = std::gcd(f.num, f.den);
    f.num /= g;
    f.den /= g;
    if (f.den < 0) {
      f.num = -f.num;
      f.den = -f.den;
    }
  }
  std::sort(fractions.begin(), fractions.end(), [](const IntFraction& p, const IntFraction& q) {
    return static_cast<i128>(p.num) * q.den < static_cast<i128>(q.num) * p.den;
  });
  // Reduced fractions are equal iff their fields are.
  fractions.erase(std::unique(fractions.begin(), fractions.end(),
                              [](const IntFraction& p, const IntFraction& q) {
                                return p.num == q.num && p.den == q.den;
                              }),
                  fractions.end());
  std::vector<Scalar> out;
  out.reserve(fractions.size());
  for (const auto& f : fractions) out.emplace_back(f.num, f.den);
  return NumSet::from_sorted_scalars(std::move(out));
}

}  // namespace detail

std::uint64_t pair_count(std::uint64_t x, std::uint64_t y) noexcept {
  if (x != 0 && y > std::numeric_limits<std::uint64_t>::max() / x) return std::numeric_limits<std::uint64_t>::max();
  return x * y;
}

void require_feasible(std::uint64_t pairs, const Limits& limits, const std::string& what) {
  if (pairs > limits.max_pairs) throw FeasibilityError(what, pairs, limits.max_pairs);
}

NumSet sumset(const NumSet& x, const NumSet& y, const Limits& limits) {
  require_nonempty(x);
  require_nonempty(y);
  require_feasible(pair_count(x.size(), y.size()), limits, "sumset");
  if (both_integral(x, y, limits)) {
    const bool same = &x == &y || x == y;
    if (auto r = int_sumset(x.integers(), y.integers(), same, limits)) return NumSet::from_sorted_integers(*std::move(r));
  }
  return rational_pairs(x, y, [](const Scalar& a, const Scalar& b) { return a + b; });
}

NumSet difference_set(const NumSet& x, const NumSet& y, const Limits& limits) {
  require_nonempty(x);
  require_nonempty(y);
  require_feasible(pair_count(x.size(), y.size()), limits, "difference set");
  if (both_integral(x, y, limits) && y.integers().front() != std::numeric_limits<i64>::min()) {
    const auto neg = negate(y);
    if (auto r = int_sumset(x.integers(), neg.integers(), false, limits)) return NumSet::from_sorted_integers(*std::move(r));
  }
  return rational_pairs(x, y, [](const Scalar& a, const Scalar& b) { return a - b; });
}

NumSet product_set(const NumSet& x, const NumSet& y, const Limits& limits) {
  require_nonempty(x);
  require_nonempty(y);
  require_feasible(pair_count(x.size(), y.size()), limits, "product set");
  if (both_integral(x, y, limits)) {
    const bool same = &x == &y || x == y;
    if (auto r = int_product_set(x.integers(), y.integers(), same, limits)) {
      return NumSet::from_sorted_integers(*std::move(r));
    }
  }
  return rational_pairs(x, y, [](const Scalar& a, const Scalar& b) { return a * b; });
}

NumSet ratio_set(const NumSet& x, const NumSet& y, const Limits& limits) {
  require_nonempty(x);
  require_nonempty(y);
  if (y.contains_zero()) throw DomainError("zero divisor element");
  require_feasible(pair_count(x.size(), y.size()), limits, "ratio set");
  if (both_integral(x, y, limits)) {
    std::vector<detail::IntFraction> fr;
    fr.reserve(x.size() * y.size());
    for (auto a : x.integers()) {
      for (auto b : y.integers()) fr.push_back({a, b});
    }
    if (auto r = detail::fractions_to_set(std::move(fr))) return *std::move(r);
  }
  return rational_pairs(x, y, [](const Scalar& a, const Scalar& b) { return a / b; });
}

NumSet square_set(const NumSet& x) {
  require_nonempty(x);
  if (x.is_integral()) {
    const auto ints = x.integers();
    const i128 m = std::max(-static_cast<i128>(ints.front()), static_cast<i128>(ints.back()));
    if (m * m <= kI64Max) {
      std::vector<i64> out;
      out.reserve(ints.size());
      for (auto v : ints) out.push_back(v * v);
      return NumSet::from_integers(std::move(out));
    }
  }
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (const auto& s : x.to_scalars()) out.push_back(s * s);
  return NumSet::from_scalars(std::move(out));
}

NumSet dilate(const NumSet& x, const Scalar& c) {
  if (x.empty()) return x;
  if (c.is_zero()) return NumSet::from_sorted_integers({0});
  if (x.is_integral() && c.fits_int64()) {
    const i64 k = c.to_int64();
    std::vector<i64> out;
    out.reserve(x.size());
    bool ok = true;
    for (auto v : x.integers()) {
      const i128 p = static_cast<i128>(v) * k;
      if (!fits(p)) {
        ok = false;
        break;
      }
      out.push_back(static_cast<i64>(p));
    }
    if (ok) {
      if (k < 0) std::reverse(out.begin(), out.end());
      return NumSet::from_sorted_integers(std::move(out));
    }
  }
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (const auto& s : x.to_scalars()) out.push_back(s * c);
  if (c.sign() < 0) std::reverse(out.begin(), out.end());
  return NumSet::from_sorted_scalars(std::move(out));
}

NumSet negate(const NumSet& x) { return dilate(x, Scalar(-1)); }

NumSet iterated_combination(unsigned m, unsigned n, const NumSet& s, const Limits& limits) {
  if (m + n == 0) throw DomainError("iterated combination needs m + n >= 1");
  require_nonempty(s);
  NumSet acc = m > 0 ? s : negate(s);
  unsigned adds = m > 0 ? m - 1 : 0;
  unsigned subs = m > 0 ? n : n - 1;
  for (; adds > 0; --adds) acc = sumset(acc, s, limits);
  for (; subs > 0; --subs) acc = difference_set(acc, s, limits);
  return acc;
}

std::uint64_t rep_count(const NumSet& a, const Scalar& d) {
  require_nonempty(a);
  std::uint64_t count = 0;
  if (a.is_integral() && d.fits_int64()) {
    const auto ints = a.integers();
    const i64 dd = d.to_int64();
    for (auto v : ints) {
      const i128 b = static_cast<i128>(v) - dd;
      if (fits(b) && std::binary_search(ints.begin(), ints.end(), static_cast<i64>(b))) ++count;
    }
    return count;
  }
  for (const auto& v : a.to_scalars()) {
    if (a.contains(v - d)) ++count;
  }
  return count;
}

}  // namespace fewdist
