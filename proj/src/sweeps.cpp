#include "fewdist/sweeps.hpp"

#include "fewdist/geometry.hpp"

namespace fewdist {

void for_each_subset(std::size_t n, std::size_t min_size, std::size_t max_size,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
  for (std::size_t k = min_size; k <= std::min(max_size, n); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      f(idx);
      // Advance to the next k-combination.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

std::vector<NumSet> integer_subsets(std::int64_t lo, std::int64_t hi, std::size_t min_size, std::size_t max_size) {
  std::vector<NumSet> out;
  const auto n = static_cast<std::size_t>(hi - lo + 1);
  for_each_subset(n, min_size, max_size, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::int64_t> v;
    v.reserve(idx.size());
    for (auto i : idx) v.push_back(lo + static_cast<std::int64_t>(i));
    out.push_back(NumSet::from_sorted_integers(std::move(v)));
  });
  return out;
}

std::vector<AuditRecord> exhaustive_small(StatementId id, AuditDepth depth, const Limits& limits) {
  std::vector<AuditRecord> out;
  auto each_set = [&](const std::vector<NumSet>& sets, auto&& audit) {
    for (const auto& s : sets) out.push_back(guarded_audit(id, [&] { return audit(s); }));
  };
  switch (id) {
    case StatementId::Differencing:
      each_set(integer_subsets(0, 10, 1, 5), [&](const NumSet& a) { return check_differencing(a, limits); });
      break;
    case StatementId::Plunnecke: {
      const auto sets = integer_subsets(0, 9, 2, 5);
      for (auto [m, n] : {std::pair{1u, 1u}, std::pair{2u, 1u}, std::pair{2u, 2u}}) {
        each_set(sets, [&](const NumSet& s) { return check_plunnecke(s, m, n, limits); });
      }
      break;
    }
    case StatementId::Solymosi:
      each_set(integer_subsets(1, 8, 3, 3), [&](const NumSet& s) { return check_solymosi_construction(s, limits); });
      break;
    case StatementId::ProductSumset:
      each_set(integer_subsets(1, 6, 1, 3), [&](const NumSet& s) { return check_product_sumset(s, limits); });
      break;
    case StatementId::Ungar: {
      std::vector<Point> grid;
      for (std::int64_t x = 0; x < 4; ++x) {
        for (std::int64_t y = 0; y < 4; ++y) grid.push_back({Scalar(x), Scalar(y)});
      }
      for_each_subset(grid.size(), 2, 6, [&](const std::vector<std::size_t>& idx) {
        std::vector<Point> pts;
        for (auto i : idx) pts.push_back(grid[i]);
        const PointSet p(std::move(pts));
        out.push_back(guarded_audit(id, [&] { return check_ungar(p, limits); }));
      });
      break;
    }
    case StatementId::MainTheorem:
      each_set(integer_subsets(0, 6, 2, 7), [&](const NumSet& a) { return check_main_theorem(a, depth, limits); });
      break;
    case StatementId::RudinExponent:
      each_set(integer_subsets(0, 6, 2, 7), [&](const NumSet& a) { return check_rudin_exponent(a, limits); });
      break;
  }
  return out;
}

}  // namespace fewdist
