// End-to-end acceptance checks.  Each criterion prints exactly one PASS/FAIL line
// with its wall time and budget; the process fails if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fewdist/geometry.hpp"
#include "fewdist/search.hpp"
#include "fewdist/setcalc.hpp"
#include "fewdist/sweeps.hpp"
#include "fewdist/verify.hpp"
#include "oracle.hpp"

using namespace fewdist;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::string subset_label(const NumSet& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].to_string();
  return s + "}";
}

Scalar js(const Json& v) { return Scalar::parse(v.get<std::string>()); }

std::int64_t count(std::size_t n) { return static_cast<std::int64_t>(n); }

// ---------------------------------------------------------------------------

Outcome identity_oracle() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::size_t checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto qa = oracle::random_rational_set(rng, 8, 30, 7);
    auto a = oracle::to_numset(qa);
    auto grid = distance_set(PointSet::product(a, a));
    o.expect(grid == product_distance_set(a), "mismatch on " + subset_label(a));
    o.expect(oracle::to_qset(grid) == oracle::distances(oracle::grid(qa, qa)), "oracle mismatch on " + subset_label(a));
    ++checked;
  }
  for (const auto& a : integer_subsets(0, 6, 1, 7)) {
    auto qa = oracle::to_qset(a);
    auto grid = distance_set(PointSet::product(a, a));
    o.expect(grid == product_distance_set(a), "mismatch on " + subset_label(a));
    o.expect(oracle::to_qset(grid) == oracle::distances(oracle::grid(qa, qa)), "oracle mismatch on " + subset_label(a));
    ++checked;
  }
  o.detail = o.ok ? std::to_string(checked) + " sets, 0 mismatches" : o.detail;
  return o;
}

Outcome differencing_audit() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 97);
  for (int i = 0; i < 1000; ++i) {
    Scalar q[4];
    for (auto& x : q) x = Scalar(num(rng), den(rng));
    o.expect(differencing_identity(q[0], q[1], q[2], q[3]), "identity fails on a random quadruple");
  }
  std::size_t sets = 0, witnesses = 0;
  for (const auto& a : integer_subsets(0, 10, 1, 5)) {
    auto r = check_differencing(a);
    o.expect(r.holds == Holds::True, "audit fails on " + subset_label(a));
    auto qa = oracle::to_qset(a);
    auto d = oracle::diff(qa, qa);
    auto dd = oracle::prod(d, d);
    oracle::QSet target;
    for (const auto& x : dd) target.insert(2 * x);
    oracle::QSet covered;
    for (const auto& w : r.witnesses["representations"]) {
      oracle::Q p[4] = {oracle::to_q(js(w["plus"][0])), oracle::to_q(js(w["plus"][1])),
                        oracle::to_q(js(w["minus"][0])), oracle::to_q(js(w["minus"][1]))};
      for (const auto& x : p) o.expect(d.count(x) == 1, "witness outside D for " + subset_label(a));
      auto e = oracle::to_q(js(w["element"]));
      o.expect(p[0] * p[0] + p[1] * p[1] - p[2] * p[2] - p[3] * p[3] == e, "bad witness for " + subset_label(a));
      covered.insert(e);
      ++witnesses;
    }
    o.expect(covered == target, "witnesses do not cover 2(D.D) for " + subset_label(a));
    ++sets;
  }
  if (o.ok) o.detail = "1000 quadruples, " + std::to_string(sets) + " sets, " + std::to_string(witnesses) + " witnesses";
  return o;
}

Outcome plunnecke_audit() {
  Outcome o;
  auto records = exhaustive_small(StatementId::Plunnecke, AuditDepth::RatioOnly);
  o.expect(records.size() == 627 * 3, "expected 1881 records, got " + std::to_string(records.size()));
  std::size_t i = 0;
  const std::pair<unsigned, unsigned> settings[] = {{1, 1}, {2, 1}, {2, 2}};
  const auto sets = integer_subsets(0, 9, 2, 5);
  for (auto [m, n] : settings) {
    for (const auto& s : sets) {
      if (i >= records.size()) break;
      const auto& r = records[i++];
      auto qs = oracle::to_qset(s);
      const auto ss = count(oracle::sum(qs, qs).size());
      o.expect(r.holds == Holds::True, "fails on " + subset_label(s));
      o.expect(r.lhs == Scalar(count(oracle::iterated(m, n, qs).size())), "lhs mismatch on " + subset_label(s));
      o.expect(r.rhs == pow(Scalar(ss, count(s.size())), m + n) * Scalar(count(s.size())),
               "rhs mismatch on " + subset_label(s));
    }
  }
  if (o.ok) o.detail = "1881 exact audits";
  return o;
}

Outcome ungar_audit() {
  Outcome o;
  std::vector<Point> grid;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) grid.push_back({x, y});
  std::size_t non_collinear = 0;
  for_each_subset(16, 2, 6, [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> v;
    for (auto i : idx) v.push_back(grid[i]);
    PointSet p(std::move(v));
    auto r = check_ungar(p);
    if (is_collinear(p)) {
      o.expect(r.holds == Holds::NotApplicable, "collinear subset judged");
      return;
    }
    ++non_collinear;
    o.expect(r.holds == Holds::True, "grid subset fails");
  });
  std::mt19937_64 rng(4242);
  std::size_t random_ok = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto qp = oracle::random_points(rng, 3 + trial % 10, 6, trial % 4 ? 1 : 3);
    auto r = check_ungar(oracle::to_pointset(qp));
    if (oracle::collinear(qp)) {
      o.expect(r.holds == Holds::NotApplicable, "collinear random set judged");
      continue;
    }
    o.expect(r.holds == Holds::True, "random set fails");
    o.expect(r.lhs == Scalar(count(oracle::slopes(qp).size())), "slope count differs from oracle");
    ++random_ok;
  }
  if (o.ok)
    o.detail = std::to_string(non_collinear) + " grid subsets, " + std::to_string(random_ok) + " random non-collinear sets";
  return o;
}

Outcome solymosi_audit() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& s : integer_subsets(1, 8, 3, 3)) {
    auto r = check_solymosi_construction(s);
    auto qp = oracle::solymosi(oracle::to_qset(s));
    const auto sums = Scalar(count(oracle::point_sum(qp, qp).size()));
    o.expect(r.holds == Holds::True, "chain fails for " + subset_label(s));
    o.expect(r.lhs == sums, "|P+P| differs from oracle for " + subset_label(s));
    o.expect(r.rhs <= sums, "LB exceeds |P+P| for " + subset_label(s));
    ++n;
  }
  if (o.ok) o.detail = std::to_string(n) + " constructions";
  return o;
}

Outcome main_chain() {
  Outcome o;
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::to_numset(oracle::random_integer_set(rng, size(rng), 0, 20));
    auto r = check_main_theorem(a, AuditDepth::FullChain);
    const auto& chain = r.witnesses["chain"];
    o.expect(!r.error, "error on " + subset_label(a));
    if (r.error) continue;
    o.expect(chain["i"]["holds_literal"] == true, "(i) fails on " + subset_label(a));
    o.expect(chain["ii"]["holds"] == true, "(ii) fails on " + subset_label(a));
    // X = |D*D* + D*D*| recounted independently.
    auto qa = oracle::to_qset(a);
    auto ds = oracle::without_zero(oracle::diff(qa, qa));
    auto pp = oracle::prod(ds, ds);
    o.expect(r.lhs == Scalar(count(oracle::sum(pp, pp).size())), "X differs from oracle on " + subset_label(a));
  }
  if (o.ok) o.detail = "200 random sets, chains (i) and (ii) hold";
  return o;
}

Outcome known_values() {
  Outcome o;
  struct Golden {
    std::vector<std::int64_t> a;
    std::uint64_t diff, delta, rich;
  };
  for (const auto& g : {Golden{{0, 1, 2, 3}, 7, 10, 3}, Golden{{0, 1}, 3, 3, 1}}) {
    auto a = NumSet::from_integers(g.a);
    auto qa = oracle::to_qset(a);
    auto d = oracle::diff(qa, qa);
    const std::uint64_t oracle_rich = oracle::rep(qa, oracle::Q(1));
    o.expect(d.size() == g.diff && oracle::distances(oracle::grid(qa, qa)).size() == g.delta && oracle_rich == g.rich,
             "oracle disagrees with the frozen triple");
    o.expect(difference_set(a, a).size() == g.diff, "|A-A| wrong for " + subset_label(a));
    o.expect(product_distance_set(a).size() == g.delta, "|Delta| wrong for " + subset_label(a));
    o.expect(rich_line(a).points.size() == g.rich, "rich line wrong for " + subset_label(a));
  }
  if (o.ok) o.detail = "(7,10,3) and (3,3,1)";
  return o;
}

Outcome performance() {
  Outcome o;
  using clock = std::chrono::steady_clock;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> d(0, 100'000'000);
  std::vector<std::int64_t> xv, yv;
  while (xv.size() < 20'000) xv.push_back(d(rng));
  while (yv.size() < 20'000) yv.push_back(d(rng));
  auto x = NumSet::from_integers(xv);
  auto y = NumSet::from_integers(yv);
  while (x.size() < 20'000) {  // top up after deduplication
    xv.push_back(d(rng));
    x = NumSet::from_integers(xv);
  }
  while (y.size() < 20'000) {
    yv.push_back(d(rng));
    y = NumSet::from_integers(yv);
  }
  auto t0 = clock::now();
  auto s = sumset(x, y);
  double t_sum = std::chrono::duration<double>(clock::now() - t0).count();
  o.expect(t_sum <= 10.0, "sumset took " + std::to_string(t_sum) + " s");
  o.expect(s.min() == x.min() + y.min() && s.max() == x.max() + y.max(), "sumset extremes wrong");
  std::uniform_int_distribution<std::size_t> pick(0, 19'999);
  for (int i = 0; i < 1000; ++i) o.expect(s.contains(x[pick(rng)] + y[pick(rng)]), "sumset misses a pair sum");

  std::vector<std::int64_t> ap(10'000);
  for (std::int64_t i = 0; i < 10'000; ++i) ap[i] = 3 * i + 1;
  t0 = clock::now();
  auto delta = product_distance_set(NumSet::from_integers(ap));
  double t_pd = std::chrono::duration<double>(clock::now() - t0).count();
  o.expect(t_pd <= 10.0, "product_distance_set took " + std::to_string(t_pd) + " s");
  // Delta = 9 * {u^2 + v^2 : 0 <= u, v < 10^4}; spot checks.
  o.expect(delta.contains(Scalar(9 * (9999LL * 9999 + 9999LL * 9999))) && delta.contains(Scalar(9)) &&
               !delta.contains(Scalar(9 * 3)),
           "product_distance_set content wrong");
  char buf[160];
  std::snprintf(buf, sizeof buf, "sumset %.2f s (|S|=%zu), AP distances %.2f s (|Delta|=%zu)", t_sum, s.size(), t_pd,
                delta.size());
  if (o.ok) o.detail = buf;
  return o;
}

Outcome search_sanity() {
  Outcome o;
  SearchConfig c;
  c.n = 16;
  c.universe = 1'000'000;
  c.objective = Objective::MinDistances;
  c.seed = 7;
  auto st = anneal(c);
  for (const auto& r : st.restarts) {
    o.expect(!r.error, "restart aborted");
    o.expect(!better(r.initial_score, r.best_score, c.objective), "a restart ended worse than its initial set");
  }
  const auto& winner = st.restarts[st.best_restart];
  o.expect(!better(winner.initial_score, st.best_score, c.objective), "best worse than the initial set");
  o.expect(st.best_score.value == objective_value(st.best, c.objective), "best_score does not rescore");

  std::vector<Scalar> random_scores;
  for (std::uint64_t k = 0; k < 20; ++k) {
    FamilySpec spec = FamilySpec::parse("random:universe=1000000,seed=" + std::to_string(1000 + k));
    random_scores.push_back(objective_value(generate_family(spec, 16), c.objective));
  }
  std::sort(random_scores.begin(), random_scores.end());
  const Scalar median = (random_scores[9] + random_scores[10]) / Scalar(2);
  const Scalar ap = objective_value(generate_family(FamilySpec::parse("ap"), 16), c.objective);
  o.expect(ap < median, "AP does not beat the random median");

  auto replay = anneal(c);
  o.expect(replay.best_score.value == st.best_score.value && replay.best == st.best, "replay differs");
  o.expect(search_to_json(replay).dump() == search_to_json(st).dump(), "replay JSON differs");
  if (o.ok)
    o.detail = "best " + st.best_score.value.to_string() + " (initial " + winner.initial_score.value.to_string() +
               "), AP " + ap.to_string() + " < random median " + median.to_string();
  return o;
}

Outcome scan_report() {
  Outcome o;
  const std::vector<std::size_t> sizes{4, 8, 16, 32, 64};
  auto records = scan({FamilySpec::parse("ap")}, sizes);
  o.expect(records.size() == 2 * sizes.size(), "record count");
  for (std::size_t i = 0; i < sizes.size() && o.ok; ++i) {
    const auto& r = records[2 * i];
    const std::size_t n = sizes[i];
    oracle::QSet a;
    for (std::size_t k = 0; k < n; ++k) a.insert(oracle::Q(count(k)));
    auto d = oracle::diff(a, a);
    auto delta = oracle::sum(oracle::squares(d), oracle::squares(d));
    o.expect(r.statement_id == StatementId::MainTheorem, "record order");
    o.expect(r.witnesses["instance"]["n"] == n, "instance size");
    bool exact = false;
    for (const auto& [k, v] : r.sizes)
      if (k == "A") exact = v == n;
    o.expect(exact, "|A| not reported for n=" + std::to_string(n));
    o.expect(r.lhs == Scalar(count(d.size())), "|A-A| wrong for n=" + std::to_string(n));
    o.expect(r.rhs == Scalar(count(delta.size())), "|Delta| wrong for n=" + std::to_string(n));
    const double rho = double(d.size()) * std::pow(double(n), 0.125) / double(delta.size());
    const std::string rho_s = r.witnesses["rho_approx"].get<std::string>();
    std::size_t digits = 0;
    bool leading = true;
    for (char ch : rho_s) {
      if (ch < '0' || ch > '9') continue;
      if (leading && ch == '0') continue;
      leading = false;
      ++digits;
    }
    o.expect(digits == 6, "rho not at 6 significant digits: " + rho_s);
    o.expect(std::abs(std::stod(rho_s) - rho) <= 5e-6 * rho, "rho value off for n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "AP n in {4,8,16,32,64}";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number.
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "identity oracle", 30, identity_oracle},
      {2, "differencing audit", 30, differencing_audit},
      {3, "Plunnecke audit", 60, plunnecke_audit},
      {4, "Ungar audit", 60, ungar_audit},
      {5, "Solymosi audit", 30, solymosi_audit},
      {6, "main-theorem chain", 300, main_chain},
      {7, "known-value goldens", 30, known_values},
      {8, "performance", 20, performance},
      {9, "search sanity", 300, search_sanity},
      {10, "scan report", 120, scan_report},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      o.ok = false;
      o.detail += " (over time budget)";
    }
    std::printf("%s criterion %d: %s -- %s [%.2f s / %.0f s]\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_s);
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
