#include "fewdist/search.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <set>

#include "fewdist/errors.hpp"
#include "fewdist/geometry.hpp"

namespace fewdist {
namespace {

using Rng = std::mt19937_64;

// std::uniform_int_distribution is implementation-defined; these draws are not.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<std::int64_t> random_subset(Rng& rng, std::size_t n, std::int64_t universe) {
  const auto span = static_cast<std::uint64_t>(universe) + 1;
  if (2 * n > span) {
    std::vector<std::int64_t> all(span);
    for (std::uint64_t i = 0; i < span; ++i) all[i] = static_cast<std::int64_t>(i);
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < n; ++i) std::swap(all[i], all[i + uniform_below(rng, span - i)]);
    all.resize(n);
    std::sort(all.begin(), all.end());
    return all;
  }
  std::set<std::int64_t> chosen;
  while (chosen.size() < n) chosen.insert(static_cast<std::int64_t>(uniform_below(rng, span)));
  return {chosen.begin(), chosen.end()};
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw DomainError("family parameter '" + std::string(key) + "' expects a non-negative integer");
  }
  return out;
}

Score score_of(const DistanceProfile& p, Objective objective) {
  if (objective == Objective::MinDistances) {
    return Score{Scalar(static_cast<std::int64_t>(p.distance_count)), p.diff_size};
  }
  const Scalar rho8 = pow(Scalar(static_cast<std::int64_t>(p.diff_size)), 8) *
                      Scalar(static_cast<std::int64_t>(p.set_size)) /
                      pow(Scalar(static_cast<std::int64_t>(p.distance_count)), 8);
  return Score{rho8, p.diff_size};
}

Json set_json(const NumSet& s) {
  Json out = Json::array();
  for (const auto& v : s.to_scalars()) out.push_back(v.to_string());
  return out;
}

RestartResult run_restart(const SearchConfig& config, std::uint64_t seed, const Limits& limits) {
  RestartResult res;
  res.seed = seed;
  Rng rng(seed);
  std::vector<std::int64_t> current = random_subset(rng, config.n, config.universe);
  auto evaluate = [&](const std::vector<std::int64_t>& v) {
    return score_of(distance_profile(NumSet::from_sorted_integers(v), limits), config.objective);
  };

  res.initial = NumSet::from_sorted_integers(current);
  try {
    res.initial_score = evaluate(current);
  } catch (const FeasibilityError& e) {
    res.error = e.what();
    res.best = res.initial;
    return res;
  }
  Score current_score = res.initial_score;
  res.best = res.initial;
  res.best_score = current_score;
  res.trace.push_back({0, res.best_score.value});

  const auto span = static_cast<std::uint64_t>(config.universe) + 1;
  if (config.n == span) return res;  // every element is forced; no move exists

  double temperature = config.initial_temperature;
  std::vector<std::int64_t> candidate;
  candidate.reserve(config.n);
  for (std::uint64_t it = 1; it <= config.iterations; ++it) {
    const std::size_t slot = uniform_below(rng, config.n);
    std::int64_t fresh = 0;
    do {
      fresh = static_cast<std::int64_t>(uniform_below(rng, span));
    } while (std::binary_search(current.begin(), current.end(), fresh));

    candidate = current;
    candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(slot));
    candidate.insert(std::lower_bound(candidate.begin(), candidate.end(), fresh), fresh);

    Score score;
    try {
      score = evaluate(candidate);
    } catch (const FeasibilityError& e) {
      res.error = e.what();
      res.iterations_run = it - 1;
      res.trace.push_back({res.iterations_run, res.best_score.value});
      return res;
    }

    bool accept = better(score, current_score, config.objective);
    if (!accept) {
      const double worsening = config.objective == Objective::MinDistances
                                   ? (score.value - current_score.value).to_double()
                                   : (current_score.value - score.value).to_double();
      accept = uniform_unit(rng) < std::exp(-worsening / temperature);
    }
    if (accept) {
      ++res.accepted_moves;
      current.swap(candidate);
      current_score = std::move(score);
      if (better(current_score, res.best_score, config.objective)) {
        res.best = NumSet::from_sorted_integers(current);
        res.best_score = current_score;
      }
    }
    temperature *= config.cooling_rate;
    res.iterations_run = it;
    if (it % config.trace_every == 0 || it == config.iterations) res.trace.push_back({it, res.best_score.value});
  }
  return res;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::AP: return "ap";
    case FamilyKind::GP: return "gp";
    case FamilyKind::Random: return "random";
    case FamilyKind::PerturbedAP: return "perturbed-ap";
    case FamilyKind::Squares: return "squares";
  }
  return "unknown";
}

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  FamilySpec spec;
  if (kind == "ap") {
    spec.kind = FamilyKind::AP;
  } else if (kind == "gp") {
    spec.kind = FamilyKind::GP;
  } else if (kind == "random") {
    spec.kind = FamilyKind::Random;
  } else if (kind == "perturbed-ap" || kind == "perturbed_ap") {
    spec.kind = FamilyKind::PerturbedAP;
  } else if (kind == "squares") {
    spec.kind = FamilyKind::Squares;
  } else {
    throw DomainError("unknown family '" + std::string(kind) + "'");
  }
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw DomainError("family parameter '" + std::string(item) + "' lacks '='");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "gap") {
      spec.gap = Scalar::parse(value);
    } else if (key == "ratio") {
      spec.ratio = Scalar::parse(value);
    } else if (key == "radius") {
      spec.radius = static_cast<std::int64_t>(parse_u64(key, value));
    } else if (key == "universe") {
      spec.universe = static_cast<std::int64_t>(parse_u64(key, value));
    } else if (key == "seed") {
      spec.seed = parse_u64(key, value);
    } else {
      throw DomainError("unknown family parameter '" + std::string(key) + "'");
    }
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(fewdist::to_string(kind));
  switch (kind) {
    case FamilyKind::AP: return out + ":gap=" + gap.to_string();
    case FamilyKind::GP: return out + ":ratio=" + ratio.to_string();
    case FamilyKind::Random: return out + ":universe=" + std::to_string(universe) + ",seed=" + std::to_string(seed);
    case FamilyKind::PerturbedAP:
      return out + ":gap=" + gap.to_string() + ",radius=" + std::to_string(radius) + ",seed=" + std::to_string(seed);
    case FamilyKind::Squares: return out;
  }
  return out;
}

NumSet generate_family(const FamilySpec& spec, std::size_t n) {
  if (n == 0) throw DomainError("family size must be at least 1");
  switch (spec.kind) {
    case FamilyKind::AP: {
      if (spec.gap.is_zero()) throw DomainError("AP gap must be nonzero");
      std::vector<Scalar> v;
      for (std::size_t k = 0; k < n; ++k) v.push_back(spec.gap * Scalar(static_cast<std::int64_t>(k)));
      return NumSet::from_scalars(std::move(v));
    }
    case FamilyKind::GP: {
      if (spec.ratio <= Scalar(1)) throw DomainError("GP ratio must exceed 1");
      std::vector<Scalar> v;
      Scalar term(1);
      for (std::size_t k = 0; k < n; ++k, term *= spec.ratio) v.push_back(term);
      return NumSet::from_sorted_scalars(std::move(v));
    }
    case FamilyKind::Random: {
      if (spec.universe < 0 || static_cast<std::uint64_t>(spec.universe) + 1 < n) {
        throw DomainError("random family: universe [0, " + std::to_string(spec.universe) + "] has fewer than " +
                          std::to_string(n) + " elements");
      }
      Rng rng(spec.seed);
      return NumSet::from_sorted_integers(random_subset(rng, n, spec.universe));
    }
    case FamilyKind::PerturbedAP: {
      if (!spec.gap.fits_int64() || spec.gap.is_zero()) throw DomainError("perturbed AP gap must be a nonzero integer");
      if (spec.radius < 0) throw DomainError("perturbation radius must be non-negative");
      const std::int64_t g = spec.gap.to_int64() < 0 ? -spec.gap.to_int64() : spec.gap.to_int64();
      Rng rng(spec.seed);
      std::set<std::int64_t> chosen;
      // Window k is [kg - r, kg + r]; its top value exceeds every earlier window, so it never fills up.
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t base = static_cast<std::int64_t>(k) * g;
        std::vector<std::int64_t> free;
        for (std::int64_t off = -spec.radius; off <= spec.radius; ++off) {
          if (!chosen.contains(base + off)) free.push_back(base + off);
        }
        chosen.insert(free[uniform_below(rng, free.size())]);
      }
      return NumSet::from_sorted_integers({chosen.begin(), chosen.end()});
    }
    case FamilyKind::Squares: {
      std::vector<std::int64_t> v;
      for (std::size_t k = 0; k < n; ++k) v.push_back(static_cast<std::int64_t>(k * k));
      return NumSet::from_sorted_integers(std::move(v));
    }
  }
  throw DomainError("unknown family");
}

std::string_view to_string(Objective objective) {
  return objective == Objective::MinDistances ? "min-distances" : "max-rho";
}

std::optional<Objective> parse_objective(std::string_view text) {
  if (text == "min-distances" || text == "MIN_DISTANCES") return Objective::MinDistances;
  if (text == "max-rho" || text == "MAX_RHO") return Objective::MaxRho;
  return std::nullopt;
}

DistanceProfile distance_profile(const NumSet& a, const Limits& limits) {
  const NumSet d = difference_set(a, a, limits);
  const NumSet squares = square_set(d);
  const NumSet delta = sumset(squares, squares, limits);
  return {a.size(), d.size(), delta.size()};
}

Scalar objective_value(const NumSet& a, Objective objective, const Limits& limits) {
  return score_of(distance_profile(a, limits), objective).value;
}

bool better(const Score& a, const Score& b, Objective objective) {
  if (objective == Objective::MaxRho) return a.value > b.value;
  if (a.value != b.value) return a.value < b.value;
  return a.diff_size > b.diff_size;
}

void SearchConfig::validate() const {
  if (n == 0) throw DomainError("config field 'n' must be positive");
  if (universe < 0) throw DomainError("config field 'universe' must be non-negative");
  if (static_cast<std::uint64_t>(n) > static_cast<std::uint64_t>(universe) + 1) {
    throw DomainError("config field 'n' exceeds the universe size universe + 1");
  }
  if (iterations == 0) throw DomainError("config field 'iterations' must be positive");
  if (!(initial_temperature > 0) || !std::isfinite(initial_temperature)) {
    throw DomainError("config field 'initial_temperature' must be positive");
  }
  if (!(cooling_rate > 0 && cooling_rate < 1)) throw DomainError("config field 'cooling_rate' must lie in (0, 1)");
  if (restarts == 0) throw DomainError("config field 'restarts' must be positive");
  if (trace_every == 0) throw DomainError("config field 'trace_every' must be positive");
}

SearchState anneal(const SearchConfig& config, const Limits& limits) {
  config.validate();
  SearchState state;
  state.config = config;
  for (std::uint64_t r = 0; r < config.restarts; ++r) state.restarts.push_back(run_restart(config, config.seed + r, limits));
  for (std::size_t r = 0; r < state.restarts.size(); ++r) {
    if (r == 0 || better(state.restarts[r].best_score, state.best_score, config.objective)) {
      state.best_restart = r;
      state.best = state.restarts[r].best;
      state.best_score = state.restarts[r].best_score;
    }
  }
  return state;
}

Json search_to_json(const SearchState& state) {
  const auto& c = state.config;
  Json j;
  j["config"] = {{"n", c.n},
                 {"universe", c.universe},
                 {"objective", std::string(to_string(c.objective))},
                 {"iterations", c.iterations},
                 {"initial_temperature", c.initial_temperature},
                 {"cooling_rate", c.cooling_rate},
                 {"seed", c.seed},
                 {"restarts", c.restarts},
                 {"trace_every", c.trace_every}};
  j["best_set"] = set_json(state.best);
  j["best_score"] = state.best_score.value.to_string();
  j["best_diff_card"] = state.best_score.diff_size;
  j["best_restart"] = state.best_restart;
  Json trace = Json::array();
  for (const auto& s : state.restarts[state.best_restart].trace) trace.push_back({s.iteration, s.best_score.to_string()});
  j["trace"] = std::move(trace);
  Json restarts = Json::array();
  for (const auto& r : state.restarts) {
    Json rj = {{"seed", r.seed},
               {"initial_score", r.initial_score.value.to_string()},
               {"best_score", r.best_score.value.to_string()},
               {"accepted_moves", r.accepted_moves},
               {"iterations_run", r.iterations_run}};
    if (r.error) rj["error"] = *r.error;
    restarts.push_back(std::move(rj));
  }
  j["restarts"] = std::move(restarts);
  j["rng"] = {{"algorithm", std::string(kRngAlgorithm)}, {"version", std::string(kRngVersion)}, {"seed", c.seed}};
  return j;
}

std::vector<AuditRecord> scan(const std::vector<FamilySpec>& specs, const std::vector<std::size_t>& sizes,
                              const Limits& limits) {
  std::vector<AuditRecord> out;
  for (const auto& spec : specs) {
    for (const auto n : sizes) {
      std::optional<NumSet> a;
      std::string generation_error;
      try {
        a = generate_family(spec, n);
      } catch (const Error& e) {
        generation_error = e.what();
      }
      auto run = [&](StatementId id, auto&& audit) {
        AuditRecord r = guarded_audit(id, [&] {
          if (!a) throw DomainError(generation_error);
          return audit(*a);
        });
        Json instance = {{"family", spec.to_string()}, {"n", n}};
        if (r.witnesses.is_null()) {
          r.witnesses = Json{{"instance", std::move(instance)}};
        } else {
          r.witnesses["instance"] = std::move(instance);
        }
        out.push_back(std::move(r));
      };
      run(StatementId::MainTheorem, [&](const NumSet& s) { return check_main_theorem(s, AuditDepth::RatioOnly, limits); });
      run(StatementId::RudinExponent, [&](const NumSet& s) { return check_rudin_exponent(s, limits); });
    }
  }
  return out;
}

}  // namespace fewdist
