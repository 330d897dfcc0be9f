#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fewdist/numset.hpp"
#include "fewdist/scalar.hpp"
#include "fewdist/setcalc.hpp"
#include "fewdist/verify.hpp"

namespace fewdist {

enum class FamilyKind { AP, GP, Random, PerturbedAP, Squares };

std::string_view to_string(FamilyKind kind);

/// A generator of test sets.  Unused parameters are ignored by each kind.
struct FamilySpec {
  FamilyKind kind = FamilyKind::AP;
  Scalar gap{1};             // AP, PERTURBED_AP (integer for the latter)
  Scalar ratio{2};           // GP, must exceed 1
  std::int64_t radius = 0;   // PERTURBED_AP
  std::int64_t universe = 1'000'000;  // RANDOM draws from [0, universe]
  std::uint64_t seed = 0;    // RANDOM, PERTURBED_AP

  /// "ap", "gp:ratio=3/2", "random:universe=1000,seed=5", "perturbed-ap:gap=10,radius=2,seed=1", "squares".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

/// Exactly n elements of the family.
NumSet generate_family(const FamilySpec& spec, std::size_t n);

enum class Objective { MinDistances, MaxRho };

std::string_view to_string(Objective objective);
std::optional<Objective> parse_objective(std::string_view text);

/// |A|, |A - A| and |Delta(A x A)|.
struct DistanceProfile {
  std::uint64_t set_size = 0;
  std::uint64_t diff_size = 0;
  std::uint64_t distance_count = 0;
};

DistanceProfile distance_profile(const NumSet& a, const Limits& limits = {});

/// MinDistances: |Delta(A x A)|.  MaxRho: |A-A|^8 |A| / |Delta(A x A)|^8, the eighth power of rho.
Scalar objective_value(const NumSet& a, Objective objective, const Limits& limits = {});

/// Exact score with the search's tie-break.  MinDistances prefers fewer distances,
/// then a larger difference set; MaxRho prefers a larger rho^8.
struct Score {
  Scalar value;
  std::uint64_t diff_size = 0;
};

bool better(const Score& a, const Score& b, Objective objective);

struct SearchConfig {
  std::size_t n = 8;
  std::int64_t universe = 1000;  // search space is [0, universe]
  Objective objective = Objective::MinDistances;
  std::uint64_t iterations = 50'000;
  double initial_temperature = 2.0;
  double cooling_rate = 0.999;
  std::uint64_t seed = 0;
  std::uint64_t restarts = 4;
  std::uint64_t trace_every = 1000;

  /// Throws DomainError naming the offending field.
  void validate() const;
};

struct TraceSample {
  std::uint64_t iteration;
  Scalar best_score;
};

struct RestartResult {
  std::uint64_t seed = 0;
  NumSet initial;
  Score initial_score;
  NumSet best;
  Score best_score;
  std::uint64_t accepted_moves = 0;
  std::uint64_t iterations_run = 0;
  std::vector<TraceSample> trace;  // best-so-far, sampled every trace_every iterations and at the end
  std::optional<std::string> error;
};

struct SearchState {
  SearchConfig config;
  NumSet best;
  Score best_score;
  std::size_t best_restart = 0;
  std::vector<RestartResult> restarts;
};

inline constexpr std::string_view kRngAlgorithm = "mt19937_64";
inline constexpr std::string_view kRngVersion = "std::mersenne_twister_engine/1; bounded draws by rejection, v1";

/// Simulated annealing over n-subsets of [0, U].  Pure function of the config.
SearchState anneal(const SearchConfig& config, const Limits& limits = {});

Json search_to_json(const SearchState& state);

/// For each (spec, size): a ratio-only main-theorem record and a Rudin-exponent record.
std::vector<AuditRecord> scan(const std::vector<FamilySpec>& specs, const std::vector<std::size_t>& sizes,
                              const Limits& limits = {});

}  // namespace fewdist
