#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fewdist/geometry.hpp"
#include "fewdist/numset.hpp"
#include "fewdist/scalar.hpp"
#include "fewdist/setcalc.hpp"

namespace fewdist {

using Json = nlohmann::ordered_json;

enum class StatementId {
  Differencing,
  Plunnecke,
  Solymosi,
  ProductSumset,
  Ungar,
  MainTheorem,
  RudinExponent,
};

/// "DIFFERENCING", "PLUNNECKE", ...
std::string_view to_string(StatementId id);
/// Accepts the CLI spellings ("differencing", "product-sumset", "main-theorem", "rudin", ...).
std::optional<StatementId> parse_statement_id(std::string_view text);

enum class Holds { True, False, NotApplicable };
std::string_view to_string(Holds h);

/// Outcome of one audit.  When `holds` is boolean it is the exact comparison
/// of lhs and rhs that the statement names; `ratio` is lhs / rhs when rhs != 0.
struct AuditRecord {
  StatementId statement_id{};
  Scalar lhs;
  Scalar rhs;
  std::optional<Scalar> ratio;
  Holds holds = Holds::NotApplicable;
  Json witnesses;  // null when absent
  std::vector<std::pair<std::string, std::uint64_t>> sizes;
  std::vector<std::string> notes;
  /// Set when the instance could not be audited (the record then carries no verdict).
  std::optional<std::string> error;
  bool feasibility_error = false;

  /// Fills ratio from lhs and rhs.
  void set_sides(Scalar l, Scalar r);
  void add_size(std::string name, std::uint64_t value) { sizes.emplace_back(std::move(name), value); }
  /// ratio to 6 significant digits, or "" when there is no ratio.
  std::string approx_ratio() const;
  Json to_json() const;
};

/// Evaluates (b1-a1)^2 + (b2-a2)^2 - (b1-a2)^2 - (b2-a1)^2 == 2 (a2-a1)(b1-b2).
bool differencing_identity(const Scalar& a1, const Scalar& a2, const Scalar& b1, const Scalar& b2);

/// Checks the four-square identity on every quadruple of A^4 and produces an explicit
/// representation in 2D^2 - 2D^2 for every element of 2 (D.D), D = A - A.
AuditRecord check_differencing(const NumSet& a, const Limits& limits = {});

/// |mS - nS| <= (|S+S| / |S|)^(m+n) |S|, exactly.
AuditRecord check_plunnecke(const NumSet& s, unsigned m, unsigned n, const Limits& limits = {});

/// |P + P| >= (L - 1) n^2 for points in one open quadrant, each of the L origin
/// lines carrying at least n of them.  Violated preconditions throw PreconditionError.
AuditRecord check_solymosi(const PointSet& p, const std::vector<Scalar>& line_slopes, std::uint64_t n,
                           const Limits& limits = {});

/// The lines of a construction kept by the majority-quadrant selection.
struct QuadrantSelection {
  Quadrant quadrant = Quadrant::I;
  std::vector<Scalar> slopes;         // ascending
  std::vector<std::uint64_t> loads;   // points of the selected quadrant on each line
  std::uint64_t min_load = 0;         // n*
  PointSet points;                    // construction points on the selected lines in `quadrant`
};

/// Splits the origin lines by slope sign, keeps the larger class (ties: positive),
/// then the larger of its two quadrant halves (ties: I, resp. II).
QuadrantSelection select_quadrant_class(const SolymosiConstruction& c);

/// Sums of points on slope-adjacent selected lines.  These all lie in P + P and
/// are pairwise distinct by the sector argument, so the count certifies a lower bound.
std::uint64_t adjacent_sector_sum_count(const QuadrantSelection& sel, const Limits& limits = {});

struct ProductSumsetOptions {
  /// Exact |P + P| is computed when |P|^2 does not exceed this; otherwise the
  /// adjacent-sector certificate stands in for it.
  std::uint64_t exact_point_pairs = std::uint64_t{1} << 22;
};

/// check_solymosi on the selected quadrant class of solymosi_construct(S), n = n*.
AuditRecord check_solymosi_construction(const NumSet& s, const Limits& limits = {});

/// check_solymosi with every origin line through a point of P and n = the poorest line's load.
AuditRecord check_solymosi_points(const PointSet& p, const Limits& limits = {});

/// |S.S + S.S|^2 against |S/S| |S|^2 (ratio report) plus the verified chain
/// LB <= |P + P| <= |S.S + S.S|^2 for the Solymosi construction P.
AuditRecord check_product_sumset(const NumSet& s, const Limits& limits = {}, const ProductSumsetOptions& options = {});

/// |slope set| >= |P| - 1 for non-collinear P; n/a otherwise.
AuditRecord check_ungar(const PointSet& p, const Limits& limits = {});

enum class AuditDepth { RatioOnly, FullChain };

/// rho(A) = |A-A| |A|^(1/8) / |Delta(A x A)|, and with FullChain the exact steps of
/// the argument bounding it.
AuditRecord check_main_theorem(const NumSet& a, AuditDepth depth, const Limits& limits = {},
                               const ProductSumsetOptions& options = {});

/// log|D^2 + D^2| / log|D^2| for D = A - A, A integral.
AuditRecord check_rudin_exponent(const NumSet& a, const Limits& limits = {});

/// Runs `audit`, turning library errors into an error-carrying record for `id`.
template <class F>
AuditRecord guarded_audit(StatementId id, F&& audit);

}  // namespace fewdist

#include "fewdist/detail/guarded_audit.hpp"
