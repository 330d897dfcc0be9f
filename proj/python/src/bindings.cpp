// Thin pybind11 layer.  Numbers cross the boundary as strings in the scalar
// syntax ("3", "-1/2"); fewdist/__init__.py converts to and from int/Fraction.
// Reports cross as JSON text and are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fewdist/cli.hpp"
#include "fewdist/errors.hpp"
#include "fewdist/geometry.hpp"
#include "fewdist/search.hpp"
#include "fewdist/setcalc.hpp"
#include "fewdist/verify.hpp"

namespace py = pybind11;
using namespace fewdist;

namespace {

using Strings = std::vector<std::string>;
using StringPoints = std::vector<std::pair<std::string, std::string>>;

NumSet to_set(const Strings& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(Scalar::parse(s));
  return NumSet::from_scalars(std::move(out));
}

Strings from_set(const NumSet& s) {
  Strings out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[i].to_string());
  return out;
}

PointSet to_points(const StringPoints& v) {
  std::vector<Point> out;
  for (const auto& [x, y] : v) out.push_back({Scalar::parse(x), Scalar::parse(y)});
  return PointSet(std::move(out));
}

Limits limits_of(std::uint64_t max_pairs, std::uint64_t max_bitmap_bits) {
  Limits l;
  l.max_pairs = max_pairs;
  l.max_bitmap_bits = max_bitmap_bits;
  return l;
}

StatementId statement(const std::string& name) {
  auto id = parse_statement_id(name);
  if (!id) throw DomainError("unknown statement '" + name + "'");
  return *id;
}

template <class F>
auto binary_op(F f) {
  return [f](const Strings& x, const Strings& y, std::uint64_t max_pairs, std::uint64_t max_bits) {
    return from_set(f(to_set(x), to_set(y), limits_of(max_pairs, max_bits)));
  };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact set algebra for distinct-distance experiments";

  py::register_exception<FeasibilityError>(m, "FeasibilityError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  const Limits defaults;
  const auto pairs = py::arg("max_pairs") = defaults.max_pairs;
  const auto bits = py::arg("max_bitmap_bits") = defaults.max_bitmap_bits;

  m.def("sumset", binary_op([](auto&&... a) { return sumset(a...); }), py::arg("x"), py::arg("y"), pairs, bits);
  m.def("difference_set", binary_op([](auto&&... a) { return difference_set(a...); }), py::arg("x"), py::arg("y"),
        pairs, bits);
  m.def("product_set", binary_op([](auto&&... a) { return product_set(a...); }), py::arg("x"), py::arg("y"), pairs,
        bits);
  m.def("ratio_set", binary_op([](auto&&... a) { return ratio_set(a...); }), py::arg("x"), py::arg("y"), pairs, bits);

  m.def(
      "product_distance_set",
      [](const Strings& a, std::uint64_t p, std::uint64_t b) {
        return from_set(product_distance_set(to_set(a), limits_of(p, b)));
      },
      py::arg("a"), pairs, bits);
  m.def(
      "distance_set",
      [](const StringPoints& pts, std::uint64_t p, std::uint64_t b) {
        return from_set(distance_set(to_points(pts), limits_of(p, b)));
      },
      py::arg("points"), pairs, bits);
  m.def(
      "slope_set",
      [](const StringPoints& pts, std::uint64_t p, std::uint64_t b) {
        auto s = slope_set(to_points(pts), limits_of(p, b));
        return std::make_pair(from_set(s.finite), s.has_infinity);
      },
      py::arg("points"), pairs, bits);
  m.def(
      "rich_line",
      [](const Strings& a) {
        auto line = rich_line(to_set(a));
        StringPoints points;
        for (const auto& p : line.points) points.emplace_back(p.x.to_string(), p.y.to_string());
        return std::make_pair(line.d.to_string(), points);
      },
      py::arg("a"));

  m.def(
      "verify_set",
      [](const std::string& name, const Strings& a, unsigned m_copies, unsigned n_copies, bool full_chain,
         std::uint64_t p, std::uint64_t b) {
        const auto id = statement(name);
        const NumSet s = to_set(a);
        const Limits l = limits_of(p, b);
        AuditRecord r = guarded_audit(id, [&] {
          switch (id) {
            case StatementId::Differencing: return check_differencing(s, l);
            case StatementId::Plunnecke: return check_plunnecke(s, m_copies, n_copies, l);
            case StatementId::Solymosi: return check_solymosi_construction(s, l);
            case StatementId::ProductSumset: return check_product_sumset(s, l);
            case StatementId::Ungar: return check_ungar(PointSet::product(s, s), l);
            case StatementId::MainTheorem:
              return check_main_theorem(s, full_chain ? AuditDepth::FullChain : AuditDepth::RatioOnly, l);
            case StatementId::RudinExponent: return check_rudin_exponent(s, l);
          }
          throw DomainError("unknown statement");
        });
        return r.to_json().dump();
      },
      py::arg("statement"), py::arg("a"), py::arg("m") = 1u, py::arg("n") = 1u, py::arg("full_chain") = false, pairs,
      bits);
  m.def(
      "verify_points",
      [](const std::string& name, const StringPoints& pts, std::uint64_t p, std::uint64_t b) {
        const auto id = statement(name);
        const PointSet ps = to_points(pts);
        const Limits l = limits_of(p, b);
        AuditRecord r = guarded_audit(id, [&] {
          if (id == StatementId::Ungar) return check_ungar(ps, l);
          if (id == StatementId::Solymosi) return check_solymosi_points(ps, l);
          throw DomainError("statement takes a set, not points");
        });
        return r.to_json().dump();
      },
      py::arg("statement"), py::arg("points"), pairs, bits);

  m.def(
      "scan",
      [](const Strings& families, const std::vector<std::size_t>& sizes) {
        std::vector<FamilySpec> specs;
        for (const auto& f : families) specs.push_back(FamilySpec::parse(f));
        Strings out;
        for (const auto& r : scan(specs, sizes)) out.push_back(r.to_json().dump());
        return out;
      },
      py::arg("families"), py::arg("sizes"));

  m.def(
      "search",
      [](std::size_t n, std::int64_t universe, const std::string& objective, std::uint64_t iterations,
         double temperature, double cooling, std::uint64_t seed, std::uint64_t restarts, std::uint64_t trace_every) {
        SearchConfig c;
        c.n = n;
        c.universe = universe;
        auto obj = parse_objective(objective);
        if (!obj) throw DomainError("config field 'objective' must be min-distances or max-rho");
        c.objective = *obj;
        c.iterations = iterations;
        c.initial_temperature = temperature;
        c.cooling_rate = cooling;
        c.seed = seed;
        c.restarts = restarts;
        c.trace_every = trace_every;
        c.validate();
        SearchState st;
        {
          py::gil_scoped_release release;
          st = anneal(c);
        }
        return search_to_json(st).dump();
      },
      py::arg("n"), py::arg("universe"), py::arg("objective"), py::arg("iterations"), py::arg("temperature"),
      py::arg("cooling"), py::arg("seed"), py::arg("restarts"), py::arg("trace_every"));

  m.def(
      "run_cli",
      [](const Strings& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
