// Python bindings for the main operations: exact terms, catalog lookups,
// single-instance checks, grid verification and seeded fuzzing. Exact
// rationals cross the boundary as fractions.Fraction.

#include "horadam/catalog.hpp"
#include "horadam/fuzz.hpp"
#include "horadam/grid.hpp"
#include "horadam/identity.hpp"
#include "horadam/report.hpp"
#include "horadam/sequence.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace horadam;

namespace {

py::object to_fraction(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.str());
}

Rational rational_from(const py::object& obj) {
  const auto parsed = Rational::parse(py::cast<std::string>(py::str(obj)));
  if (!parsed)
    throw py::value_error("expected an integer, Fraction or 'n/d' string");
  return *parsed;
}

Assignment assignment_from(const std::map<std::string, long long>& values) {
  Assignment out;
  for (const auto& [sym, v] : values) {
    if (sym.size() != 1)
      throw py::value_error("assignment symbols are single letters");
    out[sym[0]] = v;
  }
  return out;
}

py::dict outcome_dict(const CheckOutcome& outcome) {
  py::dict out;
  switch (outcome.kind()) {
  case CheckOutcome::Kind::Holds:
    out["outcome"] = "Holds";
    break;
  case CheckOutcome::Kind::Fails:
    out["outcome"] = "Fails";
    out["lhs"] = to_fraction(outcome.lhs());
    out["rhs"] = to_fraction(outcome.rhs());
    break;
  case CheckOutcome::Kind::Skipped:
    out["outcome"] = "Skipped";
    out["reason"] = std::string(to_string(outcome.reason()));
    break;
  }
  return out;
}

py::dict report_dict(const VerificationReport& report) {
  py::dict out;
  out["suite"] = report.suite_id;
  out["holds"] = report.holds;
  out["fails"] = report.fails;
  out["skipped"] = report.skipped;
  out["checks"] = report.checks();
  out["passed"] = report.passed();
  py::dict reasons;
  for (const auto& [reason, n] : report.skipped_by_reason)
    reasons[py::str(reason)] = n;
  out["skipped_by_reason"] = std::move(reasons);
  py::list failures;
  for (const auto& fr : report.failures) {
    py::dict f;
    f["id"] = fr.id;
    py::dict asg;
    for (const auto& [sym, v] : fr.assignment)
      asg[py::str(sym)] = v;
    f["assignment"] = std::move(asg);
    f["lhs"] = fr.lhs;
    f["rhs"] = fr.rhs;
    failures.append(std::move(f));
  }
  out["failures"] = std::move(failures);
  if (report.seed)
    out["seed"] = *report.seed;
  out["elapsed"] = report.elapsed_seconds;
  return out;
}

GridSpec grid_from(
    const std::map<std::string, std::pair<long long, long long>>& ranges,
    std::optional<std::pair<long long, long long>> k, long long max_tuples) {
  GridSpec grid;
  grid.max_tuples = max_tuples;
  for (const auto& [sym, iv] : ranges) {
    if (sym.size() != 1)
      throw py::value_error("range symbols are single letters");
    grid.per_symbol[sym[0]] = Interval{iv.first, iv.second};
  }
  if (k) {
    grid.k_geometric = Interval{k->first, k->second};
    grid.k_binomial = Interval{k->first, k->second};
  }
  return grid;
}

VerificationReport
run_verify(const std::vector<std::string>& ids,
           const std::map<std::string, std::pair<long long, long long>>& ranges,
           std::optional<std::pair<long long, long long>> k,
           long long max_tuples) {
  return run_grid(ids, grid_from(ranges, k, max_tuples));
}

} // namespace

PYBIND11_MODULE(horadam, m) {
  m.doc() = "exact arithmetic for second-order recurrence sequences and "
            "machine verification of their identities";

  py::class_<SequenceSpec>(m, "Sequence")
      .def(py::init([](long long p, long long q, const py::object& w0,
                       const py::object& w1, const std::string& name) {
             return SequenceSpec(RecurrencePair(p, q), rational_from(w0),
                                 rational_from(w1), name);
           }),
           py::arg("p"), py::arg("q"), py::arg("w0"), py::arg("w1"),
           py::arg("name") = std::string())
      .def_property_readonly("name", &SequenceSpec::name)
      .def_property_readonly(
          "p", [](const SequenceSpec& s) { return py::int_(py::str(s.pair().p().str())); })
      .def_property_readonly(
          "q", [](const SequenceSpec& s) { return py::int_(py::str(s.pair().q().str())); })
      .def("term",
           [](const SequenceSpec& s, long long n) {
             return to_fraction(term(s, n));
           },
           py::arg("n"), "W_n by memoized bidirectional recurrence")
      .def("term_fast",
           [](const SequenceSpec& s, long long n) {
             return to_fraction(term_fast(s, n));
           },
           py::arg("n"), "W_n by companion-matrix power")
      .def("__repr__", [](const SequenceSpec& s) {
        return "Sequence(p=" + s.pair().p().str() + ", q=" + s.pair().q().str() +
               ", w0=" + s.w0().str() + ", w1=" + s.w1().str() +
               (s.name().empty() ? "" : ", name='" + s.name() + "'") + ")";
      });

  m.def("sequence",
        [](long long p, long long q, const py::object& w0, const py::object& w1,
           const std::string& name) {
          return SequenceSpec(RecurrencePair(p, q), rational_from(w0),
                              rational_from(w1), name);
        },
        py::arg("p"), py::arg("q"), py::arg("w0"), py::arg("w1"),
        py::arg("name") = std::string());
  m.def("builtin", [](const std::string& name) { return builtin(name); },
        py::arg("name"), "one of F, L, J, j, P, Q");
  m.def("builtin_names", [] { return builtin_names(); });
  m.def("negative_index_closed_form",
        [](const std::string& name, long long n) {
          return to_fraction(negative_index_closed_form(name, n));
        },
        py::arg("name"), py::arg("n"),
        "value at index -n from the label's closed form");

  m.def("catalog_ids", [] { return catalog().ids(); });
  m.def("manifest", [] { return catalog().manifest(); });
  m.def("check",
        [](const std::string& id,
           const std::map<std::string, long long>& assignment) {
          const IdentityTemplate* tmpl = catalog().find(id);
          if (tmpl == nullptr)
            throw py::value_error("unknown identity id: " + id);
          return outcome_dict(check_instance(*tmpl, assignment_from(assignment)));
        },
        py::arg("id"), py::arg("assignment"));

  m.def("verify",
        [](const std::vector<std::string>& ids,
           const std::map<std::string, std::pair<long long, long long>>& ranges,
           std::optional<std::pair<long long, long long>> k,
           long long max_tuples) {
          return report_dict(run_verify(ids, ranges, k, max_tuples));
        },
        py::arg("ids") = std::vector<std::string>{"all"},
        py::arg("ranges") = std::map<std::string, std::pair<long long, long long>>{},
        py::arg("k") = std::nullopt, py::arg("max_tuples") = 20000);
  m.def("verify_jsonl",
        [](const std::vector<std::string>& ids,
           const std::map<std::string, std::pair<long long, long long>>& ranges,
           std::optional<std::pair<long long, long long>> k,
           long long max_tuples) {
          return emit_report_string(run_verify(ids, ranges, k, max_tuples),
                                    ReportFormat::Jsonl);
        },
        py::arg("ids") = std::vector<std::string>{"all"},
        py::arg("ranges") = std::map<std::string, std::pair<long long, long long>>{},
        py::arg("k") = std::nullopt, py::arg("max_tuples") = 20000);

  m.def("fuzz",
        [](uint64_t seed, long long count, long long coeff_bound,
           long long index_bound) {
          return report_dict(fuzz_general(seed, count, coeff_bound, index_bound));
        },
        py::arg("seed"), py::arg("count"), py::arg("coeff_bound") = 5,
        py::arg("index_bound") = 8);
  m.def("fuzz_jsonl",
        [](uint64_t seed, long long count, long long coeff_bound,
           long long index_bound) {
          return emit_report_string(fuzz_general(seed, count, coeff_bound,
                                                 index_bound),
                                    ReportFormat::Jsonl);
        },
        py::arg("seed"), py::arg("count"), py::arg("coeff_bound") = 5,
        py::arg("index_bound") = 8);
}
