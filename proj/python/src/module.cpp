// Copyright 2026 The softeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "softeq.hpp"

namespace py = pybind11;
using namespace softeq;

namespace {

std::map<std::string, Label> labelled(const Instance& instance, const Assignment& s) {
  std::map<std::string, Label> out;
  for (VarIndex x = 0; x < instance.num_variables(); ++x) out[instance.name(x)] = instance.label(s[x]);
  return out;
}

py::dict report_dict(const CostReport& r) {
  py::dict d;
  d["equalities"] = r.equalities;
  d["disequalities"] = r.disequalities;
  d["alldiff_var"] = r.alldiff_var;
  d["allequal_var"] = r.allequal_var;
  d["nvalues"] = r.nvalues;
  return d;
}

py::object pruned_dict(const Instance& instance, const PropagationOutcome& out) {
  if (out.failed()) return py::none();
  py::dict d;
  for (const auto& [x, dom] : out.pruned) d[py::str(instance.name(x))] = format_domain(instance, dom);
  return d;
}

Consistency consistency_of(const std::string& mode) {
  if (mode == "ac") return Consistency::Arc;
  if (mode == "rc") return Consistency::Range;
  if (mode == "bc") return Consistency::Bounds;
  throw py::value_error("mode must be ac, rc or bc");
}

OptimumResult solve(const Instance& instance, const std::string& method, bool crest_reduction,
                    std::uint64_t budget) {
  if (method == "dp") {
    DpOptions options;
    options.use_crest_reduction = crest_reduction;
    return max_equalities_dp(instance, options);
  }
  if (method == "matching") return solve_matching_class(instance);
  if (method == "heavy") return solve_heavy_class(instance);
  if (method == "fpt") return solve_fpt_values(instance, budget);
  if (method == "fpt-conflict") return solve_fpt_conflicting(instance, budget);
  if (method == "brute") {
    const BruteForceResult r = brute_force_optimum(instance);
    return {r.optimum, r.optima.front()};
  }
  throw py::value_error("unknown method " + method);
}

TieBreak tie_break_of(const Instance& instance, const std::string& policy,
                      const std::vector<Label>& order) {
  if (policy == "smallest") return TieBreak::smallest();
  if (policy == "first") return TieBreak::first();
  if (policy != "list") throw py::value_error("tie_break must be smallest, first or list");
  std::vector<Value> values;
  for (Label l : order) {
    auto v = instance.labels().value_of(l);
    if (!v) throw py::value_error("label " + std::to_string(l) + " is not a value of the instance");
    values.push_back(*v);
  }
  return TieBreak::priority(std::move(values));
}

}  // namespace

PYBIND11_MODULE(_softeq, m) {
  m.doc() = "Soft equality and difference constraints: costs, propagators and exact solvers.";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  py::register_exception<InternalError>(m, "InternalError", error.ptr());

  py::class_<Instance>(m, "Instance")
      .def_static("parse", [](const std::string& text) { return parse_instance(text); }, py::arg("text"))
      .def("format", [](const Instance& i) { return format_instance(i); })
      .def_property_readonly("num_variables", &Instance::num_variables)
      .def_property_readonly("num_values", &Instance::num_values)
      .def_property_readonly("names", [](const Instance& i) {
        return std::vector<std::string>(i.names().begin(), i.names().end());
      })
      .def("domain", [](const Instance& i, std::size_t x) {
        if (x >= i.num_variables()) throw py::index_error();
        std::vector<Label> out;
        for (Value v : i.domain(x).values()) out.push_back(i.label(v));
        return out;
      }, py::arg("index"))
      .def("__repr__", [](const Instance& i) {
        return "<Instance n=" + std::to_string(i.num_variables()) +
               " values=" + std::to_string(i.num_values()) + ">";
      });

  m.def("evaluate", [](const std::vector<Value>& values) {
    return report_dict(evaluate(Assignment::relaxed(values)));
  }, py::arg("values"), "The five costs of a list of values.");

  m.def("occurrences", [](const Instance& i) {
    const InverseOcc occ = i.all_contiguous() ? inverse_occurrence(i) : count_occurrences(i);
    std::vector<std::tuple<std::int64_t, Label, Label>> out;
    for (std::size_t x = 0; x < occ.buckets.size(); ++x)
      for (const Interval& iv : occ.buckets[x])
        out.emplace_back(static_cast<std::int64_t>(x), i.label(iv.lo), i.label(iv.hi));
    return out;
  }, py::arg("instance"), "(count, first label, last label) runs.");

  m.def("crests", [](const Instance& i) {
    std::vector<std::pair<Label, Label>> out;
    for (const Interval& c : crest_partition(i).crests) out.emplace_back(i.label(c.lo), i.label(c.hi));
    return out;
  }, py::arg("instance"));

  m.def("solve", [](const Instance& i, const std::string& method, bool crest_reduction,
                    std::uint64_t budget) {
    const OptimumResult r = solve(i, method, crest_reduction, budget);
    return py::make_tuple(r.equalities, labelled(i, r.witness));
  }, py::arg("instance"), py::arg("method") = "dp", py::arg("crest_reduction") = true,
     py::arg("budget") = default_permutation_budget,
     "Maximum number of equal pairs and an assignment reaching it.");

  m.def("greedy", [](const Instance& i, const std::string& tie_break, const std::vector<Label>& order) {
    const GreedyResult r = greedy_max_equalities(i, tie_break_of(i, tie_break, order));
    py::dict d;
    d["lower_bound"] = r.lower_bound;
    d["objective"] = r.objective;
    d["assignment"] = labelled(i, r.assignment);
    d["operations"] = r.stats.operations;
    return d;
  }, py::arg("instance"), py::arg("tie_break") = "smallest", py::arg("order") = std::vector<Label>{});

  m.def("propagate_var_min", [](const Instance& i, std::int64_t lo, std::optional<std::int64_t> hi,
                                const std::string& mode) {
    const std::int64_t top = hi.value_or(static_cast<std::int64_t>(i.num_variables()));
    return pruned_dict(i, propagate_var_min(i, {lo, top}, consistency_of(mode)));
  }, py::arg("instance"), py::arg("lo"), py::arg("hi") = py::none(), py::arg("mode") = "ac",
     "Pruned domains as label strings, or None on failure.");

  m.def("filter_graph_min", [](const Instance& i, std::int64_t max_diseq, std::int64_t min_diseq) {
    return pruned_dict(i, rc_filter_graph_min(i, {min_diseq, max_diseq}));
  }, py::arg("instance"), py::arg("max_diseq"), py::arg("min_diseq") = 0,
     "Pruned domains as label strings, or None on failure.");

  m.def("similar", [](const std::string& text) -> py::object {
    const MultiInstance multi = parse_multi_instance(text);
    const CnSimOutcome out = propagate_cn_sim(multi);
    if (out.failed()) return py::none();
    py::dict pruned;
    for (const auto& [cell, dom] : out.pruned)
      pruned[py::str(std::to_string(cell.first + 1) + "." + multi.column_name(cell.second))] =
          format_domain(multi.column(cell.second), dom);
    std::vector<std::pair<std::int64_t, std::int64_t>> columns;
    for (const CostBounds& b : out.column_bounds) columns.emplace_back(b.lo, b.hi);
    py::dict d;
    d["pruned"] = pruned;
    d["columns"] = columns;
    d["objective"] = py::make_tuple(out.objective.lo, out.objective.hi);
    return d;
  }, py::arg("text"), "Filters a multi-copy instance; None on failure.");

  m.def("hamming", [](const std::vector<Value>& a, const std::vector<Value>& b) {
    return hamming(Assignment::relaxed(a), Assignment::relaxed(b));
  }, py::arg("a"), py::arg("b"));

  m.def("generate", [](const std::string& kind, std::uint64_t seed, std::size_t n, Value lambda,
                       std::size_t max_size, std::size_t copies, std::size_t triples,
                       std::optional<std::int64_t> cost_max) {
    const auto k = parse_gen_kind(kind);
    if (!k) throw py::value_error("unknown kind " + kind);
    GenParams p;
    p.n = n;
    p.lambda = lambda;
    p.max_size = max_size;
    p.copies = copies;
    p.triples = triples;
    p.cost_max = cost_max;
    return generate_text(*k, p, seed);
  }, py::arg("kind"), py::arg("seed") = 1, py::arg("n") = 6, py::arg("lambda_") = 8,
     py::arg("max_size") = 4, py::arg("copies") = 3, py::arg("triples") = 4,
     py::arg("cost_max") = py::none(), "Seeded random instance text.");
}
