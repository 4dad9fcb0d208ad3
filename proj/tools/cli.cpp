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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <CLI11.hpp>

#include "softeq.hpp"

namespace softeq::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::uint64_t parse_count(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0)
    throw UsageError(std::string(what) + ": expected a positive integer, got '" +
                     std::string(text) + "'");
  return v;
}

/// Flag if given, else the environment variable, else the default.
std::uint64_t limit(const std::optional<std::uint64_t>& flag, const char* env,
                    std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* v = std::getenv(env)) return parse_count(v, env);
  return fallback;
}

struct Limits {
  std::optional<std::uint64_t> cap, budget, max_cells;

  std::uint64_t brute_cap() const { return limit(cap, "SOFTEQ_BRUTE_CAP", default_search_cap); }
  std::uint64_t fpt_budget() const {
    return limit(budget, "SOFTEQ_FPT_BUDGET", default_permutation_budget);
  }
  DpOptions dp(bool crest_reduction) const {
    DpOptions o;
    o.use_crest_reduction = crest_reduction;
    o.max_cells = limit(max_cells, "SOFTEQ_DP_MAX_CELLS", o.max_cells);
    return o;
  }
};

Consistency parse_mode(const std::string& mode) {
  if (mode == "ac") return Consistency::Arc;
  if (mode == "rc") return Consistency::Range;
  if (mode == "bc") return Consistency::Bounds;
  throw UsageError("unknown mode '" + mode + "'");
}

TieBreak parse_tie_break(const Instance& instance, const std::string& text) {
  if (text == "smallest") return TieBreak::smallest();
  if (text == "first") return TieBreak::first();
  if (!text.starts_with("list:")) throw UsageError("unknown tie-break '" + text + "'");
  std::vector<Value> order;
  std::string_view rest = std::string_view(text).substr(5);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    Label label = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), label);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      throw UsageError("tie-break list: '" + std::string(item) + "' is not an integer");
    auto v = instance.labels().value_of(label);
    if (!v) throw UsageError("tie-break list: value " + std::string(item) + " not in any domain");
    order.push_back(*v);
  }
  return TieBreak::priority(std::move(order));
}

void print_prunes(std::ostream& out, const Instance& instance, const PropagationOutcome& o) {
  for (const auto& [x, d] : o.pruned)
    out << "prune " << instance.name(x) << ' ' << format_domain(instance, d) << '\n';
}

void print_labels(std::ostream& out, const Instance& instance, std::string_view head,
                  const std::vector<Value>& values) {
  out << head << ':';
  for (Value v : values) out << ' ' << instance.label(v);
  out << '\n';
}

const std::vector<std::string> solve_methods = {"dp",  "matching",     "heavy", "fpt",
                                                "fpt-conflict", "brute"};

OptimumResult solve(const Instance& instance, const std::string& method, const Limits& limits,
                    bool crest_reduction) {
  if (method == "dp") return max_equalities_dp(instance, limits.dp(crest_reduction));
  if (method == "matching") return solve_matching_class(instance);
  if (method == "heavy") return solve_heavy_class(instance);
  if (method == "fpt") return solve_fpt_values(instance, limits.fpt_budget());
  if (method == "fpt-conflict") return solve_fpt_conflicting(instance, limits.fpt_budget());
  if (method == "brute") {
    BruteForceResult r = brute_force_optimum(instance, limits.brute_cap());
    return {r.optimum, r.optima.front()};
  }
  throw UsageError("unknown method '" + method + "'");
}

// bench ----------------------------------------------------------------------

struct BenchRow {
  std::string instance, method, status = "ok", value = "-", ratio = "-";
  std::int64_t nanos = 0;
  std::optional<std::int64_t> number;
};

std::vector<std::string> expand_paths(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const auto& p : inputs) {
    if (std::filesystem::is_directory(p)) {
      std::vector<std::string> inside;
      for (const auto& e : std::filesystem::directory_iterator(p))
        if (e.is_regular_file()) inside.push_back(e.path().string());
      std::sort(inside.begin(), inside.end());
      files.insert(files.end(), inside.begin(), inside.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

std::string error_status(const std::exception& e) {
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "budget";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UsageError*>(&e)) return "parse";
  return "error";
}

int bench(const std::vector<std::string>& methods, const std::vector<std::string>& inputs,
          std::uint64_t repetitions, bool timing, const Limits& limits, std::ostream& out) {
  for (const auto& m : methods)
    if (m != "greedy" && std::find(solve_methods.begin(), solve_methods.end(), m) == solve_methods.end())
      throw UsageError("bench: unknown method '" + m + "'");
  std::vector<BenchRow> rows;
  for (const auto& path : expand_paths(inputs)) {
    std::optional<Instance> instance;
    std::string load_status;
    try {
      instance = parse_instance(read_file(path));
    } catch (const std::exception& e) {
      load_status = error_status(e);
    }
    std::optional<std::int64_t> exact;
    std::vector<BenchRow> group;
    for (const auto& method : methods) {
      BenchRow row;
      row.instance = path;
      row.method = method;
      if (!instance) {
        row.status = load_status;
        group.push_back(row);
        continue;
      }
      try {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (std::uint64_t r = 0; r < repetitions; ++r) {
          const auto start = std::chrono::steady_clock::now();
          const std::int64_t value =
              method == "greedy" ? greedy_max_equalities(*instance).lower_bound
                                 : solve(*instance, method, limits, true).equalities;
          const auto stop = std::chrono::steady_clock::now();
          best = std::min<std::int64_t>(
              best, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
          row.number = value;
        }
        row.nanos = timing ? best : 0;
        row.value = std::to_string(*row.number);
        if (method != "greedy" && !exact) exact = row.number;
      } catch (const std::exception& e) {
        row.status = error_status(e);
      }
      group.push_back(row);
    }
    // Greedy value over the exact optimum, in permille.
    for (auto& row : group)
      if (row.method == "greedy" && row.number && exact)
        row.ratio = std::to_string(*exact == 0 ? 1000 : *row.number * 1000 / *exact);
    rows.insert(rows.end(), group.begin(), group.end());
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.instance, a.method) < std::tie(b.instance, b.method);
  });

  const std::vector<std::string> header = {"instance", "method", "status", "value", "permille", "nanos"};
  std::vector<std::vector<std::string>> table = {header};
  for (const auto& r : rows)
    table.push_back({r.instance, r.method, r.status, r.value, r.ratio, std::to_string(r.nanos)});
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : table)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  if (!rows.empty()) {
    for (const auto& line : table) {
      std::string text;
      for (std::size_t c = 0; c < line.size(); ++c) {
        text += line[c];
        if (c + 1 < line.size()) text += std::string(width[c] - line[c].size() + 2, ' ');
      }
      out << text << '\n';
    }
  }
  for (const auto& r : rows)
    out << "bench " << r.method << ' ' << r.instance << ' '
        << (r.status == "ok" ? r.value : "error:" + r.status) << ' ' << r.nanos << '\n';
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Soft difference and equality constraints: costs, propagators and solvers",
               "softeq"};
  app.require_subcommand(1);

  std::string file, assignment_file, mode = "ac", tie = "smallest", method, kind;
  std::string backend = "auto";
  std::int64_t lo = 0, max_diseq = 0, min_diseq = 0;
  std::optional<std::int64_t> hi, cost_max;
  bool no_crest = false, no_timing = false;
  Limits limits;
  GenParams gen;
  std::uint64_t seed = 1, repetitions = 1;
  std::vector<std::string> methods = {"greedy", "dp"}, inputs;

  auto* eval = app.add_subcommand("eval", "Cost report of an assignment");
  eval->add_option("file", file, "Instance file")->required();
  eval->add_option("--assignment", assignment_file, "File of 'assign <name> <value>' lines")
      ->required();

  auto* occ = app.add_subcommand("occ", "Inverse occurrence buckets");
  occ->add_option("file", file)->required();
  occ->add_option("--backend", backend, "auto|sorted|array (interval domains)")
      ->check(CLI::IsMember({"auto", "sorted", "array"}));

  auto* crests = app.add_subcommand("crests", "Crest partition of the values");
  crests->add_option("file", file)->required();

  auto* pvm = app.add_subcommand("propagate-var-min",
                                 "Propagate: at least N' variables share a value");
  pvm->add_option("file", file)->required();
  pvm->add_option("--lo", lo, "Lower bound on N'")->required();
  pvm->add_option("--hi", hi, "Upper bound on N' (default n)");
  pvm->add_option("--mode", mode, "ac|rc|bc")->check(CLI::IsMember({"ac", "rc", "bc"}));

  auto* fgm = app.add_subcommand("filter-graph-min",
                                 "Range consistency for a cap on unequal pairs");
  fgm->add_option("file", file)->required();
  fgm->add_option("--max-diseq", max_diseq, "Upper bound on unequal pairs")->required();
  fgm->add_option("--min-diseq", min_diseq, "Lower bound on unequal pairs");

  auto* greedy = app.add_subcommand("greedy", "Greedy lower bound on equal pairs");
  greedy->add_option("file", file)->required();
  greedy->add_option("--tie-break", tie, "smallest|first|list:<v1,v2,...>");

  auto* solve_cmd = app.add_subcommand("solve", "Maximum number of equal pairs");
  solve_cmd->add_option("file", file)->required();
  solve_cmd->add_option("--method", method)->required()->check(CLI::IsMember(solve_methods));
  solve_cmd->add_flag("--no-crest-reduction", no_crest, "dp: build the table on all values");
  solve_cmd->add_option("--budget", limits.budget, "fpt: permutation budget");
  solve_cmd->add_option("--cap", limits.cap, "brute: search space cap");
  solve_cmd->add_option("--max-cells", limits.max_cells, "dp: table size cap");

  auto* classify = app.add_subcommand("classify", "Heavy and conflicting values");
  classify->add_option("file", file)->required();

  auto* r3 = app.add_subcommand("reduce-3dm", "Instance from a 3-dimensional matching");
  r3->add_option("file", file)->required();

  auto* similar = app.add_subcommand("similar", "Propagate the k-copy similarity network");
  similar->add_option("file", file)->required();

  auto* generate = app.add_subcommand("generate", "Seeded random instance");
  generate->add_option("kind", kind, "set|interval|two-occ|one-heavy|3dm|multi")->required();
  generate->add_option("--n", gen.n, "Variables, columns or elements per set");
  generate->add_option("--lambda", gen.lambda, "Values drawn from [1, lambda]");
  generate->add_option("--max-size", gen.max_size, "Domain size cap, 0 for none");
  generate->add_option("--copies", gen.copies, "multi: number of copies");
  generate->add_option("--triples", gen.triples, "3dm: number of triples");
  generate->add_option("--cost-max", cost_max, "multi: bound on total distance");
  generate->add_option("--seed", seed);

  auto* bench_cmd = app.add_subcommand("bench", "Time methods over instance files");
  bench_cmd->add_option("inputs", inputs, "Instance files or directories");
  bench_cmd->add_option("--methods", methods, "Comma separated")->delimiter(',');
  bench_cmd->add_option("--repetitions", repetitions)->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-timing", no_timing, "Print 0 nanos for reproducible output");
  bench_cmd->add_option("--budget", limits.budget);
  bench_cmd->add_option("--cap", limits.cap);
  bench_cmd->add_option("--max-cells", limits.max_cells);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*eval) {
      const Instance instance = parse_instance(read_file(file));
      const Assignment s = parse_assignment(instance, read_file(assignment_file));
      out << format_cost_report(evaluate(s));
    } else if (*occ) {
      const Instance instance = parse_instance(read_file(file));
      const OccBackend b = backend == "sorted" ? OccBackend::SortedList
                           : backend == "array" ? OccBackend::Array
                                                : OccBackend::Auto;
      const InverseOcc inv = instance.all_contiguous() ? inverse_occurrence(instance, b)
                                                       : count_occurrences(instance);
      for (std::size_t c = 0; c < inv.buckets.size(); ++c)
        for (const Interval& iv : inv.buckets[c])
          out << "occ " << c << ' ' << instance.label(iv.lo) << ' ' << instance.label(iv.hi)
              << '\n';
    } else if (*crests) {
      const Instance instance = parse_instance(read_file(file));
      for (const Interval& iv : crest_partition(instance).crests)
        out << "crest " << instance.label(iv.lo) << ' ' << instance.label(iv.hi) << '\n';
    } else if (*pvm) {
      const Instance instance = parse_instance(read_file(file));
      const CostBounds nprime{lo, hi.value_or(static_cast<std::int64_t>(instance.num_variables()))};
      const PropagationOutcome o = propagate_var_min(instance, nprime, parse_mode(mode));
      if (o.failed()) {
        out << "FAIL\n";
        return failed;
      }
      print_prunes(out, instance, o);
      out << "nprime.hi=" << o.cost.hi << '\n';
    } else if (*fgm) {
      const Instance instance = parse_instance(read_file(file));
      const PropagationOutcome o =
          rc_filter_graph_min(instance, {min_diseq, max_diseq}, limits.dp(true));
      if (o.failed()) {
        out << "FAIL\n";
        return failed;
      }
      print_prunes(out, instance, o);
      out << "diseq.lo=" << o.cost.lo << '\n';
    } else if (*greedy) {
      const Instance instance = parse_instance(read_file(file));
      const GreedyResult r = greedy_max_equalities(instance, parse_tie_break(instance, tie));
      out << "lower_bound=" << r.lower_bound << '\n'
          << "objective=" << r.objective << '\n'
          << format_assignment(instance, r.assignment);
    } else if (*solve_cmd) {
      const Instance instance = parse_instance(read_file(file));
      const OptimumResult r = solve(instance, method, limits, !no_crest);
      out << "optimum=" << r.equalities << '\n' << format_assignment(instance, r.witness);
    } else if (*classify) {
      const Instance instance = parse_instance(read_file(file));
      const ValueClassification c = classify_values(instance);
      print_labels(out, instance, "heavy", c.heavy);
      print_labels(out, instance, "conflicting", c.conflicting);
    } else if (*r3) {
      out << format_instance(reduce_3dm(parse_3dm(read_file(file))));
    } else if (*similar) {
      const MultiInstance multi = parse_multi_instance(read_file(file));
      const CnSimOutcome o = propagate_cn_sim(multi, limits.dp(true));
      if (o.failed()) {
        out << "FAIL\n";
        return failed;
      }
      for (const auto& [cell, d] : o.pruned) {
        const Instance column = multi.column(cell.second);
        out << "prune " << column.name(cell.first) << ' ' << format_domain(column, d) << '\n';
      }
      for (std::size_t i = 0; i < o.column_bounds.size(); ++i)
        out << 'N' << i + 1 << ".lo=" << o.column_bounds[i].lo << '\n';
      out << "N.lo=" << o.objective.lo << '\n';
    } else if (*generate) {
      const auto k = parse_gen_kind(kind);
      if (!k) throw UsageError("unknown kind '" + kind + "'");
      gen.cost_max = cost_max;
      try {
        out << generate_text(*k, gen, seed);
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
    } else if (*bench_cmd) {
      return bench(methods, inputs, repetitions, !no_timing, limits, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return precondition;
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << '\n';
    return precondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal;
  }
  return ok;
}

}  // namespace softeq::cli
