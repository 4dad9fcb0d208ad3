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

#include "softeq/instance.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

#include "softeq/error.hpp"
#include "text_util.hpp"

namespace softeq {

Label ValueLabels::label(Value v) const {
  if (runs_.empty()) return v;
  auto it = std::upper_bound(runs_.begin(), runs_.end(), v,
                             [](Value x, const Run& r) { return x < r.first; });
  if (it == runs_.begin()) return v;  // outside the alphabet, e.g. relaxed values
  --it;
  if (v >= it->first + it->length) {
    // Past the last run: keep the labels strictly increasing.
    const Run& last = runs_.back();
    return last.label + last.length + (v - (last.first + last.length));
  }
  return it->label + (v - it->first);
}

std::optional<Value> ValueLabels::value_of(Label label) const {
  if (runs_.empty()) return label;
  auto it = std::upper_bound(runs_.begin(), runs_.end(), label,
                             [](Label x, const Run& r) { return x < r.label; });
  if (it == runs_.begin()) return std::nullopt;
  --it;
  if (label >= it->label + it->length) return std::nullopt;
  return it->first + (label - it->label);
}

Instance::Instance(std::vector<std::string> names, std::vector<Domain> domains,
                   Value num_values, ValueLabels labels)
    : names_(std::move(names)),
      domains_(std::move(domains)),
      num_values_(num_values),
      labels_(std::move(labels)) {
  if (names_.size() != domains_.size())
    throw PreconditionError("instance: names and domains differ in length");
  for (std::size_t i = 0; i < domains_.size(); ++i) {
    if (domains_[i].empty())
      throw PreconditionError("instance: empty domain for variable " + names_[i]);
    if (domains_[i].min() < 1 || domains_[i].max() > num_values_)
      throw PreconditionError("instance: domain of " + names_[i] +
                              " leaves the value range [1, lambda]");
  }
}

Instance::Instance(std::vector<Domain> domains) {
  std::vector<std::string> names;
  Value lambda = 0;
  for (std::size_t i = 0; i < domains.size(); ++i) {
    names.push_back("X" + std::to_string(i + 1));
    if (!domains[i].empty()) lambda = std::max(lambda, domains[i].max());
  }
  *this = Instance(std::move(names), std::move(domains), lambda);
}

Instance Instance::normalize(std::vector<std::string> names,
                             std::vector<Domain> raw_domains) {
  std::vector<Interval> pieces;
  for (std::size_t i = 0; i < raw_domains.size(); ++i) {
    if (raw_domains[i].empty())
      throw PreconditionError("instance: empty domain for variable " + names[i]);
    for (const auto& p : raw_domains[i].intervals()) pieces.push_back(p);
  }
  // The union of all domains, as canonical label runs.
  const Domain alphabet = Domain::of_intervals(std::move(pieces));
  std::vector<ValueLabels::Run> runs;
  Value next = 1;
  for (const auto& p : alphabet.intervals()) {
    runs.push_back({next, p.lo, p.width()});
    next += p.width();
  }
  ValueLabels labels(runs);
  std::vector<Domain> renamed;
  renamed.reserve(raw_domains.size());
  for (const auto& d : raw_domains) {
    std::vector<Interval> out;
    for (const auto& p : d.intervals())
      out.push_back({*labels.value_of(p.lo), *labels.value_of(p.hi)});
    renamed.push_back(Domain::of_intervals(std::move(out)));
  }
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw PreconditionError("instance: duplicate variable " + n);
  return Instance(std::move(names), std::move(renamed), next - 1, std::move(labels));
}

std::int64_t Instance::total_domain_size() const {
  std::int64_t m = 0;
  for (const auto& d : domains_) m += d.size();
  return m;
}

std::optional<VarIndex> Instance::find(std::string_view name) const {
  for (VarIndex i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool Instance::all_contiguous() const {
  return std::all_of(domains_.begin(), domains_.end(),
                     [](const Domain& d) { return d.contiguous(); });
}

bool Instance::normalized() const {
  std::vector<Interval> pieces;
  for (const auto& d : domains_)
    for (const auto& p : d.intervals()) pieces.push_back(p);
  const Domain all = Domain::of_intervals(std::move(pieces));
  return num_values_ == 0 ? domains_.empty()
                          : all == Domain::interval(1, num_values_);
}

void Instance::require_contiguous(std::string_view who) const {
  for (VarIndex i = 0; i < domains_.size(); ++i)
    if (!domains_[i].contiguous())
      throw PreconditionError(std::string(who) + ": domain of variable " + names_[i] +
                              " is not a single interval");
}

Instance Instance::with_domain(VarIndex x, Domain d) const {
  Instance copy = *this;
  if (d.empty()) throw PreconditionError("instance: empty domain for variable " + names_[x]);
  copy.domains_[x] = std::move(d);
  return copy;
}

Instance Instance::subset(std::span<const VarIndex> vars) const {
  Instance out;
  out.num_values_ = num_values_;
  out.labels_ = labels_;
  for (VarIndex x : vars) {
    out.names_.push_back(names_[x]);
    out.domains_.push_back(domains_[x]);
  }
  return out;
}

Assignment::Assignment(const Instance& instance, std::vector<Value> values)
    : values_(std::move(values)) {
  if (values_.size() != instance.num_variables())
    throw PreconditionError("assignment: expected " +
                            std::to_string(instance.num_variables()) + " values, got " +
                            std::to_string(values_.size()));
  for (VarIndex i = 0; i < values_.size(); ++i)
    if (!instance.domain(i).contains(values_[i]))
      throw PreconditionError("assignment: value " + std::to_string(instance.label(values_[i])) +
                              " not in the domain of " + instance.name(i));
}

Assignment Assignment::relaxed(std::vector<Value> values) {
  Assignment s;
  s.values_ = std::move(values);
  s.relaxed_ = true;
  return s;
}

Instance parse_instance(std::string_view text) {
  std::vector<std::string> names;
  std::vector<Domain> raw;
  std::set<std::string, std::less<>> seen;
  detail::for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& words) {
    if (words[0] != "var") throw ParseError(line, "unknown directive '" + std::string(words[0]) + "'");
    if (words.size() < 2) throw ParseError(line, "missing variable name");
    std::string name(words[1]);
    if (!seen.insert(name).second) throw ParseError(line, "duplicate variable " + name);
    raw.push_back(detail::parse_domain_words(std::span(words).subspan(2), line, name));
    names.push_back(std::move(name));
  });
  return Instance::normalize(std::move(names), std::move(raw));
}

std::string format_domain(const Instance& instance, const Domain& d) {
  std::string out;
  bool open = false;
  Label run_lo = 0, run_hi = 0;
  auto flush = [&] {
    if (!open) return;
    if (!out.empty()) out += ',';
    out += std::to_string(run_lo);
    if (run_hi != run_lo) out += ".." + std::to_string(run_hi);
  };
  for (const auto& p : d.intervals()) {
    // Each renamed interval maps onto label runs; walk them without
    // expanding values one by one.
    Value v = p.lo;
    while (v <= p.hi) {
      Label l = instance.label(v);
      Value step = 1;
      const auto runs = instance.labels().runs();
      if (!runs.empty()) {
        auto it = std::upper_bound(runs.begin(), runs.end(), v,
                                   [](Value x, const ValueLabels::Run& r) { return x < r.first; });
        if (it != runs.begin()) {
          --it;
          if (v < it->first + it->length) step = std::min(p.hi, it->first + it->length - 1) - v + 1;
        }
      } else {
        step = p.hi - v + 1;
      }
      if (open && l == run_hi + 1) {
        run_hi = l + step - 1;
      } else {
        flush();
        open = true;
        run_lo = l;
        run_hi = l + step - 1;
      }
      v += step;
    }
  }
  flush();
  return out;
}

std::string format_instance(const Instance& instance) {
  std::ostringstream out;
  for (VarIndex x = 0; x < instance.num_variables(); ++x) {
    const Domain& d = instance.domain(x);
    out << "var " << instance.name(x);
    Label lo = instance.label(d.min());
    Label hi = instance.label(d.max());
    if (d.contiguous() && hi - lo == d.max() - d.min()) {
      out << " interval " << lo << ' ' << hi << '\n';
    } else {
      out << " set";
      d.for_each_value([&](Value v) { out << ' ' << instance.label(v); });
      out << '\n';
    }
  }
  return out.str();
}

std::string format_assignment(const Instance& instance, const Assignment& s) {
  std::ostringstream out;
  for (VarIndex x = 0; x < s.size(); ++x)
    out << "assign " << instance.name(x) << ' ' << instance.label(s[x]) << '\n';
  return out.str();
}

Assignment parse_assignment(const Instance& instance, std::string_view text, bool relaxed) {
  std::vector<std::optional<Value>> values(instance.num_variables());
  std::unordered_map<Label, Value> fresh;
  detail::for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& words) {
    if (words.size() == 1 && words[0].find('=') != std::string_view::npos) return;
    if (words[0] != "assign" || words.size() != 3)
      throw ParseError(line, "expected 'assign <name> <value>'");
    auto x = instance.find(words[1]);
    if (!x) throw ParseError(line, "unknown variable " + std::string(words[1]));
    if (values[*x]) throw ParseError(line, "variable assigned twice: " + std::string(words[1]));
    Label label = detail::parse_label(words[2], line);
    auto v = instance.labels().value_of(label);
    if (!v || *v > instance.num_values()) {
      if (!relaxed)
        throw ParseError(line, "value " + std::to_string(label) + " is not a value of the instance");
      auto [it, inserted] = fresh.try_emplace(
          label, instance.num_values() + static_cast<Value>(fresh.size()) + 1);
      v = it->second;
    }
    values[*x] = *v;
  });
  std::vector<Value> out;
  for (VarIndex x = 0; x < values.size(); ++x) {
    if (!values[x]) throw ParseError(0, "no value for variable " + instance.name(x));
    out.push_back(*values[x]);
  }
  if (relaxed) return Assignment::relaxed(std::move(out));
  try {
    return Assignment(instance, std::move(out));
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace softeq
