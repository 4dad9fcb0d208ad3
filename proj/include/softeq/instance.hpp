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

#ifndef SOFTEQ_INSTANCE_HPP
#define SOFTEQ_INSTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softeq/domain.hpp"

namespace softeq {

using VarIndex = std::size_t;
// An integer as written in an input file, before renaming.
using Label = std::int64_t;

/// Order-preserving map between renamed values [1, lambda] and the original
/// labels. Stored as runs so that wide interval domains stay cheap.
class ValueLabels {
 public:
  struct Run {
    Value first;   // renamed value of the run start
    Label label;   // original label of the run start
    Value length;
  };

  ValueLabels() = default;
  explicit ValueLabels(std::vector<Run> runs) : runs_(std::move(runs)) {}

  /// Identity when no runs are stored.
  bool identity() const { return runs_.empty(); }
  Label label(Value v) const;
  std::optional<Value> value_of(Label label) const;
  std::span<const Run> runs() const { return runs_; }

 private:
  std::vector<Run> runs_;
};

/// Variables with their domains over values [1, num_values()].
///
/// Instances produced by parse_instance() or normalize() are normalized: every
/// value of [1, lambda] occurs in some domain. Instances derived inside the
/// algorithms (a domain restricted to one value, a residual sub-problem) keep
/// the parent's alphabet and may leave some values unused.
class Instance {
 public:
  Instance() = default;
  /// Domains must be non-empty and inside [1, num_values].
  Instance(std::vector<std::string> names, std::vector<Domain> domains,
           Value num_values, ValueLabels labels = {});
  /// Anonymous variables X1..Xn, num_values = largest value.
  explicit Instance(std::vector<Domain> domains);

  /// Renames the raw label domains to [1, lambda] preserving order.
  static Instance normalize(std::vector<std::string> names,
                            std::vector<Domain> raw_domains);

  std::size_t num_variables() const { return domains_.size(); }
  Value num_values() const { return num_values_; }
  /// m, the sum of all domain sizes.
  std::int64_t total_domain_size() const;

  const Domain& domain(VarIndex x) const { return domains_[x]; }
  std::span<const Domain> domains() const { return domains_; }
  const std::string& name(VarIndex x) const { return names_[x]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<VarIndex> find(std::string_view name) const;

  const ValueLabels& labels() const { return labels_; }
  Label label(Value v) const { return labels_.label(v); }

  bool all_contiguous() const;
  bool normalized() const;
  /// Throws PreconditionError naming the first non-contiguous variable.
  void require_contiguous(std::string_view who) const;

  Instance with_domain(VarIndex x, Domain d) const;
  Instance subset(std::span<const VarIndex> vars) const;

 private:
  std::vector<std::string> names_;
  std::vector<Domain> domains_;
  Value num_values_ = 0;
  ValueLabels labels_;
};

/// A total map variable -> value. The checked constructor verifies domain
/// membership; relaxed() skips it for oracle experiments.
class Assignment {
 public:
  Assignment() = default;
  Assignment(const Instance& instance, std::vector<Value> values);
  static Assignment relaxed(std::vector<Value> values);

  std::size_t size() const { return values_.size(); }
  Value operator[](VarIndex x) const { return values_[x]; }
  std::span<const Value> values() const { return values_; }
  bool is_relaxed() const { return relaxed_; }

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.values_ == b.values_;
  }
  friend bool operator<(const Assignment& a, const Assignment& b) {
    return a.values_ < b.values_;
  }

 private:
  std::vector<Value> values_;
  bool relaxed_ = false;
};

/// Line format:
///   # comment
///   var <name> set <v1> ... <vk>
///   var <name> interval <lo> <hi>
Instance parse_instance(std::string_view text);

/// Writes an instance back in the line format, using original labels.
std::string format_instance(const Instance& instance);

/// Label-space rendering of a renamed domain, runs of consecutive labels
/// written as lo..hi.
std::string format_domain(const Instance& instance, const Domain& d);

/// `assign <name> <value>` lines, one per variable, in variable order.
std::string format_assignment(const Instance& instance, const Assignment& s);

/// Reads `assign <name> <label>` lines. Labels unknown to the instance are
/// only accepted when relaxed is set; they get fresh values above lambda.
/// Report lines such as `optimum=7` are skipped, so solver output parses.
Assignment parse_assignment(const Instance& instance, std::string_view text,
                            bool relaxed = false);

}  // namespace softeq

#endif  // SOFTEQ_INSTANCE_HPP
